#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "npcert/int_poly.hpp"

namespace npcert {

/// A positive machine-word integer verified prime at construction.
class PrimeP {
public:
    /// Verifies primality (deterministic for the full 64-bit range);
    /// throws std::invalid_argument otherwise.
    static PrimeP checked(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    auto operator<=>(const PrimeP&) const = default;

private:
    explicit PrimeP(std::uint64_t v) : value_(v) {}
    std::uint64_t value_;
};

/// A p-adic valuation: a non-negative integer, or infinity (exactly for 0).
class Valuation {
public:
    static Valuation finite(std::int64_t v);
    static Valuation infinity() { return Valuation(true, 0); }

    bool is_infinite() const { return infinite_; }
    std::int64_t value() const; // throws if infinite

    bool operator==(const Valuation&) const = default;

private:
    Valuation(bool inf, std::int64_t v) : infinite_(inf), value_(v) {}
    bool infinite_;
    std::int64_t value_;
};

/// Deterministic primality test for the full 64-bit range
/// (Miller-Rabin with a fixed proven witness set).
bool is_prime(std::uint64_t m);

/// Largest i with p^i | a; infinity for a = 0.
Valuation nu_p(const BigInt& a, PrimeP p);

enum class PrimeScan { endpoints, all_coeffs };

/// Primes <= bound dividing a_0 or a_n (endpoints mode) or at least one
/// nonzero coefficient (all_coeffs mode), ascending and deduplicated.
/// Requires f nonzero with f(0) != 0.
std::vector<PrimeP> candidate_primes(const IntPoly& f, std::uint64_t bound, PrimeScan mode);

} // namespace npcert
