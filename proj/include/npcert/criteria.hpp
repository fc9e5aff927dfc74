#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npcert/int_poly.hpp"
#include "npcert/newton_polygon.hpp"
#include "npcert/valuation.hpp"

namespace npcert {

/// Set of achievable factor degrees: boolean membership over 1..n.
class DegreeSet {
public:
    explicit DegreeSet(int n) : member_(static_cast<std::size_t>(n < 0 ? 0 : n) + 1, false) {}

    int context() const { return static_cast<int>(member_.size()) - 1; }
    bool contains(int d) const {
        return d >= 1 && d < static_cast<int>(member_.size()) && member_[static_cast<std::size_t>(d)];
    }
    void insert(int d);
    bool empty() const;
    std::size_t size() const;
    std::vector<int> to_vector() const; // ascending

    bool operator==(const DegreeSet&) const = default;

private:
    std::vector<bool> member_; // index 0 unused
};

DegreeSet intersect(const DegreeSet& a, const DegreeSet& b);

/// All sums of sub-multisets of `widths` that land in [1, cap], by
/// forward dynamic programming over achievable-sum membership.
DegreeSet subset_sum_degrees(const std::vector<int>& widths, int cap);

/// The set S_p: achievable segment-width sums in (0, floor(n/2)].
/// Requires degree >= 2 and a nonzero constant term.
DegreeSet s_p(const IntPoly& f, PrimeP p);

enum class Verdict { Irreducible, Inconclusive };

struct TheoremAResult {
    Verdict verdict;
    DegreeSet residual; // degrees <= floor(n/2) a proper factor could still have
};

/// Intersects S_p over the given primes; empty intersection certifies
/// irreducibility. Requires a primitive f of degree >= 2 with nonzero
/// constant term and pairwise distinct primes.
TheoremAResult theorem_a_verdict(const IntPoly& f, const std::vector<PrimeP>& primes);

/// gcd of the segment widths of the polygon of f at p; every factor
/// degree is a multiple of it.
int d_p(const IntPoly& f, PrimeP p);

/// n / gcd(n/d_p1, ..., n/d_pk), which equals lcm(d_p1, ..., d_pk); both
/// routes are computed and cross-checked. Divides the degree of every
/// factor of f.
int factor_degree_multiple(const IntPoly& f, const std::vector<PrimeP>& primes);

/// Irreducible iff factor_degree_multiple equals the degree.
Verdict theorem_b_verdict(const IntPoly& f, const std::vector<PrimeP>& primes);

/// Single-prime Dumas criterion, applied to f and to its reciprocal:
/// valuation 0 at one end, every interior point strictly above the line
/// to the other end, and that end's valuation coprime to the degree.
bool dumas_single_prime(const IntPoly& f, PrimeP p);

/// Literal Schoenemann-Eisenstein check: p does not divide a_n, p divides
/// a_0..a_{n-1}, p^2 does not divide a_0.
bool eisenstein(const IntPoly& f, PrimeP p);

enum class FiredRule { TheoremA, TheoremB, DumasSinglePrime, Eisenstein, TrivialDegree, None };

const char* to_string(Verdict v);
const char* to_string(FiredRule r);

struct PrimeEvidence {
    PrimeP prime;
    NewtonPolygon polygon;
    std::vector<int> widths;
    int d;
    DegreeSet s;
    bool informative; // false when the polygon is flat (vacuous evidence)
};

struct Certificate {
    IntPoly polynomial;
    int degree = 0;
    BigInt content;
    int x_power = 0;
    std::vector<PrimeEvidence> per_prime;
    Verdict verdict = Verdict::Inconclusive;
    FiredRule fired_rule = FiredRule::None;
    std::optional<PrimeP> fired_prime; // for the single-prime rules
    int factor_degree_multiple = 1;
    DegreeSet residual_degrees{0};
    std::vector<std::string> notes;

    /// Fixed-schema JSON with stable key order.
    std::string to_json(int indent = 2) const;
    std::string to_text() const;
};

struct AutoCheckOptions {
    std::vector<PrimeP> primes; // explicit primes, if any
    bool discover = true;       // union candidate_primes into the set
    std::uint64_t bound = 10000;
    PrimeScan mode = PrimeScan::endpoints;
};

/// Full pipeline: strip content and X powers, handle degenerate degrees,
/// gather primes, build per-prime evidence, and apply the rules from
/// weakest to strongest (Eisenstein, Dumas, width-gcd, subset-sum),
/// recording the first that fires. Deterministic for fixed inputs.
Certificate auto_check(const IntPoly& f, const AutoCheckOptions& options = {});

} // namespace npcert
