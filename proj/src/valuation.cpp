#include "npcert/valuation.hpp"

#include <stdexcept>

namespace npcert {

PrimeP PrimeP::checked(std::uint64_t value) {
    if (!is_prime(value)) throw std::invalid_argument(std::to_string(value) + " is not prime");
    return PrimeP(value);
}

Valuation Valuation::finite(std::int64_t v) {
    if (v < 0) throw std::invalid_argument("negative valuation");
    return Valuation(false, v);
}

std::int64_t Valuation::value() const {
    if (infinite_) throw std::domain_error("infinite valuation has no finite value");
    return value_;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    // Miller-Rabin; this witness set is deterministic below 3.3e24 > 2^64.
    std::uint64_t d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Valuation nu_p(const BigInt& a, PrimeP p) {
    if (a == 0) return Valuation::infinity();
    BigInt rest;
    BigInt pz(static_cast<unsigned long>(p.value()));
    mp_bitcnt_t e = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
    return Valuation::finite(static_cast<std::int64_t>(e));
}

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    if (bound > 100'000'000ULL) throw std::invalid_argument("prime discovery bound too large");
    std::vector<bool> sieve(bound + 1, true);
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

} // namespace

std::vector<PrimeP> candidate_primes(const IntPoly& f, std::uint64_t bound, PrimeScan mode) {
    if (f.is_zero()) throw std::domain_error("candidate_primes of the zero polynomial");
    if (f.constant_term() == 0) throw std::domain_error("candidate_primes requires a nonzero constant term");

    std::vector<const BigInt*> scanned;
    if (mode == PrimeScan::endpoints) {
        scanned.push_back(&f.constant_term());
        scanned.push_back(&f.leading());
    } else {
        for (const auto& c : f.coeffs())
            if (c != 0) scanned.push_back(&c);
    }

    std::vector<PrimeP> out;
    for (std::uint64_t p : primes_up_to(bound)) {
        for (const BigInt* c : scanned) {
            if (mpz_divisible_ui_p(c->get_mpz_t(), static_cast<unsigned long>(p))) {
                out.push_back(PrimeP::checked(p));
                break;
            }
        }
    }
    return out;
}

} // namespace npcert
