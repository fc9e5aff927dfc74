#include "npcert/families.hpp"

#include <stdexcept>

namespace npcert {

bool family_takes_m(int family) { return family == 3 || family == 4; }

IntPoly example_family(int family, PrimeP p, PrimeP q, std::optional<int> m) {
    if (family < 1 || family > kFamilyCount)
        throw std::invalid_argument("family index must be 1.." + std::to_string(kFamilyCount));
    if (p == q) throw std::invalid_argument("the two primes must be distinct");
    if (family_takes_m(family)) {
        if (!m) throw std::invalid_argument("family " + std::to_string(family) + " requires m");
        if (*m < 0) throw std::invalid_argument("m must be non-negative");
    } else if (m) {
        throw std::invalid_argument("family " + std::to_string(family) + " takes no m");
    }

    BigInt P(static_cast<unsigned long>(p.value()));
    BigInt Q(static_cast<unsigned long>(q.value()));
    BigInt P2 = P * P, Q2 = Q * Q, Q3 = Q2 * Q;
    auto Pm = [&] {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(*m));
        return r;
    };

    std::vector<BigInt> c;
    switch (family) {
        case 1:
            c = {Q3, P2 * Q3, P2 * Q3, P2 * Q3, P2 * Q3, P2 * Q3, P2};
            break;
        case 2:
            c = {P, P * Q2, P * Q2, P * Q2, Q2, P * Q2, P * Q2};
            break;
        case 3:
            c = {Pm(), Q2, P * Q2, P * Q2, P * Q2, P * Q2, P * Q2};
            break;
        case 4:
            c = {P, P * Q2, P * Q2, P * Q2, P * Q2, Q2, Pm() * Q2};
            break;
        case 5:
            c = {BigInt(1), Q2, Q2, P * Q2, P * Q2, P * Q2, P * Q2};
            break;
        case 6:
            c = {P, P * Q2, P * Q2, P * Q2, Q2, Q2, Q2};
            break;
        case 7:
            c = {P * Q, P * Q, P * Q, Q, P, P * Q, P * Q};
            break;
        case 8:
            c = {Q, Q, Q, P, P * Q, P * Q, P * Q};
            break;
    }
    return IntPoly(std::move(c));
}

} // namespace npcert
