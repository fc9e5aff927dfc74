#pragma once

#include <optional>

#include "npcert/int_poly.hpp"
#include "npcert/valuation.hpp"

namespace npcert {

inline constexpr int kFamilyCount = 8;

/// True for the families whose definition carries an extra exponent m.
bool family_takes_m(int family);

/// The built-in degree-6 two-prime demonstration families, indexed 1..8.
/// Families 3 and 4 require the extra non-negative exponent m. Each
/// instantiation is certified irreducible by the polygon criteria using
/// only the primes p and q. Throws on p = q, a bad family index, or a
/// missing/surplus/negative m.
IntPoly example_family(int family, PrimeP p, PrimeP q, std::optional<int> m = std::nullopt);

} // namespace npcert
