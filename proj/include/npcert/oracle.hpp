#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npcert/int_poly.hpp"
#include "npcert/newton_polygon.hpp"

namespace npcert {

/// Dumas' merge law: the polygon whose segment system is the slope-sorted
/// multiset union of the inputs' segments, anchored at the sum of the
/// inputs' anchors. Equals the polygon of the product of the underlying
/// polynomials. Throws on a prime mismatch.
NewtonPolygon merge_polygons(const NewtonPolygon& a, const NewtonPolygon& b);

struct OracleLimits {
    int max_degree = 8;
    std::int64_t max_divisor_candidates = 10'000'000; // divisor tuples per factor degree
    // Evaluations beyond this magnitude make divisor enumeration by trial
    // division infeasible.
    BigInt max_eval_magnitude = BigInt("4000000000000");
};

struct Factorization {
    enum class Status { Irreducible, Factored, LimitExceeded };

    Status status = Status::Factored;
    BigInt content;                               // signed; content * product == input
    std::vector<std::pair<IntPoly, int>> factors; // primitive, positive leading, canonical order
    std::string limit_hit;                        // which limit tripped, LimitExceeded only

    IntPoly product() const; // content * prod factor^mult, for verification
    std::string to_string() const;
};

/// All divisors of m, both signs, ascending by absolute value
/// (+d before -d). Throws on m = 0.
std::vector<BigInt> integer_divisors(const BigInt& m);

/// The unique rational polynomial of degree < #points through the given
/// points (distinct x required); nullopt unless every coefficient is an
/// integer. Throws on duplicate abscissae.
std::optional<IntPoly> exact_interpolate(const std::vector<std::pair<BigInt, BigInt>>& points);

/// Exhaustive Kronecker factorization over Z: strip content and X powers,
/// then search each candidate factor degree d by evaluating at d+1 small
/// integer points, enumerating divisor tuples of the values, interpolating
/// exactly and trial-dividing. Slow, exact, auditable. Requires f nonzero.
Factorization kronecker_factorize(const IntPoly& f, const OracleLimits& limits = {});

} // namespace npcert
