#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npcert/int_poly.hpp"
#include "npcert/valuation.hpp"

namespace npcert {

/// A plotted point (exponent, finite p-adic valuation of the coefficient).
struct LatticePoint {
    int x;
    std::int64_t y;
    bool operator==(const LatticePoint&) const = default;
};

/// Exact slope: reduced fraction with positive denominator.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction reduced(std::int64_t num, std::int64_t den);
    bool operator==(const Fraction&) const = default;
    std::string to_string() const;
};

bool operator<(const Fraction& a, const Fraction& b);
inline bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
inline bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }

/// Maximal hull side between consecutive vertices. An edge of width w and
/// height h splits into m = gcd(|h|, w) segments of width w/m each
/// (for a flat edge gcd(0, w) = w, giving w unit-width segments).
struct Edge {
    LatticePoint start;
    LatticePoint end;
    int width;             // end.x - start.x, positive
    std::int64_t height;   // end.y - start.y
    int multiplicity;      // m
    int segment_width;     // x = width / m
    Fraction slope() const { return Fraction::reduced(height, width); }
    bool operator==(const Edge&) const = default;
};

/// Minimal lattice-free piece of an edge: a primitive vector.
struct Segment {
    int width;
    std::int64_t height;
    Fraction slope() const { return Fraction::reduced(height, width); }
    bool operator==(const Segment&) const = default;
};

enum class ShapeTag {
    SingleEdgeNeg,
    SingleEdgePos,
    SingleEdgeZero,
    NegThenPos,
    ZeroThenPos,
    NegThenZero,
    PosThenPos,
    NegThenNeg,
    ThreeOrMoreEdges,
};

struct ShapeClass {
    ShapeTag tag;
    std::optional<int> corner; // abscissa of the middle vertex, two-edge shapes only
};

const char* to_string(ShapeTag tag);

/// Lower convex hull of the valuation points of a polynomial for one
/// prime. Vertices run left to right from abscissa 0 to the degree; edge
/// slopes strictly increase; segment slopes are non-decreasing and segment
/// widths sum to the degree.
class NewtonPolygon {
public:
    const PrimeP& prime() const { return prime_; }
    int degree() const { return degree_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Segment>& segments() const { return segments_; }
    /// The plotted finite-valuation points (hull input), left to right.
    const std::vector<LatticePoint>& points() const { return points_; }

    /// Single-point polygon of a nonzero constant: anchor (0, v), no
    /// edges. Exists for the product-merge law, where a constant factor
    /// only shifts the other polygon.
    static NewtonPolygon constant(PrimeP p, std::int64_t valuation);

    /// Assembles a polygon from its anchor and slope-sorted segment
    /// vectors, coalescing equal-slope runs into edges.
    static NewtonPolygon from_segments(PrimeP p, LatticePoint anchor, std::vector<Segment> segments);

    /// Checks every structural invariant; throws std::logic_error on the
    /// first violation.
    void validate() const;

    bool operator==(const NewtonPolygon&) const = default;

private:
    explicit NewtonPolygon(PrimeP p) : prime_(p) {}
    friend NewtonPolygon build_polygon(const IntPoly& f, PrimeP p);

    PrimeP prime_;
    int degree_ = 0;
    std::vector<LatticePoint> points_;
    std::vector<LatticePoint> vertices_;
    std::vector<Edge> edges_;
    std::vector<Segment> segments_;
};

/// Constructs the Newton polygon of f with respect to p. Requires
/// f(0) != 0 and degree >= 1; callers strip X^k beforehand.
NewtonPolygon build_polygon(const IntPoly& f, PrimeP p);

/// The multiset of segment widths, in left-to-right polygon order.
std::vector<int> segment_widths(const NewtonPolygon& poly);

/// True iff the claimed abscissae are exactly the hull vertex abscissae,
/// decided by the two vertex conditions (strictly increasing chord slopes;
/// no plotted point below any chord) rather than by rebuilding the hull.
/// Throws on abscissae out of range, not strictly increasing 0..n, or
/// pointing at a zero coefficient.
bool verify_vertex_conditions(const std::vector<int>& claimed_abscissae, const IntPoly& f, PrimeP p);

ShapeClass classify_shape(const NewtonPolygon& poly);

} // namespace npcert
