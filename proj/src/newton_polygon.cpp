#include "npcert/newton_polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace npcert {

Fraction Fraction::reduced(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Fraction{num / g, den / g};
}

bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string Fraction::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(ShapeTag tag) {
    switch (tag) {
        case ShapeTag::SingleEdgeNeg: return "SingleEdgeNeg";
        case ShapeTag::SingleEdgePos: return "SingleEdgePos";
        case ShapeTag::SingleEdgeZero: return "SingleEdgeZero";
        case ShapeTag::NegThenPos: return "NegThenPos";
        case ShapeTag::ZeroThenPos: return "ZeroThenPos";
        case ShapeTag::NegThenZero: return "NegThenZero";
        case ShapeTag::PosThenPos: return "PosThenPos";
        case ShapeTag::NegThenNeg: return "NegThenNeg";
        case ShapeTag::ThreeOrMoreEdges: return "ThreeOrMoreEdges";
    }
    return "?";
}

namespace {

// Orientation of the turn at b along a->b->c; positive means the path
// turns left (slope increases).
__int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
           static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

Edge make_edge(const LatticePoint& a, const LatticePoint& b) {
    Edge e;
    e.start = a;
    e.end = b;
    e.width = b.x - a.x;
    e.height = b.y - a.y;
    std::int64_t h = e.height < 0 ? -e.height : e.height;
    e.multiplicity = static_cast<int>(std::gcd(h, static_cast<std::int64_t>(e.width)));
    e.segment_width = e.width / e.multiplicity;
    return e;
}

void derive_edges_and_segments(const std::vector<LatticePoint>& vertices,
                               std::vector<Edge>& edges, std::vector<Segment>& segments) {
    edges.clear();
    segments.clear();
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        Edge e = make_edge(vertices[i], vertices[i + 1]);
        for (int s = 0; s < e.multiplicity; ++s)
            segments.push_back(Segment{e.segment_width, e.height / e.multiplicity});
        edges.push_back(e);
    }
}

} // namespace

NewtonPolygon build_polygon(const IntPoly& f, PrimeP p) {
    if (f.is_zero() || f.constant_term() == 0)
        throw std::domain_error("Newton polygon requires a nonzero constant term");
    int n = f.degree();
    if (n < 1) throw std::domain_error("Newton polygon requires degree >= 1");

    NewtonPolygon poly(p);
    poly.degree_ = n;
    for (int i = 0; i <= n; ++i) {
        Valuation v = nu_p(f.coeff(i), p);
        if (v.is_infinite()) continue;
        poly.points_.push_back(LatticePoint{i, v.value()});
    }

    // Monotone scan; collinear middles are popped so edges stay maximal.
    std::vector<LatticePoint>& hull = poly.vertices_;
    for (const LatticePoint& pt : poly.points_) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }

    derive_edges_and_segments(poly.vertices_, poly.edges_, poly.segments_);
    return poly;
}

NewtonPolygon NewtonPolygon::constant(PrimeP p, std::int64_t valuation) {
    NewtonPolygon poly(p);
    poly.degree_ = 0;
    poly.points_ = {LatticePoint{0, valuation}};
    poly.vertices_ = poly.points_;
    return poly;
}

NewtonPolygon NewtonPolygon::from_segments(PrimeP p, LatticePoint anchor, std::vector<Segment> segments) {
    if (anchor.x != 0) throw std::invalid_argument("polygon anchor must sit at abscissa 0");
    if (!std::is_sorted(segments.begin(), segments.end(),
                        [](const Segment& a, const Segment& b) { return a.slope() < b.slope(); }))
        throw std::invalid_argument("segments must be sorted by slope");

    NewtonPolygon poly(p);
    poly.segments_ = std::move(segments);
    poly.vertices_.push_back(anchor);
    LatticePoint pos = anchor;
    for (std::size_t i = 0; i < poly.segments_.size(); ++i) {
        const Segment& s = poly.segments_[i];
        pos = LatticePoint{pos.x + s.width, pos.y + s.height};
        // Vertex only where the slope strictly changes.
        if (i + 1 == poly.segments_.size() || s.slope() < poly.segments_[i + 1].slope())
            poly.vertices_.push_back(pos);
    }
    poly.degree_ = pos.x;
    derive_edges_and_segments(poly.vertices_, poly.edges_, poly.segments_);

    // The merged path visits every segment endpoint.
    poly.points_.clear();
    pos = anchor;
    poly.points_.push_back(pos);
    for (const Segment& s : poly.segments_) {
        pos = LatticePoint{pos.x + s.width, pos.y + s.height};
        poly.points_.push_back(pos);
    }
    return poly;
}

void NewtonPolygon::validate() const {
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("Newton polygon invariant violated: ") + what);
    };
    expect(!vertices_.empty(), "no vertices");
    expect(vertices_.front().x == 0, "first vertex abscissa must be 0");
    expect(vertices_.back().x == degree_, "last vertex abscissa must be the degree");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        expect(vertices_[i].x < vertices_[i + 1].x, "vertex abscissae must strictly increase");
    expect(edges_.size() + 1 == vertices_.size() || (edges_.empty() && vertices_.size() == 1),
           "edge count must match vertex count");
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
        expect(edges_[i].slope() < edges_[i + 1].slope(), "edge slopes must strictly increase");
    int width_sum = 0;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Segment& s = segments_[i];
        expect(s.width >= 1, "segment width must be positive");
        std::int64_t h = s.height < 0 ? -s.height : s.height;
        expect(std::gcd(h, static_cast<std::int64_t>(s.width)) == 1,
               "segment must contain no interior lattice point");
        if (i + 1 < segments_.size())
            expect(s.slope() <= segments_[i + 1].slope(), "segment slopes must be non-decreasing");
        width_sum += s.width;
    }
    expect(width_sum == degree_, "segment widths must sum to the degree");
    for (const Edge& e : edges_) {
        expect(e.width >= 1, "edge width must be positive");
        expect(e.multiplicity * e.segment_width == e.width, "edge splitting must be exact");
    }
    // Every plotted point lies on or above every edge's supporting line.
    for (const Edge& e : edges_) {
        for (const LatticePoint& pt : points_) {
            __int128 lhs = static_cast<__int128>(pt.y - e.start.y) * e.width;
            __int128 rhs = static_cast<__int128>(e.height) * (pt.x - e.start.x);
            expect(lhs >= rhs, "plotted point below an edge's supporting line");
        }
    }
}

std::vector<int> segment_widths(const NewtonPolygon& poly) {
    std::vector<int> widths;
    widths.reserve(poly.segments().size());
    for (const Segment& s : poly.segments()) widths.push_back(s.width);
    return widths;
}

bool verify_vertex_conditions(const std::vector<int>& claimed_abscissae, const IntPoly& f, PrimeP p) {
    if (f.is_zero() || f.constant_term() == 0)
        throw std::domain_error("vertex check requires a nonzero constant term");
    int n = f.degree();
    if (n < 1) throw std::domain_error("vertex check requires degree >= 1");
    if (claimed_abscissae.empty() || claimed_abscissae.front() != 0 || claimed_abscissae.back() != n)
        throw std::invalid_argument("claimed abscissae must run from 0 to the degree");
    for (std::size_t i = 0; i < claimed_abscissae.size(); ++i) {
        int j = claimed_abscissae[i];
        if (j < 0 || j > n) throw std::invalid_argument("claimed abscissa out of range");
        if (i && claimed_abscissae[i - 1] >= j)
            throw std::invalid_argument("claimed abscissae must strictly increase");
        if (f.coeff(j) == 0) throw std::invalid_argument("claimed vertex has a zero coefficient");
    }

    std::vector<std::int64_t> vals(claimed_abscissae.size());
    for (std::size_t i = 0; i < claimed_abscissae.size(); ++i)
        vals[i] = nu_p(f.coeff(claimed_abscissae[i]), p).value();

    // i) chord slopes strictly increase.
    for (std::size_t i = 0; i + 2 < claimed_abscissae.size(); ++i) {
        std::int64_t x0 = claimed_abscissae[i], x1 = claimed_abscissae[i + 1], x2 = claimed_abscissae[i + 2];
        __int128 lhs = static_cast<__int128>(vals[i + 1] - vals[i]) * (x2 - x1);
        __int128 rhs = static_cast<__int128>(vals[i + 2] - vals[i + 1]) * (x1 - x0);
        if (lhs >= rhs) return false;
    }
    // ii) no plotted point strictly below its spanning chord.
    for (std::size_t i = 0; i + 1 < claimed_abscissae.size(); ++i) {
        int j0 = claimed_abscissae[i], j1 = claimed_abscissae[i + 1];
        for (int k = j0 + 1; k < j1; ++k) {
            if (f.coeff(k) == 0) continue;
            std::int64_t vk = nu_p(f.coeff(k), p).value();
            __int128 lhs = static_cast<__int128>(vk) * (j1 - j0);
            __int128 rhs = static_cast<__int128>(j1 - k) * vals[i] + static_cast<__int128>(k - j0) * vals[i + 1];
            if (lhs < rhs) return false;
        }
    }
    return true;
}

ShapeClass classify_shape(const NewtonPolygon& poly) {
    const auto& edges = poly.edges();
    auto sign = [](const Edge& e) { return e.height < 0 ? -1 : (e.height > 0 ? 1 : 0); };
    if (edges.size() >= 3) return {ShapeTag::ThreeOrMoreEdges, std::nullopt};
    if (edges.size() == 1) {
        switch (sign(edges[0])) {
            case -1: return {ShapeTag::SingleEdgeNeg, std::nullopt};
            case 1: return {ShapeTag::SingleEdgePos, std::nullopt};
            default: return {ShapeTag::SingleEdgeZero, std::nullopt};
        }
    }
    if (edges.size() == 2) {
        int corner = edges[0].end.x;
        int s1 = sign(edges[0]), s2 = sign(edges[1]);
        if (s1 < 0 && s2 > 0) return {ShapeTag::NegThenPos, corner};
        if (s1 == 0 && s2 > 0) return {ShapeTag::ZeroThenPos, corner};
        if (s1 < 0 && s2 == 0) return {ShapeTag::NegThenZero, corner};
        if (s1 > 0 && s2 > 0) return {ShapeTag::PosThenPos, corner};
        return {ShapeTag::NegThenNeg, corner}; // slopes strictly increase, so only (-,-) remains
    }
    // Degree-0 constant polygon: no edges at all.
    return {ShapeTag::SingleEdgeZero, std::nullopt};
}

} // namespace npcert
