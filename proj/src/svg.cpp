#include "npcert/svg.hpp"

#include <algorithm>
#include <sstream>

namespace npcert {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string polygon_to_svg(const NewtonPolygon& poly, const std::string& title) {
    std::int64_t ymax = 0;
    for (const auto& pt : poly.points()) ymax = std::max(ymax, pt.y);
    ymax = std::max<std::int64_t>(ymax, 1);
    int n = std::max(poly.degree(), 1);

    const int cell = 40;
    const int margin = 50;
    const int width = margin * 2 + n * cell;
    const int height = margin * 2 + static_cast<int>(ymax) * cell;
    auto X = [&](double x) { return margin + x * cell; };
    auto Y = [&](double y) { return height - margin - y * cell; }; // flip: valuations grow upward

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    s << "  <title>" << xml_escape(title) << "</title>\n";
    s << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    s << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int i = 0; i <= n; ++i)
        s << "    <line x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i) << "\" y2=\""
          << Y(static_cast<double>(ymax)) << "\"/>\n";
    for (std::int64_t j = 0; j <= ymax; ++j)
        s << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(static_cast<double>(j)) << "\" x2=\""
          << X(n) << "\" y2=\"" << Y(static_cast<double>(j)) << "\"/>\n";
    s << "  </g>\n";

    s << "  <g stroke=\"black\" stroke-width=\"1.5\">\n";
    s << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(n) << "\" y2=\"" << Y(0)
      << "\"/>\n";
    s << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
      << Y(static_cast<double>(ymax)) << "\"/>\n";
    s << "  </g>\n";

    // Hull through every segment endpoint, so lattice splits are visible.
    s << "  <polyline fill=\"none\" stroke=\"#c62828\" stroke-width=\"2.5\" points=\"";
    LatticePoint pos = poly.vertices().front();
    s << X(pos.x) << ',' << Y(static_cast<double>(pos.y));
    for (const Segment& seg : poly.segments()) {
        pos = LatticePoint{pos.x + seg.width, pos.y + seg.height};
        s << ' ' << X(pos.x) << ',' << Y(static_cast<double>(pos.y));
    }
    s << "\"/>\n";

    for (const auto& pt : poly.points())
        s << "  <circle cx=\"" << X(pt.x) << "\" cy=\"" << Y(static_cast<double>(pt.y))
          << "\" r=\"4\" fill=\"#1565c0\"/>\n";
    for (const auto& v : poly.vertices()) {
        s << "  <circle cx=\"" << X(v.x) << "\" cy=\"" << Y(static_cast<double>(v.y))
          << "\" r=\"5.5\" fill=\"#c62828\"/>\n";
        s << "  <text x=\"" << X(v.x) + 7 << "\" y=\"" << Y(static_cast<double>(v.y)) - 7
          << "\" font-size=\"13\" font-family=\"sans-serif\">(" << v.x << ',' << v.y
          << ")</text>\n";
    }

    s << "  <text x=\"" << margin << "\" y=\"" << 24
      << "\" font-size=\"15\" font-family=\"sans-serif\">" << xml_escape(title) << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace npcert
