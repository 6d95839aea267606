#include "tilecert/render.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace tilecert {

namespace {

constexpr double kCol = 17.320508;  // sqrt(3) * 10: column pitch
constexpr double kRow = 10.0;       // one h unit

struct Mapper {
    double x0, y0;
    double x(double p) const { return (p - x0) * kCol + 20; }
    double y(double h) const { return (y0 - h) * kRow + 20; }
};

}  // namespace

std::string render_svg(const Region& r, const WeightScheme& w,
                       const std::vector<Lozenge>& shaded) {
    std::ostringstream os;
    if (r.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
    Mapper m{static_cast<double>(r.min_p()), static_cast<double>(r.max_h())};
    const double width = m.x(r.max_p() + 1) + 20;
    const double height = m.y(r.min_h() - 1) + 20;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";

    std::set<Lozenge> shade(shaded.begin(), shaded.end());
    auto tri_points = [&](const TriCell& c) {
        std::ostringstream p;
        if (c.o == Orient::Right)
            p << m.x(c.p) << "," << m.y(c.h - 1) << " " << m.x(c.p) << "," << m.y(c.h + 1) << " "
              << m.x(c.p + 1) << "," << m.y(c.h);
        else
            p << m.x(c.p + 1) << "," << m.y(c.h - 1) << " " << m.x(c.p + 1) << "," << m.y(c.h + 1)
              << " " << m.x(c.p) << "," << m.y(c.h);
        return p.str();
    };
    for (const TriCell& c : r.cells())
        os << "  <polygon points=\"" << tri_points(c)
           << "\" fill=\"white\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
    for (const Lozenge& l : shade) {
        os << "  <polygon points=\"" << tri_points(l.a)
           << "\" fill=\"#bbbbbb\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
        os << "  <polygon points=\"" << tri_points(l.b)
           << "\" fill=\"#bbbbbb\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
    }
    // Half-weighted horizontal positions get the ellipse mark.
    if (w.variant == WeightScheme::Variant::HalfAxis)
        for (const TriCell& c : r.cells())
            if (c.h == 0 && c.o == Orient::Left &&
                r.contains(right_cell(c.p + 1, 0)))
                os << "  <ellipse cx=\"" << m.x(c.p + 1) << "\" cy=\"" << m.y(0)
                   << "\" rx=\"" << kCol * 0.45 << "\" ry=\"" << kRow * 0.55
                   << "\" fill=\"#888888\" fill-opacity=\"0.5\"/>\n";
    os << "  <line x1=\"" << m.x(r.min_p() - 0.5) << "\" y1=\"" << m.y(0) << "\" x2=\""
       << m.x(r.max_p() + 1.5) << "\" y2=\"" << m.y(0)
       << "\" stroke=\"black\" stroke-dasharray=\"4,3\" stroke-width=\"0.8\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_ascii(const Region& r) {
    if (r.empty()) return "(empty region)\n";
    const std::int32_t pw = r.max_p() - r.min_p() + 1;
    const std::int32_t hw = r.max_h() - r.min_h() + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(hw),
                                  std::string(static_cast<std::size_t>(pw), ' '));
    for (const TriCell& c : r.cells()) {
        auto row = static_cast<std::size_t>(r.max_h() - c.h);
        auto col = static_cast<std::size_t>(c.p - r.min_p());
        grid[row][col] = c.o == Orient::Left ? '<' : '>';
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << grid[i];
        if (static_cast<std::int32_t>(i) == r.max_h()) os << "  -- axis";
        os << "\n";
    }
    return os.str();
}

}  // namespace tilecert
