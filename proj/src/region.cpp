#include "tilecert/region.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tilecert {

namespace {

int parity_of(std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); }

std::string join_list(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

}  // namespace

Region Region::from_cells(std::string label, std::vector<TriCell> cells) {
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::invalid_argument("Region: duplicate cell in " + label);
    // Two opposite cells anchored at the same (p,h) cannot coexist on one
    // lattice; catching it here protects every downstream sweep.
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].p == cells[i - 1].p && cells[i].h == cells[i - 1].h)
            throw std::invalid_argument("Region: conflicting orientations at one anchor in " + label);
    Region r;
    r.cells_ = std::move(cells);
    r.label_ = std::move(label);
    return r;
}

bool Region::contains(const TriCell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::int64_t Region::imbalance() const {
    std::int64_t d = 0;
    for (const TriCell& c : cells_) d += (c.o == Orient::Left) ? 1 : -1;
    return d;
}

std::int32_t Region::min_p() const {
    std::int32_t v = cells_.empty() ? 0 : cells_.front().p;
    return v;
}
std::int32_t Region::max_p() const {
    std::int32_t v = cells_.empty() ? 0 : cells_.back().p;
    return v;
}
std::int32_t Region::min_h() const {
    std::int32_t v = 0;
    bool first = true;
    for (const TriCell& c : cells_) {
        if (first || c.h < v) v = c.h;
        first = false;
    }
    return v;
}
std::int32_t Region::max_h() const {
    std::int32_t v = 0;
    bool first = true;
    for (const TriCell& c : cells_) {
        if (first || c.h > v) v = c.h;
        first = false;
    }
    return v;
}

bool Region::symmetric_h() const {
    for (const TriCell& c : cells_)
        if (!contains(TriCell{c.p, -c.h, c.o})) return false;
    return true;
}

Region Region::mirror_j() const {
    if (cells_.empty()) return *this;
    const std::int32_t s = min_p() + max_p();
    std::vector<TriCell> out;
    out.reserve(cells_.size());
    for (const TriCell& c : cells_)
        out.push_back(TriCell{static_cast<std::int32_t>(s - c.p), c.h,
                              c.o == Orient::Left ? Orient::Right : Orient::Left});
    return from_cells("mirror_j(" + label_ + ")", std::move(out));
}

Region Region::flip_h() const {
    std::vector<TriCell> out;
    out.reserve(cells_.size());
    for (const TriCell& c : cells_) out.push_back(TriCell{c.p, -c.h, c.o});
    return from_cells("flip_h(" + label_ + ")", std::move(out));
}

Region Region::translated(std::int32_t dp, std::int32_t dh, std::string label) const {
    std::vector<TriCell> out;
    out.reserve(cells_.size());
    for (const TriCell& c : cells_)
        out.push_back(TriCell{c.p + dp, c.h + dh, c.o});
    return from_cells(label.empty() ? label_ + "+shift" : std::move(label), std::move(out));
}

Region Region::without(const std::vector<TriCell>& removed, std::string label) const {
    std::set<TriCell> kill(removed.begin(), removed.end());
    for (const TriCell& c : kill)
        if (!contains(c))
            throw std::invalid_argument("Region::without: cell " + c.str() + " not in " + label_);
    std::vector<TriCell> out;
    out.reserve(cells_.size() - kill.size());
    for (const TriCell& c : cells_)
        if (!kill.count(c)) out.push_back(c);
    Region r;
    r.cells_ = std::move(out);
    r.label_ = label.empty() ? label_ + "-holes" : std::move(label);
    return r;
}

Region Region::relabeled(std::string label) const {
    Region r = *this;
    r.label_ = std::move(label);
    return r;
}

Region region_from_boundary(std::string label, std::int32_t start_p, std::int32_t start_h,
                            const std::vector<PathStep>& steps) {
    // Diagonal unit edges crossing the midline of strip p do so at a
    // half-integer height, stored doubled; cells occupy [h-1/2, h+1/2] there,
    // so the even-odd intervals decide membership with no degeneracies.
    std::map<std::int32_t, std::vector<std::int64_t>> crossings;
    std::int64_t p = start_p, h = start_h;
    for (const PathStep& st : steps) {
        if (st.len < 0) throw std::invalid_argument("boundary step with negative length in " + label);
        for (std::int64_t i = 0; i < st.len; ++i) {
            std::int64_t np = p, nh = h;
            switch (st.d) {
                case Dir::N: nh += 2; break;
                case Dir::S: nh -= 2; break;
                case Dir::NE: np += 1, nh += 1; break;
                case Dir::SE: np += 1, nh -= 1; break;
                case Dir::SW: np -= 1, nh -= 1; break;
                case Dir::NW: np -= 1, nh += 1; break;
            }
            if (np != p) crossings[static_cast<std::int32_t>(std::min(p, np))].push_back(h + nh);
            p = np, h = nh;
        }
    }
    if (p != start_p || h != start_h)
        throw std::invalid_argument("boundary walk does not close for " + label);

    const int base = parity_of(start_p + start_h);  // vertex parity anchor
    std::vector<TriCell> cells;
    for (auto& [strip, ts] : crossings) {
        std::sort(ts.begin(), ts.end());
        if (ts.size() % 2 != 0)
            throw std::invalid_argument("odd crossing count in strip of " + label);
        for (std::size_t i = 0; i + 1 < ts.size(); i += 2) {
            for (std::int64_t hh = (ts[i] + 1) / 2; hh <= (ts[i + 1] - 1) / 2; ++hh) {
                const Orient o =
                    parity_of(strip + hh) == base ? Orient::Left : Orient::Right;
                cells.push_back(TriCell{strip, static_cast<std::int32_t>(hh), o});
            }
        }
    }
    return Region::from_cells(std::move(label), std::move(cells));
}

Region build_hexagon(std::int64_t x, std::int64_t y, std::int64_t z) {
    if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("build_hexagon: negative side");
    std::string label = "hex(" + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z) + ")";
    Region r = region_from_boundary(label, 0, static_cast<std::int32_t>(-x),
                                    {{Dir::N, x},
                                     {Dir::NE, y},
                                     {Dir::SE, z},
                                     {Dir::S, x},
                                     {Dir::SW, y},
                                     {Dir::NW, z}});
    assert(static_cast<std::int64_t>(r.size()) == 2 * (x * y + y * z + z * x));
    return r;
}

void IntrusionSpec::validate() const {
    if (a < 0 || m < 0 || n < 0 || k < 0)
        throw std::invalid_argument("intrusion spec: negative parameter");
    if (static_cast<std::int64_t>(a_list.size()) != k)
        throw std::invalid_argument("intrusion spec: a_list size != k");
    for (std::int64_t v : a_list)
        if (v < 0) throw std::invalid_argument("intrusion spec: negative a_i");
}

std::vector<std::int64_t> IntrusionSpec::suffix_b() const {
    std::vector<std::int64_t> b(a_list.size(), 0);
    std::int64_t acc = 0;
    for (std::size_t i = a_list.size(); i-- > 0;) {
        acc += a_list[i];
        b[i] = acc;
    }
    return b;
}

std::int64_t IntrusionSpec::b1() const {
    std::int64_t acc = 0;
    for (std::int64_t v : a_list) acc += v;
    return acc;
}

IntrusionSpec IntrusionSpec::swapped_mn() const {
    IntrusionSpec s = *this;
    std::swap(s.m, s.n);
    return s;
}

std::string IntrusionSpec::str() const {
    std::string name = parity == Parity::Even ? "he" : "ho";
    return name + "(" + std::to_string(a) + "," + std::to_string(m) + "," + std::to_string(n) +
           "," + std::to_string(k) + ":" + join_list(a_list) + ")";
}

std::vector<TriCell> intrusion_cells(const IntrusionSpec& s, std::int64_t offset_cols) {
    if (offset_cols % 2 != 0)
        throw std::invalid_argument("intrusion offset must be even to stay on the lattice");
    std::vector<TriCell> out;
    std::int64_t col = offset_cols;
    for (std::int64_t j = 1; j <= s.k; ++j) {
        // Unit right-pointing triangle, vertical edge on `col`.
        out.push_back(right_cell(static_cast<std::int32_t>(col), 0));
        col += 1;
        // Left-pointing triangle, apex on the previous apex point.
        const std::int64_t size = (s.parity == Parity::Odd || j < s.k)
                                      ? 2 * s.a_list[static_cast<std::size_t>(j - 1)] + 1
                                      : 2 * s.a_list[static_cast<std::size_t>(j - 1)];
        for (std::int64_t t = 0; t < size; ++t) {
            const auto strip = static_cast<std::int32_t>(col + t);
            for (std::int64_t hh = -t; hh <= t; hh += 2)
                out.push_back(left_cell(strip, static_cast<std::int32_t>(hh)));
            for (std::int64_t hh = -t + 1; hh <= t - 1; hh += 2)
                out.push_back(right_cell(strip, static_cast<std::int32_t>(hh)));
        }
        col += size;
    }
    return out;
}

namespace {

Region build_intruded_impl(const IntrusionSpec& s, std::int64_t offset_cols) {
    s.validate();
    const bool even = s.parity == Parity::Even;
    if (s.k == 0) {
        return build_hexagon(even ? 2 * s.a : 2 * s.a + 1, s.m, s.n).relabeled(s.str());
    }
    const std::int64_t b1 = s.b1();
    const std::int64_t left = 2 * s.a + 1;
    const std::int64_t ne = even ? s.m + 2 * b1 + s.k - 1 : s.m + 2 * b1 + s.k;
    const std::int64_t se = s.n + s.k;
    const std::int64_t right = even ? 2 * s.a + 2 * b1 : 2 * s.a + 2 * b1 + 1;
    const std::int64_t sw = s.m + s.k;
    const std::int64_t nw = even ? s.n + 2 * b1 + s.k - 1 : s.n + 2 * b1 + s.k;
    Region hexagon = region_from_boundary(s.str(), 0, static_cast<std::int32_t>(-left),
                                          {{Dir::N, left},
                                           {Dir::NE, ne},
                                           {Dir::SE, se},
                                           {Dir::S, right},
                                           {Dir::SW, sw},
                                           {Dir::NW, nw}});
    Region r = hexagon.without(intrusion_cells(s, offset_cols), s.str());
    if (r.imbalance() != 0)
        throw std::logic_error("intruded region is unbalanced: " + s.str());
    return r;
}

}  // namespace

Region build_he(const IntrusionSpec& s) {
    if (s.parity != Parity::Even) throw std::invalid_argument("build_he: spec parity must be even");
    return build_intruded_impl(s, 0);
}

Region build_ho(const IntrusionSpec& s) {
    if (s.parity != Parity::Odd) throw std::invalid_argument("build_ho: spec parity must be odd");
    return build_intruded_impl(s, 0);
}

Region build_intruded(const IntrusionSpec& s, std::int64_t offset_cols) {
    return build_intruded_impl(s, offset_cols);
}

void RSpec::validate(bool allow_negative_x) const {
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] <= 0) throw std::invalid_argument("r spec: labels must be positive");
        if (i > 0 && l[i] <= l[i - 1])
            throw std::invalid_argument("r spec: labels must be strictly increasing");
    }
    if (n < 0) throw std::invalid_argument("r spec: negative n");
    if (l.empty()) {
        if (x < -1 || (!allow_negative_x && x < 0))
            throw std::invalid_argument("r spec: x out of range");
    } else if (x < 0) {
        throw std::invalid_argument("r spec: x must be nonnegative for nonempty l");
    }
}

std::int64_t RSpec::e() const {
    std::int64_t s = n * (n + 1) / 2 + (n + 1) * m();
    for (std::size_t i = 0; i < l.size(); ++i) s += 2 * l[i] - static_cast<std::int64_t>(i + 1);
    return s;
}

std::int64_t RSpec::e_bar() const {
    std::int64_t s = n * (n + 1) / 2 + n * (m() + 1);
    for (std::size_t i = 0; i < l.size(); ++i) s += 2 * l[i] - static_cast<std::int64_t>(i + 1);
    return s;
}

std::string RSpec::str(bool bar) const {
    return (bar ? std::string("rbar({") : std::string("r({")) + join_list(l) + "}," +
           std::to_string(n) + "," + std::to_string(x) + ")";
}

namespace {

// Labeled left-pointing unit triangles on the dented line sit at
// (-1-2j, 1) for label j, counted right to left from the point one unit
// north-west of the origin.
std::vector<TriCell> dent_cells(const RSpec& s) {
    std::vector<TriCell> out;
    std::set<std::int64_t> keep(s.l.begin(), s.l.end());
    for (std::int64_t j = 1; j <= s.lm(); ++j)
        if (!keep.count(j))
            out.push_back(left_cell(static_cast<std::int32_t>(-1 - 2 * j), 1));
    return out;
}

void append_zigzag(std::vector<PathStep>& steps, std::int64_t pairs) {
    for (std::int64_t i = 0; i < pairs; ++i) {
        steps.push_back({Dir::SW, 1});
        steps.push_back({Dir::NW, 1});
    }
}

}  // namespace

Region build_r(const RSpec& s) {
    s.validate();
    const std::string label = s.str(false);
    std::vector<PathStep> steps;
    if (s.l.empty()) {
        // From the n-th axis lattice point back to the origin along the axis
        // zigzag, then a cap of height x+1.
        append_zigzag(steps, s.n);
        steps.push_back({Dir::N, s.x + 1});
        steps.push_back({Dir::NE, s.n});
        steps.push_back({Dir::SE, s.n});
        steps.push_back({Dir::S, s.x + 1});
        return region_from_boundary(label, static_cast<std::int32_t>(2 * s.n), 0, steps);
    }
    append_zigzag(steps, s.n);                       // A -> O along the axis line
    steps.push_back({Dir::N, 1});                    // O -> one unit up,
    steps.push_back({Dir::SW, 1});                   //   then down-left to the dented line
    append_zigzag(steps, s.lm());                    // -> B
    steps.push_back({Dir::N, s.x});
    steps.push_back({Dir::NE, 2 * s.lm() - s.m() + s.n + 1});
    steps.push_back({Dir::SE, s.m() + s.n});
    steps.push_back({Dir::S, s.x + s.lm() - s.m() + 1});
    Region bounded = region_from_boundary(label, static_cast<std::int32_t>(2 * s.n), 0, steps);
    return bounded.without(dent_cells(s), label);
}

Region build_rbar(const RSpec& s) {
    s.validate(false);
    const std::string label = s.str(true);
    if (s.l.empty() && s.n == 0) return Region::from_cells(label, {});
    std::vector<PathStep> steps;
    if (s.n == 0) {
        // The axis line is unused; the walk starts and ends at the point one
        // unit north-west of the origin.
        append_zigzag(steps, s.lm());
        steps.push_back({Dir::N, s.x});
        steps.push_back({Dir::NE, 2 * s.lm() - s.m()});
        steps.push_back({Dir::SE, s.m()});
        steps.push_back({Dir::S, s.x + s.lm() - s.m()});
        Region bounded = region_from_boundary(label, -1, 1, steps);
        return bounded.without(dent_cells(s), label);
    }
    append_zigzag(steps, s.n);       // A -> O
    steps.push_back({Dir::NW, 1});   // the single connecting lattice edge
    append_zigzag(steps, s.lm());    // -> B
    steps.push_back({Dir::N, s.x});
    steps.push_back({Dir::NE, 2 * s.lm() - s.m() + s.n});
    steps.push_back({Dir::SE, s.m() + s.n + 1});
    steps.push_back({Dir::S, s.x + s.lm() - s.m()});
    Region bounded = region_from_boundary(label, static_cast<std::int32_t>(2 * s.n), 0, steps);
    return bounded.without(dent_cells(s), label);
}

ForcedRemoval remove_forced(const Region& r, const WeightScheme& w) {
    ForcedRemoval out;
    out.multiplier = LaurentPoly::one();

    std::vector<TriCell> cells = r.cells();
    std::vector<char> alive(cells.size(), 1);
    auto index_of = [&cells](const TriCell& c) -> std::ptrdiff_t {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        if (it == cells.end() || *it != c) return -1;
        return it - cells.begin();
    };

    auto alive_partners = [&](std::size_t i) {
        std::vector<std::size_t> ps;
        for (const TriCell& c : cell_partners(cells[i])) {
            std::ptrdiff_t j = index_of(c);
            if (j >= 0 && alive[static_cast<std::size_t>(j)]) ps.push_back(static_cast<std::size_t>(j));
        }
        return ps;
    };

    // Worklist of cells whose degree may have dropped to <= 1; processed in
    // index order for reproducible output.
    std::set<std::size_t> work;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (alive_partners(i).size() <= 1) work.insert(i);

    while (!work.empty()) {
        const std::size_t i = *work.begin();
        work.erase(work.begin());
        if (!alive[i]) continue;
        auto ps = alive_partners(i);
        if (ps.empty()) {
            out.untileable = true;
            out.remaining = r;  // contents are irrelevant once untileable
            return out;
        }
        if (ps.size() > 1) continue;
        const std::size_t j = ps[0];
        alive[i] = alive[j] = 0;
        Lozenge l(cells[i], cells[j]);
        out.removed.push_back(l);
        out.multiplier *= w.weight(l);
        for (std::size_t t : {i, j})
            for (const TriCell& c : cell_partners(cells[t])) {
                std::ptrdiff_t nb = index_of(c);
                if (nb >= 0 && alive[static_cast<std::size_t>(nb)] &&
                    alive_partners(static_cast<std::size_t>(nb)).size() <= 1)
                    work.insert(static_cast<std::size_t>(nb));
            }
    }

    std::vector<TriCell> rest;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (alive[i]) rest.push_back(cells[i]);
    out.remaining = Region::from_cells(r.label() + "-forced", std::move(rest));
    return out;
}

SplitPieces split_symmetric(const Region& r, ZigzagStart start) {
    if (!r.symmetric_h())
        throw std::invalid_argument("split_symmetric: region is not symmetric under h -> -h: " +
                                    r.label());
    std::int64_t axis_cells = 0;
    for (const TriCell& c : r.cells())
        if (c.h == 0) ++axis_cells;
    if (axis_cells % 2 != 0)
        throw std::invalid_argument("split_symmetric: odd number of axis cells in " + r.label());

    // The zigzag hugging h in [0,1] puts the axis-straddling cells into the
    // bottom piece, which then carries the 1/2 weights on its h = 0 lozenges.
    // The south-east start is the rejected alternative reading kept for the
    // calibration check: the axis row moves to the top piece and nothing is
    // reweighted.
    const std::int32_t cut = (start == ZigzagStart::NorthEast) ? 0 : -1;
    std::vector<TriCell> lower, upper;
    for (const TriCell& c : r.cells())
        (c.h <= cut ? lower : upper).push_back(c);

    SplitPieces sp;
    sp.plus = Region::from_cells(r.label() + "+", std::move(lower));
    sp.minus = Region::from_cells(r.label() + "-", std::move(upper));
    sp.plus_scheme = (start == ZigzagStart::NorthEast) ? WeightScheme::half_axis()
                                                       : WeightScheme::standard();
    sp.minus_scheme = WeightScheme::standard();
    sp.width = axis_cells / 2;
    return sp;
}

}  // namespace tilecert
