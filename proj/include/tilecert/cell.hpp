#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace tilecert {

/// Orientation of a unit triangle on the triangular lattice whose one line
/// family is vertical: Right cells point east, Left cells point west.
enum class Orient : std::uint8_t { Left, Right };

/// Unit triangle addressed by its column strip p (the cell lies between the
/// vertical lattice lines p and p+1) and the height h of its center in
/// half-side units. A Right cell (p,h) has vertices (p,h-1),(p,h+1),(p+1,h);
/// a Left cell (p,h) has vertices (p+1,h-1),(p+1,h+1),(p,h).
struct TriCell {
    std::int32_t p = 0;
    std::int32_t h = 0;
    Orient o = Orient::Right;

    friend constexpr auto operator<=>(const TriCell&, const TriCell&) = default;

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(h) + "," +
               (o == Orient::Left ? "L" : "R") + ")";
    }
};

inline constexpr TriCell left_cell(std::int32_t p, std::int32_t h) {
    return TriCell{p, h, Orient::Left};
}
inline constexpr TriCell right_cell(std::int32_t p, std::int32_t h) {
    return TriCell{p, h, Orient::Right};
}

/// The three cells that share a full edge with c. A Right cell pairs with the
/// Left cells one step above/below in its own strip and with the Left cell of
/// the previous strip at the same height (the horizontal-lozenge partner);
/// symmetrically for Left cells.
inline constexpr std::array<TriCell, 3> cell_partners(const TriCell& c) {
    if (c.o == Orient::Right)
        return {left_cell(c.p, c.h - 1), left_cell(c.p, c.h + 1), left_cell(c.p - 1, c.h)};
    return {right_cell(c.p, c.h - 1), right_cell(c.p, c.h + 1), right_cell(c.p + 1, c.h)};
}

inline constexpr bool cells_adjacent(const TriCell& a, const TriCell& b) {
    for (const TriCell& x : cell_partners(a))
        if (x == b) return true;
    return false;
}

/// Unordered adjacent cell pair, stored with the smaller cell first.
struct Lozenge {
    TriCell a, b;

    Lozenge() = default;
    Lozenge(TriCell x, TriCell y) : a(x < y ? x : y), b(x < y ? y : x) {}

    friend constexpr auto operator<=>(const Lozenge&, const Lozenge&) = default;

    /// Two triangles sharing a vertical edge; the only weighted orientation.
    bool horizontal() const { return a.h == b.h; }
    /// Height of the shared vertical edge's midpoint; only meaningful for
    /// horizontal lozenges.
    std::int32_t center_h() const { return a.h; }

    std::string str() const { return a.str() + "+" + b.str(); }
};

}  // namespace tilecert
