#pragma once

#include "tilecert/cell.hpp"
#include "tilecert/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tilecert {

/// Finite set of lattice cells with the weighting axis normalized to h = 0.
/// Immutable after construction; transforms return new values.
class Region {
public:
    Region() = default;
    /// Sorts, rejects duplicates.
    static Region from_cells(std::string label, std::vector<TriCell> cells);

    const std::vector<TriCell>& cells() const { return cells_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(const TriCell& c) const;
    static constexpr std::int32_t axis_h = 0;

    /// #Left - #Right cells; a tileable region needs 0.
    std::int64_t imbalance() const;
    std::int32_t min_p() const, max_p() const, min_h() const, max_h() const;

    /// Invariance of the cell set under h -> -h.
    bool symmetric_h() const;

    /// Reflection across the vertical line through the strip midspan:
    /// p -> (min_p + max_p) - p with Left/Right swapped, h fixed. Involution;
    /// preserves every lozenge weight.
    Region mirror_j() const;
    /// Reflection across the h = 0 axis: h -> -h, orientation fixed. This is
    /// the map that swaps the two diagonal side-length parameters of the
    /// region families.
    Region flip_h() const;
    Region translated(std::int32_t dp, std::int32_t dh, std::string label = "") const;
    Region without(const std::vector<TriCell>& removed, std::string label = "") const;
    Region relabeled(std::string label) const;

private:
    std::vector<TriCell> cells_;  // sorted, unique
    std::string label_;
};

/// Closed boundary walk on the lattice. Unit steps: N/S move 2 in h on a
/// fixed column; the four diagonal steps move 1 in p and 1 in h.
enum class Dir { N, NE, SE, S, SW, NW };
struct PathStep {
    Dir d;
    std::int64_t len = 0;
};

/// Cells enclosed by a closed boundary walk (even-odd rule, evaluated on
/// strip midlines where no degeneracy is possible). Throws if the walk does
/// not close.
Region region_from_boundary(std::string label, std::int32_t start_p, std::int32_t start_h,
                            const std::vector<PathStep>& steps);

/// Hexagon with side lengths x,y,z,x,y,z clockwise from the left side, left
/// side on column 0 spanning h in [-x, x]. Cell count 2(xy+yz+zx).
Region build_hexagon(std::int64_t x, std::int64_t y, std::int64_t z);

enum class Parity { Even, Odd };

/// Parameter bundle (a, m, n, k : a_1..a_k) for the intruded hexagon
/// families, with the suffix sums b_i = a_i + ... + a_k and the depth b_1 + k.
struct IntrusionSpec {
    std::int64_t a = 0, m = 0, n = 0, k = 0;
    std::vector<std::int64_t> a_list;
    Parity parity = Parity::Even;

    /// Throws std::invalid_argument on negative entries or size mismatch.
    void validate() const;
    std::vector<std::int64_t> suffix_b() const;
    std::int64_t b1() const;
    std::int64_t depth() const { return b1() + k; }
    IntrusionSpec swapped_mn() const;
    std::string str() const;
};

/// Even-family region: for k = 0 the hexagon (2a, m, n); otherwise the
/// hexagon with sides (2a+1, m+2b1+k-1, n+k, 2a+2b1, m+k, n+2b1+k-1) minus
/// the intrusion chain of side lengths 1, 2a_1+1, ..., 1, 2a_k placed along
/// h = 0 from the left boundary.
Region build_he(const IntrusionSpec& s);
/// Odd-family region: for k = 0 the hexagon (2a+1, m, n); otherwise sides
/// (2a+1, m+2b1+k, n+k, 2a+2b1+1, m+k, n+2b1+k) minus the chain
/// 1, 2a_1+1, ..., 1, 2a_k+1.
Region build_ho(const IntrusionSpec& s);

/// Same but with the intrusion chain shifted right by offset_cols columns
/// (must keep lattice parity, i.e. be even). Calibration helper; the shipped
/// builders use offset 0.
Region build_intruded(const IntrusionSpec& s, std::int64_t offset_cols);

/// The intrusion cells that build_intruded removes (offset 0 for the shipped
/// builders).
std::vector<TriCell> intrusion_cells(const IntrusionSpec& s, std::int64_t offset_cols = 0);

/// Parameter bundle (l, n, x) for the dented zigzag regions. l is strictly
/// increasing with positive entries (l may be empty, then m = l_m = 0).
/// x >= -1 is allowed only for empty l; otherwise x >= 0.
struct RSpec {
    std::vector<std::int64_t> l;
    std::int64_t n = 0, x = 0;

    void validate(bool allow_negative_x = true) const;
    std::int64_t m() const { return static_cast<std::int64_t>(l.size()); }
    std::int64_t lm() const { return l.empty() ? 0 : l.back(); }
    /// 2^-e prefactor exponents of the two product formulas.
    std::int64_t e() const;
    std::int64_t e_bar() const;
    std::string str(bool bar) const;
};

/// Region bounded below by the zigzag along the axis line h = 0 (plus the
/// dented line h = 1 when l is nonempty), with the labeled left-pointing unit
/// triangles on the dented line removed for labels outside l. Weighted with
/// the half-axis scheme.
Region build_r(const RSpec& s);
/// Variant connecting the two zigzag levels by a single lattice edge; for
/// n = 0 the region sits entirely above the axis.
Region build_rbar(const RSpec& s);

/// Result of iterated forced-lozenge removal: tgf(region, w) equals
/// multiplier * tgf(remaining, w), or 0 when untileable (a cell ran out of
/// partners).
struct ForcedRemoval {
    Region remaining;
    LaurentPoly multiplier;
    std::vector<Lozenge> removed;
    bool untileable = false;
};

/// Repeatedly pairs off any cell with exactly one available partner.
ForcedRemoval remove_forced(const Region& r, const WeightScheme& w);

/// Which way the symmetric split's zigzag leaves its starting point. The
/// north-east start is the calibrated convention: the axis-straddling cells
/// go to the bottom piece, which takes the half-axis weights. The south-east
/// start is retained for calibration only.
enum class ZigzagStart { NorthEast, SouthEast };

struct SplitPieces {
    Region plus;   // bottom piece
    WeightScheme plus_scheme;
    Region minus;  // top piece
    WeightScheme minus_scheme;
    /// Half the number of axis-straddling cells: the exponent in the
    /// factorization tgf(r) = 2^w tgf(plus) tgf(minus).
    std::int64_t width = 0;
};

/// Splits an h-symmetric region along the axis zigzag. Throws on asymmetric
/// input or an odd number of axis cells.
SplitPieces split_symmetric(const Region& r, ZigzagStart start = ZigzagStart::NorthEast);

}  // namespace tilecert
