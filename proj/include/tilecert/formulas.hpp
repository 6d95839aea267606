#pragma once

#include "tilecert/qalgebra.hpp"
#include "tilecert/region.hpp"

#include <string>
#include <vector>

namespace tilecert {

/// One multiplicand of a product formula, tagged with enough provenance to
/// name the first mismatching factor when a certification fails.
struct FormulaFactor {
    std::string tag;
    RationalFunc value;
};

struct FormulaValue {
    RationalFunc value;  // product of all factors
    std::vector<FormulaFactor> factors;
};

/// Plain product-formula count of hexagon tilings (the q = 1 value):
/// H(x)H(y)H(z)H(x+y+z) / (H(x+y)H(y+z)H(z+x)) with H the hyperfactorial.
Rat rhs_macmahon(std::int64_t x, std::int64_t y, std::int64_t z);

/// Weighted hexagon formula: the cosh prefactor times the q-hyperfactorial
/// ratio. Equals the standard-scheme tiling generating function of
/// build_hexagon(x, y, z).
FormulaValue rhs_hexagon_q(std::int64_t x, std::int64_t y, std::int64_t z);

/// Closed products for tgf(he)/tgf(hex(2a+2b1, m+k, n+k)) and
/// tgf(ho)/tgf(hex(2a+2b1+1, m+k, n+k)). Both require n >= m and reject
/// violations rather than swapping silently.
FormulaValue rhs_thm22_even(const IntrusionSpec& s);
FormulaValue rhs_thm22_odd(const IntrusionSpec& s);

/// Closed products for the half-axis tgf of the dented zigzag regions,
/// including the 2^-e / 2^-ebar prefactors.
FormulaValue rhs_lr_r(const RSpec& s);
FormulaValue rhs_lr_rbar(const RSpec& s);

/// Formula-only tgf of an intruded region (ratio formula times the companion
/// hexagon formula); requires n >= m.
FormulaValue formula_tgf(const IntrusionSpec& s);

/// Collapsed one-step consistency identities used by the certification
/// suite; each evaluates to exactly 1/2 or 1 from the formula evaluators
/// alone.
enum class RatioId { Eq4_25, Eq4_29, Eq4_33, Eq4_37, Eq4_43, Eq4_49 };

struct RatioParams {
    std::int64_t a = 0, m = 0, n = 0, k = 0;  // n is used by the three sum identities
    std::vector<std::int64_t> a_list;
};

struct RatioOutcome {
    bool holds = false;
    RationalFunc lhs;
    Rat expected;
};

const char* ratio_id_name(RatioId id);
RatioOutcome ratio_identity(RatioId id, const RatioParams& p);

}  // namespace tilecert
