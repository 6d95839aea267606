#pragma once

#include "tilecert/cell.hpp"
#include "tilecert/laurent.hpp"

namespace tilecert {

/// Lozenge weight assignment. A horizontal lozenge centered at height h gets
/// (q^h + q^-h)/2; every other lozenge gets 1. The HalfAxis variant instead
/// gives the h = 0 horizontal lozenges weight 1/2 (the axis rule used for the
/// dented regions and for the bottom half of a symmetric split). Weights are
/// invariant under h -> -h in both variants.
struct WeightScheme {
    enum class Variant { Standard, HalfAxis };

    Variant variant = Variant::Standard;

    static WeightScheme standard() { return {Variant::Standard}; }
    static WeightScheme half_axis() { return {Variant::HalfAxis}; }

    bool operator==(const WeightScheme&) const = default;

    LaurentPoly weight(const Lozenge& l) const {
        if (!l.horizontal()) return LaurentPoly::one();
        const std::int64_t h = l.center_h();
        if (h == 0)
            return variant == Variant::HalfAxis ? LaurentPoly::constant(Rat(1, 2))
                                                : LaurentPoly::one();
        return LaurentPoly::from_terms({{h, Rat(1, 2)}, {-h, Rat(1, 2)}});
    }

    const char* name() const {
        return variant == Variant::Standard ? "standard" : "halfaxis";
    }
};

}  // namespace tilecert
