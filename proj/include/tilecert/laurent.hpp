#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tilecert {

using Rat = mpq_class;

/// Laurent polynomial in q with exact rational coefficients.
///
/// Terms are kept sorted by exponent and never store a zero coefficient,
/// so the empty term list is the zero polynomial and operator== is
/// coefficient-wise equality.
class LaurentPoly {
public:
    using Term = std::pair<std::int64_t, Rat>;

    LaurentPoly() = default;

    static LaurentPoly constant(const Rat& c);
    static LaurentPoly one() { return constant(1); }
    /// c * q^e
    static LaurentPoly q_power(std::int64_t e, const Rat& c = Rat(1));
    /// Accepts terms in any order, merges duplicates, drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    /// Precondition for min_exp/max_exp: nonzero polynomial.
    std::int64_t min_exp() const { return t_.front().first; }
    std::int64_t max_exp() const { return t_.back().first; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }
    Rat coeff(std::int64_t e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }

    /// Multiply by q^k.
    LaurentPoly shifted(std::int64_t k) const;
    /// q -> q^-1 (negates every exponent).
    LaurentPoly substitute_q_inverse() const;
    /// Value at q = 1 (sum of coefficients); always defined for polynomials.
    Rat eval_one() const;

    bool operator==(const LaurentPoly&) const = default;

    /// Human-readable form, e.g. "q^-2 + 1/2 + q^2".
    std::string str() const;

private:
    std::vector<Term> t_;
};

}  // namespace tilecert
