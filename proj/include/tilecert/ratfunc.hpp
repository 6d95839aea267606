#pragma once

#include "tilecert/laurent.hpp"

#include <string>

namespace tilecert {

/// Rational function num/den in q, kept in a canonical form so that equality
/// is plain data comparison:
///   - zero is 0/1;
///   - den is an ordinary polynomial (lowest exponent 0) with coprime integer
///     coefficients and positive leading coefficient;
///   - after shifting num to an ordinary polynomial, gcd(num, den) = 1.
/// num itself may keep negative exponents; the net q-power of the value lives
/// there.
class RationalFunc {
public:
    RationalFunc() : num_(), den_(LaurentPoly::one()) {}
    RationalFunc(const Rat& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}
    RationalFunc(int c) : RationalFunc(Rat(c)) {}
    explicit RationalFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}
    /// Throws std::domain_error if den is zero.
    RationalFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunc operator-() const;
    RationalFunc& operator+=(const RationalFunc& o);
    RationalFunc& operator-=(const RationalFunc& o);
    RationalFunc& operator*=(const RationalFunc& o);
    /// Throws std::domain_error on division by zero.
    RationalFunc& operator/=(const RationalFunc& o);
    friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
    friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
    friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
    friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }
    RationalFunc pow(std::int64_t e) const;

    RationalFunc substitute_q_inverse() const;
    /// Exact value at q = 1; throws std::domain_error if the reduced
    /// denominator vanishes there.
    Rat eval_one() const;

    /// Canonical forms make == decidable memberwise; cross_eq decides the same
    /// relation by cross-multiplication without any gcd work, which is much
    /// cheaper when the operands are large unreduced polynomials.
    bool operator==(const RationalFunc&) const = default;
    static bool cross_eq(const RationalFunc& a, const RationalFunc& b);

    std::string str() const;

private:
    void canonicalize();

    LaurentPoly num_, den_;
};

/// gcd over Q[q] of two ordinary polynomials (primitive PRS on integer
/// images). Result is primitive with positive leading coefficient; gcd with 0
/// is the other argument normalized. Exposed for tests.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division a / b over Q[q]; throws std::domain_error if not exact.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace tilecert
