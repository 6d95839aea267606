#pragma once

#include "tilecert/ratfunc.hpp"

#include <compare>
#include <string>

namespace tilecert {

/// Half-integer stored as a doubled integer, so 3/2 is twice == 3. Keeps all
/// bracket-argument arithmetic integral.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : twice(2LL * n) {}
    constexpr HalfInt(std::int64_t n) : twice(2 * n) {}
    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice = t;
        return h;
    }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr bool positive() const { return twice > 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const;
};

/// 1/2 as a HalfInt.
inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// q-analogue bracket <n> in base q^s: (q^{sn} - q^{-sn}) / (q^s - q^{-s}).
/// s must be 1 or 2; s = 1 additionally requires integer n so that all
/// exponents stay integral. <0> is the zero function.
RationalFunc qbracket(HalfInt n, int s);

/// <n>! = prod_{i=1..n} <i>, with <0>! = 1. Rejects negative n.
RationalFunc qfactorial(std::int64_t n, int s);

/// H_q(n) = prod_{i=0..n-1} <i>! in base q, with H_q(0) = 1.
RationalFunc qhyperfactorial(std::int64_t n);

/// Shifted factorial (<a>)_n in base q^s:
///   n > 0: prod_{i=0..n-1} <a+i>;  n = 0: 1;  n < 0: 1 / prod_{i=1..-n} <a-i>.
/// Requires a > 0 and a + n > 0; a zero bracket in the divisor is a domain
/// error.
RationalFunc qpochhammer(HalfInt a, std::int64_t n, int s);

/// q -> q^-1 on a rational function (every bracket is invariant under this).
RationalFunc substitute_q_inverse(const RationalFunc& f);

/// Exact limit value at q = 1 (cancels the common vanishing analytically via
/// the canonical form); throws if the reduced denominator vanishes there.
Rat evaluate_at_one(const RationalFunc& f);

}  // namespace tilecert
