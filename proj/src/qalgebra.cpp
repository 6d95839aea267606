#include "tilecert/qalgebra.hpp"

#include <stdexcept>

namespace tilecert {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

namespace {

void check_base(int s) {
    if (s != 1 && s != 2) throw std::domain_error("qbracket: base exponent s must be 1 or 2");
}

// q^{sn} - q^{-sn} as a Laurent polynomial; sn must be integral.
LaurentPoly sinh_atom(HalfInt n, int s) {
    const std::int64_t t = n.twice * s;  // 2*s*n
    if (t % 2 != 0) throw std::domain_error("qbracket: half-integer argument requires s = 2");
    const std::int64_t e = t / 2;
    if (e == 0) return LaurentPoly();
    return LaurentPoly::from_terms({{e, Rat(1)}, {-e, Rat(-1)}});
}

}  // namespace

RationalFunc qbracket(HalfInt n, int s) {
    check_base(s);
    return RationalFunc(sinh_atom(n, s), sinh_atom(HalfInt(1), s));
}

RationalFunc qfactorial(std::int64_t n, int s) {
    check_base(s);
    if (n < 0) throw std::domain_error("qfactorial: negative argument");
    RationalFunc r(1);
    for (std::int64_t i = 1; i <= n; ++i) r *= qbracket(HalfInt(i), s);
    return r;
}

RationalFunc qhyperfactorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("qhyperfactorial: negative argument");
    RationalFunc r(1);
    for (std::int64_t i = 0; i < n; ++i) r *= qfactorial(i, 1);
    return r;
}

RationalFunc qpochhammer(HalfInt a, std::int64_t n, int s) {
    check_base(s);
    if (!a.positive() || (a + HalfInt(n)).twice <= 0)
        throw std::domain_error("qpochhammer: requires a > 0 and a + n > 0 (a = " + a.str() +
                                ", n = " + std::to_string(n) + ")");
    RationalFunc r(1);
    if (n > 0) {
        for (std::int64_t i = 0; i < n; ++i) r *= qbracket(a + HalfInt(i), s);
    } else if (n < 0) {
        for (std::int64_t i = 1; i <= -n; ++i) {
            HalfInt arg = a - HalfInt(i);
            if (arg.twice == 0)
                throw std::domain_error("qpochhammer: zero bracket <0> in divisor (a = " + a.str() +
                                        ", n = " + std::to_string(n) + ")");
            r /= qbracket(arg, s);
        }
    }
    return r;
}

RationalFunc substitute_q_inverse(const RationalFunc& f) { return f.substitute_q_inverse(); }

Rat evaluate_at_one(const RationalFunc& f) { return f.eval_one(); }

}  // namespace tilecert
