#include "tilecert/ratfunc.hpp"

#include <cassert>
#include <stdexcept>

namespace tilecert {

namespace {

// Dense integer polynomial, coeff[i] belongs to q^i, no trailing zeros.
using ZVec = std::vector<mpz_class>;

void trim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Shifts p to an ordinary polynomial and clears denominators; the scalar is
// irrelevant because callers only use this up to units.
ZVec to_int_poly(const LaurentPoly& p) {
    ZVec v;
    if (p.is_zero()) return v;
    const std::int64_t base = p.min_exp();
    mpz_class l(1);
    for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    v.assign(static_cast<std::size_t>(p.max_exp() - base + 1), mpz_class(0));
    for (const auto& [e, c] : p.terms()) {
        Rat scaled = c * l;
        assert(scaled.get_den() == 1);
        v[static_cast<std::size_t>(e - base)] = scaled.get_num();
    }
    return v;
}

mpz_class content(const ZVec& v) {
    mpz_class g(0);
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(ZVec& v) {
    trim(v);
    if (v.empty()) return;
    mpz_class g = content(v);
    if (v.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : v) c /= g;
}

// Pseudo-remainder of u by v (deg v >= 0), exact in integers.
ZVec prem(ZVec u, const ZVec& v) {
    const std::size_t dv = v.size() - 1;
    const mpz_class& lv = v.back();
    trim(u);
    while (u.size() > dv) {
        mpz_class lu = u.back();
        const std::size_t shift = u.size() - 1 - dv;
        for (auto& c : u) c *= lv;
        for (std::size_t i = 0; i <= dv; ++i) u[shift + i] -= lu * v[i];
        trim(u);
    }
    return u;
}

LaurentPoly from_int_poly(const ZVec& v) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i), Rat(v[i]));
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    ZVec u = to_int_poly(a), v = to_int_poly(b);
    make_primitive(u);
    make_primitive(v);
    if (u.empty()) return from_int_poly(v);
    if (v.empty()) return from_int_poly(u);
    if (u.size() < v.size()) u.swap(v);
    // Primitive polynomial remainder sequence.
    while (!v.empty()) {
        ZVec r = prem(u, v);
        make_primitive(r);
        u.swap(v);
        v.swap(r);
    }
    make_primitive(u);
    return from_int_poly(u);
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_div_exact: division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    const std::int64_t shift = a.min_exp() - b.min_exp();
    // Dense rational long division on the shifted ordinary polynomials.
    const std::int64_t na = a.max_exp() - a.min_exp(), nb = b.max_exp() - b.min_exp();
    if (na < nb) throw std::domain_error("poly_div_exact: not divisible (degree)");
    std::vector<Rat> u(static_cast<std::size_t>(na + 1)), v(static_cast<std::size_t>(nb + 1));
    for (const auto& [e, c] : a.terms()) u[static_cast<std::size_t>(e - a.min_exp())] = c;
    for (const auto& [e, c] : b.terms()) v[static_cast<std::size_t>(e - b.min_exp())] = c;
    std::vector<Rat> quot(static_cast<std::size_t>(na - nb + 1));
    for (std::int64_t i = na - nb; i >= 0; --i) {
        Rat c = u[static_cast<std::size_t>(i + nb)] / v[static_cast<std::size_t>(nb)];
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (std::int64_t j = 0; j <= nb; ++j)
            u[static_cast<std::size_t>(i + j)] -= c * v[static_cast<std::size_t>(j)];
    }
    for (const auto& r : u)
        if (r != 0) throw std::domain_error("poly_div_exact: not divisible (remainder)");
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < quot.size(); ++i)
        if (quot[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) + shift, quot[i]);
    return LaurentPoly::from_terms(std::move(terms));
}

RationalFunc::RationalFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RationalFunc::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    const std::int64_t a = num_.min_exp(), b = den_.min_exp();
    LaurentPoly n = num_.shifted(-a), d = den_.shifted(-b);
    LaurentPoly g = poly_gcd(n, d);
    if (!g.is_one()) {
        n = poly_div_exact(n, g);
        d = poly_div_exact(d, g);
    }
    // Scale so den has coprime integer coefficients and positive leading
    // coefficient; the scalar and the net q-shift both move into num.
    mpz_class l(1);
    for (const auto& [e, c] : d.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class gnum(0);
    for (const auto& [e, c] : d.terms()) {
        Rat s = c * l;
        mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), s.get_num().get_mpz_t());
    }
    Rat scale = Rat(l) / Rat(gnum);
    if (d.terms().back().second < 0) scale = -scale;
    num_ = (n * scale).shifted(a - b);
    den_ = d * scale;
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) { return *this += -o; }

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) {
    if (o.is_zero()) throw std::domain_error("RationalFunc: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

RationalFunc RationalFunc::pow(std::int64_t e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("RationalFunc: zero to negative power");
        RationalFunc inv(den_, num_);
        return inv.pow(-e);
    }
    RationalFunc r(1);
    RationalFunc base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RationalFunc RationalFunc::substitute_q_inverse() const {
    return RationalFunc(num_.substitute_q_inverse(), den_.substitute_q_inverse());
}

Rat RationalFunc::eval_one() const {
    Rat d = den_.eval_one();
    if (d == 0) throw std::domain_error("RationalFunc: pole at q = 1");
    return num_.eval_one() / d;
}

bool RationalFunc::cross_eq(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace tilecert
