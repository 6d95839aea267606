#include "tilecert/formulas.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tilecert {

namespace {

// Product of atoms Z(t) = q^t - q^-t with integer exponents, a rational
// scalar, and exact atom-level cancellation. All bracket formulas expand
// through this, so the final polynomial work only sees the net factors.
class ZProd {
public:
    void mul_scalar(const Rat& c) {
        if (c == 0) throw std::domain_error("ZProd: zero scalar");
        scalar_ *= c;
    }

    void mul_pow2(std::int64_t e) {
        Rat p(1);
        for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) p *= 2;
        scalar_ *= (e < 0) ? Rat(1) / p : p;
    }

    // Z(t)^e; Z(-t) = -Z(t).
    void mul_z(std::int64_t t, std::int64_t e) {
        if (t == 0) throw std::domain_error("ZProd: zero atom <0>");
        if (t < 0) {
            t = -t;
            if (e % 2 != 0) scalar_ = -scalar_;
        }
        z_[t] += e;
        if (z_[t] == 0) z_.erase(t);
    }

    // <n> in base q^s, to the power e.
    void mul_bracket(HalfInt n, int s, std::int64_t e = 1) {
        const std::int64_t t = n.twice * s;
        if (t % 2 != 0) throw std::domain_error("bracket: non-integral exponent");
        mul_z(t / 2, e);
        mul_z(s, -e);
    }

    // (<a>)_n in base q^s to the power e, with the three-case definition.
    void mul_poch(HalfInt a, std::int64_t n, int s, std::int64_t e = 1) {
        if (!a.positive() || (a + HalfInt(n)).twice <= 0)
            throw std::domain_error("pochhammer domain: a = " + a.str() +
                                    ", n = " + std::to_string(n));
        if (n > 0)
            for (std::int64_t i = 0; i < n; ++i) mul_bracket(a + HalfInt(i), s, e);
        else if (n < 0)
            for (std::int64_t i = 1; i <= -n; ++i) {
                if ((a - HalfInt(i)).twice == 0)
                    throw std::domain_error("pochhammer: zero bracket in divisor, a = " + a.str() +
                                            ", n = " + std::to_string(n));
                mul_bracket(a - HalfInt(i), s, -e);
            }
    }

    // <n>!^e in base q^s.
    void mul_qfact(std::int64_t n, int s, std::int64_t e = 1) {
        if (n < 0) throw std::domain_error("qfact: negative argument");
        for (std::int64_t i = 1; i <= n; ++i) mul_bracket(HalfInt(i), s, e);
    }

    // H_q(n)^e.
    void mul_hyper(std::int64_t n, std::int64_t e = 1) {
        for (std::int64_t i = 0; i < n; ++i) mul_qfact(i, 1, e);
    }

    // ((q^d + q^-d)/2)^e; equals 1 at d = 0.
    void mul_cosh(std::int64_t d, std::int64_t e = 1) {
        if (d < 0) d = -d;
        if (d == 0) return;
        mul_z(2 * d, e);
        mul_z(d, -e);
        mul_pow2(-e);
    }

    void mul(const ZProd& o) {
        scalar_ *= o.scalar_;
        for (const auto& [t, e] : o.z_) mul_z(t, e);
    }

    void div(const ZProd& o) {
        scalar_ /= o.scalar_;
        for (const auto& [t, e] : o.z_) mul_z(t, -e);
    }

    RationalFunc value() const {
        LaurentPoly num = LaurentPoly::constant(scalar_);
        LaurentPoly den = LaurentPoly::one();
        for (const auto& [t, e] : z_) {
            LaurentPoly atom = LaurentPoly::from_terms({{t, Rat(1)}, {-t, Rat(-1)}});
            for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i)
                (e > 0 ? num : den) *= atom;
        }
        return RationalFunc(std::move(num), std::move(den));
    }

private:
    std::map<std::int64_t, std::int64_t> z_;
    Rat scalar_ = 1;
};

// Accumulates the running product and the tagged factor record side by side.
class Builder {
public:
    void add(const std::string& tag, const std::function<void(ZProd&)>& apply) {
        try {
            apply(acc_);
        } catch (const std::domain_error& err) {
            throw std::domain_error(tag + ": " + err.what());
        }
        ZProd local;
        apply(local);
        factors_.push_back(FormulaFactor{tag, local.value()});
    }

    FormulaValue finish() const {
        FormulaValue v;
        v.value = acc_.value();
        v.factors = factors_;
        return v;
    }

    const ZProd& raw() const { return acc_; }

private:
    ZProd acc_;
    std::vector<FormulaFactor> factors_;
};

std::string tag_i(const std::string& base, std::int64_t i) {
    return base + " i=" + std::to_string(i);
}
std::string tag_ij(const std::string& base, std::int64_t i, std::int64_t j) {
    return base + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

void zp_hexagon(ZProd& z, std::int64_t x, std::int64_t y, std::int64_t zl) {
    for (std::int64_t i = 1; i <= y; ++i)
        for (std::int64_t j = 1; j <= zl; ++j) z.mul_cosh(i - j);
    z.mul_hyper(x);
    z.mul_hyper(y);
    z.mul_hyper(zl);
    z.mul_hyper(x + y + zl);
    z.mul_hyper(x + y, -1);
    z.mul_hyper(y + zl, -1);
    z.mul_hyper(zl + x, -1);
}

void thm22_even_block(Builder& b, const IntrusionSpec& s, std::int64_t i) {
    const auto bb = s.suffix_b();
    const std::int64_t b1 = s.k ? bb[0] : 0;
    const std::int64_t bi1 = bb[static_cast<std::size_t>(i)];
    const std::int64_t m = s.m, n = s.n, k = s.k, a = s.a;
    const std::int64_t f = (n - m) / 2;
    const std::string eq = "eq2.2";

    b.add(tag_i(eq + " (<b1+i+1/2>)_{m+k-b1-2i}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(b1 + i) + kHalf, m + k - b1 - 2 * i, 2);
    });
    b.add(tag_i(eq + " (<a+b1-b(i+1)+i+1>)_{m+k+2b(i+1)-2i-1}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + b1 - bi1 + i + 1), m + k + 2 * bi1 - 2 * i - 1, 2);
    });
    b.add(tag_i(eq + " 1/(<a+b1+i+1/2>)_{m+k-2i}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + b1 + i) + kHalf, m + k - 2 * i, 2, -1);
    });
    b.add(tag_i(eq + " 1/(<i+1>)_{m+k+b(i+1)-2i-1}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(i + 1), m + k + bi1 - 2 * i - 1, 2, -1);
    });
    b.add(tag_i(eq + " (<a+n+k+b1-i>)_{b(i+1)}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + n + k + b1 - i), bi1, 2);
    });
    b.add(tag_i(eq + " 2^{-4b(i+1)}", i), [&](ZProd& z) { z.mul_pow2(-4 * bi1); });
    b.add(tag_i(eq + " 1/(<i+1>)_{b1}", i),
          [&](ZProd& z) { z.mul_poch(HalfInt(i + 1), b1, 2, -1); });
    b.add(tag_i(eq + " 1/(<n+k-i-1/2>)_{b(i+1)}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(n + k - i) - kHalf, bi1, 2, -1);
    });
    b.add(tag_i(eq + " 1/(<a+b1+i+1>)_{-b(i+1)}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + b1 + i + 1), -bi1, 2, -1);
    });
    if (f > 0) {
        b.add(tag_i(eq + " (<m+k-i+1/2>)_f", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(m + k - i) + kHalf, f, 2); });
        b.add(tag_i(eq + " (<n+k-i>)_{-f}", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(n + k - i), -f, 2); });
        b.add(tag_i(eq + " 1/(<a+m+k+b1-i+1/2>)_f", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(a + m + k + b1 - i) + kHalf, f, 2, -1);
        });
        b.add(tag_i(eq + " 1/(<a+n+k+b1-i>)_{-f}", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(a + n + k + b1 - i), -f, 2, -1);
        });
        b.add(tag_i(eq + " (<m+k-i>)_f", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(m + k - i), f, 2); });
        b.add(tag_i(eq + " (<n+k-i-1/2>)_{-f}", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(n + k - i) - kHalf, -f, 2); });
        b.add(tag_i(eq + " 1/(<m+k+b(i+1)-i>)_f", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(m + k + bi1 - i), f, 2, -1);
        });
        b.add(tag_i(eq + " 1/(<n+k+b(i+1)-i-1/2>)_{-f}", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(n + k + bi1 - i) - kHalf, -f, 2, -1);
        });
    }
    for (std::int64_t j = 1; j <= i; ++j) {
        const std::int64_t bj = bb[static_cast<std::size_t>(j - 1)];
        const std::int64_t bj1 = bb[static_cast<std::size_t>(j)];
        const std::int64_t aj = s.a_list[static_cast<std::size_t>(j - 1)];
        b.add(tag_ij(eq + " <b_j-b(i+1)+i+1-j>^2/<i+1-j>^2", i, j), [&](ZProd& z) {
            z.mul_bracket(HalfInt(bj - bi1 + i + 1 - j), 2, 2);
            z.mul_bracket(HalfInt(i + 1 - j), 2, -2);
        });
        b.add(tag_ij(eq + " (<b(j+1)+i-j+1/2>)_{a_j}", i, j), [&](ZProd& z) {
            z.mul_poch(HalfInt(bj1 + i - j) + kHalf, aj, 2);
        });
        b.add(tag_ij(eq + " (<b(j+1)+i-j+1>)_{a_j}", i, j), [&](ZProd& z) {
            z.mul_poch(HalfInt(bj1 + i - j + 1), aj, 2);
        });
    }
}

void thm22_odd_block(Builder& b, const IntrusionSpec& s, std::int64_t i) {
    const auto bb = s.suffix_b();
    const std::int64_t b1 = s.k ? bb[0] : 0;
    const std::int64_t bi1 = bb[static_cast<std::size_t>(i)];
    const std::int64_t m = s.m, n = s.n, k = s.k, a = s.a;
    const std::int64_t f = (n - m) / 2;
    const HalfInt three_half = HalfInt(1) + kHalf;
    const std::string eq = "eq2.3";

    b.add(tag_i(eq + " (<a+b1-b(i+1)+i+1>)_{n+k+2b(i+1)-2i}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + b1 - bi1 + i + 1), n + k + 2 * bi1 - 2 * i, 2);
    });
    b.add(tag_i(eq + " (<b1+i+3/2>)_{n+k-b1-2i-2}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(b1 + i) + three_half, n + k - b1 - 2 * i - 2, 2);
    });
    b.add(tag_i(eq + " 1/(<i+1>)_{n+k+b(i+1)-2i-1}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(i + 1), n + k + bi1 - 2 * i - 1, 2, -1);
    });
    b.add(tag_i(eq + " 1/(<a+b1+i+3/2>)_{n+k-2i-1}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + b1 + i) + three_half, n + k - 2 * i - 1, 2, -1);
    });
    b.add(tag_i(eq + " <b(i+1)+1>", i),
          [&](ZProd& z) { z.mul_bracket(HalfInt(bi1 + 1), 2); });
    b.add(tag_i(eq + " (<a+m+k+b1-i+1>)_{b(i+1)}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + m + k + b1 - i + 1), bi1, 2);
    });
    b.add(tag_i(eq + " 2^{-4b(i+1)-2}", i), [&](ZProd& z) { z.mul_pow2(-4 * bi1 - 2); });
    b.add(tag_i(eq + " 1/(<i+2>)_{b1}", i),
          [&](ZProd& z) { z.mul_poch(HalfInt(i + 2), b1, 2, -1); });
    b.add(tag_i(eq + " 1/(<m+k-i+1/2>)_{b(i+1)}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(m + k - i) + kHalf, bi1, 2, -1);
    });
    b.add(tag_i(eq + " 1/(<a+b1+i+1>)_{-b(i+1)}", i), [&](ZProd& z) {
        z.mul_poch(HalfInt(a + b1 + i + 1), -bi1, 2, -1);
    });
    if (f > 0) {
        b.add(tag_i(eq + " (<m+k-i>)_f", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(m + k - i), f, 2); });
        b.add(tag_i(eq + " (<n+k-i-1/2>)_{-f}", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(n + k - i) - kHalf, -f, 2); });
        b.add(tag_i(eq + " 1/(<a+m+k+b1-i+1>)_f", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(a + m + k + b1 - i + 1), f, 2, -1);
        });
        b.add(tag_i(eq + " 1/(<a+n+k+b1-i+1/2>)_{-f}", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(a + n + k + b1 - i) + kHalf, -f, 2, -1);
        });
        b.add(tag_i(eq + " (<m+k-i+1/2>)_f", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(m + k - i) + kHalf, f, 2); });
        b.add(tag_i(eq + " (<n+k-i>)_{-f}", i),
              [&](ZProd& z) { z.mul_poch(HalfInt(n + k - i), -f, 2); });
        b.add(tag_i(eq + " 1/(<m+k+b(i+1)-i+1/2>)_f", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(m + k + bi1 - i) + kHalf, f, 2, -1);
        });
        b.add(tag_i(eq + " 1/(<n+k+b(i+1)-i>)_{-f}", i), [&](ZProd& z) {
            z.mul_poch(HalfInt(n + k + bi1 - i), -f, 2, -1);
        });
    }
    for (std::int64_t j = 1; j <= i; ++j) {
        const std::int64_t bj = bb[static_cast<std::size_t>(j - 1)];
        const std::int64_t bj1 = bb[static_cast<std::size_t>(j)];
        const std::int64_t aj = s.a_list[static_cast<std::size_t>(j - 1)];
        b.add(tag_ij(eq + " <b_j-b(i+1)+i+1-j>^2/(<i+1-j><b_j+i+1-j>)", i, j), [&](ZProd& z) {
            z.mul_bracket(HalfInt(bj - bi1 + i + 1 - j), 2, 2);
            z.mul_bracket(HalfInt(i + 1 - j), 2, -1);
            z.mul_bracket(HalfInt(bj + i + 1 - j), 2, -1);
        });
        b.add(tag_ij(eq + " <b_j+i+2-j>/<i+2-j>", i, j), [&](ZProd& z) {
            z.mul_bracket(HalfInt(bj + i + 2 - j), 2);
            z.mul_bracket(HalfInt(i + 2 - j), 2, -1);
        });
        b.add(tag_ij(eq + " (<b(j+1)+i-j+3/2>)_{a_j}", i, j), [&](ZProd& z) {
            z.mul_poch(HalfInt(bj1 + i - j + 1) + kHalf, aj, 2);
        });
        b.add(tag_ij(eq + " (<b(j+1)+i-j+2>)_{a_j}", i, j), [&](ZProd& z) {
            z.mul_poch(HalfInt(bj1 + i - j + 2), aj, 2);
        });
    }
}

Builder thm22_builder(const IntrusionSpec& s) {
    s.validate();
    if (s.n < s.m)
        throw std::domain_error("theorem ratio formula requires n >= m (got " + s.str() +
                                "); mirror the parameters first");
    Builder b;
    for (std::int64_t i = 0; i < s.k; ++i) {
        if (s.parity == Parity::Even)
            thm22_even_block(b, s, i);
        else
            thm22_odd_block(b, s, i);
    }
    return b;
}

Builder lr_builder(const RSpec& s, bool bar) {
    s.validate();
    Builder b;
    const std::int64_t m = s.m(), n = s.n, x = s.x, lm = s.lm();
    const auto& l = s.l;
    const std::string eq = bar ? "eq3.2" : "eq3.1";

    b.add(eq + " 2^{-e}", [&](ZProd& z) { z.mul_pow2(bar ? -s.e_bar() : -s.e()); });
    for (std::int64_t i = 1; i <= m; ++i)
        for (std::int64_t j = i + 1; j <= m; ++j)
            b.add(tag_ij(eq + " <2(l_j-l_i)>", i, j), [&](ZProd& z) {
                z.mul_bracket(HalfInt(2 * (l[j - 1] - l[i - 1])), 1);
            });
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i + 1; j <= n; ++j)
            b.add(tag_ij(eq + " <2(j-i)>", i, j),
                  [&](ZProd& z) { z.mul_bracket(HalfInt(2 * (j - i)), 1); });
    for (std::int64_t i = 1; i <= m; ++i)
        for (std::int64_t j = 1; j <= n; ++j)
            b.add(tag_ij(eq + " 1/<2(l_i+j)>", i, j), [&](ZProd& z) {
                z.mul_bracket(HalfInt(2 * (l[i - 1] + j)), 1, -1);
            });
    for (std::int64_t i = 1; i <= m; ++i)
        b.add(tag_i(eq + (bar ? " 1/<2l_i-1>!" : " 1/<2l_i>!"), i), [&](ZProd& z) {
            z.mul_qfact(bar ? 2 * l[i - 1] - 1 : 2 * l[i - 1], 1, -1);
        });
    for (std::int64_t j = 1; j <= n; ++j)
        b.add(tag_i(eq + (bar ? " 1/<2j>!" : " 1/<2j-1>!"), j),
              [&](ZProd& z) { z.mul_qfact(bar ? 2 * j : 2 * j - 1, 1, -1); });

    if (!bar) {
        for (std::int64_t i = 1; i <= (n + 1) / 2; ++i)
            for (std::int64_t j = 1; j <= 2 * n - 4 * i + 3; ++j)
                b.add(tag_ij(eq + " <2x+2lm-2m+2i+j>", i, j), [&](ZProd& z) {
                    z.mul_bracket(HalfInt(2 * x + 2 * lm - 2 * m + 2 * i + j), 1);
                });
        for (std::int64_t i = 1; i <= m; ++i)
            b.add(tag_i(eq + " <2(x+lm-m+n+i)><2(x+lm-m+n+i+1)>", i), [&](ZProd& z) {
                z.mul_bracket(HalfInt(2 * (x + lm - m + n + i)), 1);
                z.mul_bracket(HalfInt(2 * (x + lm - m + n + i + 1)), 1);
            });
        for (std::int64_t i = 1; i <= m; ++i)
            for (std::int64_t j = 1; j <= n + i - 1; ++j)
                b.add(tag_ij(eq + " <2x+2lm-2m+n+i+j+1>", i, j), [&](ZProd& z) {
                    z.mul_bracket(HalfInt(2 * x + 2 * lm - 2 * m + n + i + j + 1), 1);
                });
    } else {
        for (std::int64_t i = 1; i <= (m + 1) / 2; ++i)
            for (std::int64_t j = 1; j <= 2 * m - 4 * i + 3; ++j)
                b.add(tag_ij(eq + " <2x+2lm-2m+2i+j-1>", i, j), [&](ZProd& z) {
                    z.mul_bracket(HalfInt(2 * x + 2 * lm - 2 * m + 2 * i + j - 1), 1);
                });
        for (std::int64_t i = 1; i <= n; ++i)
            b.add(tag_i(eq + " <2(x+lm+i)>", i),
                  [&](ZProd& z) { z.mul_bracket(HalfInt(2 * (x + lm + i)), 1); });
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = 1; j <= m + i; ++j)
                b.add(tag_ij(eq + " <2x+2lm-m+i+j>", i, j), [&](ZProd& z) {
                    z.mul_bracket(HalfInt(2 * x + 2 * lm - m + i + j), 1);
                });
    }
    for (std::int64_t i = 1; i <= (bar ? m : n); ++i)
        for (std::int64_t j = 1; j <= (bar ? n : m); ++j)
            b.add(tag_ij(eq + " <2(x+lm-m+i+j-1)>/<2(x+lm-m+i+j-1)+1>", i, j), [&](ZProd& z) {
                z.mul_bracket(HalfInt(2 * (x + lm - m + i + j - 1)), 1);
                z.mul_bracket(HalfInt(2 * (x + lm - m + i + j - 1) + 1), 1, -1);
            });
    for (std::int64_t i = 1; i <= m; ++i)
        for (std::int64_t j = 1; j <= l[i - 1] - i; ++j) {
            const std::int64_t first =
                bar ? 2 * (x + lm - m + i + j + n) : 2 * (x + lm - m + n + i + j + 1);
            b.add(tag_ij(eq + " <..n+i+j..><2(x+lm-i-j+1)>", i, j), [&](ZProd& z) {
                z.mul_bracket(HalfInt(first), 1);
                z.mul_bracket(HalfInt(2 * (x + lm - i - j + 1)), 1);
            });
        }
    return b;
}

ZProd zp_formula_tgf(const IntrusionSpec& s) {
    Builder ratio = thm22_builder(s);
    ZProd z = ratio.raw();
    const std::int64_t b1 = s.b1();
    const std::int64_t left = (s.parity == Parity::Even) ? 2 * s.a + 2 * b1 : 2 * s.a + 2 * b1 + 1;
    zp_hexagon(z, left, s.m + s.k, s.n + s.k);
    return z;
}

IntrusionSpec make_spec(Parity p, std::int64_t a, std::int64_t m, std::int64_t n,
                        std::vector<std::int64_t> list) {
    IntrusionSpec s;
    s.a = a;
    s.m = m;
    s.n = n;
    s.k = static_cast<std::int64_t>(list.size());
    s.a_list = std::move(list);
    s.parity = p;
    return s;
}

}  // namespace

Rat rhs_macmahon(std::int64_t x, std::int64_t y, std::int64_t z) {
    if (x < 0 || y < 0 || z < 0) throw std::domain_error("rhs_macmahon: negative side");
    auto hyper = [](std::int64_t n) {
        Rat h(1), fact(1);
        for (std::int64_t i = 1; i < n; ++i) {
            fact *= i;
            h *= fact;
        }
        return h;
    };
    return hyper(x) * hyper(y) * hyper(z) * hyper(x + y + z) /
           (hyper(x + y) * hyper(y + z) * hyper(z + x));
}

FormulaValue rhs_hexagon_q(std::int64_t x, std::int64_t y, std::int64_t z) {
    if (x < 0 || y < 0 || z < 0) throw std::domain_error("rhs_hexagon_q: negative side");
    Builder b;
    for (std::int64_t i = 1; i <= y; ++i)
        for (std::int64_t j = 1; j <= z; ++j)
            b.add(tag_ij("eq2.1 (q^{i-j}+q^{j-i})/2", i, j),
                  [&](ZProd& zp) { zp.mul_cosh(i - j); });
    b.add("eq2.1 Hq(x)Hq(y)Hq(z)Hq(x+y+z)/(Hq(x+y)Hq(y+z)Hq(z+x))", [&](ZProd& zp) {
        zp.mul_hyper(x);
        zp.mul_hyper(y);
        zp.mul_hyper(z);
        zp.mul_hyper(x + y + z);
        zp.mul_hyper(x + y, -1);
        zp.mul_hyper(y + z, -1);
        zp.mul_hyper(z + x, -1);
    });
    return b.finish();
}

FormulaValue rhs_thm22_even(const IntrusionSpec& s) {
    if (s.parity != Parity::Even) throw std::invalid_argument("rhs_thm22_even: spec parity");
    return thm22_builder(s).finish();
}

FormulaValue rhs_thm22_odd(const IntrusionSpec& s) {
    if (s.parity != Parity::Odd) throw std::invalid_argument("rhs_thm22_odd: spec parity");
    return thm22_builder(s).finish();
}

FormulaValue rhs_lr_r(const RSpec& s) { return lr_builder(s, false).finish(); }

FormulaValue rhs_lr_rbar(const RSpec& s) { return lr_builder(s, true).finish(); }

FormulaValue formula_tgf(const IntrusionSpec& s) {
    FormulaValue v;
    v.value = zp_formula_tgf(s).value();
    v.factors.push_back(FormulaFactor{"formula tgf " + s.str(), v.value});
    return v;
}

const char* ratio_id_name(RatioId id) {
    switch (id) {
        case RatioId::Eq4_25: return "eq4.25";
        case RatioId::Eq4_29: return "eq4.29";
        case RatioId::Eq4_33: return "eq4.33";
        case RatioId::Eq4_37: return "eq4.37";
        case RatioId::Eq4_43: return "eq4.43";
        case RatioId::Eq4_49: return "eq4.49";
    }
    return "?";
}

RatioOutcome ratio_identity(RatioId id, const RatioParams& p) {
    const std::int64_t a = p.a, m = p.m, n = p.n, k = p.k;
    if (static_cast<std::int64_t>(p.a_list.size()) != k)
        throw std::invalid_argument("ratio_identity: a_list size != k");
    std::vector<std::int64_t> A = p.a_list;
    auto dropped = [&] {  // a_1..a_{k-1}
        std::vector<std::int64_t> v(A.begin(), A.size() ? A.end() - 1 : A.end());
        return v;
    };
    auto with_zero_last = [&] {  // a_1..a_{k-1}, 0
        std::vector<std::int64_t> v = dropped();
        v.push_back(0);
        return v;
    };
    auto decremented_last = [&] {  // a_1..a_k - 1; needs a_k >= 1
        if (A.empty() || A.back() < 1)
            throw std::invalid_argument("ratio_identity: needs a_k >= 1");
        std::vector<std::int64_t> v = A;
        --v.back();
        return v;
    };
    auto He = [&](std::int64_t mm, std::int64_t nn, std::vector<std::int64_t> list) {
        return zp_formula_tgf(make_spec(Parity::Even, a, mm, nn, std::move(list)));
    };
    auto Ho = [&](std::int64_t mm, std::int64_t nn, std::vector<std::int64_t> list) {
        return zp_formula_tgf(make_spec(Parity::Odd, a, mm, nn, std::move(list)));
    };
    auto quot = [](ZProd num, const ZProd& den) {
        num.div(den);
        return num;
    };

    RatioOutcome out;
    switch (id) {
        case RatioId::Eq4_25: {
            if (k < 1) throw std::invalid_argument("eq4.25 needs k >= 1");
            ZProd t = quot(He(m, m + 1, with_zero_last()), He(m, m, with_zero_last()));
            t.mul(quot(Ho(m, m + 1, dropped()), Ho(m + 1, m + 1, dropped())));
            out.lhs = t.value();
            out.expected = Rat(1, 2);
            break;
        }
        case RatioId::Eq4_29: {
            ZProd t = quot(He(m, m + 1, A), He(m + 1, m + 1, A));
            t.mul(quot(Ho(m + 1, m + 2, decremented_last()), Ho(m + 1, m + 1, decremented_last())));
            out.lhs = t.value();
            out.expected = Rat(1, 2);
            break;
        }
        case RatioId::Eq4_33: {
            ZProd t = quot(He(m + 1, m + 2, A), He(m + 1, m + 1, A));
            t.mul(quot(Ho(m, m + 1, A), Ho(m + 1, m + 1, A)));
            out.lhs = t.value();
            out.expected = Rat(1, 2);
            break;
        }
        case RatioId::Eq4_37: {
            if (k < 1 || n < m + 2) throw std::invalid_argument("eq4.37 needs k >= 1, n >= m+2");
            ZProd t1 = quot(He(m + 1, n - 1, with_zero_last()), He(m, n - 1, with_zero_last()));
            t1.mul(quot(Ho(m, n, dropped()), Ho(m + 1, n, dropped())));
            ZProd t2 = quot(He(m, n, with_zero_last()), He(m, n - 1, with_zero_last()));
            t2.mul(quot(Ho(m + 1, n - 1, dropped()), Ho(m + 1, n, dropped())));
            out.lhs = t1.value() + t2.value();
            out.expected = 1;
            break;
        }
        case RatioId::Eq4_43: {
            if (n < m + 2) throw std::invalid_argument("eq4.43 needs n >= m+2");
            ZProd t1 = quot(Ho(m + 2, n, decremented_last()), Ho(m + 1, n, decremented_last()));
            t1.mul(quot(He(m, n, A), He(m + 1, n, A)));
            ZProd t2 = quot(Ho(m + 1, n + 1, decremented_last()), Ho(m + 1, n, decremented_last()));
            t2.mul(quot(He(m + 1, n - 1, A), He(m + 1, n, A)));
            out.lhs = t1.value() + t2.value();
            out.expected = 1;
            break;
        }
        case RatioId::Eq4_49: {
            if (n < m + 2) throw std::invalid_argument("eq4.49 needs n >= m+2");
            ZProd t1 = quot(He(m + 2, n, A), He(m + 1, n, A));
            t1.mul(quot(Ho(m, n, A), Ho(m + 1, n, A)));
            ZProd t2 = quot(He(m + 1, n + 1, A), He(m + 1, n, A));
            t2.mul(quot(Ho(m + 1, n - 1, A), Ho(m + 1, n, A)));
            out.lhs = t1.value() + t2.value();
            out.expected = 1;
            break;
        }
    }
    out.holds = (out.lhs == RationalFunc(out.expected));
    return out;
}

}  // namespace tilecert
