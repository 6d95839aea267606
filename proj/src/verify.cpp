#include "tilecert/verify.hpp"

#include "tilecert/json_io.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tilecert {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

const LaurentPoly& tgf_poly(const TGFResult& t) {
    if (!t.value.is_polynomial())
        throw std::logic_error("tgf value is not polynomial");
    return t.value.num();
}

// Wraps a check body with timing and budget-skip handling.
template <typename Fn>
CheckReport guarded(std::string check, std::string params, Fn&& body) {
    CheckReport rep;
    rep.check = std::move(check);
    rep.params = std::move(params);
    Timer t;
    try {
        body(rep);
    } catch (const BudgetExceeded& e) {
        rep.status = Status::Skip;
        rep.note = e.what();
    }
    rep.wall_ms = t.ms();
    return rep;
}

void conclude(CheckReport& rep, const LaurentPoly& lhs, const LaurentPoly& rhs,
              const std::string& fail_note) {
    rep.lhs = RationalFunc(lhs);
    rep.rhs = RationalFunc(rhs);
    if (lhs == rhs) {
        rep.status = Status::Pass;
    } else {
        rep.status = Status::Fail;
        rep.note = fail_note;
    }
}

std::string hex_params(std::int64_t x, std::int64_t y, std::int64_t z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

IntrusionSpec spec_of(Parity p, std::int64_t a, std::int64_t m, std::int64_t n,
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

Region companion_hexagon(const IntrusionSpec& s) {
    const std::int64_t left =
        (s.parity == Parity::Even) ? 2 * s.a + 2 * s.b1() : 2 * s.a + 2 * s.b1() + 1;
    return build_hexagon(left, s.m + s.k, s.n + s.k);
}

Region build_region(const IntrusionSpec& s) {
    return s.parity == Parity::Even ? build_he(s) : build_ho(s);
}

}  // namespace

const TGFResult& TgfCache::get(const Region& r, const WeightScheme& w) {
    const std::string key = r.label() + "|" + w.name();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    TGFResult res;
    try {
        res = tgf_profile(r, w, budget_);
    } catch (const BudgetExceeded&) {
        // Boundary too wide for the profile engine; the oracle has no width
        // limit, only the node budget.
        res = tgf_backtrack(r, w, budget_);
    }
    if (static_cast<std::int64_t>(r.size()) <= cap_) {
        TGFResult oracle = tgf_backtrack(r, w, budget_);
        if (!(oracle.value == res.value))
            throw std::logic_error("engine disagreement on " + key);
        res.tilings_enumerated = oracle.tilings_enumerated;
        if (res.engine == "profile") res.engine = "profile+oracle";
    }
    if (!(res.value == res.value.substitute_q_inverse()))
        throw std::logic_error("tgf not invariant under q -> 1/q on " + key);
    std::lock_guard<std::mutex> lk(mu_);
    ++computed_;
    if (res.engine == "profile+oracle") ++double_checked_;
    return cache_.emplace(key, std::move(res)).first->second;
}

CheckReport verify_lemma21(std::int64_t x, std::int64_t y, std::int64_t z, VerifyCtx& ctx) {
    return guarded("lemma2.1", hex_params(x, y, z), [&](CheckReport& rep) {
        const TGFResult& t = ctx.cache.get(build_hexagon(x, y, z), WeightScheme::standard());
        FormulaValue rhs = rhs_hexagon_q(x, y, z);
        conclude(rep, tgf_poly(t) * rhs.value.den(), rhs.value.num() * LaurentPoly::one(),
                 "engine tgf != eq2.1 product (" + std::to_string(rhs.factors.size()) +
                     " factors)");
    });
}

CheckReport verify_thm22(const IntrusionSpec& s, VerifyCtx& ctx) {
    return guarded("thm2.2", s.str(), [&](CheckReport& rep) {
        const IntrusionSpec norm = (s.n >= s.m) ? s : s.swapped_mn();
        FormulaValue rhs =
            norm.parity == Parity::Even ? rhs_thm22_even(norm) : rhs_thm22_odd(norm);
        if (!(rhs.value == rhs.value.substitute_q_inverse()))
            throw std::logic_error("formula value not q<->1/q invariant for " + norm.str());
        const TGFResult& tr = ctx.cache.get(build_region(norm), WeightScheme::standard());
        const TGFResult& th = ctx.cache.get(companion_hexagon(norm), WeightScheme::standard());
        conclude(rep, tgf_poly(tr) * rhs.value.den(), rhs.value.num() * tgf_poly(th),
                 "tgf ratio != theorem product (" + std::to_string(rhs.factors.size()) +
                     " factors)");
    });
}

CheckReport verify_thm31(const RSpec& s, RVariant v, VerifyCtx& ctx) {
    return guarded("thm3.1", s.str(v == RVariant::Rbar), [&](CheckReport& rep) {
        Region r = v == RVariant::R ? build_r(s) : build_rbar(s);
        FormulaValue rhs = v == RVariant::R ? rhs_lr_r(s) : rhs_lr_rbar(s);
        if (!(rhs.value == rhs.value.substitute_q_inverse()))
            throw std::logic_error("formula value not q<->1/q invariant for " + r.label());
        const TGFResult& t = ctx.cache.get(r, WeightScheme::half_axis());
        conclude(rep, tgf_poly(t) * rhs.value.den(), rhs.value.num(),
                 "half-axis tgf != closed product (" + std::to_string(rhs.factors.size()) +
                     " factors)");
    });
}

CheckReport verify_factorization(FactorizationId id, const FactorizationParams& p,
                                 VerifyCtx& ctx) {
    const char* name = id == FactorizationId::Eq3_3   ? "eq3.3"
                       : id == FactorizationId::Eq3_4 ? "eq3.4"
                                                      : "eq3.5";
    std::string params;
    Region region;
    std::int64_t expected_width = 0;
    if (id == FactorizationId::Eq3_5) {
        params = hex_params(p.hex_x, p.hex_y, p.hex_y);
        region = build_hexagon(p.hex_x, p.hex_y, p.hex_y);
        expected_width = p.hex_y;
    } else {
        const IntrusionSpec& s = *p.spec;
        if (s.m != s.n) throw std::invalid_argument("factorization needs m == n");
        params = s.str();
        region = build_region(s);
        expected_width = s.m;
    }
    return guarded(name, params, [&](CheckReport& rep) {
        SplitPieces sp = split_symmetric(region);
        if (sp.width != expected_width) {
            rep.status = Status::Fail;
            rep.note = "axis width " + std::to_string(sp.width) + " != expected " +
                       std::to_string(expected_width);
            return;
        }
        const TGFResult& whole = ctx.cache.get(region, WeightScheme::standard());
        const TGFResult& plus = ctx.cache.get(sp.plus, sp.plus_scheme);
        const TGFResult& minus = ctx.cache.get(sp.minus, sp.minus_scheme);
        LaurentPoly rhs = tgf_poly(plus) * tgf_poly(minus);
        Rat two_w(1);
        for (std::int64_t i = 0; i < sp.width; ++i) two_w *= 2;
        rhs *= two_w;
        conclude(rep, tgf_poly(whole), rhs, "tgf != 2^w tgf(plus) tgf(minus)");
    });
}

namespace {

std::vector<std::int64_t> equiv_r_labels(const std::vector<std::int64_t>& b, std::int64_t add0,
                                         std::int64_t step_from) {
    // {b_K + step_from, b_{K-1} + step_from + 1, ...} with an optional
    // {1..add0} prefix.
    std::vector<std::int64_t> l;
    for (std::int64_t i = 1; i <= add0; ++i) l.push_back(i);
    const std::int64_t K = static_cast<std::int64_t>(b.size());
    for (std::int64_t j = 0; j < K; ++j)
        l.push_back(b[static_cast<std::size_t>(K - 1 - j)] + step_from + j);
    return l;
}

}  // namespace

CheckReport verify_region_equiv(EquivId id, const EquivParams& p, VerifyCtx& ctx) {
    const char* names[] = {"eq4.6", "eq4.7", "eq4.8", "eq4.9",
                           "eq4.12", "eq4.13", "eq4.14", "eq4.15"};
    const char* name = names[static_cast<int>(id)];
    const bool hexagon_case = id == EquivId::Eq4_8 || id == EquivId::Eq4_9 ||
                              id == EquivId::Eq4_14 || id == EquivId::Eq4_15;
    const bool plus_side = id == EquivId::Eq4_6 || id == EquivId::Eq4_8 ||
                           id == EquivId::Eq4_12 || id == EquivId::Eq4_14;

    Region region;
    RSpec rs;
    RVariant variant = plus_side ? RVariant::R : RVariant::Rbar;
    std::string params;
    if (hexagon_case) {
        const std::int64_t c = p.hex_c, M = p.hex_m;
        params = "(c=" + std::to_string(c) + ",M=" + std::to_string(M) + ")";
        const bool odd = id == EquivId::Eq4_14 || id == EquivId::Eq4_15;
        region = build_hexagon(odd ? 2 * c + 1 : 2 * c, M, M);
        switch (id) {
            case EquivId::Eq4_8: rs.n = M, rs.x = c - 1; break;
            case EquivId::Eq4_9:
                for (std::int64_t i = 1; i <= M - 1; ++i) rs.l.push_back(i);
                rs.n = 0, rs.x = c;
                break;
            case EquivId::Eq4_14: rs.n = M - 1, rs.x = c; break;
            case EquivId::Eq4_15:
                for (std::int64_t i = 1; i <= M; ++i) rs.l.push_back(i);
                rs.n = 0, rs.x = c;
                break;
            default: break;
        }
    } else {
        const IntrusionSpec& s = *p.spec;
        if (s.m != s.n) throw std::invalid_argument("region equivalence needs m == n");
        params = s.str();
        region = build_region(s);
        const auto b = s.suffix_b();
        const bool odd = s.parity == Parity::Odd;
        switch (id) {
            case EquivId::Eq4_6: rs.l = equiv_r_labels(b, 0, 0), rs.n = s.m, rs.x = s.a; break;
            case EquivId::Eq4_7:
                rs.l = equiv_r_labels(b, s.m - 1, s.m), rs.n = 0, rs.x = s.a;
                break;
            case EquivId::Eq4_12:
                rs.l = equiv_r_labels(b, 0, 1), rs.n = s.m - 1, rs.x = s.a;
                break;
            case EquivId::Eq4_13:
                rs.l = equiv_r_labels(b, s.m, s.m + 1), rs.n = 0, rs.x = s.a;
                break;
            default: throw std::invalid_argument("id/parity mismatch");
        }
        if ((odd && (id == EquivId::Eq4_6 || id == EquivId::Eq4_7)) ||
            (!odd && (id == EquivId::Eq4_12 || id == EquivId::Eq4_13)))
            throw std::invalid_argument("id/parity mismatch");
    }

    return guarded(name, params, [&](CheckReport& rep) {
        SplitPieces sp = split_symmetric(region);
        const Region& piece = plus_side ? sp.plus : sp.minus;
        const WeightScheme scheme = plus_side ? sp.plus_scheme : sp.minus_scheme;
        ForcedRemoval fr = remove_forced(piece, scheme);
        if (fr.untileable) {
            rep.status = Status::Fail;
            rep.note = "split piece untileable";
            return;
        }
        if (!fr.multiplier.is_one()) {
            rep.status = Status::Fail;
            rep.note = "forced-lozenge multiplier is not 1: " + fr.multiplier.str();
            return;
        }
        const TGFResult& tp = ctx.cache.get(piece, scheme);
        Region partner = variant == RVariant::R ? build_r(rs) : build_rbar(rs);
        const TGFResult& tr = ctx.cache.get(partner, WeightScheme::half_axis());
        conclude(rep, tgf_poly(tp), tgf_poly(tr),
                 "split piece tgf != " + partner.label() + " tgf");
    });
}

KuoSelection KuoSelection::make(KuoId id, const KuoParams& p) {
    KuoSelection sel;
    sel.id = id;
    // The base region the four-point identity is applied to (for the two
    // unbalanced variants, the last removed triangle shrunk by one).
    std::vector<std::int64_t> base_list = p.a_list;
    if (id == KuoId::Eq4_18) {
        sel.base = spec_of(Parity::Odd, p.a, p.m + 1, p.n, base_list);
    } else if (id == KuoId::Eq4_19) {
        sel.base = spec_of(Parity::Even, p.a, p.m + 1, p.n, base_list);
    } else {
        sel.base = spec_of(Parity::Odd, p.a, p.m + 1, p.n, base_list);
    }
    Region r = sel.base.parity == Parity::Even ? build_he(sel.base) : build_ho(sel.base);

    // Puncture positions, recorded from the construction reading: the first
    // axis cell east of the intrusion plus three boundary extremes. Only
    // membership, distinctness and the class pattern are validated; the
    // certified statement is the six-region identity.
    auto first_axis = [&r]() {
        for (const TriCell& c : r.cells())
            if (c.h == 0) return c;
        return r.cells().front();
    };
    auto extreme = [&r](Orient o, bool top) {
        TriCell best{};
        bool found = false;
        for (const TriCell& c : r.cells()) {
            if (c.o != o) continue;
            if (!found || (top ? c.h > best.h : c.h < best.h) ||
                ((top ? c.h == best.h : c.h == best.h) && c.p > best.p)) {
                best = c;
                found = true;
            }
        }
        return best;
    };
    const TriCell axis = first_axis();
    if (id == KuoId::Eq4_18) {
        // x,z in one class and y,w in the other.
        const Orient o1 = axis.o;
        const Orient o2 = o1 == Orient::Left ? Orient::Right : Orient::Left;
        sel.xyzw = {axis, extreme(o2, true), extreme(o1, true), extreme(o2, false)};
    } else {
        // x,y,z in the majority class, w in the other.
        const Orient oMaj = Orient::Left;
        const Orient oMin = Orient::Right;
        sel.xyzw = {extreme(oMaj, true), extreme(oMaj, false),
                    TriCell{axis.p, axis.h, oMaj.o == Orient::Left ? Orient::Left : Orient::Left},
                    extreme(oMin, true)};
        // The axis-adjacent puncture must be a Left cell; walk east until one
        // is found.
        for (const TriCell& c : r.cells())
            if (c.h == 0 && c.o == Orient::Left) {
                sel.xyzw[2] = c;
                break;
            }
    }
    return sel;
}

void KuoSelection::validate() const {
    Region r = base.parity == Parity::Even ? build_he(base) : build_ho(base);
    for (const TriCell& c : xyzw)
        if (!r.contains(c))
            throw std::logic_error("kuo puncture " + c.str() + " outside " + base.str());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (xyzw[i] == xyzw[j]) throw std::logic_error("kuo punctures not distinct");
    if (id == KuoId::Eq4_18) {
        if (!(xyzw[0].o == xyzw[2].o && xyzw[1].o == xyzw[3].o && xyzw[0].o != xyzw[1].o))
            throw std::logic_error("kuo class pattern (2,2) violated");
    } else {
        if (!(xyzw[0].o == xyzw[1].o && xyzw[1].o == xyzw[2].o && xyzw[2].o != xyzw[3].o))
            throw std::logic_error("kuo class pattern (3,1) violated");
    }
}

std::string KuoSelection::str() const {
    std::string s = base.str() + " xyzw=";
    for (const TriCell& c : xyzw) s += c.str();
    return s;
}

CheckReport verify_kuo(const KuoSelection& sel, const KuoParams& p, VerifyCtx& ctx) {
    const char* name = sel.id == KuoId::Eq4_18   ? "eq4.18"
                       : sel.id == KuoId::Eq4_19 ? "eq4.19"
                                                 : "eq4.20";
    return guarded(name, sel.base.str(), [&](CheckReport& rep) {
        sel.validate();
        const std::int64_t a = p.a, m = p.m, n = p.n;
        std::vector<std::int64_t> A = p.a_list;
        auto with0 = [&A] {
            auto v = A;
            v.push_back(0);
            return v;
        };
        auto dec = [&A] {
            auto v = A;
            --v.back();
            return v;
        };
        std::array<IntrusionSpec, 6> six;
        switch (sel.id) {
            case KuoId::Eq4_18:
                six = {spec_of(Parity::Odd, a, m + 1, n, A),
                       spec_of(Parity::Even, a, m, n - 1, with0()),
                       spec_of(Parity::Even, a, m + 1, n - 1, with0()),
                       spec_of(Parity::Odd, a, m, n, A),
                       spec_of(Parity::Even, a, m, n, with0()),
                       spec_of(Parity::Odd, a, m + 1, n - 1, A)};
                break;
            case KuoId::Eq4_19:
                six = {spec_of(Parity::Even, a, m + 1, n, A),
                       spec_of(Parity::Odd, a, m + 1, n, dec()),
                       spec_of(Parity::Odd, a, m + 2, n, dec()),
                       spec_of(Parity::Even, a, m, n, A),
                       spec_of(Parity::Odd, a, m + 1, n + 1, dec()),
                       spec_of(Parity::Even, a, m + 1, n - 1, A)};
                break;
            case KuoId::Eq4_20:
                six = {spec_of(Parity::Odd, a, m + 1, n, A),
                       spec_of(Parity::Even, a, m + 1, n, A),
                       spec_of(Parity::Even, a, m + 2, n, A),
                       spec_of(Parity::Odd, a, m, n, A),
                       spec_of(Parity::Even, a, m + 1, n + 1, A),
                       spec_of(Parity::Odd, a, m + 1, n - 1, A)};
                break;
        }
        std::array<const TGFResult*, 6> t{};
        for (int i = 0; i < 6; ++i)
            t[i] = &ctx.cache.get(build_region(six[static_cast<std::size_t>(i)]),
                                  WeightScheme::standard());
        conclude(rep, tgf_poly(*t[0]) * tgf_poly(*t[1]),
                 tgf_poly(*t[2]) * tgf_poly(*t[3]) + tgf_poly(*t[4]) * tgf_poly(*t[5]),
                 "condensation product identity violated");
    });
}

CheckReport verify_specializations(SpecializationId id, const KuoParams& p, VerifyCtx& ctx) {
    const char* name = id == SpecializationId::Eq4_22   ? "eq4.22"
                       : id == SpecializationId::Eq4_23 ? "eq4.23"
                                                        : "eq4.24";
    const std::int64_t a = p.a, m = p.m;
    std::vector<std::int64_t> A = p.a_list;
    auto with0 = [&A] {
        auto v = A;
        v.push_back(0);
        return v;
    };
    auto dec = [&A] {
        auto v = A;
        --v.back();
        return v;
    };
    std::array<IntrusionSpec, 4> four;
    switch (id) {
        case SpecializationId::Eq4_22:
            four = {spec_of(Parity::Odd, a, m + 1, m + 1, A),
                    spec_of(Parity::Even, a, m, m, with0()),
                    spec_of(Parity::Even, a, m, m + 1, with0()),
                    spec_of(Parity::Odd, a, m, m + 1, A)};
            break;
        case SpecializationId::Eq4_23:
            four = {spec_of(Parity::Even, a, m + 1, m + 1, A),
                    spec_of(Parity::Odd, a, m + 1, m + 1, dec()),
                    spec_of(Parity::Odd, a, m + 1, m + 2, dec()),
                    spec_of(Parity::Even, a, m, m + 1, A)};
            break;
        case SpecializationId::Eq4_24:
            four = {spec_of(Parity::Odd, a, m + 1, m + 1, A),
                    spec_of(Parity::Even, a, m + 1, m + 1, A),
                    spec_of(Parity::Even, a, m + 1, m + 2, A),
                    spec_of(Parity::Odd, a, m, m + 1, A)};
            break;
    }
    return guarded(name, four[0].str() + "*" + four[1].str(), [&](CheckReport& rep) {
        std::array<const TGFResult*, 4> t{};
        for (int i = 0; i < 4; ++i)
            t[i] = &ctx.cache.get(build_region(four[static_cast<std::size_t>(i)]),
                                  WeightScheme::standard());
        LaurentPoly rhs = tgf_poly(*t[2]) * tgf_poly(*t[3]);
        rhs *= Rat(2);
        conclude(rep, tgf_poly(*t[0]) * tgf_poly(*t[1]), rhs,
                 "two-term specialization violated");
    });
}

CheckReport verify_ratio(RatioId id, const RatioParams& p) {
    std::ostringstream os;
    os << "(a=" << p.a << ",m=" << p.m << ",n=" << p.n << ",k=" << p.k << ",[";
    for (std::size_t i = 0; i < p.a_list.size(); ++i) os << (i ? "," : "") << p.a_list[i];
    os << "])";
    return guarded(ratio_id_name(id), os.str(), [&](CheckReport& rep) {
        RatioOutcome out = ratio_identity(id, p);
        rep.lhs = out.lhs;
        rep.rhs = RationalFunc(out.expected);
        rep.status = out.holds ? Status::Pass : Status::Fail;
        if (!out.holds) rep.note = "collapsed identity did not evaluate to the constant";
    });
}

std::vector<std::int64_t> calibrate_intrusion_offset(VerifyCtx& ctx) {
    // Smallest instance on which the placement matters and the theorem check
    // is sensitive: a nontrivial intrusion in a hexagon wide enough for
    // several placements.
    IntrusionSpec s = spec_of(Parity::Even, 1, 2, 3, {1});
    FormulaValue rhs = rhs_thm22_even(s);
    const TGFResult& th = ctx.cache.get(companion_hexagon(s), WeightScheme::standard());
    std::vector<std::int64_t> good;
    for (std::int64_t off = 0; off <= s.m + s.n; off += 2) {
        Region r;
        try {
            r = build_intruded(s, off).relabeled(s.str() + "@" + std::to_string(off));
        } catch (const std::exception&) {
            continue;  // placement does not fit the hexagon
        }
        const TGFResult& tr = ctx.cache.get(r, WeightScheme::standard());
        if (tgf_poly(tr) * rhs.value.den() == rhs.value.num() * tgf_poly(th)) good.push_back(off);
    }
    return good;
}

std::vector<ZigzagStart> calibrate_zigzag_start(VerifyCtx& ctx) {
    std::vector<ZigzagStart> good;
    for (ZigzagStart start : {ZigzagStart::NorthEast, ZigzagStart::SouthEast}) {
        bool all_ok = true;
        const std::vector<Region> regions = {build_hexagon(2, 1, 1), build_hexagon(2, 2, 2),
                                             build_he(spec_of(Parity::Even, 1, 1, 1, {0}))};
        for (const Region& r : regions) {
            SplitPieces sp = split_symmetric(r, start);
            Region plus = sp.plus.relabeled(sp.plus.label() +
                                            (start == ZigzagStart::SouthEast ? "se" : ""));
            Region minus = sp.minus.relabeled(sp.minus.label() +
                                              (start == ZigzagStart::SouthEast ? "se" : ""));
            const TGFResult& whole = ctx.cache.get(r, WeightScheme::standard());
            const TGFResult& tp = ctx.cache.get(plus, sp.plus_scheme);
            const TGFResult& tm = ctx.cache.get(minus, sp.minus_scheme);
            LaurentPoly rhs = tgf_poly(tp) * tgf_poly(tm);
            Rat two_w(1);
            for (std::int64_t i = 0; i < sp.width; ++i) two_w *= 2;
            rhs *= two_w;
            if (!(tgf_poly(whole) == rhs)) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) good.push_back(start);
    }
    return good;
}

EngineBudget SuiteConfig::engine_budget() const {
    EngineBudget b;
    if (budget_nodes > 0) b.max_nodes = budget_nodes;
    b.max_profile_width = profile_width;
    return b;
}

SuiteConfig suite_config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    SuiteConfig c;
    auto get = [&j](const char* key, std::int64_t& out) {
        if (j.contains(key)) out = j[key].get<std::int64_t>();
    };
    get("macmahon_max", c.macmahon_max);
    get("lemma21_max", c.lemma21_max);
    if (j.contains("lemma21_extra_534")) c.lemma21_extra_534 = j["lemma21_extra_534"].get<bool>();
    get("thm22_a_max", c.thm22_a_max);
    get("thm22_k_max", c.thm22_k_max);
    get("thm22_ai_max", c.thm22_ai_max);
    get("thm22_m_max", c.thm22_m_max);
    get("thm22_gap_max", c.thm22_gap_max);
    get("thm31_label_max", c.thm31_label_max);
    get("thm31_set_max", c.thm31_set_max);
    get("thm31_n_max", c.thm31_n_max);
    get("thm31_x_max", c.thm31_x_max);
    get("hex_split_x_max", c.hex_split_x_max);
    get("hex_split_y_max", c.hex_split_y_max);
    get("kuo_a_max", c.kuo_a_max);
    get("kuo_m_max", c.kuo_m_max);
    get("kuo_n_max", c.kuo_n_max);
    get("kuo_k_max", c.kuo_k_max);
    get("ratio_a_max", c.ratio_a_max);
    get("ratio_m_max", c.ratio_m_max);
    get("ratio_k_max", c.ratio_k_max);
    get("oracle_cell_cap", c.oracle_cell_cap);
    get("budget_nodes", c.budget_nodes);
    if (j.contains("profile_width")) c.profile_width = j["profile_width"].get<int>();
    if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
    return c;
}

namespace {

using Task = std::function<CheckReport()>;

std::vector<CheckReport> run_tasks(std::vector<Task>& tasks, int jobs) {
    std::vector<CheckReport> out(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            out[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

// Every a_list in [0..cap]^k.
std::vector<std::vector<std::int64_t>> all_lists(std::int64_t k, std::int64_t cap) {
    std::vector<std::vector<std::int64_t>> out{{}};
    for (std::int64_t i = 0; i < k; ++i) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& v : out)
            for (std::int64_t x = 0; x <= cap; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<std::int64_t>> subsets_upto(std::int64_t max_label,
                                                    std::int64_t max_size) {
    std::vector<std::vector<std::int64_t>> out{{}};
    for (std::int64_t v = 1; v <= max_label; ++v) {
        std::size_t cur = out.size();
        for (std::size_t i = 0; i < cur; ++i) {
            if (static_cast<std::int64_t>(out[i].size()) >= max_size) continue;
            auto w = out[i];
            w.push_back(v);
            out.push_back(std::move(w));
        }
    }
    return out;
}

void add_suite_tasks(const std::string& name, const SuiteConfig& cfg, VerifyCtx& ctx,
                     std::vector<Task>& tasks) {
    if (name == "macmahon") {
        for (std::int64_t x = 0; x <= cfg.macmahon_max; ++x)
            for (std::int64_t y = 0; y <= cfg.macmahon_max; ++y)
                for (std::int64_t z = 0; z <= cfg.macmahon_max; ++z)
                    tasks.push_back([&, x, y, z] {
                        return guarded("eq1.1", hex_params(x, y, z), [&](CheckReport& rep) {
                            TGFResult t = tgf_backtrack(build_hexagon(x, y, z),
                                                        WeightScheme::standard(),
                                                        ctx.cache.budget());
                            Rat count = t.value.eval_one();
                            Rat expected = rhs_macmahon(x, y, z);
                            rep.lhs = RationalFunc(count);
                            rep.rhs = RationalFunc(expected);
                            const bool count_ok = Rat(t.tilings_enumerated) == expected;
                            rep.status =
                                (count == expected && count_ok) ? Status::Pass : Status::Fail;
                            if (rep.status == Status::Fail) rep.note = "count mismatch";
                        });
                    });
    } else if (name == "lemma21") {
        for (std::int64_t x = 0; x <= cfg.lemma21_max; ++x)
            for (std::int64_t y = 0; y <= cfg.lemma21_max; ++y)
                for (std::int64_t z = 0; z <= cfg.lemma21_max; ++z)
                    tasks.push_back([&, x, y, z] { return verify_lemma21(x, y, z, ctx); });
        if (cfg.lemma21_extra_534)
            tasks.push_back([&] { return verify_lemma21(5, 3, 4, ctx); });
    } else if (name == "thm22") {
        for (Parity par : {Parity::Even, Parity::Odd})
            for (std::int64_t a = 0; a <= cfg.thm22_a_max; ++a)
                for (std::int64_t k = 0; k <= cfg.thm22_k_max; ++k)
                    for (const auto& list : all_lists(k, cfg.thm22_ai_max))
                        for (std::int64_t m = 0; m <= cfg.thm22_m_max; ++m)
                            for (std::int64_t n = m; n <= m + cfg.thm22_gap_max; ++n)
                                tasks.push_back([&, par, a, m, n, list] {
                                    return verify_thm22(spec_of(par, a, m, n, list), ctx);
                                });
    } else if (name == "thm31") {
        for (const auto& l : subsets_upto(cfg.thm31_label_max, cfg.thm31_set_max))
            for (std::int64_t n = 0; n <= cfg.thm31_n_max; ++n)
                for (std::int64_t x = l.empty() ? -1 : 0; x <= cfg.thm31_x_max; ++x)
                    for (RVariant v : {RVariant::R, RVariant::Rbar}) {
                        if (v == RVariant::Rbar && x < 0) continue;
                        RSpec rs;
                        rs.l = l, rs.n = n, rs.x = x;
                        tasks.push_back([&, rs, v] { return verify_thm31(rs, v, ctx); });
                    }
    } else if (name == "factorization") {
        for (Parity par : {Parity::Even, Parity::Odd})
            for (std::int64_t a = 0; a <= cfg.thm22_a_max; ++a)
                for (std::int64_t k = 0; k <= cfg.thm22_k_max; ++k)
                    for (const auto& list : all_lists(k, cfg.thm22_ai_max))
                        for (std::int64_t m = 0; m <= cfg.thm22_m_max; ++m) {
                            FactorizationParams p;
                            p.spec = spec_of(par, a, m, m, list);
                            const FactorizationId id = par == Parity::Even
                                                           ? FactorizationId::Eq3_3
                                                           : FactorizationId::Eq3_4;
                            tasks.push_back([&, id, p] {
                                return verify_factorization(id, p, ctx);
                            });
                        }
        for (std::int64_t x = 0; x <= cfg.hex_split_x_max; ++x)
            for (std::int64_t y = 0; y <= cfg.hex_split_y_max; ++y) {
                FactorizationParams p;
                p.hex_x = x, p.hex_y = y;
                tasks.push_back(
                    [&, p] { return verify_factorization(FactorizationId::Eq3_5, p, ctx); });
            }
    } else if (name == "region_equiv") {
        for (Parity par : {Parity::Even, Parity::Odd})
            for (std::int64_t a = 0; a <= cfg.thm22_a_max; ++a)
                for (std::int64_t k = 1; k <= cfg.thm22_k_max; ++k)
                    for (const auto& list : all_lists(k, cfg.thm22_ai_max))
                        for (std::int64_t m = 0; m <= cfg.thm22_m_max; ++m) {
                            EquivParams p;
                            p.spec = spec_of(par, a, m, m, list);
                            if (par == Parity::Even) {
                                if (list.back() >= 1)
                                    tasks.push_back([&, p] {
                                        return verify_region_equiv(EquivId::Eq4_6, p, ctx);
                                    });
                                if (m + list.back() >= 1)
                                    tasks.push_back([&, p] {
                                        return verify_region_equiv(EquivId::Eq4_7, p, ctx);
                                    });
                            } else {
                                if (m >= 1)
                                    tasks.push_back([&, p] {
                                        return verify_region_equiv(EquivId::Eq4_12, p, ctx);
                                    });
                                tasks.push_back([&, p] {
                                    return verify_region_equiv(EquivId::Eq4_13, p, ctx);
                                });
                            }
                        }
        for (std::int64_t c = 0; c <= cfg.thm22_a_max + cfg.thm22_k_max * cfg.thm22_ai_max; ++c)
            for (std::int64_t M = 0; M <= cfg.thm22_m_max + cfg.thm22_k_max; ++M) {
                EquivParams p;
                p.hex_c = c, p.hex_m = M;
                tasks.push_back([&, p] { return verify_region_equiv(EquivId::Eq4_8, p, ctx); });
                if (M >= 1) {
                    tasks.push_back(
                        [&, p] { return verify_region_equiv(EquivId::Eq4_9, p, ctx); });
                    tasks.push_back(
                        [&, p] { return verify_region_equiv(EquivId::Eq4_14, p, ctx); });
                    tasks.push_back(
                        [&, p] { return verify_region_equiv(EquivId::Eq4_15, p, ctx); });
                }
            }
    } else if (name == "kuo") {
        for (std::int64_t a = 0; a <= cfg.kuo_a_max; ++a)
            for (std::int64_t m = 0; m <= cfg.kuo_m_max; ++m)
                for (std::int64_t n = 1; n <= cfg.kuo_n_max; ++n)
                    for (std::int64_t k = 1; k <= cfg.kuo_k_max; ++k) {
                        for (const auto& list : all_lists(k - 1, 1)) {
                            KuoParams p{a, m, n, k, list};
                            tasks.push_back([&, p] {
                                return verify_kuo(KuoSelection::make(KuoId::Eq4_18, p), p, ctx);
                            });
                        }
                        for (const auto& list : all_lists(k, 1)) {
                            KuoParams p{a, m, n, k, list};
                            if (list.back() >= 1)
                                tasks.push_back([&, p] {
                                    return verify_kuo(KuoSelection::make(KuoId::Eq4_19, p), p,
                                                      ctx);
                                });
                            tasks.push_back([&, p] {
                                return verify_kuo(KuoSelection::make(KuoId::Eq4_20, p), p, ctx);
                            });
                        }
                    }
    } else if (name == "specializations") {
        for (std::int64_t a = 0; a <= cfg.kuo_a_max; ++a)
            for (std::int64_t m = 0; m <= cfg.kuo_m_max + 1; ++m)
                for (std::int64_t k = 1; k <= cfg.kuo_k_max; ++k) {
                    for (const auto& list : all_lists(k - 1, 1)) {
                        KuoParams p{a, m, 0, k, list};
                        tasks.push_back([&, p] {
                            return verify_specializations(SpecializationId::Eq4_22, p, ctx);
                        });
                    }
                    for (const auto& list : all_lists(k, 1)) {
                        KuoParams p{a, m, 0, k, list};
                        if (list.back() >= 1)
                            tasks.push_back([&, p] {
                                return verify_specializations(SpecializationId::Eq4_23, p, ctx);
                            });
                        tasks.push_back([&, p] {
                            return verify_specializations(SpecializationId::Eq4_24, p, ctx);
                        });
                    }
                }
    } else if (name == "ratios") {
        for (std::int64_t a = 0; a <= cfg.ratio_a_max; ++a)
            for (std::int64_t m = 0; m <= cfg.ratio_m_max; ++m)
                for (std::int64_t k = 1; k <= cfg.ratio_k_max; ++k)
                    for (const auto& list : all_lists(k, 1)) {
                        RatioParams p{a, m, 0, k, list};
                        tasks.push_back([p] { return verify_ratio(RatioId::Eq4_25, p); });
                        tasks.push_back([p] { return verify_ratio(RatioId::Eq4_33, p); });
                        if (list.back() >= 1)
                            tasks.push_back([p] { return verify_ratio(RatioId::Eq4_29, p); });
                        for (std::int64_t n = m + 2; n <= m + 3; ++n) {
                            RatioParams pn{a, m, n, k, list};
                            tasks.push_back([pn] { return verify_ratio(RatioId::Eq4_37, pn); });
                            tasks.push_back([pn] { return verify_ratio(RatioId::Eq4_49, pn); });
                            if (list.back() >= 1)
                                tasks.push_back(
                                    [pn] { return verify_ratio(RatioId::Eq4_43, pn); });
                        }
                    }
    } else if (name == "properties") {
        // Mirror invariance of the tgf on a sample across all families.
        std::vector<Region> sample;
        for (std::int64_t x = 0; x <= 2; ++x)
            for (std::int64_t y = 0; y <= 2; ++y)
                for (std::int64_t z = 0; z <= 2; ++z) sample.push_back(build_hexagon(x, y, z));
        sample.push_back(build_hexagon(3, 2, 1));
        sample.push_back(build_he(spec_of(Parity::Even, 1, 1, 2, {1})));
        sample.push_back(build_ho(spec_of(Parity::Odd, 1, 2, 1, {0})));
        {
            RSpec rs;
            rs.l = {1, 3};
            rs.n = 1;
            rs.x = 1;
            sample.push_back(build_r(rs));
        }
        for (const Region& r : sample)
            tasks.push_back([&, r] {
                return guarded("mirror", r.label(), [&](CheckReport& rep) {
                    const TGFResult& t = ctx.cache.get(r, WeightScheme::standard());
                    const TGFResult& tm = ctx.cache.get(r.mirror_j(), WeightScheme::standard());
                    conclude(rep, tgf_poly(t), tgf_poly(tm), "mirror changed the tgf");
                });
            });
        // The diagonal-parameter swap is the h -> -h reflection, cell for cell.
        tasks.push_back([&] {
            return guarded("mn-swap", "he(1,1,2,1:[1])", [&](CheckReport& rep) {
                Region a = build_he(spec_of(Parity::Even, 1, 1, 2, {1})).flip_h();
                Region b = build_he(spec_of(Parity::Even, 1, 2, 1, {1}));
                rep.status = a.cells() == b.cells() ? Status::Pass : Status::Fail;
                if (rep.status == Status::Fail) rep.note = "cell sets differ";
            });
        });
        tasks.push_back([&] {
            return guarded("calibration", "intrusion offset", [&](CheckReport& rep) {
                auto good = calibrate_intrusion_offset(ctx);
                rep.status = (good == std::vector<std::int64_t>{0}) ? Status::Pass : Status::Fail;
                std::string s;
                for (auto v : good) s += std::to_string(v) + " ";
                rep.note = "matching offsets: " + (s.empty() ? "none" : s);
            });
        });
        tasks.push_back([&] {
            return guarded("calibration", "zigzag start", [&](CheckReport& rep) {
                auto good = calibrate_zigzag_start(ctx);
                rep.status = (good.size() == 1 && good[0] == ZigzagStart::NorthEast)
                                 ? Status::Pass
                                 : Status::Fail;
                rep.note = "north-east start " +
                           std::string(rep.status == Status::Pass ? "uniquely selected"
                                                                  : "not uniquely selected");
            });
        });
        // Horizontal-lozenge count is yz on hexagons and 2^(yz) tgf has
        // nonnegative integer coefficients.
        for (std::int64_t x = 1; x <= 3; ++x)
            for (std::int64_t y = 1; y <= 2; ++y)
                for (std::int64_t z = 1; z <= 2; ++z)
                    tasks.push_back([&, x, y, z] {
                        return guarded("hcount", hex_params(x, y, z), [&](CheckReport& rep) {
                            const TGFResult& t =
                                ctx.cache.get(build_hexagon(x, y, z), WeightScheme::standard());
                            bool ok = t.horizontal_constant && t.horizontal_count &&
                                      *t.horizontal_count == y * z;
                            if (ok) {
                                LaurentPoly scaled = tgf_poly(t);
                                Rat two(1);
                                for (std::int64_t i = 0; i < y * z; ++i) two *= 2;
                                scaled *= two;
                                for (const auto& [e, c] : scaled.terms())
                                    if (c < 0 || c.get_den() != 1) ok = false;
                            }
                            rep.status = ok ? Status::Pass : Status::Fail;
                            if (!ok) rep.note = "horizontal count / integrality violated";
                        });
                    });
        // Engine agreement and q <-> 1/q are asserted on every tgf behind the
        // cache; surface the counters.
        tasks.push_back([&] {
            return guarded("engines", "summary", [&](CheckReport& rep) {
                rep.status = Status::Pass;
                rep.note = std::to_string(ctx.cache.double_checked()) + " of " +
                           std::to_string(ctx.cache.computed()) +
                           " tgf computations double-checked by the oracle";
            });
        });
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"macmahon",     "lemma21", "thm22",           "thm31",  "factorization",
            "region_equiv", "kuo",     "specializations", "ratios", "properties"};
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
    VerifyCtx ctx{TgfCache(cfg.engine_budget(), cfg.oracle_cell_cap)};
    std::vector<Task> tasks;
    if (name == "all") {
        for (const std::string& s : suite_names()) add_suite_tasks(s, cfg, ctx, tasks);
    } else {
        add_suite_tasks(name, cfg, ctx, tasks);
    }
    return run_tasks(tasks, cfg.jobs);
}

}  // namespace tilecert
