#include "tilecert/engines.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace tilecert {

EngineBudget::EngineBudget() : max_nodes(50'000'000), max_profile_width(24) {
    if (const char* env = std::getenv("TILECERT_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) max_nodes = v;
    }
}

DualGraph DualGraph::build(const Region& r) {
    DualGraph g;
    g.region = &r;
    const auto& cells = r.cells();
    g.adjacency.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].o == Orient::Left)
            ++g.left_count;
        else
            ++g.right_count;
        for (const TriCell& c : cell_partners(cells[i])) {
            auto it = std::lower_bound(cells.begin(), cells.end(), c);
            if (it != cells.end() && *it == c)
                g.adjacency[i].push_back(static_cast<std::uint32_t>(it - cells.begin()));
        }
        g.edge_count += g.adjacency[i].size();
    }
    g.edge_count /= 2;
    return g;
}

namespace {

struct BacktrackCtx {
    const std::vector<TriCell>* cells;
    const DualGraph* graph;
    const WeightScheme* scheme;
    std::vector<char> covered;
    std::int64_t nodes = 0, max_nodes = 0;
    std::int64_t tilings = 0;
    std::int64_t cur_h = 0, min_h = 0, max_h = 0;
    bool collect = false;
    std::int64_t collect_limit = 0;
    std::vector<Lozenge> partial;
    std::vector<Tiling>* out = nullptr;

    LaurentPoly run(std::size_t from) {
        if (++nodes > max_nodes)
            throw BudgetExceeded("backtracking budget of " + std::to_string(max_nodes) +
                                 " nodes exceeded on " + graph->region->label());
        while (from < covered.size() && covered[from]) ++from;
        if (from == covered.size()) {
            ++tilings;
            if (tilings == 1) {
                min_h = max_h = cur_h;
            } else {
                min_h = std::min(min_h, cur_h);
                max_h = std::max(max_h, cur_h);
            }
            if (collect) {
                if (tilings > collect_limit)
                    throw BudgetExceeded("tiling enumeration limit of " +
                                         std::to_string(collect_limit) + " exceeded on " +
                                         graph->region->label());
                Tiling t;
                t.lozenges = partial;
                std::sort(t.lozenges.begin(), t.lozenges.end());
                t.weight = LaurentPoly::one();
                for (const Lozenge& l : t.lozenges) t.weight *= scheme->weight(l);
                out->push_back(std::move(t));
            }
            return LaurentPoly::one();
        }
        LaurentPoly total;
        covered[from] = 1;
        for (std::uint32_t j : graph->adjacency[from]) {
            if (covered[j]) continue;
            covered[j] = 1;
            Lozenge l((*cells)[from], (*cells)[j]);
            const bool hor = l.horizontal();
            if (hor) ++cur_h;
            if (collect) partial.push_back(l);
            LaurentPoly sub = run(from + 1);
            if (!sub.is_zero()) total += scheme->weight(l) * sub;
            if (collect) partial.pop_back();
            if (hor) --cur_h;
            covered[j] = 0;
        }
        covered[from] = 0;
        return total;
    }
};

}  // namespace

TGFResult tgf_backtrack(const Region& r, const WeightScheme& w, const EngineBudget& budget) {
    DualGraph g = DualGraph::build(r);
    BacktrackCtx ctx;
    ctx.cells = &r.cells();
    ctx.graph = &g;
    ctx.scheme = &w;
    ctx.covered.assign(r.size(), 0);
    ctx.max_nodes = budget.max_nodes;

    TGFResult res;
    res.engine = "oracle";
    res.scheme = w.name();
    res.value = (g.left_count != g.right_count) ? RationalFunc() : RationalFunc(ctx.run(0));
    res.tilings_enumerated = ctx.tilings;
    if (ctx.tilings > 0) {
        res.horizontal_constant = (ctx.min_h == ctx.max_h);
        if (res.horizontal_constant) res.horizontal_count = ctx.min_h;
    }
    return res;
}

std::vector<Tiling> enumerate_tilings(const Region& r, const WeightScheme& w, std::int64_t limit) {
    DualGraph g = DualGraph::build(r);
    std::vector<Tiling> out;
    if (g.left_count != g.right_count) return out;
    BacktrackCtx ctx;
    ctx.cells = &r.cells();
    ctx.graph = &g;
    ctx.scheme = &w;
    ctx.covered.assign(r.size(), 0);
    ctx.max_nodes = EngineBudget().max_nodes;
    ctx.collect = true;
    ctx.collect_limit = limit;
    ctx.out = &out;
    ctx.run(0);
    return out;
}

namespace {

// Profile-DP value attached to one boundary state.
struct ProfileVal {
    LaurentPoly poly;
    std::int64_t min_h = 0, max_h = 0;
    bool init = false;

    void absorb(const LaurentPoly& p, std::int64_t h) {
        poly += p;
        if (!init) {
            min_h = max_h = h;
            init = true;
        } else {
            min_h = std::min(min_h, h);
            max_h = std::max(max_h, h);
        }
    }
};

using State = std::vector<std::int32_t>;  // sorted h's of committed crossings

struct StripCell {
    std::int32_t h;
    Orient o;
    bool out_ok;  // a Right cell exists at (p+1, h): horizontal exit allowed
};

// Enumerates every way to complete one strip given the set of pre-covered
// Right cells, emitting (crossings out, weight, #horizontal placed).
struct StripScan {
    const std::vector<StripCell>* cells;
    const State* in;
    const WeightScheme* scheme;
    std::vector<std::int32_t> out;
    LaurentPoly weight = LaurentPoly::one();
    std::int64_t hcount = 0;

    template <typename Fn>
    void run(std::size_t i, bool offered, Fn&& emit) {
        if (i == cells->size()) {
            if (!offered) emit(out, weight, hcount);
            return;
        }
        const StripCell& c = (*cells)[i];
        const bool contiguous = i > 0 && (*cells)[i - 1].h + 1 == c.h;
        if (offered && !contiguous) return;  // dangling pair offer at a gap
        const bool pre = c.o == Orient::Right &&
                         std::binary_search(in->begin(), in->end(), c.h);
        const bool covered = (offered && contiguous) || pre;
        if (offered && contiguous && pre) return;  // double cover
        if (covered) {
            run(i + 1, false, emit);
            return;
        }
        if (c.o == Orient::Right) {
            // Only remaining partner is the Left cell right above.
            run(i + 1, true, emit);
            return;
        }
        // Uncovered Left cell: pair with the cell above, or leave the strip
        // through its horizontal partner.
        run(i + 1, true, emit);
        if (c.out_ok) {
            LaurentPoly saved = weight;
            Lozenge l(left_cell(0, c.h), right_cell(1, c.h));  // weight depends on h only
            weight *= scheme->weight(l);
            out.push_back(c.h);
            ++hcount;
            run(i + 1, false, emit);
            --hcount;
            out.pop_back();
            weight = std::move(saved);
        }
    }
};

}  // namespace

TGFResult tgf_profile(const Region& r, const WeightScheme& w, const EngineBudget& budget) {
    TGFResult res;
    res.engine = "profile";
    res.scheme = w.name();
    res.states_memoized = 0;

    DualGraph g = DualGraph::build(r);
    if (g.left_count != g.right_count || r.empty()) {
        res.value = r.empty() ? RationalFunc(1) : RationalFunc();
        if (r.empty()) res.horizontal_count = 0;
        res.states_memoized = 0;
        return res;
    }

    // Bucket cells by strip.
    std::map<std::int32_t, std::vector<StripCell>> strips;
    for (const TriCell& c : r.cells())
        strips[c.p].push_back(StripCell{c.h, c.o, false});
    for (auto& [p, vec] : strips) {
        auto next = strips.find(p + 1);
        std::size_t width = 0;
        for (StripCell& sc : vec) {
            if (sc.o == Orient::Left && next != strips.end()) {
                sc.out_ok = std::any_of(next->second.begin(), next->second.end(),
                                        [&](const StripCell& n) {
                                            return n.h == sc.h && n.o == Orient::Right;
                                        });
                if (sc.out_ok) ++width;
            }
        }
        if (width > static_cast<std::size_t>(budget.max_profile_width))
            throw BudgetExceeded("profile boundary width " + std::to_string(width) +
                                 " exceeds the limit of " +
                                 std::to_string(budget.max_profile_width) + " on " + r.label() +
                                 "; raise the limit or use the oracle engine");
    }

    std::map<State, ProfileVal> layer;
    layer[{}].absorb(LaurentPoly::one(), 0);

    std::int32_t prev_p = strips.begin()->first - 1;
    for (auto& [p, vec] : strips) {
        if (p != prev_p + 1) {
            // Empty strip gap: nothing can cross it.
            auto it = layer.find(State{});
            std::map<State, ProfileVal> fresh;
            if (it != layer.end()) fresh.emplace(State{}, std::move(it->second));
            layer = std::move(fresh);
            if (layer.empty()) break;
        }
        prev_p = p;
        std::map<State, ProfileVal> next_layer;
        for (const auto& [in_state, val] : layer) {
            StripScan scan;
            scan.cells = &vec;
            scan.in = &in_state;
            scan.scheme = &w;
            scan.run(0, false, [&](const State& out, const LaurentPoly& wt, std::int64_t hc) {
                ProfileVal& slot = next_layer[out];
                slot.absorb(val.poly * wt, val.min_h + hc);
                if (val.max_h + hc > slot.max_h) slot.max_h = val.max_h + hc;
                if (val.min_h + hc < slot.min_h) slot.min_h = val.min_h + hc;
            });
        }
        // Every pre-covered Right cell of the incoming states was consumed by
        // construction: states only ever name existing cells.
        layer = std::move(next_layer);
        res.states_memoized += static_cast<std::int64_t>(layer.size());
        if (layer.empty()) break;
    }

    auto it = layer.find(State{});
    if (it == layer.end() || it->second.poly.is_zero()) {
        res.value = RationalFunc();
        return res;
    }
    res.value = RationalFunc(it->second.poly);
    res.horizontal_constant = it->second.min_h == it->second.max_h;
    if (res.horizontal_constant) res.horizontal_count = it->second.min_h;
    return res;
}

}  // namespace tilecert
