#pragma once

#include "tilecert/ratfunc.hpp"
#include "tilecert/region.hpp"
#include "tilecert/weight.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tilecert {

/// Node / state limits for the engines. The environment variable
/// TILECERT_BUDGET overrides the default backtracking node budget.
struct EngineBudget {
    std::int64_t max_nodes;
    int max_profile_width;

    EngineBudget();
};

/// Raised when a computation would exceed its budget; never a wrong value.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Bipartite dual graph of a region: one vertex per cell, one edge per
/// adjacent cell pair, edge weights from the scheme. Left cells and Right
/// cells are the two vertex classes.
struct DualGraph {
    const Region* region = nullptr;
    /// adjacency[i] lists indices into region->cells().
    std::vector<std::vector<std::uint32_t>> adjacency;
    std::int64_t left_count = 0, right_count = 0;
    std::size_t edge_count = 0;

    static DualGraph build(const Region& r);
};

struct TGFResult {
    RationalFunc value;
    std::string engine;
    std::string scheme;
    std::int64_t tilings_enumerated = -1;  // backtracking engine
    std::int64_t states_memoized = -1;     // profile engine
    /// Set when every tiling carries the same number of horizontal lozenges
    /// (vacuously unset for untileable regions).
    std::optional<std::int64_t> horizontal_count;
    bool horizontal_constant = true;
};

/// Exhaustive weighted backtracking over tilings: always covers the smallest
/// uncovered cell (in (p,h,o) order) with each of its available partners.
/// Exact; throws BudgetExceeded beyond budget.max_nodes search nodes.
TGFResult tgf_backtrack(const Region& r, const WeightScheme& w, const EngineBudget& budget = {});

/// Strip-by-strip dynamic program memoizing boundary states (the set of
/// horizontal lozenges committed across the current strip boundary). Equals
/// tgf_backtrack exactly; throws when a boundary has more than
/// budget.max_profile_width crossing positions.
TGFResult tgf_profile(const Region& r, const WeightScheme& w, const EngineBudget& budget = {});

struct Tiling {
    std::vector<Lozenge> lozenges;
    LaurentPoly weight;
};

/// Complete list of tilings; throws BudgetExceeded if more than limit exist.
std::vector<Tiling> enumerate_tilings(const Region& r, const WeightScheme& w, std::int64_t limit);

}  // namespace tilecert
