#pragma once

#include "tilecert/engines.hpp"
#include "tilecert/formulas.hpp"
#include "tilecert/region.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

namespace tilecert {

enum class Status { Pass, Fail, Skip };

struct CheckReport {
    std::string check;
    std::string params;
    Status status = Status::Skip;
    RationalFunc lhs, rhs;  // cross-multiplied sides; equal iff Pass
    std::string note;       // first mismatching factor / skip reason
    double wall_ms = 0;
};

/// Shared engine front end: profile TGF for every region, plus an oracle
/// recomputation (with exact-agreement assertion) whenever the region is
/// within the oracle cell cap, plus the q -> 1/q invariance assertion.
/// Results are cached by (region label, scheme).
class TgfCache {
public:
    explicit TgfCache(EngineBudget budget = {}, std::int64_t oracle_cell_cap = 120)
        : budget_(budget), cap_(oracle_cell_cap) {}

    const TGFResult& get(const Region& r, const WeightScheme& w);
    std::int64_t double_checked() const { return double_checked_; }
    std::int64_t computed() const { return computed_; }
    const EngineBudget& budget() const { return budget_; }

private:
    EngineBudget budget_;
    std::int64_t cap_;
    std::map<std::string, TGFResult> cache_;
    std::int64_t double_checked_ = 0, computed_ = 0;
    std::mutex mu_;
};

struct VerifyCtx {
    TgfCache cache;
};

CheckReport verify_lemma21(std::int64_t x, std::int64_t y, std::int64_t z, VerifyCtx& ctx);

/// Engine ratio tgf(region)/tgf(companion hexagon) against the closed
/// product, by cross-multiplication. Mirrors (m,n) -> (n,m) first when n < m.
CheckReport verify_thm22(const IntrusionSpec& s, VerifyCtx& ctx);

enum class RVariant { R, Rbar };
CheckReport verify_thm31(const RSpec& s, RVariant v, VerifyCtx& ctx);

enum class FactorizationId { Eq3_3, Eq3_4, Eq3_5 };
struct FactorizationParams {
    std::optional<IntrusionSpec> spec;          // Eq3_3 / Eq3_4 (m == n)
    std::int64_t hex_x = 0, hex_y = 0;          // Eq3_5: hexagon (x, y, y)
};
CheckReport verify_factorization(FactorizationId id, const FactorizationParams& p, VerifyCtx& ctx);

enum class EquivId { Eq4_6, Eq4_7, Eq4_8, Eq4_9, Eq4_12, Eq4_13, Eq4_14, Eq4_15 };
struct EquivParams {
    std::optional<IntrusionSpec> spec;  // intruded ids (m == n)
    std::int64_t hex_c = 0, hex_m = 0;  // hexagon ids: hex(2c(+1), M, M)
};
CheckReport verify_region_equiv(EquivId id, const EquivParams& p, VerifyCtx& ctx);

enum class KuoId { Eq4_18, Eq4_19, Eq4_20 };
struct KuoParams {
    std::int64_t a = 0, m = 0, n = 0, k = 0;
    std::vector<std::int64_t> a_list;
};
/// Condensation data: the base region the four-point identity is applied to
/// and the four removed unit triangles. The puncture positions are recorded
/// from the construction reading and validated for membership, distinctness
/// and the vertex-class pattern of the applicable matching identity; the
/// certified content is the six-region product identity itself.
struct KuoSelection {
    KuoId id;
    IntrusionSpec base;
    std::array<TriCell, 4> xyzw;

    static KuoSelection make(KuoId id, const KuoParams& p);
    void validate() const;
    std::string str() const;
};
CheckReport verify_kuo(const KuoSelection& sel, const KuoParams& p, VerifyCtx& ctx);

enum class SpecializationId { Eq4_22, Eq4_23, Eq4_24 };
CheckReport verify_specializations(SpecializationId id, const KuoParams& p, VerifyCtx& ctx);

CheckReport verify_ratio(RatioId id, const RatioParams& p);

/// Scans every lattice-consistent intrusion placement and reports the set of
/// column offsets at which the engine ratio matches the closed product on a
/// small instance. The builders ship offset 0; the suite asserts {0}.
std::vector<std::int64_t> calibrate_intrusion_offset(VerifyCtx& ctx);
/// Same idea for the symmetric split's zigzag start; asserts {NorthEast}.
std::vector<ZigzagStart> calibrate_zigzag_start(VerifyCtx& ctx);

/// Grid configuration for the certification suites (defaults reproduce the
/// acceptance grids; see configs/default.json for the schema).
struct SuiteConfig {
    std::int64_t macmahon_max = 4;
    std::int64_t lemma21_max = 3;
    bool lemma21_extra_534 = true;
    std::int64_t thm22_a_max = 2, thm22_k_max = 2, thm22_ai_max = 1, thm22_m_max = 2,
                 thm22_gap_max = 3;
    std::int64_t thm31_label_max = 4, thm31_set_max = 3, thm31_n_max = 2, thm31_x_max = 2;
    std::int64_t hex_split_x_max = 4, hex_split_y_max = 3;
    std::int64_t kuo_a_max = 1, kuo_m_max = 1, kuo_n_max = 2, kuo_k_max = 2;
    std::int64_t ratio_a_max = 2, ratio_m_max = 2, ratio_k_max = 2;
    std::int64_t oracle_cell_cap = 120;
    std::int64_t budget_nodes = 0;  // 0: engine default
    int profile_width = 24;
    int jobs = 1;

    EngineBudget engine_budget() const;
};

SuiteConfig suite_config_from_json_file(const std::string& path);

/// Runs one named suite ("macmahon", "lemma21", "thm22", "thm31",
/// "factorization", "kuo", "specializations", "region_equiv", "ratios",
/// "properties") or all of them.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<std::string> suite_names();

}  // namespace tilecert
