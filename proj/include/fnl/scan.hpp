#pragma once

#include "fnl/deform.hpp"
#include "fnl/jets.hpp"
#include "fnl/report.hpp"
#include "fnl/runner.hpp"
#include "fnl/tangent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fnl {

/// Which stages a scan runs per spec.
struct ScanTask {
    bool classify = true;
    bool nt = false;
    bool jets = false;
};

struct ScanConfig {
    int d = 0;
    RankMode rank_mode = RankMode::Certified;
    bool stabilize = true;
    RGrid grid;
    int n_max = 3;
    int jobs = 1;
    ZetaWindow window = ZetaWindow::Reduced;
    const DiskCache* cache = nullptr;
    std::string checkpoint; // JSONL path; empty disables
    std::optional<PencilSpec> only;
    int limit = 0;                  // process only the first `limit` specs (0 = all)
    double budget_seconds = 0.0;    // per-spec wall-clock ceiling (0 = none)

    std::string config_key() const;
};

/// Everything computed for one spec. first_fail of a pair is the least N at
/// which the jet test fails, 0 when smooth through n_max.
struct SpecOutcome {
    PencilSpec spec;
    TangentReport tangent;
    int istar_size = -1;
    bool nt_scanned = false;
    std::vector<std::pair<int, int>> nt_pairs;
    bool jets_scanned = false;
    int n_max = 0;
    std::vector<std::array<int, 3>> jet_pairs; // {r1, r2, first_fail}
    int first_fail_column = 0;                 // min first_fail over pairs; 0 = none
    std::string skipped;                       // nonempty when a stage was skipped

    Json to_json() const;
    static SpecOutcome from_json(int d, const Json& j);
};

SpecOutcome analyze_spec(const PencilSpec& spec, const ScanConfig& cfg, const ScanTask& task);

/// Runs the task over all specs of cfg.d (or cfg.only), in enumeration order,
/// with the worker pool and spec-level checkpointing.
std::vector<SpecOutcome> run_scan(const ScanConfig& cfg, const ScanTask& task);

/// Counts reproducing one table row.
struct TableRow {
    int d = 0;
    int count = 0;
    int general = 0;
    int inclusion = 0;
    int candidate = 0;
    std::map<int, int> first_fail_hist;
    int nt_specs = 0;
    std::vector<std::string> skipped_cells;
};

TableRow summarize(int d, const std::vector<SpecOutcome>& outcomes, const ScanTask& task);

Json outcomes_to_json(const ScanConfig& cfg, const ScanTask& task,
                      const std::vector<SpecOutcome>& outcomes);

/// Projection onto the nested-list data layout. `pairs_from` selects which
/// pair list lands in item [5]: "nt" or "smooth" (jet pairs with
/// first_fail = 0), or "none".
std::vector<LegacyItem> outcomes_to_legacy(const std::vector<SpecOutcome>& outcomes,
                                           const std::string& pairs_from);

std::string table_text(const TableRow& row);

} // namespace fnl
