#include "fnl/scan.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

namespace fnl {

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

std::string ScanConfig::config_key() const {
    std::ostringstream k;
    k << "d=" << d << ";mode=" << rank_mode_name(rank_mode) << ";stab=" << stabilize
      << ";grid=" << grid.r1_max << "x" << grid.r2_max << ";nmax=" << n_max
      << ";win=" << (window == ZetaWindow::Reduced ? "reduced" : "signed");
    if (only)
        k << ";only=" << only->str();
    return k.str();
}

Json SpecOutcome::to_json() const {
    Json j;
    j["spec"] = spec_to_json(spec);
    j["a"] = Json::array({tangent.a1, tangent.a2, tangent.a3, tangent.a4});
    j["h20"] = tangent.h20;
    j["class"] = pencil_class_name(tangent.cls);
    j["stabilized"] = tangent.stabilized;
    if (istar_size >= 0)
        j["istar_size"] = istar_size;
    if (nt_scanned) {
        Json ps = Json::array();
        for (auto [r1, r2] : nt_pairs)
            ps.push_back(Json::array({r1, r2}));
        j["nt"] = std::move(ps);
    }
    if (jets_scanned) {
        j["n_max"] = n_max;
        Json ps = Json::array();
        for (const auto& p : jet_pairs)
            ps.push_back(Json::array({p[0], p[1], p[2]}));
        j["jets"] = std::move(ps);
        j["first_fail"] = first_fail_column;
    }
    if (!skipped.empty())
        j["skipped"] = skipped;
    return j;
}

SpecOutcome SpecOutcome::from_json(int d, const Json& j) {
    SpecOutcome o;
    o.spec = spec_from_json(d, j.at("spec"));
    o.tangent.spec = o.spec;
    const auto& a = j.at("a");
    o.tangent.a1 = a.at(0).get<int>();
    o.tangent.a2 = a.at(1).get<int>();
    o.tangent.a3 = a.at(2).get<int>();
    o.tangent.a4 = a.at(3).get<int>();
    o.tangent.h20 = j.at("h20").get<int>();
    std::string cls = j.at("class").get<std::string>();
    o.tangent.cls = cls == "General"     ? PencilClass::General
                    : cls == "Inclusion" ? PencilClass::Inclusion
                                         : PencilClass::Candidate;
    o.tangent.stabilized = j.at("stabilized").get<bool>();
    if (j.contains("istar_size"))
        o.istar_size = j.at("istar_size").get<int>();
    if (j.contains("nt")) {
        o.nt_scanned = true;
        for (const auto& p : j.at("nt"))
            o.nt_pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    }
    if (j.contains("jets")) {
        o.jets_scanned = true;
        o.n_max = j.at("n_max").get<int>();
        for (const auto& p : j.at("jets"))
            o.jet_pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>()});
        o.first_fail_column = j.at("first_fail").get<int>();
    }
    if (j.contains("skipped"))
        o.skipped = j.at("skipped").get<std::string>();
    return o;
}

SpecOutcome analyze_spec(const PencilSpec& spec, const ScanConfig& cfg, const ScanTask& task) {
    auto t0 = std::chrono::steady_clock::now();
    auto over_budget = [&]() {
        return cfg.budget_seconds > 0 && seconds_since(t0) > cfg.budget_seconds;
    };

    SpecOutcome out;
    out.spec = spec;
    TangentOptions topt{cfg.rank_mode, cfg.stabilize, cfg.cache};
    out.tangent = classify_pencil(spec, topt);

    if (!task.nt && !task.jets)
        return out;

    auto [c1, c2] = build_cycles(spec);
    PeriodMatrix p1 = period_matrix(c1, spec.d, cfg.cache);
    PeriodMatrix p2 = period_matrix(c2, spec.d, cfg.cache);
    DeformSpace ds = deform_space(c1, c2, spec, cfg.cache);
    out.istar_size = static_cast<int>(ds.istar.size());

    std::vector<std::pair<int, int>> pairs = grid_pairs(cfg.grid);
    std::vector<std::pair<int, int>> transversal_pairs;
    if (task.nt || task.jets) {
        out.nt_scanned = true;
        for (auto [r1, r2] : pairs) {
            if (over_budget()) {
                out.skipped = "nt scan budget exceeded";
                out.nt_scanned = false;
                break;
            }
            CycloMatrix pm = add_scaled(p1.m, Rat(r1), p2.m, Rat(r2));
            int full = rank(pm, cfg.rank_mode);
            // Identically vanishing members have no valid reduction to I*.
            int restricted = full == 0 ? -1 : rank(pm.select_columns(ds.istar_cols), cfg.rank_mode);
            if (restricted != full)
                out.nt_pairs.emplace_back(r1, r2);
            else
                transversal_pairs.emplace_back(r1, r2);
        }
    }

    bool jets_wanted = task.jets && (out.tangent.cls == PencilClass::Candidate || cfg.only);
    if (jets_wanted && out.nt_scanned) {
        // The reduction to the I* space is only valid on transversal pairs;
        // non-transversal ones are reported by the NT list instead. Only
        // Candidate specs are scanned in bulk; a single requested spec is
        // scanned unconditionally.
        out.jets_scanned = true;
        out.n_max = cfg.n_max;
        VarList vars = make_vars(ds.istar);
        const std::vector<ExpVec> betas = index_set(spec.d, spec.d - 4);

        // Per-line series are independent of (r1, r2); build the per-cycle
        // sums once.
        std::vector<TruncatedSeries> s1, s2;
        s1.reserve(betas.size());
        s2.reserve(betas.size());
        for (const ExpVec& beta : betas) {
            s1.push_back(
                combo_taylor(spec.d, CycleCombo::single(c1), beta, 1, vars, cfg.n_max, cfg.window));
            s2.push_back(
                combo_taylor(spec.d, CycleCombo::single(c2), beta, 1, vars, cfg.n_max, cfg.window));
            if (over_budget())
                break;
        }
        if (s1.size() != betas.size()) {
            out.jets_scanned = false;
            out.skipped = "jet series budget exceeded";
        } else {
            for (auto [r1, r2] : transversal_pairs) {
                if (over_budget()) {
                    out.skipped = "jet scan budget exceeded";
                    break;
                }
                JetIdeal J;
                J.vars = vars;
                J.order = cfg.n_max;
                J.generators.reserve(betas.size());
                for (size_t b = 0; b < betas.size(); ++b) {
                    TruncatedSeries g = s1[b];
                    g.scale(Rat(r1));
                    TruncatedSeries g2 = s2[b];
                    g2.scale(Rat(r2));
                    g += g2;
                    J.generators.push_back(std::move(g));
                }
                // Series/periods consistency: the linear truncation must cut
                // out the same codimension as the period matrix.
                CycloMatrix pm = add_scaled(p1.m, Rat(r1), p2.m, Rat(r2));
                int expected = rank(pm.select_columns(ds.istar_cols), cfg.rank_mode);
                JetAnalysis an = analyze_jets(J);
                if (an.linear_codim != expected)
                    throw std::logic_error("analyze_spec: series linear rank != period rank");
                out.jet_pairs.push_back({r1, r2, an.first_failure});
                if (an.first_failure > 0 &&
                    (out.first_fail_column == 0 || an.first_failure < out.first_fail_column))
                    out.first_fail_column = an.first_failure;
            }
        }
    }
    return out;
}

std::vector<SpecOutcome> run_scan(const ScanConfig& cfg, const ScanTask& task) {
    std::vector<PencilSpec> specs;
    if (cfg.only)
        specs.push_back(*cfg.only);
    else
        specs = enumerate_pencil_specs(cfg.d);
    int n = static_cast<int>(specs.size());
    if (cfg.limit > 0 && cfg.limit < n)
        n = cfg.limit;

    Checkpoint ckpt(cfg.checkpoint, cfg.config_key());
    std::vector<SpecOutcome> out(n);
    std::vector<char> done(n, 0);
    if (ckpt.enabled()) {
        for (int i = 0; i < n; ++i) {
            auto it = ckpt.loaded().find(specs[i].str());
            if (it != ckpt.loaded().end()) {
                out[i] = SpecOutcome::from_json(cfg.d, it->second);
                done[i] = 1;
            }
        }
    }
    parallel_for(n, cfg.jobs, [&](int i) {
        if (done[i])
            return;
        out[i] = analyze_spec(specs[i], cfg, task);
        if (ckpt.enabled())
            ckpt.append(specs[i].str(), out[i].to_json());
    });
    return out;
}

TableRow summarize(int d, const std::vector<SpecOutcome>& outcomes, const ScanTask& task) {
    TableRow row;
    row.d = d;
    row.count = static_cast<int>(outcomes.size());
    bool nt_complete = task.nt;
    bool jets_complete = task.jets;
    for (const SpecOutcome& o : outcomes) {
        switch (o.tangent.cls) {
        case PencilClass::General:
            ++row.general;
            break;
        case PencilClass::Inclusion:
            ++row.inclusion;
            break;
        case PencilClass::Candidate:
            ++row.candidate;
            break;
        }
        if (o.nt_scanned && !o.nt_pairs.empty())
            ++row.nt_specs;
        if (task.nt && !o.nt_scanned)
            nt_complete = false;
        if (task.jets && o.tangent.cls == PencilClass::Candidate && !o.jets_scanned)
            jets_complete = false;
        if (o.jets_scanned && o.first_fail_column > 0)
            ++row.first_fail_hist[o.first_fail_column];
    }
    if (task.nt && !nt_complete)
        row.skipped_cells.push_back("NT (budget)");
    if (!task.nt)
        row.skipped_cells.push_back("NT (not requested)");
    if (task.jets && !jets_complete)
        row.skipped_cells.push_back("N-columns (budget)");
    if (!task.jets)
        row.skipped_cells.push_back("N-columns (not requested)");
    return row;
}

Json outcomes_to_json(const ScanConfig& cfg, const ScanTask& task,
                      const std::vector<SpecOutcome>& outcomes) {
    Json j;
    j["format"] = "fermatnl/scan-v1";
    j["d"] = cfg.d;
    j["h20"] = hodge_number_h20(cfg.d);
    j["rank_mode"] = rank_mode_name(cfg.rank_mode);
    j["config"] = cfg.config_key();
    Json items = Json::array();
    for (const SpecOutcome& o : outcomes)
        items.push_back(o.to_json());
    j["items"] = std::move(items);
    TableRow row = summarize(cfg.d, outcomes, task);
    Json sum;
    sum["count"] = row.count;
    sum["general"] = row.general;
    sum["inclusion"] = row.inclusion;
    sum["candidate"] = row.candidate;
    sum["nt_specs"] = row.nt_specs;
    Json hist = Json::object();
    for (auto [k, v] : row.first_fail_hist)
        hist[std::to_string(k)] = v;
    sum["first_fail_hist"] = std::move(hist);
    Json skipped = Json::array();
    for (const std::string& s : row.skipped_cells)
        skipped.push_back(s);
    sum["skipped_cells"] = std::move(skipped);
    j["summary"] = std::move(sum);
    return j;
}

std::vector<LegacyItem> outcomes_to_legacy(const std::vector<SpecOutcome>& outcomes,
                                           const std::string& pairs_from) {
    std::vector<LegacyItem> items;
    for (const SpecOutcome& o : outcomes) {
        LegacyItem it;
        it.spec = o.spec;
        it.a = {o.tangent.a1, o.tangent.a2, o.tangent.a3, o.tangent.a4};
        if (pairs_from == "nt" && o.nt_scanned) {
            it.pairs = o.nt_pairs;
        } else if (pairs_from == "smooth" && o.jets_scanned) {
            it.pairs.emplace();
            for (const auto& p : o.jet_pairs)
                if (p[2] == 0)
                    it.pairs->emplace_back(p[0], p[1]);
        }
        items.push_back(std::move(it));
    }
    return items;
}

std::string table_text(const TableRow& row) {
    std::ostringstream out;
    out << "d=" << row.d << " #=" << row.count << " General=" << row.general
        << " Inclusion=" << row.inclusion << " Candidate=" << row.candidate;
    for (auto [n, c] : row.first_fail_hist)
        out << " N=" << n << ":" << c;
    out << " NT=" << row.nt_specs;
    if (!row.skipped_cells.empty()) {
        out << " [skipped:";
        for (const std::string& s : row.skipped_cells)
            out << " " << s << ";";
        out << "]";
    }
    out << "\n";
    return out.str();
}

} // namespace fnl
