// Command-line driver: enumerate pencil specs, classify them, compute
// deformation spaces, run transversality and jet-smoothness scans, and
// reproduce the per-degree summary tables.

#include "fnl/scan.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace fnl;

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

RankMode parse_mode(const std::string& s) {
    if (s == "exact")
        return RankMode::Exact;
    if (s == "certified")
        return RankMode::Certified;
    if (s == "fast")
        return RankMode::Fast;
    throw CLI::ValidationError("--rank-mode must be exact|certified|fast");
}

PencilSpec parse_spec(int d, const std::string& s) {
    std::vector<int> v;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            v.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (v.size() != 6)
        throw CLI::ValidationError("--spec needs d1,d2,s1,s2,m1,m2");
    PencilSpec spec{d, v[0], v[1], v[2], v[3], v[4], v[5]};
    if (!spec.valid())
        throw CLI::ValidationError("--spec violates the parameter constraints");
    return spec;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
}

int exit_code(const std::vector<SpecOutcome>& outcomes) {
    for (const SpecOutcome& o : outcomes)
        if (!o.skipped.empty())
            return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noether-Lefschetz pencil toolkit for Fermat surfaces"};
    app.require_subcommand(1);

    int d = 0;
    std::string rank_mode = "certified";
    std::string spec_str;
    std::string out_path;
    std::string checkpoint;
    std::string cache_dir = env_or("FERMATNL_CACHE", "");
    int jobs = std::stoi(env_or("FERMATNL_JOBS", "1"));
    int r1_max = 10, r2_max = 10;
    int n_max = 3;
    int limit = 0;
    double budget = 0.0;
    bool no_stabilize = false;

    auto add_common = [&](CLI::App* cmd, bool with_grid, bool with_nmax) {
        cmd->add_option("--d", d, "surface degree")->required();
        cmd->add_option("--rank-mode", rank_mode, "exact|certified|fast");
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--cache", cache_dir, "period-matrix cache directory");
        cmd->add_option("--jobs", jobs, "worker threads");
        cmd->add_option("--checkpoint", checkpoint, "resumable JSONL checkpoint file");
        cmd->add_option("--limit", limit, "process only the first N specs");
        cmd->add_option("--budget", budget, "per-spec wall clock ceiling in seconds");
        cmd->add_flag("--no-stabilize", no_stabilize, "skip the generic-r verification");
        if (with_grid) {
            cmd->add_option("--r1-max", r1_max, "grid bound for r1");
            cmd->add_option("--r2-max", r2_max, "grid bound for |r2|");
        }
        if (with_nmax)
            cmd->add_option("--n-max", n_max, "jet order bound");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list pencil specs and the count");
    enumerate->add_option("--d", d, "surface degree")->required();
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* classify = app.add_subcommand("classify", "codimensions and classification");
    add_common(classify, false, false);
    classify->add_option("--spec", spec_str, "single spec d1,d2,s1,s2,m1,m2");

    CLI::App* deform = app.add_subcommand("deform", "reduced deformation space of one spec");
    add_common(deform, false, false);
    deform->add_option("--spec", spec_str, "spec d1,d2,s1,s2,m1,m2")->required();

    CLI::App* nt = app.add_subcommand("nt", "non-transversal pairs over the grid");
    add_common(nt, true, false);
    nt->add_option("--spec", spec_str, "single spec d1,d2,s1,s2,m1,m2");

    CLI::App* smooth = app.add_subcommand("smooth", "jet smoothness scan");
    add_common(smooth, true, true);
    smooth->add_option("--spec", spec_str, "single spec d1,d2,s1,s2,m1,m2");

    CLI::App* table = app.add_subcommand("table", "reproduce one summary-table row");
    add_common(table, true, true);
    bool rank_only = false;
    table->add_flag("--rank-only", rank_only, "classification cells only (no NT/jets)");

    CLI::App* report = app.add_subcommand("report", "convert a scan JSON document");
    std::string in_path, format = "json", pairs_from = "auto";
    report->add_option("--in", in_path, "input JSON (scan or legacy-v1 document)")->required();
    report->add_option("--format", format, "json|legacy|csv");
    report->add_option("--pairs", pairs_from, "pair list for item [5]: nt|smooth|auto");
    report->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) {
            std::vector<PencilSpec> specs = enumerate_pencil_specs(d);
            std::ostringstream os;
            for (const PencilSpec& s : specs)
                os << s.str() << "\n";
            os << "count " << specs.size() << "\n";
            write_output(out_path, os.str());
            return 0;
        }

        DiskCache cache(cache_dir);
        ScanConfig cfg;
        cfg.d = d;
        cfg.rank_mode = parse_mode(rank_mode);
        cfg.stabilize = !no_stabilize;
        cfg.grid = RGrid{r1_max, r2_max};
        cfg.n_max = n_max;
        cfg.jobs = jobs;
        cfg.cache = cache.enabled() ? &cache : nullptr;
        cfg.checkpoint = checkpoint;
        cfg.limit = limit;
        cfg.budget_seconds = budget;
        if (!spec_str.empty())
            cfg.only = parse_spec(d, spec_str);

        if (*deform) {
            PencilSpec spec = *cfg.only;
            auto [c1, c2] = build_cycles(spec);
            DeformSpace ds = deform_space(c1, c2, spec, cfg.cache);
            Json j;
            j["format"] = "fermatnl/deform-v1";
            j["d"] = d;
            j["spec"] = spec_to_json(spec);
            Json istar = Json::array();
            for (const ExpVec& v : ds.istar)
                istar.push_back(expvec_to_json(v));
            j["istar"] = std::move(istar);
            j["istar_size"] = ds.istar.size();
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }

        ScanTask task;
        if (*classify)
            task = ScanTask{true, false, false};
        else if (*nt)
            task = ScanTask{true, true, false};
        else if (*smooth)
            task = ScanTask{true, true, true};
        else if (*table)
            task = rank_only ? ScanTask{true, false, false} : ScanTask{true, true, true};
        else if (*report) {
            std::ifstream in(in_path);
            if (!in)
                throw std::runtime_error("report: cannot open " + in_path);
            Json j;
            in >> j;
            std::vector<LegacyItem> items;
            int dd = 0;
            if (j.at("format") == "fermatnl/legacy-v1") {
                std::tie(dd, items) = legacy_from_json(j);
            } else {
                dd = j.at("d").get<int>();
                std::vector<SpecOutcome> outcomes;
                for (const auto& o : j.at("items"))
                    outcomes.push_back(SpecOutcome::from_json(dd, o));
                std::string from = pairs_from;
                if (from == "auto")
                    from = !outcomes.empty() && outcomes.front().jets_scanned ? "smooth" : "nt";
                items = outcomes_to_legacy(outcomes, from);
            }
            if (format == "legacy")
                write_output(out_path, legacy_write(items));
            else if (format == "csv")
                write_output(out_path, csv_write(items));
            else
                write_output(out_path, legacy_to_json(dd, items).dump(2) + "\n");
            return 0;
        }

        std::vector<SpecOutcome> outcomes = run_scan(cfg, task);
        std::ostringstream os;
        os << outcomes_to_json(cfg, task, outcomes).dump(2) << "\n";
        if (*table)
            os << table_text(summarize(cfg.d, outcomes, task));
        write_output(out_path, os.str());
        return exit_code(outcomes);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
