#include <atomic>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "charlab/charlab.hpp"

namespace {

using namespace charlab;

struct CliConfig {
    std::size_t max_order = 2048;
    long long iso_cap = 10000000;
    std::size_t lattice_cap = 10000;
    OutputFormat output = OutputFormat::text;
    int parallelism = 1;
};

int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) return 1;
    return static_cast<int>(std::min(hc, 4u));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError(0, "cannot open output file '" + out_path + "'");
    out << text;
}

GroupRecipe resolve_recipe(const std::string& recipe_str, const std::string& file_str) {
    if (!recipe_str.empty()) return parse_recipe_string(recipe_str);
    GroupRecipe r = load_group_file(file_str);
    if (r.name == "file-group")
        r.name = std::filesystem::path(file_str).stem().string();
    return r;
}

// Bundled groups that satisfy the semi-extraspecial predicate; used as
// isoclinism references by the p-group verifiers.
std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> semi_es_references(
    const std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>>& built) {
    std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> refs;
    for (const auto& [name, g] : built)
        if (predicate_semi_extraspecial(*g)) refs.emplace_back(name, g);
    return refs;
}

std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> build_bundled(
    std::size_t max_order) {
    std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> out;
    for (const auto& r : bundled_catalog())
        out.emplace_back(r.name, std::make_shared<FiniteGroup>(build(r, max_order)));
    return out;
}

// One character value nudged by +1: exercises the witness paths without
// shipping a wrong table.
std::shared_ptr<const CharacterTable> inject_fault(const CharacterTable& t) {
    CharacterTable bad = t;
    auto& v = bad.rows.back().values.back();
    v = v + CyclotomicValue::integer(bad.exponent, 1);
    return std::make_shared<const CharacterTable>(std::move(bad));
}

VerifierJob make_job(const std::string& name, std::shared_ptr<const CharacterTable> table,
                     const CliConfig& cfg,
                     std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> refs) {
    VerifierJob job;
    job.group_name = name;
    job.table = std::move(table);
    job.iso_cap = cfg.iso_cap;
    job.lattice_cap = cfg.lattice_cap;
    job.semi_es_refs = std::move(refs);
    return job;
}

std::string format_value(const CyclotomicValue& v) {
    std::string s = v.to_string();
    if (s.find('z') == std::string::npos) return s;
    auto a = v.approx();
    std::ostringstream out;
    out << s << " (" << std::fixed << std::setprecision(4) << a.real();
    if (std::abs(a.imag()) >= 5e-5) out << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i";
    out << ")";
    return out.str();
}

int cmd_table(const GroupRecipe& recipe, const CliConfig& cfg, const std::string& out_path) {
    FiniteGroup g = build(recipe, cfg.max_order);
    auto t = character_table(g);
    std::ostringstream out;
    out << "group: " << recipe.name << "  order: " << g.order()
        << "  classes: " << t->classes.num_classes << "  exponent: " << t->exponent
        << "  prime: " << t->prime << "\n";
    out << "class sizes:";
    for (int c = 0; c < t->classes.num_classes; ++c)
        out << " " << t->classes.members[static_cast<std::size_t>(c)].size();
    out << "\nclass reps: ";
    for (int c = 0; c < t->classes.num_classes; ++c)
        out << (c ? "  " : "")
            << element_label(*t->group, t->classes.representative[static_cast<std::size_t>(c)]);
    out << "\n";
    for (std::size_t r = 0; r < t->rows.size(); ++r) {
        out << "chi_" << r << "  degree " << t->rows[r].degree << ": ";
        for (std::size_t c = 0; c < t->rows[r].values.size(); ++c)
            out << (c ? ", " : "") << format_value(t->rows[r].values[c]);
        out << "\n";
    }
    emit(out.str(), out_path);
    return 0;
}

int cmd_analyze(const GroupRecipe& recipe, const CliConfig& cfg, const std::string& out_path) {
    FiniteGroup g = build(recipe, cfg.max_order);
    auto t = character_table(g);
    std::ostringstream out;
    out << "group: " << recipe.name << "\n";
    out << "order: " << g.order() << "\n";
    out << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
    out << "exponent: " << g.exponent() << "\n";
    SubgroupSet z = center(g);
    SubgroupSet derived = commutator_subgroup(g);
    out << "center: " << subgroup_label(g, z) << "\n";
    out << "derived: " << subgroup_label(g, derived) << "\n";
    int nc = nilpotency_class(g);
    out << "nilpotency class: " << (nc < 0 ? std::string("not nilpotent") : std::to_string(nc))
        << "\n";
    auto cds = degree_set(*t);
    out << "degrees:";
    for (long long d : cds) out << " " << d;
    out << "\n";
    auto nl = nonlinear_rows(*t);
    out << "nonlinear characters: " << nl.size() << "\n";
    if (g.is_abelian()) {
        out << "gvz: not applicable (abelian)\n";
    } else {
        GvzResult gvz = is_gvz(*t);
        out << "gvz: " << (gvz.gvz ? "yes" : "no") << "\n";
        for (const auto& ev : gvz.per_row) {
            out << "  chi_" << ev.row << ": degree "
                << t->rows[static_cast<std::size_t>(ev.row)].degree << ", |Z(chi)| = "
                << center_of(*t, ev.row).order()
                << (ev.vanishes_off_center ? ", vanishes off Z(chi)"
                                           : ", nonzero off Z(chi)");
            if (!ev.vanishes_off_center && ev.witness_class >= 0)
                out << " at class of "
                    << element_label(*t->group,
                                     t->classes.representative[static_cast<std::size_t>(
                                         ev.witness_class)]);
            out << "\n";
        }
    }
    emit(out.str(), out_path);
    return 0;
}

int cmd_verify(const GroupRecipe& recipe, const CliConfig& cfg,
               const std::vector<std::string>& theorem_filter, bool fault,
               const std::string& out_path) {
    FiniteGroup g = build(recipe, cfg.max_order);
    auto table = character_table(g);
    if (fault) table = inject_fault(*table);
    auto refs = semi_es_references(build_bundled(cfg.max_order));
    VerifierJob job = make_job(recipe.name, table, cfg, std::move(refs));
    std::vector<VerificationReport> reports = run_all(job);

    if (!theorem_filter.empty()) {
        std::vector<VerificationReport> keep;
        for (const auto& want : theorem_filter) {
            auto id = theorem_id_from_name(want);
            if (!id) throw BadRecipe("unknown theorem id '" + want + "'");
            for (const auto& r : reports)
                if (r.theorem_id == *id) keep.push_back(r);
        }
        reports = std::move(keep);
    }
    emit(write_report(reports, cfg.output), out_path);
    return reports_all_pass(reports) ? 0 : 1;
}

struct ScanItem {
    GroupSummary summary;
    std::vector<VerificationReport> reports;
    int severity = 0;
};

ScanItem process_group(const std::string& name, std::shared_ptr<const FiniteGroup> g,
                       const CliConfig& cfg,
                       const std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>>&
                           refs) {
    ScanItem item;
    item.summary.name = name;
    try {
        item.summary.order = g->order();
        auto table = character_table(*g);
        item.summary.degrees = degree_set(*table);
        item.summary.two_degrees = item.summary.degrees.size() == 2;
        item.summary.gvz = !g->is_abelian() && is_gvz(*table).gvz;
        VerifierJob job = make_job(name, table, cfg, refs);
        item.reports = run_all(job);
        for (const auto& r : item.reports) {
            std::string status = !r.hypotheses_met ? "skip" : (*r.conclusion_holds ? "pass" : "FAIL");
            if (r.theorem_id == TheoremId::T_equivalences) item.summary.t33_status = status;
            if (r.theorem_id == TheoremId::T_pgroup) item.summary.t34_status = status;
        }
        if (!reports_all_pass(item.reports)) item.severity = 1;
    } catch (const OrderExceeded& e) {
        item.summary.error = e.what();
        item.severity = 3;
    } catch (const LatticeTooLarge& e) {
        item.summary.error = e.what();
        item.severity = 3;
    } catch (const SearchBudgetExceeded& e) {
        item.summary.error = e.what();
        item.severity = 3;
    } catch (const CapExceeded& e) {
        item.summary.error = e.what();
        item.severity = 3;
    } catch (const Error& e) {
        item.summary.error = e.what();
        item.severity = 2;
    }
    return item;
}

int cmd_scan(bool bundled, const std::string& dir, const CliConfig& cfg,
             const std::string& out_path) {
    std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> groups;
    std::vector<ScanItem> prefailed;
    if (bundled) {
        groups = build_bundled(cfg.max_order);
    } else {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".grp")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            ScanItem failed;
            failed.summary.name = f.stem().string();
            try {
                GroupRecipe r = load_group_file(f.string());
                if (r.name == "file-group") r.name = f.stem().string();
                groups.emplace_back(r.name, std::make_shared<FiniteGroup>(build(r, cfg.max_order)));
                continue;
            } catch (const OrderExceeded& e) {
                failed.summary.error = e.what();
                failed.severity = 3;
            } catch (const Error& e) {
                failed.summary.error = e.what();
                failed.severity = 2;
            }
            prefailed.push_back(std::move(failed));
        }
    }
    auto refs = semi_es_references(bundled ? groups : build_bundled(cfg.max_order));

    std::vector<ScanItem> items(groups.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= groups.size()) break;
            items[i] = process_group(groups[i].first, groups[i].second, cfg, refs);
        }
    };
    int jobs = std::max(1, std::min<int>(cfg.parallelism, static_cast<int>(groups.size())));
    if (jobs <= 1 || groups.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (auto& item : prefailed) items.push_back(std::move(item));
    std::sort(items.begin(), items.end(), [](const ScanItem& a, const ScanItem& b) {
        return a.summary.name < b.summary.name;
    });
    std::vector<GroupSummary> summaries;
    std::vector<VerificationReport> reports;
    int severity = 0;
    for (auto& item : items) {
        severity = std::max(severity, item.severity);
        summaries.push_back(item.summary);
        for (auto& r : item.reports) reports.push_back(std::move(r));
    }
    // already grouped by name; order within a group is the verifier enum order
    emit(write_report(reports, cfg.output, &summaries), out_path);
    return severity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"charlab: exact character tables and structure verification for finite groups"};
    app.require_subcommand(1);

    CliConfig cfg;
    cfg.parallelism = default_jobs();
    if (const char* env = std::getenv("CHARLAB_MAX_ORDER")) {
        try {
            long long v = std::stoll(env);
            if (v >= 1) cfg.max_order = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed CHARLAB_MAX_ORDER '" << env << "'\n";
        }
    }

    std::string recipe_str, file_str, out_path, output_str = "text", scan_dir;
    std::vector<std::string> theorem_filter;
    bool fault = false, bundled = false;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--output", output_str, "output format: text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
        sub->add_option("--max-order", cfg.max_order, "largest group order to build");
        sub->add_option("--iso-cap", cfg.iso_cap, "node budget for isomorphism searches");
        sub->add_option("--lattice-cap", cfg.lattice_cap, "cap on enumerated normal subgroups");
        if (needs_input) {
            auto* r = sub->add_option("--recipe", recipe_str,
                                      "recipe string or bundled name, e.g. dihedral:8 or D8");
            auto* f = sub->add_option("--file", file_str, "path to a .grp group file");
            r->excludes(f);
        }
    };

    auto* t_cmd = app.add_subcommand("table", "print the character table of one group");
    add_common(t_cmd, true);
    auto* a_cmd = app.add_subcommand("analyze", "print structure and GVZ facts for one group");
    add_common(a_cmd, true);
    auto* v_cmd = app.add_subcommand("verify", "run the theorem verifiers on one group");
    add_common(v_cmd, true);
    v_cmd->add_option("--theorem", theorem_filter, "restrict to these theorem ids");
    v_cmd->add_flag("--inject-fault", fault)->group("");  // test hook, hidden from help
    auto* s_cmd = app.add_subcommand("scan", "verify a whole catalog of groups");
    add_common(s_cmd, false);
    s_cmd->add_flag("--bundled", bundled, "scan the built-in catalog");
    s_cmd->add_option("--dir", scan_dir, "scan all .grp files in this directory");
    s_cmd->add_option("--jobs", cfg.parallelism, "worker thread count");

    CLI11_PARSE(app, argc, argv);
    cfg.output = output_str == "structured" ? OutputFormat::structured : OutputFormat::text;
    if (cfg.parallelism < 1) cfg.parallelism = 1;

    try {
        if (t_cmd->parsed() || a_cmd->parsed() || v_cmd->parsed()) {
            if (recipe_str.empty() && file_str.empty()) {
                std::cerr << "error: provide --recipe or --file\n";
                return 2;
            }
            GroupRecipe recipe = resolve_recipe(recipe_str, file_str);
            if (t_cmd->parsed()) return cmd_table(recipe, cfg, out_path);
            if (a_cmd->parsed()) return cmd_analyze(recipe, cfg, out_path);
            return cmd_verify(recipe, cfg, theorem_filter, fault, out_path);
        }
        if (!bundled && scan_dir.empty()) {
            std::cerr << "error: provide --bundled or --dir\n";
            return 2;
        }
        return cmd_scan(bundled, scan_dir, cfg, out_path);
    } catch (const OrderExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const LatticeTooLarge& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
