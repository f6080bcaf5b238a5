// Command-line front end: loads poset/map/complex fixtures from JSON,
// runs the distance computations and emits report JSON with certificates.
//
// Exit codes: 0 success, 1 input error, 2 budget exhaustion (an
// "at_least" value in the report).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homdist/cohomology.hpp"
#include "homdist/distance.hpp"
#include "homdist/fixtures.hpp"
#include "homdist/json_io.hpp"
#include "homdist/simplicial.hpp"

using namespace homdist;

namespace {

struct CommonFlags {
    std::uint64_t budget_ideals = SearchBudgets{}.ideals;
    std::uint64_t budget_bfs = SearchBudgets{}.bfs;
    std::uint64_t budget_cover = SearchBudgets{}.cover;
    bool no_cores = false;
    int threads = 1;
    std::string out_path;
    std::vector<std::string> poset_bindings;    // name=file
    std::vector<std::string> complex_bindings;  // name=file

    SearchBudgets budgets() const {
        double scale = 1.0;
        if (const char* env = std::getenv("HOMDIST_BUDGET_SCALE")) scale = std::atof(env);
        if (scale <= 0) scale = 1.0;
        auto s = [&](std::uint64_t v) { return std::uint64_t(double(v) * scale); };
        return SearchBudgets{s(budget_ideals), s(budget_bfs), s(budget_cover)};
    }
    SdBudgets sd_budgets() const {
        auto b = budgets();
        return SdBudgets{b.ideals, b.bfs, b.cover};
    }
    DistanceOptions options() const { return DistanceOptions{!no_cores, true, threads}; }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--budget-ideals", flags.budget_ideals, "lattice nodes visited in the descent");
    cmd->add_option("--budget-bfs", flags.budget_bfs, "maps visited per homotopy check");
    cmd->add_option("--budget-cover", flags.budget_cover, "set-cover search nodes");
    cmd->add_flag("--no-cores", flags.no_cores, "disable core reduction (for oracle comparisons)");
    cmd->add_option("--threads", flags.threads, "parallel domain checks");
    cmd->add_option("--out", flags.out_path, "write the report here instead of stdout");
    cmd->add_option("--poset", flags.poset_bindings, "bind NAME=FILE for maps that name their spaces");
    cmd->add_option("--complex", flags.complex_bindings, "bind NAME=FILE for simplicial maps");
}

Workspace load_workspace(const CommonFlags& flags) {
    Workspace ws;
    for (const auto& binding : flags.poset_bindings) {
        auto eq = binding.find('=');
        if (eq == std::string::npos) throw Error(Err::Parse, "--poset expects NAME=FILE");
        ws.posets[binding.substr(0, eq)] = poset_from_json(load_json_file(binding.substr(eq + 1)));
    }
    for (const auto& binding : flags.complex_bindings) {
        auto eq = binding.find('=');
        if (eq == std::string::npos) throw Error(Err::Parse, "--complex expects NAME=FILE");
        ws.complexes[binding.substr(0, eq)] =
            complex_from_json(load_json_file(binding.substr(eq + 1)));
    }
    return ws;
}

int emit(const CommonFlags& flags, json report, bool budget_exhausted) {
    if (!flags.out_path.empty()) {
        std::ofstream out(flags.out_path);
        if (!out) {
            std::cerr << json{{"error", flags.out_path + ": cannot write"}}.dump() << "\n";
            return 1;
        }
        out << report.dump(2) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return budget_exhausted ? 2 : 0;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     t0)
            .count();
    }
};

int run_distance_like(const CommonFlags& flags, const std::string& quantity,
                      const DistanceValue& v, Timer& timer) {
    json report = distance_value_to_json(v, quantity);
    report["wall_ms"] = timer.ms();
    return emit(flags, std::move(report), v.kind == DistanceValue::Kind::UnknownAtLeast);
}

int run_sd_like(const CommonFlags& flags, const std::string& quantity, const SdValue& v,
                const SimplicialComplexData& K, Timer& timer) {
    json report = sd_value_to_json(v, quantity);
    report["certificate"] = v.certificate ? sd_certificate_to_json(*v.certificate, K) : json(nullptr);
    report["wall_ms"] = timer.ms();
    return emit(flags, std::move(report), v.kind == SdValue::Kind::UnknownAtLeast);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homotopic and contiguity distances on finite spaces"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::vector<std::string> map_files;
    std::string space_file, cert_file, basepoint;
    int m_fold = 3;
    int degree_budget = 32;

    auto* cmd_distance = app.add_subcommand("distance", "homotopic distance D of two or more maps");
    cmd_distance->add_option("maps", map_files, "map JSON files (same domain and codomain)")
        ->required()
        ->expected(-2);
    add_common(cmd_distance, flags);

    auto* cmd_cat = app.add_subcommand("cat", "LS-category of a space");
    cmd_cat->add_option("space", space_file, "poset JSON file")->required();
    cmd_cat->add_option("--basepoint", basepoint, "basepoint element (default: first)");
    add_common(cmd_cat, flags);

    auto* cmd_cat_incl = app.add_subcommand("cat-inclusions", "cat via the two axis inclusions");
    cmd_cat_incl->add_option("space", space_file)->required();
    cmd_cat_incl->add_option("--basepoint", basepoint);
    add_common(cmd_cat_incl, flags);

    auto* cmd_gcat = app.add_subcommand("gcat", "geometric category of a space");
    cmd_gcat->add_option("space", space_file)->required();
    add_common(cmd_gcat, flags);

    auto* cmd_tc = app.add_subcommand("tc", "topological complexity of a space");
    cmd_tc->add_option("space", space_file)->required();
    add_common(cmd_tc, flags);

    auto* cmd_tcm = app.add_subcommand("tcm", "higher topological complexity TC_m");
    cmd_tcm->add_option("space", space_file)->required();
    cmd_tcm->add_option("--m", m_fold, "number of projections (default 3)");
    add_common(cmd_tcm, flags);

    auto* cmd_lcp = app.add_subcommand("lcp", "cup-length lower bound from image(f* - g*)");
    cmd_lcp->add_option("maps", map_files)->required()->expected(2);
    cmd_lcp->add_option("--degree-budget", degree_budget, "largest factor degree used");
    add_common(cmd_lcp, flags);

    auto* cmd_sd = app.add_subcommand("sd", "contiguity distance of simplicial maps");
    cmd_sd->add_option("maps", map_files, "simplicial map JSON files")->required()->expected(-2);
    add_common(cmd_sd, flags);

    auto* cmd_scat = app.add_subcommand("scat", "simplicial LS-category of a complex");
    cmd_scat->add_option("complex", space_file, "complex JSON file")->required();
    add_common(cmd_scat, flags);

    auto* cmd_dtc = app.add_subcommand("dtc", "discrete topological complexity of a complex");
    cmd_dtc->add_option("complex", space_file)->required();
    add_common(cmd_dtc, flags);

    auto* cmd_core = app.add_subcommand("core", "beat-point core of a space");
    cmd_core->add_option("space", space_file)->required();
    add_common(cmd_core, flags);

    auto* cmd_verify = app.add_subcommand("verify", "re-check a distance certificate");
    cmd_verify->add_option("--cert", cert_file, "certificate JSON file")->required();
    cmd_verify->add_option("maps", map_files, "the maps the certificate is about")
        ->required()
        ->expected(-2);
    add_common(cmd_verify, flags);

    auto* cmd_triangle = app.add_subcommand(
        "triangle-example", "triangle-inequality counterexample on the bundled torus model");
    add_common(cmd_triangle, flags);

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    try {
        Workspace ws = load_workspace(flags);
        const SearchBudgets budgets = flags.budgets();
        const DistanceOptions opts = flags.options();

        if (cmd_distance->parsed()) {
            std::vector<OrderMap> maps;
            for (const auto& f : map_files) maps.push_back(map_from_json(load_json_file(f), ws));
            return run_distance_like(flags, "distance", distance(maps, budgets, opts), timer);
        }
        if (cmd_cat->parsed() || cmd_cat_incl->parsed()) {
            PosetPtr X = poset_from_json(load_json_file(space_file));
            int bp = basepoint.empty() ? 0 : X->index_of(basepoint);
            DistanceValue v = cmd_cat->parsed() ? cat(X, bp, budgets, opts)
                                                : cat_via_inclusions(X, bp, budgets, opts);
            return run_distance_like(flags, cmd_cat->parsed() ? "cat" : "cat-inclusions", v, timer);
        }
        if (cmd_gcat->parsed()) {
            PosetPtr X = poset_from_json(load_json_file(space_file));
            return run_distance_like(flags, "gcat", gcat(X, budgets, opts), timer);
        }
        if (cmd_tc->parsed()) {
            PosetPtr X = poset_from_json(load_json_file(space_file));
            return run_distance_like(flags, "tc", tc(X, budgets, opts), timer);
        }
        if (cmd_tcm->parsed()) {
            PosetPtr X = poset_from_json(load_json_file(space_file));
            return run_distance_like(flags, "tcm", tc_m(X, m_fold, budgets, opts), timer);
        }
        if (cmd_lcp->parsed()) {
            OrderMap f = map_from_json(load_json_file(map_files[0]), ws);
            OrderMap g = map_from_json(load_json_file(map_files[1]), ws);
            LcpResult r = lcp_J(f, g, degree_budget);
            json report;
            report["quantity"] = "lcp";
            report["value"] = r.value;
            report["capped"] = r.capped;
            report["witness_degrees"] = r.witness_degrees;
            report["budgets_hit"] = json::array();
            report["wall_ms"] = timer.ms();
            return emit(flags, std::move(report), false);
        }
        if (cmd_sd->parsed()) {
            std::vector<SimplicialMapData> maps;
            for (const auto& f : map_files) maps.push_back(smap_from_json(load_json_file(f), ws));
            SdValue v = sd(maps, flags.sd_budgets(), true, flags.threads);
            return run_sd_like(flags, "sd", v, *maps[0].dom(), timer);
        }
        if (cmd_scat->parsed() || cmd_dtc->parsed()) {
            ComplexPtr K = complex_from_json(load_json_file(space_file));
            SdValue v = cmd_scat->parsed() ? scat(K, flags.sd_budgets())
                                           : dtc(K, flags.sd_budgets());
            const SimplicialComplexData& dom_complex =
                cmd_scat->parsed() ? *K : *categorical_product(*K, *K).complex;
            return run_sd_like(flags, cmd_scat->parsed() ? "scat" : "dtc", v, dom_complex, timer);
        }
        if (cmd_core->parsed()) {
            PosetPtr X = poset_from_json(load_json_file(space_file));
            CoreData cd = core(X);
            json report;
            report["quantity"] = "core";
            report["core"] = poset_to_json(*cd.core);
            report["inclusion"] = map_to_json(cd.inclusion);
            report["retraction"] = map_to_json(cd.retraction);
            json removals = json::array();
            for (const auto& r : cd.removal_log)
                removals.push_back(json{{"element", X->name_of(r.element)},
                                        {"kind", r.up_beat ? "up-beat" : "down-beat"},
                                        {"witness", X->name_of(r.witness)}});
            report["removals"] = std::move(removals);
            report["wall_ms"] = timer.ms();
            return emit(flags, std::move(report), false);
        }
        if (cmd_verify->parsed()) {
            std::vector<OrderMap> maps;
            for (const auto& f : map_files) maps.push_back(map_from_json(load_json_file(f), ws));
            std::string reason;
            bool ok = verify_certificate_json(maps, load_json_file(cert_file), &reason);
            json report;
            report["quantity"] = "verify";
            report["valid"] = ok;
            report["reason"] = ok ? json(nullptr) : json(reason);
            report["wall_ms"] = timer.ms();
            return emit(flags, std::move(report), false);
        }
        if (cmd_triangle->parsed()) {
            OrderMap f = fixtures::torus_f();
            OrderMap g = fixtures::torus_g();
            OrderMap h = fixtures::torus_h();
            DistanceValue d_fg = distance({f, g}, budgets, opts);
            DistanceValue d_gh = distance({g, h}, budgets, opts);
            DistanceValue d_fh = distance({f, h}, budgets, opts);
            json report;
            report["quantity"] = "triangle-example";
            report["d_fg"] = distance_value_to_json(d_fg, "distance");
            report["d_gh"] = distance_value_to_json(d_gh, "distance");
            report["d_fh"] = distance_value_to_json(d_fh, "distance");
            bool all_finite = d_fg.is_finite() && d_gh.is_finite() && d_fh.is_finite();
            // the violation holds already when the lower bound beats the sum
            int fh_lower = d_fh.is_finite() ? d_fh.value
                                            : (d_fh.kind == DistanceValue::Kind::UnknownAtLeast
                                                   ? d_fh.value
                                                   : 0);
            bool violated = d_fg.is_finite() && d_gh.is_finite() &&
                            d_fh.kind != DistanceValue::Kind::Infinite &&
                            fh_lower > d_fg.value + d_gh.value;
            report["triangle_violated"] = violated;
            report["wall_ms"] = timer.ms();
            bool budget = !all_finite && (d_fg.kind == DistanceValue::Kind::UnknownAtLeast ||
                                          d_gh.kind == DistanceValue::Kind::UnknownAtLeast ||
                                          d_fh.kind == DistanceValue::Kind::UnknownAtLeast);
            return emit(flags, std::move(report), budget);
        }
        std::cerr << json{{"error", "no subcommand"}}.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
