// Command-line front end: amplitudes, distances, the stability catalog,
// Vietoris-Rips ingestion, generators and file inspection.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amp/amplitude.hpp"
#include "amp/distance.hpp"
#include "amp/generators.hpp"
#include "amp/io.hpp"
#include "amp/rips.hpp"
#include "amp/stability.hpp"

using namespace amp;
using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt12(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

bool is_json_file(const std::string& path) {
    return path.size() > 5 && path.substr(path.size() - 5) == ".json";
}

Content parse_content(const std::string& name) {
    if (name == "lebesgue") return Content::Lebesgue();
    if (name == "counting") return Content::Counting();
    throw CLI::ValidationError("--content", "expected lebesgue or counting");
}

// "ctau:1,2" is a CLI-level evaluator on top of AmplitudeSpec
bool parse_ctau(const std::string& spec, std::vector<int>& axes) {
    if (spec.rfind("ctau:", 0) != 0) return false;
    std::string rest = spec.substr(5);
    std::string tok;
    for (char c : rest + ",") {
        if (c == ',') {
            if (!tok.empty()) axes.push_back(std::stoi(tok) - 1);
            tok.clear();
        } else {
            tok.push_back(c);
        }
    }
    if (axes.empty()) throw CLI::ValidationError("--spec", "ctau needs at least one axis");
    return true;
}

json plan_to_json(const MatchingPlan& plan) {
    json j;
    j["pairs"] = json::array();
    for (auto [i, k] : plan.pairs) j["pairs"].push_back(json::array({i, k}));
    j["unmatched_a"] = plan.unmatched_a;
    j["unmatched_b"] = plan.unmatched_b;
    return j;
}

int cmd_amp(const std::string& input, const std::string& spec_text, const std::string& content_name) {
    std::vector<int> ctau_axes;
    if (parse_ctau(spec_text, ctau_axes)) {
        GridModule m = load_grid_module(input);
        std::cout << fmt12(c_tau_rank(m, Face(ctau_axes), parse_content(content_name))) << "\n";
        return 0;
    }
    AmplitudeSpec spec = AmplitudeSpec::parse(spec_text);
    double v;
    if (is_json_file(input)) {
        v = eval_any(spec, load_grid_module(input));
    } else {
        v = eval_barcode(spec, load_barcode(input));
    }
    std::cout << fmt12(v) << "\n";
    return 0;
}

int cmd_dist(const std::string& file_a, const std::string& file_b, const std::string& metric,
             const std::string& spec_text, const std::string& fold_name, double p,
             const std::string& ground_name, bool require_exact, const std::string& json_out) {
    double value = 0;
    bool exact = true;
    MatchingPlan witness;
    std::string name = metric;

    GroundMetric ground = ground_name == "l1" ? GroundMetric::l1 : GroundMetric::linf;

    if (metric == "lp") {
        AmplitudeSpec spec = AmplitudeSpec::parse(spec_text.empty() ? "hilbert:1" : spec_text);
        if (spec.kind != AmplitudeSpec::Kind::lp_hilbert)
            throw CLI::ValidationError("--spec", "lp metric expects a hilbert:p spec");
        if (is_json_file(file_a))
            value = lp_hilbert_distance(spec.p, load_grid_module(file_a), load_grid_module(file_b),
                                        spec.content);
        else
            value = lp_hilbert_distance(spec.p, load_barcode(file_a), load_barcode(file_b),
                                        spec.content);
    } else if (metric == "abs") {
        AmplitudeSpec spec = AmplitudeSpec::parse(spec_text);
        if (is_json_file(file_a))
            value = abs_distance(spec, load_grid_module(file_a), load_grid_module(file_b));
        else
            value = abs_distance(spec, load_barcode(file_a), load_barcode(file_b));
    } else if (metric == "wasserstein" || metric == "bottleneck") {
        double pw = metric == "bottleneck" ? kInf : p;
        value = wasserstein(pw, load_barcode(file_a), load_barcode(file_b), ground);
    } else if (metric == "interleaving") {
        value = interleaving_1param(load_barcode(file_a), load_barcode(file_b));
    } else if (metric == "path") {
        AmplitudeSpec spec = AmplitudeSpec::parse(spec_text);
        CostFunction f = CostFunction::Sum();
        if (fold_name == "max")
            f = CostFunction::Max();
        else if (fold_name == "lp")
            f = CostFunction::LpFold(p);
        else if (fold_name != "sum")
            throw CLI::ValidationError("--fold", "expected sum, max or lp");
        DistanceResult res = path_metric_1param(spec, load_barcode(file_a), load_barcode(file_b), f);
        value = res.value;
        exact = res.exact;
        witness = res.witness;
    } else {
        throw CLI::ValidationError("--metric", "unknown metric " + metric);
    }

    const char* tag = exact ? "exact" : "upper_bound";
    if (require_exact && !exact) {
        std::cerr << "error: result is an upper bound but --require-exact was given\n";
        return 1;
    }
    std::cout << fmt12(value) << " " << tag << "\n";
    if (!json_out.empty()) {
        json j;
        j["distance_name"] = name;
        j["value"] = std::isinf(value) ? json("inf") : json(value);
        j["exactness"] = tag;
        j["witness_plan"] = plan_to_json(witness);
        std::ofstream out(json_out);
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_check(std::vector<std::string> ids, std::uint64_t seed, int samples, int jobs,
              const std::string& json_out, bool skip_counterexamples) {
    std::vector<std::string> all = catalog_ids();
    std::vector<CheckReport> reports;
    std::vector<std::string> counter_ids = {"RANK-SUB", "SIGMA-MONO", "CTAU-MONO", "MIN-AMP",
                                            "CTAU-DISC"};
    if (ids.empty()) {
        ids = all;
        if (!skip_counterexamples) ids.insert(ids.end(), counter_ids.begin(), counter_ids.end());
    }

    std::vector<CheckReport> counters;
    for (const std::string& id : ids) {
        bool is_counter =
            std::find(counter_ids.begin(), counter_ids.end(), id) != counter_ids.end();
        if (is_counter) {
            if (counters.empty()) counters = run_counterexamples();
            for (const auto& c : counters)
                if (c.id == id) reports.push_back(c);
        } else {
            reports.push_back(run_check(id, seed, samples, jobs));
        }
    }

    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.id << " (" << r.failures << "/"
                  << r.samples << " failures)" << (r.inverted ? " [inverted]" : "") << "\n";
    }
    if (!json_out.empty()) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(json::parse(r.to_json()));
        std::ofstream out(json_out);
        out << arr.dump(2) << "\n";
    }
    if (!all_pass) {  // machine-readable failure report on stdout
        json failing = json::array();
        for (const auto& r : reports)
            if (!r.passed) failing.push_back(json::parse(r.to_json()));
        std::cout << failing.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_rips(const std::string& path, int maxdim, double max_radius, bool matrix_mode,
             int density_col, int degree, std::vector<double> density_bps,
             std::vector<double> radius_bps) {
    DistMatrix d;
    std::vector<double> density;
    if (matrix_mode) {
        d = load_matrix_csv(path);
    } else {
        PointCloud pc = load_points_csv(path, density_col);
        d = DistMatrix::from_points(pc.points);
        density = pc.density;
    }

    if (!density_bps.empty() || !radius_bps.empty()) {
        if (density.empty()) throw CLI::ValidationError("--density-col", "bifiltration needs densities");
        GridModule m = bifiltration_hilbert(d, density, density_bps, radius_bps, degree);
        std::cout << grid_module_to_json(m) << "\n";
        return 0;
    }

    auto bars = vr_barcodes(d, maxdim, max_radius);
    for (int k = 0; k <= maxdim; ++k) {
        std::cout << "# degree " << k << "\n";
        std::cout << format_barcode(bars[k]);
    }
    return 0;
}

int cmd_gen(const std::string& kind, std::uint64_t seed, const std::string& out_prefix, int n,
            int cells, int max_bars) {
    Rng rng(seed);
    if (kind == "barcode") {
        Barcode bc = random_barcode(seed, max_bars, {0.0, 10.0}, {0.0, 5.0});
        if (out_prefix.empty())
            std::cout << format_barcode(bc);
        else {
            std::ofstream out(out_prefix + "barcode.txt");
            out << format_barcode(bc);
        }
        return 0;
    }
    GridGeometry geo = random_geometry(rng, n, cells);
    if (kind == "module") {
        GridModule m = random_module(rng.next(), geo, 4, 4);
        if (out_prefix.empty())
            std::cout << grid_module_to_json(m) << "\n";
        else
            save_grid_module(m, out_prefix + "module.json");
        return 0;
    }
    if (kind == "ses") {
        if (out_prefix.empty()) throw CLI::ValidationError("--out", "ses generation needs --out");
        SesSample s = random_ses(rng.next(), geo, 4, 4);
        save_grid_module(s.sub, out_prefix + "A.json");
        save_grid_module(s.mid, out_prefix + "B.json");
        save_grid_module(s.quot, out_prefix + "C.json");
        save_morphism(s.incl, out_prefix + "incl.json");
        save_morphism(s.proj, out_prefix + "proj.json");
        return 0;
    }
    throw CLI::ValidationError("--kind", "expected barcode, module or ses");
}

int cmd_inspect(const std::string& path) {
    if (is_json_file(path)) {
        try {
            GridModule m = load_grid_module(path);
            std::cout << "grid module: n=" << m.geo.dim() << " prime=" << m.mod
                      << " vertices=" << m.geo.vertex_count() << " maxdim=" << m.max_dim() << "\n";
            std::cout << "dims:";
            for (int d : m.dims) std::cout << " " << d;
            std::cout << "\nvalidation: ok\n";
            return 0;
        } catch (const std::exception& e) {
            std::cout << "validation: " << e.what() << "\n";
            return 1;
        }
    }
    Barcode bc = load_barcode(path);
    std::cout << "barcode: " << bc.size() << " bars, totpers "
              << fmt12(eval_barcode(AmplitudeSpec::TotPers(), bc)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amplitudes and distances for persistence modules"};
    app.require_subcommand(1);

    // amp
    std::string amp_input, amp_spec, amp_content = "lebesgue";
    auto* amp_cmd = app.add_subcommand("amp", "evaluate an amplitude on a barcode or module");
    amp_cmd->add_option("input", amp_input)->required();
    amp_cmd->add_option("--spec", amp_spec)->required();
    amp_cmd->add_option("--content", amp_content);

    // dist
    std::string dist_a, dist_b, dist_metric, dist_spec, dist_fold = "sum", dist_ground = "linf",
                dist_json;
    double dist_p = 1;
    bool dist_require_exact = false;
    auto* dist_cmd = app.add_subcommand("dist", "distance between two barcodes or modules");
    dist_cmd->add_option("a", dist_a)->required();
    dist_cmd->add_option("b", dist_b)->required();
    dist_cmd->add_option("--metric", dist_metric)->required();
    dist_cmd->add_option("--spec", dist_spec);
    dist_cmd->add_option("--fold", dist_fold);
    dist_cmd->add_option("--p", dist_p);
    dist_cmd->add_option("--ground", dist_ground);
    dist_cmd->add_option("--json", dist_json);
    dist_cmd->add_flag("--require-exact", dist_require_exact);

    // check
    std::string check_ids_csv, check_json;
    std::uint64_t check_seed = 1;
    int check_samples = 500, check_jobs = 1;
    bool check_no_counter = false;
    auto* check_cmd = app.add_subcommand("check", "run the stability catalog");
    check_cmd->add_option("--ids", check_ids_csv);
    check_cmd->add_option("--seed", check_seed);
    check_cmd->add_option("--samples", check_samples);
    check_cmd->add_option("--jobs", check_jobs);
    check_cmd->add_option("--json", check_json);
    check_cmd->add_flag("--no-counterexamples", check_no_counter);

    // rips
    std::string rips_path;
    int rips_maxdim = 1, rips_density_col = -1, rips_degree = 0;
    double rips_max_radius = kInf;
    bool rips_matrix = false;
    std::vector<double> rips_density_bps, rips_radius_bps;
    auto* rips_cmd = app.add_subcommand("rips", "Vietoris-Rips barcodes / bifiltration grid");
    rips_cmd->add_option("points", rips_path)->required();
    rips_cmd->add_option("--maxdim", rips_maxdim);
    rips_cmd->add_option("--max-radius", rips_max_radius);
    rips_cmd->add_flag("--matrix", rips_matrix);
    rips_cmd->add_option("--density-col", rips_density_col);
    rips_cmd->add_option("--degree", rips_degree);
    rips_cmd->add_option("--density-bps", rips_density_bps);
    rips_cmd->add_option("--radius-bps", rips_radius_bps);

    // gen
    std::string gen_kind, gen_out;
    std::uint64_t gen_seed = 1;
    int gen_n = 2, gen_cells = 4, gen_max_bars = 6;
    auto* gen_cmd = app.add_subcommand("gen", "write generator output in the documented formats");
    gen_cmd->add_option("--kind", gen_kind)->required();
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--out", gen_out);
    gen_cmd->add_option("--n", gen_n);
    gen_cmd->add_option("--cells", gen_cells);
    gen_cmd->add_option("--max-bars", gen_max_bars);

    // inspect
    std::string inspect_path;
    auto* inspect_cmd = app.add_subcommand("inspect", "print dims and validation state");
    inspect_cmd->add_option("file", inspect_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*amp_cmd) return cmd_amp(amp_input, amp_spec, amp_content);
        if (*dist_cmd)
            return cmd_dist(dist_a, dist_b, dist_metric, dist_spec, dist_fold, dist_p, dist_ground,
                            dist_require_exact, dist_json);
        if (*check_cmd) {
            std::vector<std::string> ids;
            std::string tok;
            for (char c : check_ids_csv + ",") {
                if (c == ',') {
                    if (!tok.empty()) ids.push_back(tok);
                    tok.clear();
                } else {
                    tok.push_back(c);
                }
            }
            return cmd_check(ids, check_seed, check_samples, check_jobs, check_json,
                             check_no_counter);
        }
        if (*rips_cmd)
            return cmd_rips(rips_path, rips_maxdim, rips_max_radius, rips_matrix, rips_density_col,
                            rips_degree, rips_density_bps, rips_radius_bps);
        if (*gen_cmd) return cmd_gen(gen_kind, gen_seed, gen_out, gen_n, gen_cells, gen_max_bars);
        if (*inspect_cmd) return cmd_inspect(inspect_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
