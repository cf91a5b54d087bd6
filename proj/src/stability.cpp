#include "amp/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "amp/amplitude.hpp"
#include "amp/distance.hpp"
#include "amp/generators.hpp"
#include "amp/io.hpp"

namespace amp {

using nlohmann::json;

static constexpr double kInf = std::numeric_limits<double>::infinity();

std::string CheckReport::to_json() const {
    json j;
    j["id"] = id;
    j["description"] = description;
    j["samples"] = samples;
    j["failures"] = failures;
    j["inverted"] = inverted;
    j["passed"] = passed;
    j["max_slack"] = max_slack;
    json w = json::array();
    for (const auto& s : witnesses) w.push_back(json::parse(s));
    j["witnesses"] = std::move(w);
    j["extra"] = extra.empty() ? json::object() : json::parse(extra);
    return j.dump(2);
}

namespace {

struct SampleOutcome {
    double lhs = 0, rhs = 0;       // governing inequality lhs <= rhs
    json inputs;                   // enough to replay
    json note = json::object();    // per-sample counters, merged additively
};

struct Entry {
    std::string description;
    std::function<SampleOutcome(std::uint64_t)> sample;
    std::function<std::pair<double, double>(const json&)> replay;
};

Barcode sample_bc(Rng& rng, int max_bars, double max_len = 5.0) {
    return random_barcode(rng.next(), max_bars, {0.0, 10.0}, {0.0, max_len});
}

const std::vector<std::string> kLipSpecs = {"p1",   "p2",        "pinf",    "totpers",
                                            "trop:1", "trop:2",  "trop:3",  "magnitude",
                                            "support", "shift:1:linf"};

GridGeometry sample_geometry(Rng& rng, int n, int max_cells = 5) {
    std::vector<int> cells(n);
    for (int& c : cells) c = rng.uniform_int(1, max_cells);
    return unit_grid(cells);
}

GridModule sample_module(Rng& rng, int n) {
    GridGeometry geo = sample_geometry(rng, n);
    return random_module(rng.next(), geo, 4, rng.uniform_int(1, 4));
}

// Grid amplitudes evaluated in every axiom sample; barcode amplitudes join
// for 1-parameter sequences.
std::vector<AmplitudeSpec> axiom_specs(int n, bool barcode_too) {
    std::vector<double> ones(n, 1.0);
    std::vector<AmplitudeSpec> specs = {
        AmplitudeSpec::LpHilbert(1, Content::Lebesgue()),
        AmplitudeSpec::LpHilbert(2, Content::Lebesgue()),
        AmplitudeSpec::LpHilbert(1, Content::Counting()),
        AmplitudeSpec::MaxDim(),
        AmplitudeSpec::Support(),
        AmplitudeSpec::ShiftAmp(ones, VecNorm::linf),
    };
    if (barcode_too) {
        specs.push_back(AmplitudeSpec::PNorm(1));
        specs.push_back(AmplitudeSpec::PNorm(2));
        specs.push_back(AmplitudeSpec::PNorm(kInf));
        specs.push_back(AmplitudeSpec::TotPers());
        specs.push_back(AmplitudeSpec::TropLen(1));
        specs.push_back(AmplitudeSpec::TropLen(2));
        specs.push_back(AmplitudeSpec::TropLen(3));
        specs.push_back(AmplitudeSpec::Magnitude());
    }
    return specs;
}

SampleOutcome axioms_sample(std::uint64_t subseed) {
    Rng rng(subseed);
    int n = rng.uniform_int(1, 2);
    GridGeometry geo = sample_geometry(rng, n);
    SesSample ses = random_ses(rng.next(), geo, 4, 4);

    SampleOutcome out;
    out.inputs = json{{"seed", subseed}};
    out.lhs = 0;
    out.rhs = 0;
    double worst = -kInf;
    for (const AmplitudeSpec& spec : axiom_specs(n, n == 1)) {
        AxiomReport rep = check_axioms(spec, ses);
        bool is_l1 = spec.kind == AmplitudeSpec::Kind::lp_hilbert && spec.p == 1;
        bool bad = !rep.ok() || (is_l1 && !rep.additive);
        double slack = std::max({rep.a - rep.b, rep.c - rep.b, rep.b - (rep.a + rep.c)});
        if (is_l1 && std::isfinite(rep.b) && std::isfinite(rep.a + rep.c))
            slack = std::max(slack, std::fabs(rep.b - (rep.a + rep.c)));
        if (bad) slack = std::max(slack, 1.0);  // categorical failure
        if (slack > worst) {
            worst = slack;
            out.lhs = rep.b;
            out.rhs = rep.a + rep.c;
            if (bad) out.rhs = -kInf;  // force the failure to register
        }
        // strict subadditivity without additivity, per non-additive amplitude
        if (rep.ok() && !rep.additive) {
            const char* key = nullptr;
            if (spec.kind == AmplitudeSpec::Kind::maxdim) key = "maxdim";
            if (spec.kind == AmplitudeSpec::Kind::troplen && spec.k == 1) key = "trop1";
            if (spec.kind == AmplitudeSpec::Kind::shiftamp) key = "shiftamp";
            if (key) out.note[key] = out.note.value(key, 0) + 1;
        }
    }
    return out;
}

std::pair<double, double> axioms_replay(const json& inputs) {
    SampleOutcome o = axioms_sample(inputs.at("seed").get<std::uint64_t>());
    return {o.lhs, o.rhs};
}

std::map<std::string, Entry> build_catalog() {
    std::map<std::string, Entry> cat;

    cat["LIP"] = Entry{
        "absolute-value distance is bounded by the path-metric upper bound",
        [](std::uint64_t s) {
            Rng rng(s);
            AmplitudeSpec spec = AmplitudeSpec::parse(kLipSpecs[rng.uniform_int(0, 9)]);
            Barcode a = sample_bc(rng, 5), b = sample_bc(rng, 5);
            SampleOutcome out;
            out.lhs = abs_distance(spec, a, b);
            out.rhs = path_metric_1param(spec, a, b, CostFunction::Sum()).value;
            out.inputs = json{{"spec", spec.name()}, {"a", format_barcode(a)}, {"b", format_barcode(b)}};
            return out;
        },
        [](const json& in) {
            AmplitudeSpec spec = AmplitudeSpec::parse(in.at("spec"));
            Barcode a = parse_barcode_string(in.at("a")), b = parse_barcode_string(in.at("b"));
            return std::pair<double, double>{
                abs_distance(spec, a, b),
                path_metric_1param(spec, a, b, CostFunction::Sum()).value};
        }};

    cat["PNORM"] = Entry{
        "path metric is non-increasing in the norm exponent",
        [](std::uint64_t s) {
            Rng rng(s);
            const double ps[] = {1, 2, kInf};
            int pick = rng.uniform_int(0, 2);  // (p,q) in {(1,2),(1,inf),(2,inf)}
            double p = ps[pick == 2 ? 1 : 0], q = ps[pick == 0 ? 1 : 2];
            Barcode a = sample_bc(rng, 4), b = sample_bc(rng, 4);
            SampleOutcome out;
            out.lhs = path_metric_1param(AmplitudeSpec::PNorm(q), a, b, CostFunction::Sum()).value;
            out.rhs = path_metric_1param(AmplitudeSpec::PNorm(p), a, b, CostFunction::Sum()).value;
            out.inputs = json{{"p", p},
                              {"q", std::isinf(q) ? -1.0 : q},
                              {"a", format_barcode(a)},
                              {"b", format_barcode(b)}};
            return out;
        },
        [](const json& in) {
            double p = in.at("p").get<double>(), q = in.at("q").get<double>();
            if (q < 0) q = kInf;
            Barcode a = parse_barcode_string(in.at("a")), b = parse_barcode_string(in.at("b"));
            return std::pair<double, double>{
                path_metric_1param(AmplitudeSpec::PNorm(q), a, b, CostFunction::Sum()).value,
                path_metric_1param(AmplitudeSpec::PNorm(p), a, b, CostFunction::Sum()).value};
        }};

    cat["TROP"] = Entry{
        "d_{T_l} <= max(1, l/k) d_{T_k} on exhaustively minimized instances",
        [](std::uint64_t s) {
            Rng rng(s);
            int k = rng.uniform_int(1, 3), l = rng.uniform_int(1, 3);
            Barcode a = sample_bc(rng, 4), b = sample_bc(rng, 4);
            double factor = std::max(1.0, static_cast<double>(l) / k);
            SampleOutcome out;
            out.lhs = path_metric_1param(AmplitudeSpec::TropLen(l), a, b, CostFunction::Sum()).value;
            out.rhs =
                factor * path_metric_1param(AmplitudeSpec::TropLen(k), a, b, CostFunction::Sum()).value;
            out.inputs = json{{"k", k}, {"l", l}, {"a", format_barcode(a)}, {"b", format_barcode(b)}};
            return out;
        },
        [](const json& in) {
            int k = in.at("k"), l = in.at("l");
            Barcode a = parse_barcode_string(in.at("a")), b = parse_barcode_string(in.at("b"));
            double factor = std::max(1.0, static_cast<double>(l) / k);
            return std::pair<double, double>{
                path_metric_1param(AmplitudeSpec::TropLen(l), a, b, CostFunction::Sum()).value,
                factor *
                    path_metric_1param(AmplitudeSpec::TropLen(k), a, b, CostFunction::Sum()).value};
        }};

    cat["MAG"] = Entry{
        "magnitude path cost is dominated by total persistence, per plan family",
        [](std::uint64_t s) {
            Rng rng(s);
            Barcode a = sample_bc(rng, 5), b = sample_bc(rng, 5);
            double amp_l = eval_barcode(AmplitudeSpec::Magnitude(), a);
            double amp_r = eval_barcode(AmplitudeSpec::TotPers(), a);
            double d_l = path_metric_1param(AmplitudeSpec::Magnitude(), a, b, CostFunction::Sum()).value;
            double d_r = path_metric_1param(AmplitudeSpec::TotPers(), a, b, CostFunction::Sum()).value;
            SampleOutcome out;
            // report the tighter-violated of the two inequalities
            if (amp_l - amp_r > d_l - d_r) {
                out.lhs = amp_l;
                out.rhs = amp_r;
            } else {
                out.lhs = d_l;
                out.rhs = d_r;
            }
            out.inputs = json{{"a", format_barcode(a)}, {"b", format_barcode(b)}};
            return out;
        },
        [](const json& in) {
            Barcode a = parse_barcode_string(in.at("a")), b = parse_barcode_string(in.at("b"));
            double amp_l = eval_barcode(AmplitudeSpec::Magnitude(), a);
            double amp_r = eval_barcode(AmplitudeSpec::TotPers(), a);
            double d_l = path_metric_1param(AmplitudeSpec::Magnitude(), a, b, CostFunction::Sum()).value;
            double d_r = path_metric_1param(AmplitudeSpec::TotPers(), a, b, CostFunction::Sum()).value;
            if (amp_l - amp_r > d_l - d_r) return std::pair<double, double>{amp_l, amp_r};
            return std::pair<double, double>{d_l, d_r};
        }};

    cat["H0-AB"] = Entry{
        "local cohomology is amplitude bounding with constant 1",
        [](std::uint64_t s) {
            Rng rng(s);
            int n = rng.uniform_int(1, 2);
            GridModule m = sample_module(rng, n);
            std::vector<int> axes;
            for (int ax = 0; ax < n; ++ax)
                if (rng.chance(0.5)) axes.push_back(ax);
            if (axes.empty()) axes.push_back(rng.uniform_int(0, n - 1));
            GridModule h = local_cohomology(m, Face(axes)).sub;

            std::vector<double> ones(n, 1.0);
            std::vector<AmplitudeSpec> specs = {AmplitudeSpec::LpHilbert(1), AmplitudeSpec::MaxDim(),
                                                AmplitudeSpec::ShiftAmp(ones, VecNorm::linf)};
            SampleOutcome out;
            double worst = -kInf;
            for (const auto& spec : specs) {
                double l = eval_grid(spec, h), r = eval_grid(spec, m);
                double slack = (std::isinf(l) && std::isinf(r)) ? 0 : l - r;
                if (slack > worst) {
                    worst = slack;
                    out.lhs = l;
                    out.rhs = r;
                }
            }
            json tau = json::array();
            for (int ax : axes) tau.push_back(ax + 1);
            out.inputs = json{{"module", grid_module_to_json(m)}, {"tau", tau}};
            return out;
        },
        [](const json& in) {
            GridModule m = grid_module_from_json(in.at("module"));
            std::vector<int> axes;
            for (int ax : in.at("tau")) axes.push_back(ax - 1);
            GridModule h = local_cohomology(m, Face(axes)).sub;
            int n = m.geo.dim();
            std::vector<double> ones(n, 1.0);
            std::vector<AmplitudeSpec> specs = {AmplitudeSpec::LpHilbert(1), AmplitudeSpec::MaxDim(),
                                                AmplitudeSpec::ShiftAmp(ones, VecNorm::linf)};
            double bl = 0, br = 0, worst = -kInf;
            for (const auto& spec : specs) {
                double l = eval_grid(spec, h), r = eval_grid(spec, m);
                double slack = (std::isinf(l) && std::isinf(r)) ? 0 : l - r;
                if (slack > worst) {
                    worst = slack;
                    bl = l;
                    br = r;
                }
            }
            return std::pair<double, double>{bl, br};
        }};

    cat["QR-SHIFT"] = Entry{
        "quotient restriction does not increase the shift amplitude",
        [](std::uint64_t s) {
            Rng rng(s);
            GridModule m = sample_module(rng, 2);
            int tau_axis = rng.uniform_int(0, 1);
            GridModule q = quotient_restriction(m, Face({tau_axis}));
            SampleOutcome out;
            out.lhs = eval_grid(AmplitudeSpec::ShiftAmp({1.0}, VecNorm::linf), q);
            out.rhs = eval_grid(AmplitudeSpec::ShiftAmp({1.0, 1.0}, VecNorm::linf), m);
            if (std::isinf(out.lhs) && std::isinf(out.rhs)) out.lhs = out.rhs = 0;
            out.inputs = json{{"module", grid_module_to_json(m)}, {"tau", json::array({tau_axis + 1})}};
            return out;
        },
        [](const json& in) {
            GridModule m = grid_module_from_json(in.at("module"));
            int tau_axis = in.at("tau")[0].get<int>() - 1;
            GridModule q = quotient_restriction(m, Face({tau_axis}));
            double l = eval_grid(AmplitudeSpec::ShiftAmp({1.0}, VecNorm::linf), q);
            double r = eval_grid(AmplitudeSpec::ShiftAmp({1.0, 1.0}, VecNorm::linf), m);
            if (std::isinf(l) && std::isinf(r)) l = r = 0;
            return std::pair<double, double>{l, r};
        }};

    cat["HILB-INT"] = Entry{
        "interleaving (bottleneck) <= 4 * d_{rho_1} at one parameter",
        [](std::uint64_t s) {
            Rng rng(s);
            Barcode a = sample_bc(rng, 8), b = sample_bc(rng, 8);
            SampleOutcome out;
            out.lhs = interleaving_1param(a, b);
            out.rhs = 4 * path_metric_1param(AmplitudeSpec::PNorm(1), a, b, CostFunction::Sum()).value;
            out.inputs = json{{"a", format_barcode(a)}, {"b", format_barcode(b)}};
            return out;
        },
        [](const json& in) {
            Barcode a = parse_barcode_string(in.at("a")), b = parse_barcode_string(in.at("b"));
            return std::pair<double, double>{
                interleaving_1param(a, b),
                4 * path_metric_1param(AmplitudeSpec::PNorm(1), a, b, CostFunction::Sum()).value};
        }};

    cat["WASS"] = Entry{
        "W_p^alg <= d_{rho_p} <= 4^(1-1/p) W_p^alg on exhaustively minimized instances",
        [](std::uint64_t s) {
            Rng rng(s);
            const double ps[] = {1, 2, kInf};
            double p = ps[rng.uniform_int(0, 2)];
            Barcode a = sample_bc(rng, 5), b = sample_bc(rng, 5);
            double walg =
                path_metric_1param(AmplitudeSpec::PNorm(p), a, b, CostFunction::LpFold(p)).value;
            double dsum = path_metric_1param(AmplitudeSpec::PNorm(p), a, b, CostFunction::Sum()).value;
            double factor = std::isinf(p) ? 4.0 : std::pow(4.0, 1.0 - 1.0 / p);
            SampleOutcome out;
            if (walg - dsum > dsum - factor * walg) {
                out.lhs = walg;
                out.rhs = dsum;
            } else {
                out.lhs = dsum;
                out.rhs = factor * walg;
            }
            out.inputs = json{{"p", std::isinf(p) ? -1.0 : p}, {"a", format_barcode(a)},
                              {"b", format_barcode(b)}};
            return out;
        },
        [](const json& in) {
            double p = in.at("p").get<double>();
            if (p < 0) p = kInf;
            Barcode a = parse_barcode_string(in.at("a")), b = parse_barcode_string(in.at("b"));
            double walg =
                path_metric_1param(AmplitudeSpec::PNorm(p), a, b, CostFunction::LpFold(p)).value;
            double dsum = path_metric_1param(AmplitudeSpec::PNorm(p), a, b, CostFunction::Sum()).value;
            double factor = std::isinf(p) ? 4.0 : std::pow(4.0, 1.0 - 1.0 / p);
            if (walg - dsum > dsum - factor * walg) return std::pair<double, double>{walg, dsum};
            return std::pair<double, double>{dsum, factor * walg};
        }};

    cat["SHIFT-INT"] = Entry{
        "interleaving <= shift path cost; 6x bound on the disjoint family",
        [](std::uint64_t s) {
            Rng rng(s);
            SampleOutcome out;
            if (rng.chance(0.5)) {  // left half, random barcodes
                Barcode a = sample_bc(rng, 6), b = sample_bc(rng, 6);
                out.lhs = interleaving_1param(a, b);
                out.rhs =
                    path_metric_1param(AmplitudeSpec::ShiftAmp({1.0}), a, b, CostFunction::Sum()).value;
                out.inputs = json{{"mode", "left"}, {"a", format_barcode(a)}, {"b", format_barcode(b)}};
            } else {  // right half on the analytic disjoint-interval family
                double av = rng.uniform_real(0, 5), r = rng.uniform_real(0.1, 3);
                double bv = av + r + rng.uniform_real(0.05, 4);
                Barcode a = {{av, av + r}}, b = {{bv, bv + r}};
                out.lhs =
                    path_metric_1param(AmplitudeSpec::ShiftAmp({1.0}), a, b, CostFunction::Sum()).value;
                out.rhs = 6 * interleaving_1param(a, b);
                out.inputs = json{{"mode", "right"}, {"a", format_barcode(a)}, {"b", format_barcode(b)}};
            }
            return out;
        },
        [](const json& in) {
            Barcode a = parse_barcode_string(in.at("a")), b = parse_barcode_string(in.at("b"));
            if (in.at("mode") == "left")
                return std::pair<double, double>{
                    interleaving_1param(a, b),
                    path_metric_1param(AmplitudeSpec::ShiftAmp({1.0}), a, b, CostFunction::Sum()).value};
            return std::pair<double, double>{
                path_metric_1param(AmplitudeSpec::ShiftAmp({1.0}), a, b, CostFunction::Sum()).value,
                6 * interleaving_1param(a, b)};
        }};

    cat["AXIOMS"] = Entry{"amplitude axioms over random short exact sequences", axioms_sample,
                          axioms_replay};

    return cat;
}

const std::map<std::string, Entry>& catalog() {
    static const std::map<std::string, Entry> cat = build_catalog();
    return cat;
}

}  // namespace

std::vector<std::string> catalog_ids() {
    return {"LIP", "PNORM", "TROP", "MAG", "H0-AB", "QR-SHIFT", "HILB-INT", "WASS", "SHIFT-INT",
            "AXIOMS"};
}

CheckReport run_check(const std::string& id, std::uint64_t seed, int samples, int jobs) {
    auto it = catalog().find(id);
    if (it == catalog().end()) throw std::invalid_argument("unknown catalog id: " + id);
    const Entry& entry = it->second;

    CheckReport rep;
    rep.id = id;
    rep.description = entry.description;
    rep.samples = samples;
    rep.max_slack = -kInf;
    json note = json::object();

    auto run_range = [&entry, seed](int lo, int hi) {
        struct RangeResult {
            int failures = 0;
            double max_slack = -kInf;
            std::vector<std::string> witnesses;
            json note = json::object();
        } rr;
        for (int k = lo; k < hi; ++k) {
            SampleOutcome o = entry.sample(Rng::derive(seed, static_cast<std::uint64_t>(k)));
            double slack =
                (std::isinf(o.lhs) && std::isinf(o.rhs)) ? 0 : o.lhs - o.rhs;
            rr.max_slack = std::max(rr.max_slack, slack);
            if (!approx_le(o.lhs, o.rhs)) {
                ++rr.failures;
                if (rr.witnesses.size() < 10) {
                    json w;
                    w["sample"] = k;
                    w["lhs"] = o.lhs;
                    w["rhs"] = o.rhs;
                    w["inputs"] = o.inputs;
                    rr.witnesses.push_back(w.dump());
                }
            }
            for (auto& [key, val] : o.note.items())
                rr.note[key] = rr.note.value(key, 0) + val.get<int>();
        }
        return rr;
    };

    if (jobs <= 1 || samples < 2 * jobs) {
        auto rr = run_range(0, samples);
        rep.failures = rr.failures;
        rep.max_slack = rr.max_slack;
        rep.witnesses = std::move(rr.witnesses);
        note = std::move(rr.note);
    } else {
        std::vector<std::future<decltype(run_range(0, 0))>> futs;
        int chunk = (samples + jobs - 1) / jobs;
        for (int lo = 0; lo < samples; lo += chunk)
            futs.push_back(std::async(std::launch::async, run_range, lo,
                                      std::min(samples, lo + chunk)));
        for (auto& f : futs) {  // merged in chunk order: deterministic
            auto rr = f.get();
            rep.failures += rr.failures;
            rep.max_slack = std::max(rep.max_slack, rr.max_slack);
            for (auto& w : rr.witnesses)
                if (rep.witnesses.size() < 10) rep.witnesses.push_back(std::move(w));
            for (auto& [key, val] : rr.note.items())
                note[key] = note.value(key, 0) + val.get<int>();
        }
    }

    rep.passed = rep.failures == 0;
    if (!note.empty()) rep.extra = note.dump();
    return rep;
}

std::vector<CheckReport> run_catalog(const std::vector<std::string>& ids, std::uint64_t seed,
                                     int samples, int jobs) {
    std::vector<CheckReport> out;
    for (const auto& id : ids) out.push_back(run_check(id, seed, samples, jobs));
    return out;
}

std::pair<double, double> replay_witness(const std::string& id, const std::string& witness_json) {
    auto it = catalog().find(id);
    if (it == catalog().end()) throw std::invalid_argument("unknown catalog id: " + id);
    json w = json::parse(witness_json);
    return it->second.replay(w.at("inputs"));
}

// ---------------------------------------------------------------------------
// Counterexample suite: every entry must reproduce its strict violation.

static CheckReport make_counterexample(const std::string& id, const std::string& desc,
                                       bool reproduced, json pinned) {
    CheckReport rep;
    rep.id = id;
    rep.description = desc;
    rep.samples = 1;
    rep.inverted = true;
    rep.passed = reproduced;
    rep.failures = reproduced ? 0 : 1;
    rep.extra = pinned.dump();
    return rep;
}

std::vector<CheckReport> run_counterexamples() {
    std::vector<CheckReport> out;

    {  // rank invariant is not subadditive
        Barcode mid = {{0, 2}}, sub = {{1, 2}}, quot = {{0, 1}};
        int rb = rank_invariant(mid, 0, 2);
        int ra = rank_invariant(sub, 0, 2);
        int rc = rank_invariant(quot, 0, 2);
        bool repro = rb == 1 && ra == 0 && rc == 0 && rb > ra + rc;
        out.push_back(make_counterexample(
            "RANK-SUB", "rank at (0,2) on I[0,2) / I[1,2) / I[0,1): 1 > 0 + 0", repro,
            json{{"rank_B", rb}, {"rank_A", ra}, {"rank_C", rc}}));
    }

    {  // sigma_(1,0) tropical coordinate is not monotone
        Barcode sub = {{2, 4}}, mid = {{1, 4}};
        double vs = tropical_sigma10(sub, 1, 1);
        double vm = tropical_sigma10(mid, 1, 1);
        bool repro = vs == 2.0 && vm == 1.0 && vs > vm;
        out.push_back(make_counterexample("SIGMA-MONO",
                                          "sigma_(1,0) on I[2,4) inside I[1,4): 2 > 1", repro,
                                          json{{"sub", vs}, {"mid", vm}}));
    }

    {  // c_tau rank is not monotone: (0, 0, 2) on the stripe sequence
        GridGeometry geo;
        geo.breakpoints = {{0, 1, 2, 3, 4}, {0}};
        GridModule b = interval_module(geo, {2, 0}, {-1, -1});
        auto sp = submodule_generated(b, {Generator{{4, 0}, {1}}});
        GridModule c = quotient(b, sp.incl).quot;
        Face tau({0});
        double ca = c_tau_rank(sp.sub, tau, Content::Counting());
        double cb = c_tau_rank(b, tau, Content::Counting());
        double cc = c_tau_rank(c, tau, Content::Counting());
        bool repro = ca == 0.0 && cb == 0.0 && cc == 2.0;
        out.push_back(make_counterexample(
            "CTAU-MONO", "c_tau on F[up(4,0)] -> F[up(2,0)] -> F[[2,4)x[0,inf)): (0,0,2)", repro,
            json{{"c_A", ca}, {"c_B", cb}, {"c_C", cc}}));
    }

    {  // min of two amplitudes fails subadditivity on a two-cell grid
        GridGeometry geo;
        geo.breakpoints = {{0, 1}};
        GridModule first = interval_module(geo, {0}, {0});
        GridModule second = interval_module(geo, {1}, {1});
        GridModule mid = direct_sum(first, second);
        auto sp = submodule_generated(mid, {Generator{{0}, {1}}});
        GridModule quot = quotient(mid, sp.incl).quot;
        auto min_dim = [](const GridModule& m) {
            return static_cast<double>(std::min(m.dims[0], m.dims[1]));
        };
        double ga = min_dim(sp.sub), gb = min_dim(mid), gc = min_dim(quot);
        bool repro = gb == 1.0 && ga == 0.0 && gc == 0.0 && gb > ga + gc;
        out.push_back(make_counterexample(
            "MIN-AMP", "min(dim_1, dim_2) on (F,0) -> (F,F) -> (0,F): 1 > 0 + 0", repro,
            json{{"gamma_A", ga}, {"gamma_B", gb}, {"gamma_C", gc}}));
    }

    {  // c_tau is not continuous: c stays 1 while the shift amplitude -> 0
        json pinned;
        pinned["k"] = json::array();
        pinned["c"] = json::array();
        pinned["shift"] = json::array();
        bool repro = true;
        for (int k : {1, 2, 4}) {
            GridGeometry geo;
            geo.breakpoints = {{0, 1.0 / k}, {0}};
            GridModule cell = interval_module(geo, {0, 0}, {0, -1});
            GridModule m = cell;
            for (int c = 1; c < k; ++c) m = direct_sum(m, cell);
            double ctau = c_tau_rank(m, Face({0}), Content::Lebesgue());
            double shift = eval_grid(AmplitudeSpec::ShiftAmp({1.0, 1.0}, VecNorm::linf), m);
            pinned["k"].push_back(k);
            pinned["c"].push_back(ctau);
            pinned["shift"].push_back(shift);
            repro = repro && ctau == 1.0 && shift == 1.0 / k;
        }
        out.push_back(make_counterexample(
            "CTAU-DISC", "c_tau = 1 along interval_module([0,1/k) x up-set)^k while shift -> 0",
            repro, pinned));
    }

    return out;
}

}  // namespace amp
