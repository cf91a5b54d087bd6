// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected total runtime well under two minutes.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "amp/amplitude.hpp"
#include "amp/distance.hpp"
#include "amp/generators.hpp"
#include "amp/rips.hpp"
#include "amp/stability.hpp"

using namespace amp;
using nlohmann::json;

static constexpr double kInf = std::numeric_limits<double>::infinity();

namespace {

int g_failures = 0;
bool g_current_ok = true;
std::string g_detail;

void require(bool cond, const std::string& what) {
    if (!cond && g_current_ok) {
        g_current_ok = false;
        g_detail = what;
    }
}

void criterion(const std::string& name, void (*body)()) {
    g_current_ok = true;
    g_detail.clear();
    try {
        body();
    } catch (const std::exception& e) {
        require(false, std::string("exception: ") + e.what());
    }
    if (g_current_ok) {
        std::printf("PASS %s\n", name.c_str());
    } else {
        std::printf("FAIL %s (%s)\n", name.c_str(), g_detail.c_str());
        ++g_failures;
    }
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GridGeometry geo2(std::vector<double> x, std::vector<double> y) {
    GridGeometry g;
    g.breakpoints = {std::move(x), std::move(y)};
    return g;
}

// --------------------------------------------------------------------------
// 1. Pinned-value regressions (tolerance 0)

void pinned_values() {
    Barcode m03 = {{0, 3}}, m45 = {{4, 5}};
    require(wasserstein(kInf, m03, m45) == 1.5, "bottleneck != 1.5");

    for (int k : {1, 2, 3}) {
        double v = path_metric_1param(AmplitudeSpec::TropLen(k), m03, m45, CostFunction::Sum()).value;
        require(v == 4.0, "d_{T_" + std::to_string(k) + "} != 4, got " + num(v));
    }

    Barcode u = {{0, 1}}, v = {{3, 4}};
    for (double p : {1.0, 2.0, kInf}) {
        double ds = path_metric_1param(AmplitudeSpec::PNorm(p), u, v, CostFunction::Sum()).value;
        double dm = path_metric_1param(AmplitudeSpec::PNorm(p), u, v, CostFunction::Max()).value;
        require(ds == 2.0, "sum-fold path != 2 at p=" + num(p));
        require(dm == 1.0, "max-fold path != 1 at p=" + num(p));
        require(abs_distance(AmplitudeSpec::PNorm(p), u, v) == 0.0, "abs distance != 0");
    }

    GridGeometry g1;
    g1.breakpoints = {{0, 1, 2}};
    GridModule split = direct_sum(interval_module(g1, {0}, {0}), interval_module(g1, {1}, {1}));
    GridModule merged = interval_module(g1, {0}, {1});
    for (double p : {1.0, 2.0})
        require(lp_hilbert_distance(p, split, merged) == 0.0, "L^p distance != 0 on equal Hilbert");

    // c_tau: 1 on the unit-box family, 0 on the full up-set, 2 on the stripe
    GridModule boxfam = interval_module(geo2({0, 1}, {0}), {0, 0}, {0, -1});
    require(c_tau_rank(boxfam, Face({0}), Content::Lebesgue()) == 1.0, "c_tau(box family) != 1");
    GridModule up = interval_module(geo2({0, 1}, {0, 1}), {0, 0}, {-1, -1});
    require(c_tau_rank(up, Face({0}), Content::Lebesgue()) == 0.0, "c_tau(up-set) != 0");
    GridModule stripe = interval_module(geo2({0, 1, 2, 3, 4}, {0}), {2, 0}, {3, -1});
    require(c_tau_rank(stripe, Face({0}), Content::Counting()) == 2.0, "c_tau(stripe) != 2");

    // quotient restriction of the shifted family: F[U_n]/tau = F[U]
    GridGeometry ygeo;
    ygeo.breakpoints = {{0, 1}};
    GridModule expected = interval_module(ygeo, {1}, {-1});  // F[U], U the up-set of 1
    for (double n : {1.0, 3.0}) {
        GridModule un = interval_module(geo2({0, n}, {0, 1}), {1, 1}, {-1, -1});
        GridModule q = quotient_restriction(un, Face({0}));
        require(q.geo == expected.geo && q.dims == expected.dims, "F[U_n]/tau != F[U]");
        bool maps_equal = true;
        for (std::size_t i = 0; i < q.geo.vertex_count(); ++i)
            maps_equal = maps_equal && q.maps[0][i] == expected.maps[0][i];
        require(maps_equal, "F[U_n]/tau maps differ from F[U]");
    }
}

// --------------------------------------------------------------------------
// 2. Axiom property suite

void axiom_suite() {
    CheckReport rep = run_check("AXIOMS", /*seed=*/2024, /*samples=*/1000);
    require(rep.failures == 0, "axiom violations: " + std::to_string(rep.failures));
    json extra = rep.extra.empty() ? json::object() : json::parse(rep.extra);
    for (const char* key : {"maxdim", "trop1", "shiftamp"})
        require(extra.value(key, 0) >= 1,
                std::string("no strict-subadditivity witness for ") + key);
}

// --------------------------------------------------------------------------
// 3. Additive-representation suite

void additive_representation() {
    for (int it = 0; it < 500; ++it) {
        Barcode bc = random_barcode(Rng::derive(555, it), 6, {0, 10}, {0, 5});
        if (!integral_representation_check(AmplitudeSpec::PNorm(1), Content::Lebesgue(), bc)) {
            require(false, "rho_1 != Lebesgue integral at sample " + std::to_string(it));
            return;
        }
    }
    for (int it = 0; it < 200; ++it) {
        Rng rng(Rng::derive(777, it));
        GridGeometry g = random_geometry(rng, rng.uniform_int(1, 2), 4);
        GridModule m = random_module(rng.next(), g, 3, 3);

        // same Hilbert function, different structure maps (all zero)
        GridModule scrambled = m;
        for (int ax = 0; ax < g.dim(); ++ax)
            for (std::size_t i = 0; i < g.vertex_count(); ++i) {
                Matrix& f = scrambled.maps[ax][i];
                if (f.rows > 0 || f.cols > 0) f = Matrix(f.rows, f.cols, f.mod);
            }
        // same Hilbert function, refined geometry
        GridGeometry fine = g;
        for (auto& bp : fine.breakpoints) {
            std::vector<double> half;
            for (std::size_t i = 0; i + 1 < bp.size(); ++i) half.push_back((bp[i] + bp[i + 1]) / 2);
            bp.insert(bp.end(), half.begin(), half.end());
            std::sort(bp.begin(), bp.end());
        }
        GridModule refined = refine_to(m, fine);

        double base = eval_grid(AmplitudeSpec::LpHilbert(1), m);
        double v1 = eval_grid(AmplitudeSpec::LpHilbert(1), scrambled);
        double v2 = eval_grid(AmplitudeSpec::LpHilbert(1), refined);
        if (!(base == v1 && base == v2)) {
            require(false, "L^1 Hilbert amplitude not Hilbert-invariant at sample " +
                               std::to_string(it) + ": " + num(base) + " vs " + num(v1) + " / " +
                               num(v2));
            return;
        }
    }
}

// --------------------------------------------------------------------------
// 4. Inequality catalog

void inequality_catalog() {
    for (const char* id : {"LIP", "PNORM", "TROP", "MAG", "H0-AB", "QR-SHIFT", "HILB-INT",
                           "WASS", "SHIFT-INT"}) {
        CheckReport rep = run_check(id, /*seed=*/909, /*samples=*/500);
        require(rep.failures == 0,
                std::string(id) + " failed " + std::to_string(rep.failures) + "/500, max slack " +
                    num(rep.max_slack));
    }
}

// --------------------------------------------------------------------------
// 5. Counterexample suite

void counterexamples() {
    auto reports = run_counterexamples();
    require(reports.size() == 5, "expected 5 counterexamples");
    for (const auto& rep : reports)
        require(rep.passed, rep.id + " did not reproduce: " + rep.extra);

    auto again = run_counterexamples();
    for (std::size_t i = 0; i < reports.size(); ++i)
        require(reports[i].to_json() == again[i].to_json(),
                reports[i].id + " not bit-identical across reruns");
}

// --------------------------------------------------------------------------
// 6. Cross-oracle checks

double dp_oracle_w1(const Barcode& a, const Barcode& b) {
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    auto pair_cost = [&](int i, int j) {
        double overlap = std::min(a[i].death, b[j].death) - std::max(a[i].birth, b[j].birth);
        return bar_length(a[i]) + bar_length(b[j]) - 2 * std::max(0.0, overlap);
    };
    std::vector<std::vector<double>> f(n + 1, std::vector<double>(1u << m, kInf));
    f[0][0] = 0;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < (1 << m); ++s) {
            if (std::isinf(f[i][s])) continue;
            f[i + 1][s] = std::min(f[i + 1][s], f[i][s] + bar_length(a[i]));
            for (int j = 0; j < m; ++j)
                if (!(s & (1 << j)))
                    f[i + 1][s | (1 << j)] =
                        std::min(f[i + 1][s | (1 << j)], f[i][s] + pair_cost(i, j));
        }
    double best = kInf;
    for (int s = 0; s < (1 << m); ++s) {
        if (std::isinf(f[n][s])) continue;
        double rest = 0;
        for (int j = 0; j < m; ++j)
            if (!(s & (1 << j))) rest += bar_length(b[j]);
        best = std::min(best, f[n][s] + rest);
    }
    return best;
}

// displacement scan deciding zeroness by direct interval overlap
double shift_scan_oracle(const GridModule& m, const std::vector<double>& v, double step,
                         double max_shift) {
    const GridGeometry& geo = m.geo;
    auto killed_at = [&](double eps) {
        for (std::size_t iu = 0; iu < geo.vertex_count(); ++iu) {
            if (m.dims[iu] == 0) continue;
            auto u = geo.unlinear(iu);
            for (std::size_t iw = 0; iw < geo.vertex_count(); ++iw) {
                if (m.dims[iw] == 0) continue;
                auto w = geo.unlinear(iw);
                bool le = true;
                for (int ax = 0; ax < geo.dim(); ++ax) le &= u[ax] <= w[ax];
                if (!le) continue;
                bool meets = true;
                for (int ax = 0; ax < geo.dim(); ++ax) {
                    double lo = geo.cell_low(ax, u[ax]) + eps * v[ax];
                    double hi = geo.cell_high(ax, u[ax]) + eps * v[ax];
                    meets &= lo < geo.cell_high(ax, w[ax]) && geo.cell_low(ax, w[ax]) < hi;
                }
                if (meets && !structure_map(m, u, w).is_zero()) return false;
            }
        }
        return true;
    };
    for (double eps = 0; eps <= max_shift; eps += step)
        if (killed_at(eps)) return eps;  // |v|_inf = 1 for the diagonal direction
    return kInf;
}

void cross_oracles() {
    for (int it = 0; it < 200; ++it) {
        Rng rng(Rng::derive(31337, it));
        Barcode a = random_barcode(rng.next(), 10, {0, 10}, {0, 5});
        Barcode b = random_barcode(rng.next(), 10, {0, 10}, {0, 5});
        double impl = path_metric_1param(AmplitudeSpec::PNorm(1), a, b, CostFunction::Sum()).value;
        double oracle = dp_oracle_w1(a, b);
        if (std::fabs(impl - oracle) > 1e-9 * std::max(1.0, oracle)) {
            require(false, "assignment vs DP oracle mismatch at sample " + std::to_string(it) +
                               ": " + num(impl) + " vs " + num(oracle));
            return;
        }
    }

    auto h = vr_barcodes(DistMatrix::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 1);
    require(h[1].size() == 1, "unit square H1 bar count != 1");
    if (h[1].size() == 1) {
        require(std::fabs(h[1][0].birth - 1.0) <= 1e-9, "H1 birth != 1");
        require(std::fabs(h[1][0].death - std::sqrt(2.0)) <= 1e-9, "H1 death != sqrt(2)");
    }

    int checked = 0;
    for (int it = 0; checked < 50; ++it) {
        Rng rng(Rng::derive(2718, it));
        GridGeometry g = random_geometry(rng, 2, 4);
        GridModule m = random_module(rng.next(), g, 3, 3);
        ++checked;
        double impl = eval_grid(AmplitudeSpec::ShiftAmp({1, 1}, VecNorm::linf), m);
        double gap = std::max(g.max_breakpoint_gap(), 0.125);
        double oracle = shift_scan_oracle(m, {1, 1}, gap / 64, 16.0);
        bool ok = std::isinf(impl) ? std::isinf(oracle) : std::fabs(impl - oracle) <= gap;
        if (!ok) {
            require(false, "shift amplitude vs scan oracle at sample " + std::to_string(it) +
                               ": " + num(impl) + " vs " + num(oracle));
            return;
        }
    }
}

}  // namespace

int main() {
    criterion("1-pinned-value-regressions", pinned_values);
    criterion("2-axiom-property-suite", axiom_suite);
    criterion("3-additive-representation", additive_representation);
    criterion("4-inequality-catalog", inequality_catalog);
    criterion("5-counterexample-suite", counterexamples);
    criterion("6-cross-oracle-checks", cross_oracles);

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
