#include "amp/distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "amp/assignment.hpp"

namespace amp {

static constexpr double kInf = std::numeric_limits<double>::infinity();

double abs_distance(const AmplitudeSpec& spec, const Barcode& a, const Barcode& b) {
    double x = eval_barcode(spec, a), y = eval_barcode(spec, b);
    if (std::isinf(x) && std::isinf(y)) return 0;  // inf - inf := 0
    return std::fabs(x - y);
}

double abs_distance(const AmplitudeSpec& spec, const GridModule& a, const GridModule& b) {
    double x = eval_grid(spec, a), y = eval_grid(spec, b);
    if (std::isinf(x) && std::isinf(y)) return 0;
    return std::fabs(x - y);
}

// ---------------------------------------------------------------------------
// L^p Hilbert-function distance

double lp_hilbert_distance(double p, const GridModule& a, const GridModule& b,
                           const Content& content) {
    if (!(p >= 1) || std::isinf(p))
        throw std::invalid_argument("lp_hilbert_distance: p must be in [1, inf)");
    if (content.kind == Content::Kind::custom && !(a.geo == b.geo))
        throw std::invalid_argument("custom content cannot be refined; geometries must agree");
    auto [ra, rb] = common_refinement(a, b);
    double s = 0;
    for (std::size_t i = 0; i < ra.dims.size(); ++i) {
        int diff = std::abs(ra.dims[i] - rb.dims[i]);
        if (diff == 0) continue;
        double w = content.cell_weight(ra.geo, i);
        if (std::isinf(w)) return kInf;
        s += std::pow(static_cast<double>(diff), p) * w;
    }
    return std::pow(s, 1.0 / p);
}

double lp_hilbert_distance(double p, const Barcode& a, const Barcode& b, const Content& content) {
    return lp_hilbert_distance(p, barcode_to_grid(a), barcode_to_grid(b), content);
}

// ---------------------------------------------------------------------------
// Classical diagram distances

static double ground_cost(const Bar& x, const Bar& y, GroundMetric g) {
    double db = std::fabs(x.birth - y.birth);
    double dd;
    if (std::isinf(x.death) && std::isinf(y.death))
        dd = 0;
    else if (std::isinf(x.death) || std::isinf(y.death))
        dd = kInf;
    else
        dd = std::fabs(x.death - y.death);
    return g == GroundMetric::linf ? std::max(db, dd) : db + dd;
}

static double deletion_cost(const Bar& x, GroundMetric g) {
    double len = bar_length(x);
    return g == GroundMetric::linf ? len / 2 : len;
}

double wasserstein(double p, const Barcode& a, const Barcode& b, GroundMetric ground) {
    if (!(p >= 1)) throw std::invalid_argument("wasserstein: p must be in [1, inf]");
    Barcode fa, fb;
    std::vector<double> ia, ib;  // births of infinite bars
    for (const Bar& x : a) {
        if (std::isinf(x.death))
            ia.push_back(x.birth);
        else
            fa.push_back(x);
    }
    for (const Bar& x : b) {
        if (std::isinf(x.death))
            ib.push_back(x.birth);
        else
            fb.push_back(x);
    }
    if (ia.size() != ib.size()) return kInf;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());

    const int n = static_cast<int>(fa.size()), m = static_cast<int>(fb.size());
    const int N = n + m;
    const bool bottleneck = std::isinf(p);
    std::vector<std::vector<double>> cost(N, std::vector<double>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double c;
            if (i < n && j < m)
                c = ground_cost(fa[i], fb[j], ground);
            else if (i < n)
                c = deletion_cost(fa[i], ground);
            else if (j < m)
                c = deletion_cost(fb[j], ground);
            else
                c = 0;
            cost[i][j] = bottleneck ? c : std::pow(c, p);
        }

    if (bottleneck) {
        double v = N > 0 ? bottleneck_assignment(cost) : 0;
        for (std::size_t i = 0; i < ia.size(); ++i) v = std::max(v, std::fabs(ia[i] - ib[i]));
        return v;
    }
    double total = N > 0 ? hungarian(cost) : 0;
    for (std::size_t i = 0; i < ia.size(); ++i) total += std::pow(std::fabs(ia[i] - ib[i]), p);
    return std::pow(total, 1.0 / p);
}

double interleaving_1param(const Barcode& a, const Barcode& b) {
    return wasserstein(kInf, a, b, GroundMetric::linf);
}

// ---------------------------------------------------------------------------
// Matching cospans

CospanFragments matching_cospan(const Barcode& a, const Barcode& b, const MatchingPlan& plan) {
    CospanFragments fr;
    for (auto [i, j] : plan.pairs) {
        const Bar& x = a.at(i);
        const Bar& y = b.at(j);
        double bb = std::min(x.birth, y.birth);
        double dd = std::min(x.death, y.death);
        if (x.birth < dd) {  // canonical map x -> center is nonzero
            if (dd < x.death) fr.ker_phi.push_back({dd, x.death});
            if (bb < x.birth) fr.coker_phi.push_back({bb, x.birth});
        } else {  // empty overlap: zero map, whole bars on this side
            fr.ker_phi.push_back(x);
            fr.coker_phi.push_back({bb, dd});
        }
        if (y.birth < dd) {
            if (dd < y.death) fr.ker_psi.push_back({dd, y.death});
            if (bb < y.birth) fr.coker_psi.push_back({bb, y.birth});
        } else {
            fr.ker_psi.push_back(y);
            fr.coker_psi.push_back({bb, dd});
        }
    }
    for (int i : plan.unmatched_a) fr.ker_phi.push_back(a.at(i));
    for (int j : plan.unmatched_b) fr.ker_psi.push_back(b.at(j));
    return fr;
}

static double fold(const CostFunction& f, double x1, double x2, double x3, double x4) {
    switch (f.kind) {
        case CostFunction::Kind::sum:
            return x1 + x2 + x3 + x4;
        case CostFunction::Kind::max:
            return std::max({x1, x2, x3, x4});
        case CostFunction::Kind::lp_fold:
            if (std::isinf(f.p)) return std::max({x1, x2, x3, x4});
            return std::pow(std::pow(x1, f.p) + std::pow(x2, f.p) + std::pow(x3, f.p) +
                                std::pow(x4, f.p),
                            1.0 / f.p);
    }
    return 0;
}

double cost_of_cospan(const CospanFragments& frags, const AmplitudeSpec& spec,
                      const CostFunction& f) {
    if (!spec.barcode_applicable())
        throw std::invalid_argument("cospan cost needs a barcode amplitude");
    return fold(f, eval_barcode(spec, frags.ker_phi), eval_barcode(spec, frags.coker_phi),
                eval_barcode(spec, frags.ker_psi), eval_barcode(spec, frags.coker_psi));
}

// ---------------------------------------------------------------------------
// Path metric over matching plans

static bool is_one_norm(const AmplitudeSpec& spec) {
    return spec.kind == AmplitudeSpec::Kind::totpers ||
           (spec.kind == AmplitudeSpec::Kind::pnorm && spec.p == 1);
}

// Per-pair cost in the p-th power domain; matches the cospan fragments.
static double pair_cost_pow(const Bar& x, const Bar& y, double p) {
    double dd = std::min(x.death, y.death);
    double overlap = dd - std::max(x.birth, y.birth);
    auto powp = [&](double t) { return std::isinf(t) ? kInf : std::pow(t, p); };
    if (overlap > 0) {
        double db = std::fabs(x.birth - y.birth);
        double dd2 = (std::isinf(x.death) && std::isinf(y.death)) ? 0
                     : (std::isinf(x.death) || std::isinf(y.death))
                         ? kInf
                         : std::fabs(x.death - y.death);
        return powp(db) + powp(dd2);
    }
    return powp(bar_length(x)) + powp(bar_length(y));
}

static DistanceResult path_metric_assignment(const Barcode& a, const Barcode& b, double p,
                                             bool exact) {
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    const int N = n + m;
    DistanceResult res;
    res.exact = exact;
    if (N == 0) return res;

    // An infinite bar in a kernel or cokernel makes every plan infinite
    // unless it is matched to another infinite bar; pair those by sorted
    // births and solve the finite remainder by assignment.
    std::vector<std::pair<double, int>> ia, ib;
    std::vector<int> fa, fb;
    for (int i = 0; i < n; ++i) {
        if (std::isinf(a[i].death))
            ia.emplace_back(a[i].birth, i);
        else
            fa.push_back(i);
    }
    for (int j = 0; j < m; ++j) {
        if (std::isinf(b[j].death))
            ib.emplace_back(b[j].birth, j);
        else
            fb.push_back(j);
    }
    if (ia.size() != ib.size()) {
        res.value = kInf;
        for (int i = 0; i < n; ++i) res.witness.unmatched_a.push_back(i);
        for (int j = 0; j < m; ++j) res.witness.unmatched_b.push_back(j);
        return res;
    }
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    double total = 0;
    for (std::size_t t = 0; t < ia.size(); ++t) {
        total += std::pow(std::fabs(ia[t].first - ib[t].first), p);
        res.witness.pairs.emplace_back(ia[t].second, ib[t].second);
    }

    const int nf = static_cast<int>(fa.size()), mf = static_cast<int>(fb.size());
    const int NF = nf + mf;
    if (NF > 0) {
        std::vector<std::vector<double>> cost(NF, std::vector<double>(NF, 0));
        for (int i = 0; i < NF; ++i)
            for (int j = 0; j < NF; ++j) {
                if (i < nf && j < mf)
                    cost[i][j] = pair_cost_pow(a[fa[i]], b[fb[j]], p);
                else if (i < nf)
                    cost[i][j] = std::pow(bar_length(a[fa[i]]), p);
                else if (j < mf)
                    cost[i][j] = std::pow(bar_length(b[fb[j]]), p);
            }
        std::vector<int> match;
        total += hungarian(cost, &match);
        for (int i = 0; i < nf; ++i) {
            if (match[i] < mf)
                res.witness.pairs.emplace_back(fa[i], fb[match[i]]);
            else
                res.witness.unmatched_a.push_back(fa[i]);
        }
        for (int j = 0; j < mf; ++j) {
            bool hit = false;
            for (int i = 0; i < nf; ++i) hit |= (match[i] == j);
            if (!hit) res.witness.unmatched_b.push_back(fb[j]);
        }
    }
    res.value = std::pow(total, 1.0 / p);
    return res;
}

static void enumerate_plans(int i, int n, int m, std::vector<int>& sig, std::vector<bool>& used,
                            const std::function<void(const std::vector<int>&)>& leaf) {
    if (i == n) {
        leaf(sig);
        return;
    }
    for (int j = 0; j < m; ++j) {
        if (used[j]) continue;
        used[j] = true;
        sig[i] = j;
        enumerate_plans(i + 1, n, m, sig, used, leaf);
        used[j] = false;
    }
    sig[i] = m;  // unmatched sentinel
    enumerate_plans(i + 1, n, m, sig, used, leaf);
}

static MatchingPlan plan_from_signature(const std::vector<int>& sig, int n, int m) {
    MatchingPlan plan;
    std::vector<bool> used(m, false);
    for (int i = 0; i < n; ++i) {
        if (sig[i] < m) {
            plan.pairs.emplace_back(i, sig[i]);
            used[sig[i]] = true;
        } else {
            plan.unmatched_a.push_back(i);
        }
    }
    for (int j = 0; j < m; ++j)
        if (!used[j]) plan.unmatched_b.push_back(j);
    return plan;
}

DistanceResult path_metric_1param(const AmplitudeSpec& spec, const Barcode& a, const Barcode& b,
                                  const CostFunction& f) {
    if (!spec.barcode_applicable())
        throw std::invalid_argument("path metric needs a barcode amplitude");

    // Separable fast paths: per-pair additive cost solved by assignment.
    if (is_one_norm(spec) &&
        (f.kind == CostFunction::Kind::sum ||
         (f.kind == CostFunction::Kind::lp_fold && f.p == 1)))
        return path_metric_assignment(a, b, 1, /*exact=*/true);
    if (spec.kind == AmplitudeSpec::Kind::pnorm && !std::isinf(spec.p) &&
        f.kind == CostFunction::Kind::lp_fold && f.p == spec.p)
        return path_metric_assignment(a, b, spec.p, /*exact=*/false);

    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    if (n > 8 || m > 8)
        throw std::runtime_error("path_metric_1param: instance exceeds the brute-force bound");

    DistanceResult best;
    best.value = kInf;
    std::vector<int> sig(n, m);
    std::vector<bool> used(m, false);
    std::vector<int> best_sig;
    bool have = false;
    enumerate_plans(0, n, m, sig, used, [&](const std::vector<int>& s) {
        MatchingPlan plan = plan_from_signature(s, n, m);
        double c = cost_of_cospan(matching_cospan(a, b, plan), spec, f);
        if (!have || c < best.value) {  // first hit in lex order wins ties
            have = true;
            best.value = c;
            best_sig = s;
        }
    });
    if (have) best.witness = plan_from_signature(best_sig, n, m);
    best.exact = is_one_norm(spec) && f.kind == CostFunction::Kind::sum;
    return best;
}

bool noise_membership(const AmplitudeSpec& spec, double eps, const Barcode& a) {
    return eval_barcode(spec, a) <= eps;
}

bool noise_membership(const AmplitudeSpec& spec, double eps, const GridModule& a) {
    return eval_grid(spec, a) <= eps;
}

}  // namespace amp
