#pragma once

#include <string>
#include <vector>

#include "amp/amplitude.hpp"
#include "amp/barcode.hpp"
#include "amp/grid_module.hpp"

namespace amp {

/// Partial matching between two bar index sets.
struct MatchingPlan {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> unmatched_a;
    std::vector<int> unmatched_b;
};

/// Kernel/cokernel bars of the cospan A -> C <- B induced by a matching:
/// for a matched pair the center bar is [min births, min deaths).
struct CospanFragments {
    Barcode ker_phi, coker_phi;  // A side
    Barcode ker_psi, coker_psi;  // B side
};

/// Fold of the four cospan amplitudes. Monotone, subadditive, zero at zero.
struct CostFunction {
    enum class Kind { sum, max, lp_fold };
    Kind kind = Kind::sum;
    double p = 1;  // lp_fold only; inf behaves like max

    static CostFunction Sum() { return {}; }
    static CostFunction Max() { return {Kind::max, 0}; }
    static CostFunction LpFold(double p) { return {Kind::lp_fold, p}; }
};

struct DistanceResult {
    double value = 0;
    bool exact = false;  // false marks a certified upper bound
    MatchingPlan witness;
};

/// |alpha(A) - alpha(B)|, with inf - inf := 0 (pseudometric convention).
double abs_distance(const AmplitudeSpec& spec, const Barcode& a, const Barcode& b);
double abs_distance(const AmplitudeSpec& spec, const GridModule& a, const GridModule& b);

/// (integral of |dim_A - dim_B|^p against the content)^(1/p), evaluated on
/// the common refinement. Custom contents require equal geometries.
double lp_hilbert_distance(double p, const GridModule& a, const GridModule& b,
                           const Content& content = Content::Lebesgue());
double lp_hilbert_distance(double p, const Barcode& a, const Barcode& b,
                           const Content& content = Content::Lebesgue());

enum class GroundMetric { linf, l1 };

/// Classical diagram distance: exact assignment with the chosen ground
/// metric on (birth, death) pairs and diagonal deletion cost (death-birth)/2
/// for linf (death-birth for l1). p = inf is the bottleneck distance.
/// Infinite bars must match in count (else the distance is inf) and are
/// paired by sorted births.
double wasserstein(double p, const Barcode& a, const Barcode& b,
                   GroundMetric ground = GroundMetric::linf);

CospanFragments matching_cospan(const Barcode& a, const Barcode& b, const MatchingPlan& plan);

double cost_of_cospan(const CospanFragments& frags, const AmplitudeSpec& spec,
                      const CostFunction& f);

/// Minimum cospan cost over matching plans. Exact assignment when the
/// (spec, fold) cost is per-pair additive (the 1-norm amplitude with Sum,
/// p-norms with the matching LpFold); exhaustive enumeration otherwise,
/// limited to 8 bars per side. The value is the path metric exactly for
/// (p1/totpers, Sum) and a certified upper bound otherwise.
DistanceResult path_metric_1param(const AmplitudeSpec& spec, const Barcode& a, const Barcode& b,
                                  const CostFunction& f);

/// One-parameter interleaving distance (the bottleneck distance, by the
/// standard isometry).
double interleaving_1param(const Barcode& a, const Barcode& b);

/// A belongs to the noise system of the amplitude at level eps.
bool noise_membership(const AmplitudeSpec& spec, double eps, const Barcode& a);
bool noise_membership(const AmplitudeSpec& spec, double eps, const GridModule& a);

}  // namespace amp
