#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "amp/barcode.hpp"
#include "amp/grid_module.hpp"

namespace amp {

/// Deterministic RNG wrapper. All draws go through fixed-width integer
/// reduction so the streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform_real(double lo, double hi) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    bool chance(double p) { return uniform_real(0, 1) < p; }

    /// Sub-seed for sample k of a suite, decorrelated via splitmix64.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t k);

private:
    std::mt19937_64 eng_;
};

/// Integer-breakpoint geometry: axis i gets breakpoints {0, 1, ..., cells_i - 1}.
GridGeometry unit_grid(const std::vector<int>& cells_per_axis);

GridGeometry random_geometry(Rng& rng, int n, int max_cells);

/// Direct sum of gen_count random interval modules; vertex dims <= gen_count
/// and the cap max_dim is enforced. Deterministic per seed.
GridModule random_module(std::uint64_t seed, const GridGeometry& geo, int max_dim, int gen_count);

struct SesSample {
    GridModule sub, mid, quot;
    ModuleMorphism incl;  // sub -> mid
    ModuleMorphism proj;  // mid -> quot
};

/// Random short exact sequence 0 -> A -> B -> C -> 0: B is a sum of random
/// interval modules (optionally quotiented by a random generated submodule),
/// A a random generated submodule of B and C the quotient.
SesSample random_ses(std::uint64_t seed, const GridGeometry& geo, int max_dim, int gen_count);

/// Finite random barcode; infinite bars appear at rate inf_rate.
Barcode random_barcode(std::uint64_t seed, int max_bars, std::pair<double, double> birth_range,
                       std::pair<double, double> len_range, double inf_rate = 0.0);

}  // namespace amp
