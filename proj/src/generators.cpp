#include "amp/generators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace amp {

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

GridGeometry unit_grid(const std::vector<int>& cells_per_axis) {
    GridGeometry geo;
    for (int c : cells_per_axis) {
        if (c < 1) throw std::invalid_argument("unit_grid: need >= 1 cell per axis");
        std::vector<double> bp(c);
        for (int i = 0; i < c; ++i) bp[i] = i;
        geo.breakpoints.push_back(std::move(bp));
    }
    return geo;
}

GridGeometry random_geometry(Rng& rng, int n, int max_cells) {
    std::vector<int> cells(n);
    for (int& c : cells) c = rng.uniform_int(1, max_cells);
    return unit_grid(cells);
}

static GridModule random_interval_sum(Rng& rng, const GridGeometry& geo, int count,
                                      std::uint32_t mod) {
    GridModule m = zero_module(geo, mod);
    for (int g = 0; g < count; ++g) {
        std::vector<int> lo(geo.dim()), hi(geo.dim());
        for (int ax = 0; ax < geo.dim(); ++ax) {
            lo[ax] = rng.uniform_int(0, geo.cells(ax) - 1);
            // bias towards boxes reaching the last (infinite) cell
            hi[ax] = rng.chance(0.35) ? -1 : rng.uniform_int(lo[ax], geo.cells(ax) - 1);
        }
        m = direct_sum(m, interval_module(geo, lo, hi, mod));
    }
    return m;
}

static std::vector<Generator> random_generators(Rng& rng, const GridModule& m, int count) {
    std::vector<Generator> gens;
    for (int g = 0; g < count; ++g) {
        auto v = m.geo.unlinear(
            static_cast<std::size_t>(rng.next() % static_cast<std::uint64_t>(m.geo.vertex_count())));
        int d = m.dim_at(v);
        if (d == 0) continue;
        Generator gen;
        gen.vertex = v;
        gen.coeffs.resize(d);
        bool nonzero = false;
        for (std::uint32_t& c : gen.coeffs) {
            c = static_cast<std::uint32_t>(rng.next() % m.mod);
            nonzero |= (c != 0);
        }
        if (!nonzero) gen.coeffs[rng.uniform_int(0, d - 1)] = 1;
        gens.push_back(std::move(gen));
    }
    return gens;
}

GridModule random_module(std::uint64_t seed, const GridGeometry& geo, int max_dim, int gen_count) {
    Rng rng(seed);
    int count = std::min(gen_count, max_dim);
    return random_interval_sum(rng, geo, count, 2);
}

SesSample random_ses(std::uint64_t seed, const GridGeometry& geo, int max_dim, int gen_count) {
    Rng rng(seed);
    int count = rng.uniform_int(0, std::min(gen_count, max_dim));
    GridModule b = random_interval_sum(rng, geo, count, 2);

    if (rng.chance(0.3) && !b.is_zero()) {
        auto gens = random_generators(rng, b, rng.uniform_int(1, 2));
        auto sp = submodule_generated(b, gens);
        if (!sp.sub.is_zero()) b = quotient(b, sp.incl).quot;
    }

    auto a_gens = random_generators(rng, b, rng.uniform_int(0, 3));
    SesSample s;
    auto sp = submodule_generated(b, a_gens);
    s.sub = sp.sub;
    s.incl = sp.incl;
    s.mid = b;
    auto qp = quotient(b, s.incl);
    s.quot = qp.quot;
    s.proj = qp.proj;
    return s;
}

Barcode random_barcode(std::uint64_t seed, int max_bars, std::pair<double, double> birth_range,
                       std::pair<double, double> len_range, double inf_rate) {
    Rng rng(seed);
    int n = max_bars > 0 ? rng.uniform_int(0, max_bars) : 0;
    Barcode bc;
    bc.reserve(n);
    for (int i = 0; i < n; ++i) {
        Bar b;
        b.birth = rng.uniform_real(birth_range.first, birth_range.second);
        if (inf_rate > 0 && rng.chance(inf_rate))
            b.death = std::numeric_limits<double>::infinity();
        else
            b.death = b.birth + rng.uniform_real(len_range.first, len_range.second);
        bc.push_back(b);
    }
    return bc;
}

}  // namespace amp
