#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "amp/generators.hpp"
#include "amp/rips.hpp"

using namespace amp;

static constexpr double kInf = std::numeric_limits<double>::infinity();

namespace {

Barcode canon(Barcode bc) {
    std::sort(bc.begin(), bc.end(), [](const Bar& a, const Bar& b) {
        return a.birth < b.birth || (a.birth == b.birth && a.death < b.death);
    });
    return bc;
}

std::vector<std::vector<double>> unit_square() {
    return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
}

}  // namespace

TEST_CASE("tiny point clouds") {
    CHECK(vr_barcodes(DistMatrix::from_points({{0, 0}}), 0)[0] == Barcode{{0, kInf}});

    auto h = vr_barcodes(DistMatrix::from_points({{0}, {3}}), 1);
    CHECK(canon(h[0]) == Barcode{{0, 3}, {0, kInf}});
    CHECK(h[1].empty());
}

TEST_CASE("unit square has a single H1 bar [1, sqrt 2)") {
    auto h = vr_barcodes(DistMatrix::from_points(unit_square()), 1);
    REQUIRE(h[1].size() == 1);
    CHECK(h[1][0].birth == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h[1][0].death == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    // H0: four points merging into one component
    CHECK(h[0].size() == 4);
    int infinite = 0;
    for (const Bar& b : h[0]) infinite += std::isinf(b.death) ? 1 : 0;
    CHECK(infinite == 1);
}

TEST_CASE("H0 counts components") {
    // two clusters far apart
    auto d = DistMatrix::from_points({{0}, {0.1}, {50}, {50.2}});
    auto h = vr_barcodes(d, 0);
    CHECK(h[0].size() == 4);  // every point is born at 0
    int infinite = 0;
    for (const Bar& b : h[0]) infinite += std::isinf(b.death) ? 1 : 0;
    CHECK(infinite == 1);

    // with a radius cap below the gap the clusters never merge
    auto capped = vr_barcodes(d, 0, 10.0);
    infinite = 0;
    for (const Bar& b : capped[0]) infinite += std::isinf(b.death) ? 1 : 0;
    CHECK(infinite == 2);
}

TEST_CASE("relabeling points does not change barcodes") {
    Rng rng(61);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 7; ++i) pts.push_back({rng.uniform_real(0, 4), rng.uniform_real(0, 4)});
    auto base = vr_barcodes(DistMatrix::from_points(pts), 1);

    std::vector<std::vector<double>> shuffled = {pts[3], pts[0], pts[6], pts[2],
                                                 pts[5], pts[1], pts[4]};
    auto perm = vr_barcodes(DistMatrix::from_points(shuffled), 1);
    for (int k = 0; k <= 1; ++k) CHECK(canon(base[k]) == canon(perm[k]));
}

TEST_CASE("asymmetric matrices are rejected") {
    DistMatrix m;
    m.n = 2;
    m.d = {0, 1, 2, 0};
    CHECK_THROWS(vr_barcodes(m, 0));
}

TEST_CASE("bifiltration hilbert grid") {
    // one point: degree 0 Betti number is 1 wherever the point survives
    {
        DistMatrix d = DistMatrix::from_points({{0, 0}});
        GridModule m = bifiltration_hilbert(d, {0.5}, {0, 1}, {0, 1}, 0);
        CHECK(m.dims == std::vector<int>{1, 1, 0, 0});  // density rows 0 and 1
    }

    // equal densities: constant along the density axis below the value, zero above
    {
        DistMatrix d = DistMatrix::from_points({{0}, {3}});
        GridModule m = bifiltration_hilbert(d, {1, 1}, {0, 1, 2}, {0, 3}, 0);
        std::vector<int> row0 = {m.dims[m.geo.linear({0, 0})], m.dims[m.geo.linear({0, 1})]};
        std::vector<int> row1 = {m.dims[m.geo.linear({1, 0})], m.dims[m.geo.linear({1, 1})]};
        std::vector<int> row2 = {m.dims[m.geo.linear({2, 0})], m.dims[m.geo.linear({2, 1})]};
        CHECK(row0 == std::vector<int>{2, 1});
        CHECK(row1 == row0);
        CHECK(row2 == std::vector<int>{0, 0});
    }

    // a fixed density row reproduces the H1 Hilbert function of the square
    {
        DistMatrix d = DistMatrix::from_points(unit_square());
        std::vector<double> radii = {0, 0.5, 1.0, 1.2, std::sqrt(2.0), 2.0};
        GridModule m = bifiltration_hilbert(d, {1, 1, 1, 1}, {0}, radii, 1);
        auto bars = vr_barcodes(d, 1);
        for (std::size_t j = 0; j < radii.size(); ++j)
            CHECK(m.dims[m.geo.linear({0, static_cast<int>(j)})] ==
                  hilbert_function(bars[1], radii[j]));
    }

    CHECK_THROWS(bifiltration_hilbert(DistMatrix::from_points({{0}}), {1}, {1, 0}, {0}, 0));
}

TEST_CASE("octahedron carries a 2-sphere class") {
    std::vector<std::vector<double>> oct = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                            {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    auto h = vr_barcodes(DistMatrix::from_points(oct), 2);
    REQUIRE(h[2].size() == 1);
    CHECK(h[2][0].birth == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(h[2][0].death == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(h[1].empty());  // every 1-cycle dies the moment it is born
}

TEST_CASE("dimension cap is enforced") {
    CHECK_THROWS_AS(vr_barcodes(DistMatrix::from_points({{0}}), 3), std::invalid_argument);
}
