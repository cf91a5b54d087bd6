#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "amp/generators.hpp"
#include "amp/grid_module.hpp"
#include "amp/io.hpp"

using namespace amp;

namespace {

// Independent of the sweep in submodule_generated: the span at w of all
// generator pushforwards, taken over every generator below w.
int span_oracle_dim(const GridModule& m, const std::vector<Generator>& gens,
                    const std::vector<int>& w) {
    Matrix cols(m.dim_at(w), 0, m.mod);
    for (const Generator& g : gens) {
        bool below = true;
        for (std::size_t ax = 0; ax < w.size(); ++ax) below &= g.vertex[ax] <= w[ax];
        if (!below) continue;
        Matrix v(m.dim_at(g.vertex), 1, m.mod);
        for (int r = 0; r < v.rows; ++r) v.at(r, 0) = g.coeffs[r];
        cols = hstack(cols, structure_map(m, g.vertex, w) * v);
    }
    return rank(cols);
}

GridGeometry geo2(std::vector<double> x, std::vector<double> y) {
    GridGeometry g;
    g.breakpoints = {std::move(x), std::move(y)};
    return g;
}

GridGeometry geo1(std::vector<double> x) {
    GridGeometry g;
    g.breakpoints = {std::move(x)};
    return g;
}

}  // namespace

TEST_CASE("interval module shapes and validation") {
    GridGeometry g = geo2({0, 2}, {0, 3});
    GridModule full = interval_module(g, {0, 0}, {-1, -1});
    CHECK(full.dims == std::vector<int>{1, 1, 1, 1});
    CHECK(!validate(full).has_value());

    GridModule cell = interval_module(g, {0, 0}, {0, 0});
    CHECK(cell.dims == std::vector<int>{1, 0, 0, 0});

    CHECK_THROWS(interval_module(g, {1, 0}, {0, 0}));   // hi < lo
    CHECK_THROWS(interval_module(g, {0, 0}, {5, 0}));   // out of range

    GridModule broken = full;
    broken.maps[0][g.linear({0, 0})].at(0, 0) = 0;
    auto v = validate(broken);
    REQUIRE(v.has_value());
    CHECK(v->what == "commutativity violated");
}

TEST_CASE("structure map composites") {
    GridGeometry g = geo2({0, 1, 2}, {0, 1, 2});
    GridModule m = interval_module(g, {0, 0}, {1, 1});
    CHECK(structure_map(m, {0, 0}, {0, 0}) == Matrix::identity(1, 2));
    CHECK(structure_map(m, {0, 0}, {1, 1}) == Matrix::identity(1, 2));
    CHECK(structure_map(m, {0, 0}, {2, 2}).is_zero());
    CHECK_THROWS(structure_map(m, {1, 0}, {0, 0}));
}

TEST_CASE("direct sum adds dims and validates") {
    GridGeometry g = geo2({0, 1}, {0, 1});
    GridModule a = interval_module(g, {0, 0}, {0, 0});
    GridModule b = interval_module(g, {0, 0}, {-1, -1});
    GridModule s = direct_sum(a, b);
    for (std::size_t i = 0; i < s.dims.size(); ++i) CHECK(s.dims[i] == a.dims[i] + b.dims[i]);
    CHECK(!validate(s).has_value());
    CHECK(direct_sum(a, zero_module(g)).dims == a.dims);
}

TEST_CASE("submodule generated by a shifted generator is the up-set interval") {
    GridGeometry g = geo2({0, 1, 2}, {0, 1, 2});
    GridModule m = interval_module(g, {0, 0}, {-1, -1});
    std::vector<Generator> gens = {Generator{{1, 0}, {1}}};
    auto sp = submodule_generated(m, gens);
    CHECK(!validate(sp.sub).has_value());
    CHECK(!validate(sp.incl).has_value());
    GridModule expected = interval_module(g, {1, 0}, {-1, -1});
    CHECK(sp.sub.dims == expected.dims);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        CHECK(sp.sub.dims[i] == span_oracle_dim(m, gens, g.unlinear(i)));

    CHECK(submodule_generated(m, {}).sub.is_zero());
    auto full = submodule_generated(m, {Generator{{0, 0}, {1}}});
    CHECK(full.sub.dims == m.dims);
}

TEST_CASE("submodule span oracle on random modules") {
    Rng rng(42);
    for (int it = 0; it < 30; ++it) {
        GridGeometry g = random_geometry(rng, rng.uniform_int(1, 2), 4);
        GridModule m = random_module(rng.next(), g, 3, 3);
        std::vector<Generator> gens;
        for (int t = 0; t < 3; ++t) {
            auto v = g.unlinear(rng.next() % g.vertex_count());
            if (m.dim_at(v) == 0) continue;
            Generator gen;
            gen.vertex = v;
            gen.coeffs.assign(m.dim_at(v), 0);
            gen.coeffs[rng.next() % gen.coeffs.size()] = 1;
            gens.push_back(gen);
        }
        auto sp = submodule_generated(m, gens);
        CHECK(!validate(sp.sub).has_value());
        CHECK(!validate(sp.incl).has_value());
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            CHECK(sp.sub.dims[i] == span_oracle_dim(m, gens, g.unlinear(i)));
    }
}

TEST_CASE("quotient of I[0,2) by I[1,2) is I[0,1)") {
    GridGeometry g = geo1({0, 1, 2});
    GridModule m = interval_module(g, {0}, {1});
    auto sub = submodule_generated(m, {Generator{{1}, {1}}});
    CHECK(sub.sub.dims == interval_module(g, {1}, {1}).dims);
    auto q = quotient(m, sub.incl);
    CHECK(q.quot.dims == interval_module(g, {0}, {0}).dims);
    CHECK(!validate(q.quot).has_value());
    CHECK(!validate(q.proj).has_value());

    // proj . incl = 0
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        CHECK((q.proj.components[i] * sub.incl.components[i]).is_zero());

    auto whole = quotient(m, identity_morphism(m));
    CHECK(whole.quot.is_zero());
    auto nothing = quotient(m, submodule_generated(m, {}).incl);
    CHECK(nothing.quot.dims == m.dims);
}

TEST_CASE("kernel and cokernel against vertexwise oracles") {
    GridGeometry g = geo1({0, 1, 2});
    GridModule big = interval_module(g, {0}, {1});    // I[0,2)
    GridModule small = interval_module(g, {0}, {0});  // I[0,1)

    // canonical projection I[0,2) ->> I[0,1)
    ModuleMorphism f = zero_morphism(big, small);
    f.components[0] = Matrix::identity(1, 2);
    REQUIRE(!validate(f).has_value());
    auto k = kernel(f);
    CHECK(k.sub.dims == interval_module(g, {1}, {1}).dims);  // I[1,2)
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        CHECK(k.sub.dims[i] == kernel_basis(f.components[i]).cols);

    // inclusion I[1,2) -> I[0,2)
    GridModule late = interval_module(g, {1}, {1});
    ModuleMorphism incl = zero_morphism(late, big);
    incl.components[1] = Matrix::identity(1, 2);
    REQUIRE(!validate(incl).has_value());
    auto c = cokernel(incl);
    CHECK(c.quot.dims == small.dims);  // I[0,1)
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        CHECK(c.quot.dims[i] == big.dims[i] - rank(incl.components[i]));

    auto k_id = kernel(identity_morphism(big));
    CHECK(k_id.sub.is_zero());
    auto c_id = cokernel(identity_morphism(big));
    CHECK(c_id.quot.is_zero());
    auto k_zero = kernel(zero_morphism(big, small));
    CHECK(k_zero.sub.dims == big.dims);
    auto c_zero = cokernel(zero_morphism(big, small));
    CHECK(c_zero.quot.dims == small.dims);
}

TEST_CASE("random short exact sequences satisfy exactness bookkeeping") {
    Rng rng(2024);
    for (int it = 0; it < 60; ++it) {
        GridGeometry g = random_geometry(rng, rng.uniform_int(1, 2), 5);
        SesSample s = random_ses(rng.next(), g, 4, 4);
        CHECK(!validate(s.sub).has_value());
        CHECK(!validate(s.mid).has_value());
        CHECK(!validate(s.quot).has_value());
        CHECK(!validate(s.incl).has_value());
        CHECK(!validate(s.proj).has_value());
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            CHECK(s.sub.dims[i] + s.quot.dims[i] == s.mid.dims[i]);
            CHECK((s.proj.components[i] * s.incl.components[i]).is_zero());
            // image(incl) = kernel(proj) as subspaces
            Matrix ker = kernel_basis(s.proj.components[i]);
            CHECK(rank(ker) == rank(s.incl.components[i]));
            CHECK(solve_in_span(ker, s.incl.components[i]).has_value());
        }
        // determinism
        SesSample again = random_ses(rng.next(), g, 4, 4);
        (void)again;
    }
    GridGeometry g = unit_grid({3, 3});
    SesSample a = random_ses(77, g, 4, 4), b = random_ses(77, g, 4, 4);
    CHECK(a.mid.dims == b.mid.dims);
    CHECK(a.sub.dims == b.sub.dims);
    for (std::size_t i = 0; i < a.incl.components.size(); ++i)
        CHECK(a.incl.components[i] == b.incl.components[i]);
}

TEST_CASE("localization clamps to the last cell") {
    GridGeometry g = geo2({0, 1, 2}, {0, 1, 2});
    GridModule up = interval_module(g, {0, 0}, {-1, -1});
    GridModule loc = localization(up, Face({0}));
    CHECK(loc.dims == up.dims);  // already eventually constant along axis 0

    GridModule bounded = interval_module(g, {0, 0}, {1, -1});  // dies before the last x cell
    CHECK(localization(bounded, Face({0})).is_zero());
    CHECK(localization(zero_module(g), Face({0})).is_zero());

    // idempotence: localizing twice changes nothing
    Rng rng(5);
    for (int it = 0; it < 20; ++it) {
        GridModule m = random_module(rng.next(), g, 3, 3);
        Face rho({static_cast<int>(rng.next() % 2)});
        GridModule once = localization(m, rho);
        GridModule twice = localization(once, rho);
        CHECK(once.dims == twice.dims);
        for (int ax = 0; ax < 2; ++ax)
            for (std::size_t i = 0; i < g.vertex_count(); ++i)
                CHECK(once.maps[ax][i] == twice.maps[ax][i]);
    }
}

TEST_CASE("local cohomology matches the clamp-kernel oracle") {
    GridGeometry g = geo2({0, 1, 2}, {0, 1, 2});

    // full up-set: nothing dies pushing to infinity
    GridModule up = interval_module(g, {0, 0}, {-1, -1});
    CHECK(local_cohomology(up, Face({0})).sub.is_zero());
    CHECK(local_cohomology(up, Face({0, 1})).sub.is_zero());

    // bounded box: everything dies along either axis
    GridModule box = interval_module(g, {0, 0}, {1, 1});
    CHECK(local_cohomology(box, Face({0})).sub.dims == box.dims);
    CHECK(local_cohomology(box, Face({0, 1})).sub.dims == box.dims);

    // [0,1) x [0,inf): bounded along axis 0 only
    GridModule strip = interval_module(g, {0, 0}, {0, -1});
    CHECK(local_cohomology(strip, Face({0})).sub.dims == strip.dims);
    CHECK(local_cohomology(strip, Face({1})).sub.is_zero());

    // oracle: dimension of the intersection of clamp kernels, vertexwise
    Rng rng(8);
    for (int it = 0; it < 25; ++it) {
        GridModule m = random_module(rng.next(), g, 3, 3);
        std::vector<int> axes = it % 3 == 0 ? std::vector<int>{0}
                              : it % 3 == 1 ? std::vector<int>{1}
                                            : std::vector<int>{0, 1};
        auto h = local_cohomology(m, Face(axes));
        CHECK(!validate(h.sub).has_value());
        CHECK(!validate(h.incl).has_value());
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            auto u = g.unlinear(i);
            Matrix stacked(0, m.dims[i], m.mod);
            for (int ax : axes) {
                auto w = u;
                w[ax] = g.cells(ax) - 1;
                stacked = vstack(stacked, structure_map(m, u, w));
            }
            CHECK(h.sub.dims[i] == kernel_basis(stacked).cols);
        }
        // applying twice with the same face is a no-op on dims
        auto hh = local_cohomology(h.sub, Face(axes));
        CHECK(hh.sub.dims == h.sub.dims);
    }
}

TEST_CASE("quotient restriction takes the stable top slice") {
    GridGeometry g = geo2({0, 1, 2}, {0, 1, 2});

    // box reaching the last tau cells: transverse shadow survives
    GridModule reach = interval_module(g, {1, 0}, {-1, 1});
    GridModule q = quotient_restriction(reach, Face({0}));
    CHECK(q.geo.breakpoints == std::vector<std::vector<double>>{{0, 1, 2}});
    CHECK(q.dims == interval_module(q.geo, {0}, {1}).dims);

    // box bounded along tau: restriction vanishes
    GridModule bounded = interval_module(g, {0, 0}, {1, -1});
    CHECK(quotient_restriction(bounded, Face({0})).is_zero());
    CHECK(quotient_restriction(zero_module(g), Face({0})).is_zero());

    // all axes: single vector space as a 1-axis one-cell grid
    GridModule full = interval_module(g, {0, 0}, {-1, -1});
    GridModule pt = quotient_restriction(full, Face({0, 1}));
    CHECK(pt.geo.dim() == 1);
    CHECK(pt.geo.cells(0) == 1);
    CHECK(pt.dims == std::vector<int>{1});
}

TEST_CASE("common refinement preserves the Hilbert function") {
    GridGeometry ga = geo1({0, 1});
    GridGeometry gb = geo1({0, 0.5});
    GridModule a = interval_module(ga, {0}, {0});
    GridModule b = interval_module(gb, {1}, {1});
    auto [ra, rb] = common_refinement(a, b);
    CHECK(ra.geo.breakpoints[0] == std::vector<double>{0, 0.5, 1});
    CHECK(rb.geo == ra.geo);
    for (double t : {-1.0, 0.0, 0.25, 0.5, 0.75, 1.0, 2.0}) {
        CHECK(a.hilbert_at({t}) == ra.hilbert_at({t}));
        CHECK(b.hilbert_at({t}) == rb.hilbert_at({t}));
    }
    CHECK(!validate(ra).has_value());
    CHECK(!validate(rb).has_value());

    GridModule same = refine_to(a, ga);
    CHECK(same.dims == a.dims);

    Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        GridGeometry g1 = random_geometry(rng, 2, 4);
        GridGeometry g2 = random_geometry(rng, 2, 4);
        GridModule m1 = random_module(rng.next(), g1, 3, 3);
        GridModule m2 = random_module(rng.next(), g2, 3, 3);
        auto [r1, r2] = common_refinement(m1, m2);
        CHECK(!validate(r1).has_value());
        CHECK(!validate(r2).has_value());
        for (int t = 0; t < 12; ++t) {
            std::vector<double> pt = {rng.uniform_real(-1, 5), rng.uniform_real(-1, 5)};
            CHECK(m1.hilbert_at(pt) == r1.hilbert_at(pt));
            CHECK(m2.hilbert_at(pt) == r2.hilbert_at(pt));
        }
    }
}

TEST_CASE("grid module json round trip and rejection") {
    Rng rng(3);
    GridGeometry g = geo2({0, 1.5, 2}, {0, 1});
    GridModule m = random_module(rng.next(), g, 3, 3);
    GridModule back = grid_module_from_json(grid_module_to_json(m));
    CHECK(back.dims == m.dims);
    CHECK(back.geo == m.geo);
    for (int ax = 0; ax < 2; ++ax)
        for (std::size_t i = 0; i < g.vertex_count(); ++i) CHECK(back.maps[ax][i] == m.maps[ax][i]);

    // absent maps load as zero maps
    GridModule two_cells = grid_module_from_json(R"({
        "prime": 2, "n": 1, "breakpoints": [[0, 1]], "dims": [1, 1], "maps": []
    })");
    CHECK(two_cells.maps[0][0].is_zero());

    // a violating module names the offending vertex
    std::string bad = R"({
        "prime": 2, "n": 2, "breakpoints": [[0, 1], [0, 1]], "dims": [1, 1, 1, 1],
        "maps": [{"axis": 1, "vertex": [0, 0], "matrix": [[1]]},
                 {"axis": 2, "vertex": [0, 0], "matrix": [[1]]},
                 {"axis": 2, "vertex": [1, 0], "matrix": [[1]]}]
    })";
    CHECK_THROWS_WITH_AS(grid_module_from_json(bad), doctest::Contains("vertex"),
                         std::runtime_error);
}

TEST_CASE("refinement handles grids with different origins") {
    GridModule a = interval_module(geo1({1, 2}), {0}, {0});  // [1,2) on a grid starting at 1
    GridModule b = interval_module(geo1({0, 3}), {0}, {0});  // [0,3)
    auto [ra, rb] = common_refinement(a, b);
    CHECK(ra.geo.breakpoints[0] == std::vector<double>{0, 1, 2, 3});
    CHECK(ra.dims == std::vector<int>{0, 1, 0, 0});  // zero below the original origin
    CHECK(rb.dims == std::vector<int>{1, 1, 1, 0});
    CHECK(!validate(ra).has_value());
    for (double t : {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.5})
        CHECK(a.hilbert_at({t}) == ra.hilbert_at({t}));
}

TEST_CASE("local cohomology and quotient restriction on quotient modules") {
    Rng rng(606);
    for (int it = 0; it < 20; ++it) {
        GridGeometry g = random_geometry(rng, 2, 4);
        SesSample ses = random_ses(rng.next(), g, 4, 4);
        const GridModule& m = ses.quot;  // nontrivial structure maps
        for (auto axes : {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 1}}) {
            auto h = local_cohomology(m, Face(axes));
            CHECK(!validate(h.sub).has_value());
            CHECK(!validate(h.incl).has_value());
            for (std::size_t i = 0; i < g.vertex_count(); ++i) {
                auto u = g.unlinear(i);
                Matrix stacked(0, m.dims[i], m.mod);
                for (int ax : axes) {
                    auto w = u;
                    w[ax] = g.cells(ax) - 1;
                    stacked = vstack(stacked, structure_map(m, u, w));
                }
                CHECK(h.sub.dims[i] == kernel_basis(stacked).cols);
            }
        }
        // quotient restriction evaluates the stable top slice
        for (int ax : {0, 1}) {
            GridModule q = quotient_restriction(m, Face({ax}));
            CHECK(!validate(q).has_value());
            for (std::size_t i = 0; i < q.geo.vertex_count(); ++i) {
                auto v = q.geo.unlinear(i);
                std::vector<int> full(2);
                full[ax] = g.cells(ax) - 1;
                full[1 - ax] = v[0];
                CHECK(q.dims[i] == m.dims[g.linear(full)]);
            }
        }
    }
}

TEST_CASE("every operation accepts the zero module") {
    GridGeometry g = geo2({0, 1}, {0, 2});
    GridModule z = zero_module(g);
    CHECK(!validate(z).has_value());
    CHECK(z.is_zero());
    CHECK(structure_map(z, {0, 0}, {1, 1}).rows == 0);
    CHECK(direct_sum(z, z).is_zero());
    CHECK(submodule_generated(z, {}).sub.is_zero());
    CHECK(quotient(z, identity_morphism(z)).quot.is_zero());
    CHECK(kernel(identity_morphism(z)).sub.is_zero());
    CHECK(cokernel(identity_morphism(z)).quot.is_zero());
    CHECK(localization(z, Face({0})).is_zero());
    CHECK(local_cohomology(z, Face({0, 1})).sub.is_zero());
    CHECK(quotient_restriction(z, Face({1})).is_zero());
    auto [rz, rb] = common_refinement(z, interval_module(geo2({0, 0.5}, {0, 2}), {0, 0}, {0, 0}));
    CHECK(rz.is_zero());
}

TEST_CASE("full-grid interval module has identity maps everywhere") {
    GridGeometry g = geo2({0, 1, 2}, {0, 1});
    GridModule m = interval_module(g, {0, 0}, {-1, -1});
    for (int ax = 0; ax < 2; ++ax)
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            auto u = g.unlinear(i);
            if (u[ax] + 1 >= g.cells(ax)) continue;
            CHECK(m.maps[ax][i] == Matrix::identity(1, 2));
        }
}

TEST_CASE("kernel and cokernel dimensions are tied to the rank") {
    Rng rng(909);
    for (int it = 0; it < 25; ++it) {
        GridGeometry g = random_geometry(rng, rng.uniform_int(1, 2), 4);
        SesSample s = random_ses(rng.next(), g, 4, 4);
        auto k = kernel(s.proj);
        auto c = cokernel(s.incl);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            int r = rank(s.proj.components[i]);
            CHECK(s.mid.dims[i] - k.sub.dims[i] == r);
            CHECK(s.quot.dims[i] == r);  // proj is surjective
            CHECK(c.quot.dims[i] == s.mid.dims[i] - rank(s.incl.components[i]));
        }
    }
}

TEST_CASE("morphism json round trip") {
    Rng rng(1213);
    GridGeometry g = geo2({0, 1, 2}, {0, 1});
    SesSample s = random_ses(rng.next(), g, 3, 3);
    ModuleMorphism back = morphism_from_json(morphism_to_json(s.incl), s.sub, s.mid);
    for (std::size_t i = 0; i < back.components.size(); ++i)
        CHECK(back.components[i] == s.incl.components[i]);
    // a morphism that breaks naturality is rejected
    GridModule bar = interval_module(geo1({0, 1, 2}), {0}, {1});
    std::string broken = R"({"prime": 2, "n": 1,
        "components": [{"vertex": [0], "matrix": [[1]]}]})";
    CHECK_THROWS_WITH_AS(morphism_from_json(broken, bar, bar), doctest::Contains("naturality"),
                         std::runtime_error);
}
