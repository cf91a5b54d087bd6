#include "amp/grid_module.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace amp {

static constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// GridGeometry

std::size_t GridGeometry::vertex_count() const {
    std::size_t n = 1;
    for (const auto& bp : breakpoints) n *= bp.size();
    return n;
}

std::size_t GridGeometry::linear(const std::vector<int>& v) const {
    std::size_t idx = 0;
    for (int ax = 0; ax < dim(); ++ax) idx = idx * breakpoints[ax].size() + v[ax];
    return idx;
}

std::vector<int> GridGeometry::unlinear(std::size_t idx) const {
    std::vector<int> v(dim());
    for (int ax = dim() - 1; ax >= 0; --ax) {
        v[ax] = static_cast<int>(idx % breakpoints[ax].size());
        idx /= breakpoints[ax].size();
    }
    return v;
}

double GridGeometry::cell_high(int axis, int i) const {
    return i + 1 < cells(axis) ? breakpoints[axis][i + 1] : kInf;
}

double GridGeometry::cell_volume(const std::vector<int>& v) const {
    double vol = 1;
    for (int ax = 0; ax < dim(); ++ax) {
        double side = cell_high(ax, v[ax]) - cell_low(ax, v[ax]);
        vol *= side;
    }
    return vol;
}

double GridGeometry::max_breakpoint_gap() const {
    double g = 0;
    for (const auto& bp : breakpoints)
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) g = std::max(g, bp[i + 1] - bp[i]);
    return g;
}

bool GridGeometry::contains(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != dim()) return false;
    for (int ax = 0; ax < dim(); ++ax)
        if (v[ax] < 0 || v[ax] >= cells(ax)) return false;
    return true;
}

std::optional<std::vector<int>> GridGeometry::locate(const std::vector<double>& point) const {
    std::vector<int> v(dim());
    for (int ax = 0; ax < dim(); ++ax) {
        const auto& bp = breakpoints[ax];
        if (point[ax] < bp.front()) return std::nullopt;
        auto it = std::upper_bound(bp.begin(), bp.end(), point[ax]);
        v[ax] = static_cast<int>(it - bp.begin()) - 1;
    }
    return v;
}

static void check_geometry(const GridGeometry& geo) {
    if (geo.dim() < 1) throw std::invalid_argument("geometry: dimension must be >= 1");
    for (const auto& bp : geo.breakpoints) {
        if (bp.empty()) throw std::invalid_argument("geometry: axis needs >= 1 breakpoint");
        for (std::size_t i = 0; i + 1 < bp.size(); ++i)
            if (!(bp[i] < bp[i + 1]))
                throw std::invalid_argument("geometry: breakpoints must strictly increase");
    }
}

// ---------------------------------------------------------------------------
// GridModule basics

int GridModule::hilbert_at(const std::vector<double>& point) const {
    auto v = geo.locate(point);
    return v ? dims[geo.linear(*v)] : 0;
}

int GridModule::max_dim() const {
    int m = 0;
    for (int d : dims) m = std::max(m, d);
    return m;
}

bool GridModule::is_zero() const {
    for (int d : dims)
        if (d != 0) return false;
    return true;
}

GridModule zero_module(const GridGeometry& geo, std::uint32_t mod) {
    check_geometry(geo);
    GridModule m;
    m.geo = geo;
    m.mod = mod;
    m.dims.assign(geo.vertex_count(), 0);
    m.maps.assign(geo.dim(), std::vector<Matrix>(geo.vertex_count()));
    for (int ax = 0; ax < geo.dim(); ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 < geo.cells(ax)) m.maps[ax][i] = Matrix(0, 0, mod);
        }
    return m;
}

GridModule interval_module(const GridGeometry& geo, const std::vector<int>& lo,
                           const std::vector<int>& hi, std::uint32_t mod) {
    check_geometry(geo);
    const int n = geo.dim();
    if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
        throw std::invalid_argument("interval_module: index arity mismatch");
    std::vector<int> h = hi;
    for (int ax = 0; ax < n; ++ax) {
        if (h[ax] < 0) h[ax] = geo.cells(ax) - 1;  // -1 means "through the last cell"
        if (lo[ax] < 0 || lo[ax] >= geo.cells(ax) || h[ax] >= geo.cells(ax))
            throw std::invalid_argument("interval_module: index out of range");
        if (h[ax] < lo[ax]) throw std::invalid_argument("interval_module: empty box (hi < lo)");
    }

    GridModule m = zero_module(geo, mod);
    auto inside = [&](const std::vector<int>& v) {
        for (int ax = 0; ax < n; ++ax)
            if (v[ax] < lo[ax] || v[ax] > h[ax]) return false;
        return true;
    };
    for (std::size_t i = 0; i < geo.vertex_count(); ++i)
        if (inside(geo.unlinear(i))) m.dims[i] = 1;
    for (int ax = 0; ax < n; ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            int du = m.dims[i], dw = m.dims[geo.linear(w)];
            m.maps[ax][i] = (du == 1 && dw == 1) ? Matrix::identity(1, mod) : Matrix(dw, du, mod);
        }
    return m;
}

std::optional<GridViolation> validate(const GridModule& m) {
    const int n = m.geo.dim();
    if (m.dims.size() != m.geo.vertex_count())
        return GridViolation{{}, -1, -1, "dims array size mismatch"};
    if (static_cast<int>(m.maps.size()) != n)
        return GridViolation{{}, -1, -1, "maps axis count mismatch"};
    for (int ax = 0; ax < n; ++ax) {
        if (m.maps[ax].size() != m.geo.vertex_count())
            return GridViolation{{}, ax, -1, "maps vertex count mismatch"};
        for (std::size_t i = 0; i < m.geo.vertex_count(); ++i) {
            auto u = m.geo.unlinear(i);
            if (u[ax] + 1 >= m.geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            const Matrix& f = m.maps[ax][i];
            if (f.rows != m.dims[m.geo.linear(w)] || f.cols != m.dims[i])
                return GridViolation{u, ax, -1, "map shape mismatch"};
            if (f.mod != m.mod) return GridViolation{u, ax, -1, "map modulus mismatch"};
            for (std::uint32_t x : f.a)
                if (x >= m.mod) return GridViolation{u, ax, -1, "entry out of field range"};
        }
    }
    // commutativity on every square face
    for (std::size_t i = 0; i < m.geo.vertex_count(); ++i) {
        auto u = m.geo.unlinear(i);
        for (int ai = 0; ai < n; ++ai) {
            if (u[ai] + 1 >= m.geo.cells(ai)) continue;
            for (int aj = ai + 1; aj < n; ++aj) {
                if (u[aj] + 1 >= m.geo.cells(aj)) continue;
                auto ui = u, uj = u;
                ++ui[ai];
                ++uj[aj];
                Matrix lhs = m.maps[aj][m.geo.linear(ui)] * m.maps[ai][i];
                Matrix rhs = m.maps[ai][m.geo.linear(uj)] * m.maps[aj][i];
                if (!(lhs == rhs)) return GridViolation{u, ai, aj, "commutativity violated"};
            }
        }
    }
    return std::nullopt;
}

Matrix structure_map(const GridModule& m, const std::vector<int>& u, const std::vector<int>& w) {
    const int n = m.geo.dim();
    for (int ax = 0; ax < n; ++ax)
        if (u[ax] > w[ax]) throw std::invalid_argument("structure_map: u must be <= w");
    Matrix acc = Matrix::identity(m.dim_at(u), m.mod);
    std::vector<int> pos = u;
    for (int ax = 0; ax < n; ++ax)
        while (pos[ax] < w[ax]) {
            acc = m.map(ax, pos) * acc;
            ++pos[ax];
        }
    return acc;
}

GridModule direct_sum(const GridModule& a, const GridModule& b) {
    if (!(a.geo == b.geo) || a.mod != b.mod)
        throw std::invalid_argument("direct_sum: geometry or modulus mismatch");
    GridModule s = zero_module(a.geo, a.mod);
    for (std::size_t i = 0; i < a.dims.size(); ++i) s.dims[i] = a.dims[i] + b.dims[i];
    for (int ax = 0; ax < a.geo.dim(); ++ax)
        for (std::size_t i = 0; i < a.dims.size(); ++i) {
            auto u = a.geo.unlinear(i);
            if (u[ax] + 1 >= a.geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            std::size_t wi = a.geo.linear(w);
            Matrix f(s.dims[wi], s.dims[i], a.mod);
            const Matrix& fa = a.maps[ax][i];
            const Matrix& fb = b.maps[ax][i];
            for (int r = 0; r < fa.rows; ++r)
                for (int c = 0; c < fa.cols; ++c) f.at(r, c) = fa.at(r, c);
            for (int r = 0; r < fb.rows; ++r)
                for (int c = 0; c < fb.cols; ++c) f.at(fa.rows + r, fa.cols + c) = fb.at(r, c);
            s.maps[ax][i] = std::move(f);
        }
    return s;
}

// ---------------------------------------------------------------------------
// Morphisms

std::optional<GridViolation> validate(const ModuleMorphism& f) {
    if (!(f.source.geo == f.target.geo))
        return GridViolation{{}, -1, -1, "morphism endpoints on different geometries"};
    const GridGeometry& geo = f.source.geo;
    if (f.components.size() != geo.vertex_count())
        return GridViolation{{}, -1, -1, "component count mismatch"};
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
        const Matrix& c = f.components[i];
        if (c.rows != f.target.dims[i] || c.cols != f.source.dims[i])
            return GridViolation{geo.unlinear(i), -1, -1, "component shape mismatch"};
    }
    for (int ax = 0; ax < geo.dim(); ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            std::size_t wi = geo.linear(w);
            Matrix lhs = f.target.maps[ax][i] * f.components[i];
            Matrix rhs = f.components[wi] * f.source.maps[ax][i];
            if (!(lhs == rhs)) return GridViolation{u, ax, -1, "naturality violated"};
        }
    return std::nullopt;
}

ModuleMorphism identity_morphism(const GridModule& m) {
    ModuleMorphism f;
    f.source = m;
    f.target = m;
    f.components.reserve(m.dims.size());
    for (int d : m.dims) f.components.push_back(Matrix::identity(d, m.mod));
    return f;
}

ModuleMorphism zero_morphism(const GridModule& source, const GridModule& target) {
    ModuleMorphism f;
    f.source = source;
    f.target = target;
    f.components.reserve(source.dims.size());
    for (std::size_t i = 0; i < source.dims.size(); ++i)
        f.components.push_back(Matrix(target.dims[i], source.dims[i], source.mod));
    return f;
}

// ---------------------------------------------------------------------------
// Refinement

GridModule refine_to(const GridModule& m, const GridGeometry& fine) {
    check_geometry(fine);
    if (fine.dim() != m.geo.dim()) throw std::invalid_argument("refine_to: dimension mismatch");
    for (int ax = 0; ax < m.geo.dim(); ++ax)
        for (double bp : m.geo.breakpoints[ax])
            if (!std::binary_search(fine.breakpoints[ax].begin(), fine.breakpoints[ax].end(), bp))
                throw std::invalid_argument("refine_to: fine grid misses a breakpoint");

    // fine cell index -> original cell index, or -1 below the original grid
    std::vector<std::vector<int>> orig(fine.dim());
    for (int ax = 0; ax < fine.dim(); ++ax) {
        const auto& fbp = fine.breakpoints[ax];
        const auto& obp = m.geo.breakpoints[ax];
        orig[ax].resize(fbp.size());
        for (std::size_t i = 0; i < fbp.size(); ++i) {
            auto it = std::upper_bound(obp.begin(), obp.end(), fbp[i]);
            orig[ax][i] = static_cast<int>(it - obp.begin()) - 1;
        }
    }
    auto orig_vertex = [&](const std::vector<int>& fv) {
        std::vector<int> ov(fine.dim());
        for (int ax = 0; ax < fine.dim(); ++ax) {
            ov[ax] = orig[ax][fv[ax]];
            if (ov[ax] < 0) return std::optional<std::vector<int>>{};
        }
        return std::optional<std::vector<int>>{ov};
    };

    GridModule r = zero_module(fine, m.mod);
    for (std::size_t i = 0; i < fine.vertex_count(); ++i) {
        auto ov = orig_vertex(fine.unlinear(i));
        r.dims[i] = ov ? m.dims[m.geo.linear(*ov)] : 0;
    }
    for (int ax = 0; ax < fine.dim(); ++ax)
        for (std::size_t i = 0; i < fine.vertex_count(); ++i) {
            auto u = fine.unlinear(i);
            if (u[ax] + 1 >= fine.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            auto ou = orig_vertex(u);
            auto ow = orig_vertex(w);
            int du = r.dims[i], dw = r.dims[fine.linear(w)];
            if (!ou || !ow) {
                r.maps[ax][i] = Matrix(dw, du, m.mod);  // from or to below the grid: zero
            } else if ((*ou)[ax] == (*ow)[ax]) {
                r.maps[ax][i] = Matrix::identity(du, m.mod);  // inside one original cell
            } else {
                r.maps[ax][i] = m.map(ax, *ou);
            }
        }
    return r;
}

std::pair<GridModule, GridModule> common_refinement(const GridModule& a, const GridModule& b) {
    if (a.geo.dim() != b.geo.dim())
        throw std::invalid_argument("common_refinement: dimension mismatch");
    GridGeometry fine;
    fine.breakpoints.resize(a.geo.dim());
    for (int ax = 0; ax < a.geo.dim(); ++ax) {
        std::set<double> s(a.geo.breakpoints[ax].begin(), a.geo.breakpoints[ax].end());
        s.insert(b.geo.breakpoints[ax].begin(), b.geo.breakpoints[ax].end());
        fine.breakpoints[ax].assign(s.begin(), s.end());
    }
    return {refine_to(a, fine), refine_to(b, fine)};
}

// ---------------------------------------------------------------------------
// Sub/quotient machinery

SubmodulePair submodule_generated(const GridModule& m, const std::vector<Generator>& gens) {
    const GridGeometry& geo = m.geo;
    for (const Generator& g : gens) {
        if (!geo.contains(g.vertex)) throw std::invalid_argument("generator vertex out of range");
        if (static_cast<int>(g.coeffs.size()) != m.dim_at(g.vertex))
            throw std::invalid_argument("generator coefficient length mismatch");
    }

    std::vector<Matrix> basis(geo.vertex_count());
    // linear order is lexicographic, so every u <= w is visited before w
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
        auto w = geo.unlinear(i);
        Matrix cand(m.dims[i], 0, m.mod);
        for (int ax = 0; ax < geo.dim(); ++ax) {
            if (w[ax] == 0) continue;
            auto u = w;
            --u[ax];
            std::size_t ui = geo.linear(u);
            if (basis[ui].cols > 0) cand = hstack(cand, m.maps[ax][ui] * basis[ui]);
        }
        for (const Generator& g : gens)
            if (g.vertex == w) {
                Matrix col(m.dims[i], 1, m.mod);
                for (int r = 0; r < m.dims[i]; ++r) col.at(r, 0) = g.coeffs[r] % m.mod;
                cand = hstack(cand, col);
            }
        basis[i] = column_space_basis(cand);
    }

    GridModule s = zero_module(geo, m.mod);
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) s.dims[i] = basis[i].cols;
    for (int ax = 0; ax < geo.dim(); ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            std::size_t wi = geo.linear(w);
            auto x = solve_in_span(basis[wi], m.maps[ax][i] * basis[i]);
            if (!x) throw std::logic_error("submodule sweep lost closure");  // cannot happen
            s.maps[ax][i] = std::move(*x);
        }

    ModuleMorphism incl;
    incl.source = s;
    incl.target = m;
    incl.components = std::move(basis);
    return {std::move(s), std::move(incl)};
}

/// Quotient of m by the per-vertex subspaces spanned by sub_basis columns
/// (each must be closed under the structure maps).
static QuotientPair quotient_by_subspaces(const GridModule& m, const std::vector<Matrix>& sub_basis) {
    const GridGeometry& geo = m.geo;
    std::vector<Matrix> reps(geo.vertex_count());   // representatives of quotient basis in m
    std::vector<Matrix> projs(geo.vertex_count());  // m -> quotient coordinates
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
        const Matrix& sub = sub_basis[i];
        int d = m.dims[i];
        reps[i] = quotient_basis(sub, d);
        Matrix full = hstack(sub, reps[i]);  // invertible d x d
        auto inv = solve_in_span(full, Matrix::identity(d, m.mod));
        if (!inv) throw std::logic_error("quotient: completed basis not invertible");
        Matrix pr(reps[i].cols, d, m.mod);
        for (int r = 0; r < pr.rows; ++r)
            for (int c = 0; c < d; ++c) pr.at(r, c) = inv->at(sub.cols + r, c);
        projs[i] = std::move(pr);
    }

    GridModule q = zero_module(geo, m.mod);
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) q.dims[i] = reps[i].cols;
    for (int ax = 0; ax < geo.dim(); ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            std::size_t wi = geo.linear(w);
            q.maps[ax][i] = projs[wi] * (m.maps[ax][i] * reps[i]);
        }

    ModuleMorphism proj;
    proj.source = m;
    proj.target = q;
    proj.components = std::move(projs);
    return {std::move(q), std::move(proj)};
}

QuotientPair quotient(const GridModule& m, const ModuleMorphism& incl) {
    if (!(incl.target.geo == m.geo))
        throw std::invalid_argument("quotient: inclusion does not land in m");
    std::vector<Matrix> sub(m.geo.vertex_count());
    for (std::size_t i = 0; i < m.geo.vertex_count(); ++i) {
        const Matrix& c = incl.components[i];
        if (c.rows != m.dims[i]) throw std::invalid_argument("quotient: component row mismatch");
        if (rank(c) != c.cols)
            throw std::invalid_argument("quotient: inclusion not injective at a vertex");
        sub[i] = c;
    }
    return quotient_by_subspaces(m, sub);
}

SubmodulePair kernel(const ModuleMorphism& f) {
    const GridGeometry& geo = f.source.geo;
    std::vector<Matrix> basis(geo.vertex_count());
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) basis[i] = kernel_basis(f.components[i]);

    GridModule k = zero_module(geo, f.source.mod);
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) k.dims[i] = basis[i].cols;
    for (int ax = 0; ax < geo.dim(); ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            auto x = solve_in_span(basis[geo.linear(w)], f.source.maps[ax][i] * basis[i]);
            if (!x) throw std::logic_error("kernel is not a subfunctor");  // cannot happen
            k.maps[ax][i] = std::move(*x);
        }

    ModuleMorphism incl;
    incl.source = k;
    incl.target = f.source;
    incl.components = std::move(basis);
    return {std::move(k), std::move(incl)};
}

QuotientPair cokernel(const ModuleMorphism& f) {
    std::vector<Matrix> image(f.target.geo.vertex_count());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = column_space_basis(f.components[i]);
    return quotient_by_subspaces(f.target, image);
}

// ---------------------------------------------------------------------------
// Faces, localisation, local cohomology, quotient restriction

Face::Face(std::vector<int> ax) : axes(std::move(ax)) {
    if (axes.empty()) throw std::invalid_argument("face: empty axis set");
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
    if (axes.front() < 0) throw std::invalid_argument("face: negative axis");
}

bool Face::contains(int axis) const {
    return std::binary_search(axes.begin(), axes.end(), axis);
}

std::vector<int> Face::complement(int n) const {
    std::vector<int> out;
    for (int ax = 0; ax < n; ++ax)
        if (!contains(ax)) out.push_back(ax);
    return out;
}

GridModule localization(const GridModule& m, const Face& rho) {
    const GridGeometry& geo = m.geo;
    auto clamp = [&](std::vector<int> v) {
        for (int ax : rho.axes) v[ax] = geo.cells(ax) - 1;
        return v;
    };
    GridModule r = zero_module(geo, m.mod);
    for (std::size_t i = 0; i < geo.vertex_count(); ++i)
        r.dims[i] = m.dims[geo.linear(clamp(geo.unlinear(i)))];
    for (int ax = 0; ax < geo.dim(); ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            if (rho.contains(ax))
                r.maps[ax][i] = Matrix::identity(r.dims[i], m.mod);
            else
                r.maps[ax][i] = m.map(ax, clamp(u));
        }
    return r;
}

SubmodulePair local_cohomology(const GridModule& m, const Face& tau) {
    const GridGeometry& geo = m.geo;
    if (tau.axes.back() >= geo.dim()) throw std::invalid_argument("local_cohomology: axis out of range");

    std::vector<Matrix> basis(geo.vertex_count());
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
        auto u = geo.unlinear(i);
        // stack the push-to-infinity maps along each tau axis; intersect kernels
        Matrix stacked(0, m.dims[i], m.mod);
        for (int ax : tau.axes) {
            auto w = u;
            w[ax] = geo.cells(ax) - 1;
            stacked = vstack(stacked, structure_map(m, u, w));
        }
        basis[i] = kernel_basis(stacked);
    }

    GridModule h = zero_module(geo, m.mod);
    for (std::size_t i = 0; i < geo.vertex_count(); ++i) h.dims[i] = basis[i].cols;
    for (int ax = 0; ax < geo.dim(); ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto x = solve_in_span(basis[geo.linear([&] {
                                       auto w = u;
                                       ++w[ax];
                                       return w;
                                   }())],
                                   m.maps[ax][i] * basis[i]);
            if (!x) throw std::logic_error("local cohomology is not a subfunctor");  // cannot happen
            h.maps[ax][i] = std::move(*x);
        }

    ModuleMorphism incl;
    incl.source = h;
    incl.target = m;
    incl.components = std::move(basis);
    return {std::move(h), std::move(incl)};
}

GridModule quotient_restriction(const GridModule& m, const Face& tau) {
    const GridGeometry& geo = m.geo;
    if (tau.axes.back() >= geo.dim())
        throw std::invalid_argument("quotient_restriction: axis out of range");
    std::vector<int> rem = tau.complement(geo.dim());

    std::vector<int> top(geo.dim(), 0);
    for (int ax : tau.axes) top[ax] = geo.cells(ax) - 1;

    if (rem.empty()) {
        // single vector space, represented as a 1-axis grid with one cell
        GridGeometry g1;
        g1.breakpoints = {{0.0}};
        GridModule r = zero_module(g1, m.mod);
        r.dims[0] = m.dims[geo.linear(top)];
        return r;
    }

    GridGeometry rgeo;
    for (int ax : rem) rgeo.breakpoints.push_back(geo.breakpoints[ax]);
    auto embed = [&](const std::vector<int>& v) {
        std::vector<int> full = top;
        for (std::size_t j = 0; j < rem.size(); ++j) full[rem[j]] = v[j];
        return full;
    };

    GridModule r = zero_module(rgeo, m.mod);
    for (std::size_t i = 0; i < rgeo.vertex_count(); ++i)
        r.dims[i] = m.dims[geo.linear(embed(rgeo.unlinear(i)))];
    for (std::size_t j = 0; j < rem.size(); ++j)
        for (std::size_t i = 0; i < rgeo.vertex_count(); ++i) {
            auto u = rgeo.unlinear(i);
            if (u[static_cast<int>(j)] + 1 >= rgeo.cells(static_cast<int>(j))) continue;
            r.maps[j][i] = m.map(rem[j], embed(u));
        }
    return r;
}

}  // namespace amp
