#include "amp/rips.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace amp {

static constexpr double kInf = std::numeric_limits<double>::infinity();

DistMatrix DistMatrix::from_points(const std::vector<std::vector<double>>& pts) {
    DistMatrix m;
    m.n = static_cast<int>(pts.size());
    m.d.assign(static_cast<std::size_t>(m.n) * m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < pts[i].size(); ++k) {
                double t = pts[i][k] - pts[j][k];
                s += t * t;
            }
            m.at(i, j) = m.at(j, i) = std::sqrt(s);
        }
    return m;
}

void DistMatrix::check() const {
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0) throw std::invalid_argument("distance matrix: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (at(i, j) < 0) throw std::invalid_argument("distance matrix: negative entry");
            if (at(i, j) != at(j, i)) throw std::invalid_argument("distance matrix: not symmetric");
        }
    }
}

namespace {

struct Simplex {
    std::vector<int> verts;  // ascending
    double filt = 0;
};

double diameter(const DistMatrix& d, const std::vector<int>& verts) {
    double m = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            m = std::max(m, d.at(verts[i], verts[j]));
    return m;
}

void enumerate_simplices(const DistMatrix& d, int top_dim, double max_radius,
                         const std::vector<int>& points, std::vector<Simplex>& out) {
    std::vector<int> cur;
    // depth-first over ascending vertex tuples
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!cur.empty()) {
            double f = diameter(d, cur);
            if (f <= max_radius) out.push_back({cur, f});
            else return;  // supersets only get bigger diameters
        }
        if (static_cast<int>(cur.size()) == top_dim + 1) return;
        for (std::size_t i = start; i < points.size(); ++i) {
            cur.push_back(points[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// Columns over F_2 as ascending index vectors; returns persistence pairs.
struct Reduction {
    std::vector<std::vector<int>> cols;
    std::vector<int> pivot_owner;  // pivot row -> column index, -1 when free

    explicit Reduction(std::size_t ncols) : cols(ncols), pivot_owner(ncols, -1) {}

    static void add_into(std::vector<int>& dst, const std::vector<int>& src) {
        std::vector<int> out;
        std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                      std::back_inserter(out));
        dst = std::move(out);
    }

    // returns the pivot row the column settles on, or -1 if it vanishes
    int reduce_column(int j, std::vector<int> col) {
        while (!col.empty()) {
            int low = col.back();
            if (pivot_owner[low] < 0) {
                pivot_owner[low] = j;
                cols[j] = std::move(col);
                return low;
            }
            add_into(col, cols[pivot_owner[low]]);
        }
        return -1;
    }
};

}  // namespace

std::vector<Barcode> vr_barcodes(const DistMatrix& d, int max_dim, double max_radius) {
    if (max_dim < 0 || max_dim > 2)
        throw std::invalid_argument("vr_barcodes: max_dim must be in [0, 2]");
    d.check();

    std::vector<int> points(d.n);
    for (int i = 0; i < d.n; ++i) points[i] = i;
    std::vector<Simplex> simplices;
    enumerate_simplices(d, max_dim + 1, max_radius, points, simplices);
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.filt != b.filt) return a.filt < b.filt;
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        return a.verts < b.verts;
    });

    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < simplices.size(); ++i) index_of[simplices[i].verts] = static_cast<int>(i);

    Reduction red(simplices.size());
    std::vector<bool> paired(simplices.size(), false);
    std::vector<bool> positive(simplices.size(), false);
    std::vector<Barcode> bars(max_dim + 1);

    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const Simplex& s = simplices[j];
        if (s.verts.size() == 1) {
            positive[j] = true;  // vertices have empty boundary
            continue;
        }
        std::vector<int> col;
        std::vector<int> face;
        for (std::size_t omit = 0; omit < s.verts.size(); ++omit) {
            face.clear();
            for (std::size_t t = 0; t < s.verts.size(); ++t)
                if (t != omit) face.push_back(s.verts[t]);
            col.push_back(index_of.at(face));
        }
        std::sort(col.begin(), col.end());
        int low = red.reduce_column(static_cast<int>(j), std::move(col));
        if (low >= 0) {
            paired[low] = true;
            paired[j] = true;
            int deg = static_cast<int>(simplices[low].verts.size()) - 1;
            double birth = simplices[low].filt, death = s.filt;
            if (deg <= max_dim && birth < death) bars[deg].push_back({birth, death});
        } else {
            positive[j] = true;
        }
    }
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (paired[i] || !positive[i]) continue;
        int deg = static_cast<int>(simplices[i].verts.size()) - 1;
        if (deg <= max_dim) bars[deg].push_back({simplices[i].filt, kInf});
    }
    return bars;
}

static int f2_column_rank(std::vector<std::vector<int>> cols) {
    // columns as ascending row-index lists
    std::map<int, std::vector<int>> pivots;
    int rank = 0;
    for (auto& col : cols) {
        while (!col.empty()) {
            auto it = pivots.find(col.back());
            if (it == pivots.end()) {
                pivots[col.back()] = col;
                ++rank;
                break;
            }
            Reduction::add_into(col, it->second);
        }
    }
    return rank;
}

static int betti_number(const DistMatrix& d, const std::vector<int>& subset, double radius,
                        int degree) {
    std::vector<Simplex> simplices;
    enumerate_simplices(d, degree + 1, radius, subset, simplices);

    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < simplices.size(); ++i) index_of[simplices[i].verts] = static_cast<int>(i);

    auto boundary_cols = [&](int dim) {
        std::vector<std::vector<int>> cols;
        for (const Simplex& s : simplices) {
            if (static_cast<int>(s.verts.size()) != dim + 1) continue;
            std::vector<int> col;
            std::vector<int> face;
            for (std::size_t omit = 0; omit < s.verts.size(); ++omit) {
                face.clear();
                for (std::size_t t = 0; t < s.verts.size(); ++t)
                    if (t != omit) face.push_back(s.verts[t]);
                col.push_back(index_of.at(face));
            }
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        return cols;
    };

    int n_deg = 0;
    for (const Simplex& s : simplices)
        if (static_cast<int>(s.verts.size()) == degree + 1) ++n_deg;
    int rank_d = degree == 0 ? 0 : f2_column_rank(boundary_cols(degree));
    int rank_d1 = f2_column_rank(boundary_cols(degree + 1));
    return n_deg - rank_d - rank_d1;
}

GridModule bifiltration_hilbert(const DistMatrix& d, const std::vector<double>& density,
                                const std::vector<double>& density_bps,
                                const std::vector<double>& radius_bps, int degree) {
    if (static_cast<int>(density.size()) != d.n)
        throw std::invalid_argument("bifiltration: density length mismatch");
    for (const auto* bps : {&density_bps, &radius_bps}) {
        if (bps->empty()) throw std::invalid_argument("bifiltration: empty breakpoint list");
        for (std::size_t i = 0; i + 1 < bps->size(); ++i)
            if (!((*bps)[i] < (*bps)[i + 1]))
                throw std::invalid_argument("bifiltration: breakpoints not increasing");
    }
    d.check();

    GridGeometry geo;
    geo.breakpoints = {density_bps, radius_bps};
    GridModule m = zero_module(geo, 2);
    for (std::size_t i = 0; i < density_bps.size(); ++i) {
        std::vector<int> subset;
        for (int p = 0; p < d.n; ++p)
            if (density[p] >= density_bps[i]) subset.push_back(p);
        for (std::size_t j = 0; j < radius_bps.size(); ++j) {
            std::vector<int> v = {static_cast<int>(i), static_cast<int>(j)};
            m.dims[geo.linear(v)] = betti_number(d, subset, radius_bps[j], degree);
        }
    }
    // zero maps of matching shapes
    for (int ax = 0; ax < 2; ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            m.maps[ax][i] = Matrix(m.dims[geo.linear(w)], m.dims[i], 2);
        }
    return m;
}

PointCloud load_points_csv(const std::string& path, int density_col) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file: " + path);
    PointCloud pc;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ','))
            try {
                row.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw std::runtime_error("point csv parse error at line " + std::to_string(lineno));
            }
        if (row.empty()) continue;
        if (density_col >= 0) {
            if (density_col >= static_cast<int>(row.size()))
                throw std::runtime_error("density column out of range at line " +
                                         std::to_string(lineno));
            pc.density.push_back(row[density_col]);
            row.erase(row.begin() + density_col);
        }
        pc.points.push_back(std::move(row));
    }
    return pc;
}

DistMatrix load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    DistMatrix m;
    m.n = static_cast<int>(rows.size());
    m.d.assign(static_cast<std::size_t>(m.n) * m.n, 0);
    for (int i = 0; i < m.n; ++i) {
        if (static_cast<int>(rows[i].size()) != m.n)
            throw std::runtime_error("matrix csv is not square");
        for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[i][j];
    }
    m.check();
    return m;
}

}  // namespace amp
