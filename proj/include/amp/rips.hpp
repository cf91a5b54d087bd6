#pragma once

#include <limits>
#include <string>
#include <vector>

#include "amp/barcode.hpp"
#include "amp/grid_module.hpp"

namespace amp {

/// Symmetric nonnegative dissimilarity matrix with zero diagonal.
/// The triangle inequality is not required.
struct DistMatrix {
    int n = 0;
    std::vector<double> d;  // n*n, row-major

    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }

    static DistMatrix from_points(const std::vector<std::vector<double>>& pts);
    void check() const;  // throws on asymmetry / negative entries
};

/// Vietoris-Rips persistence barcodes over F_2, one per homology degree
/// 0..max_dim (max_dim <= 2). Simplices with diameter > max_radius are not
/// built; unpaired classes become [birth, inf). Zero-persistence pairs are
/// dropped.
std::vector<Barcode> vr_barcodes(const DistMatrix& d, int max_dim,
                                 double max_radius = std::numeric_limits<double>::infinity());

/// Hilbert function of a function-Rips bifiltration: cell (i, j) holds the
/// degree-`degree` Betti number of the Rips complex on the points with
/// density >= density_bps[i], at scale radius_bps[j]. Returned as a grid
/// module with zero maps (axis 0 = density, axis 1 = radius), ready for the
/// L^p Hilbert distance.
GridModule bifiltration_hilbert(const DistMatrix& d, const std::vector<double>& density,
                                const std::vector<double>& density_bps,
                                const std::vector<double>& radius_bps, int degree);

struct PointCloud {
    std::vector<std::vector<double>> points;
    std::vector<double> density;  // empty unless a density column was given
};

/// CSV: one point per row, comma-separated coordinates; optional density
/// column selected by 0-based index (-1 = none).
PointCloud load_points_csv(const std::string& path, int density_col = -1);
DistMatrix load_matrix_csv(const std::string& path);

}  // namespace amp
