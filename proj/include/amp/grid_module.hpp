#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amp/matrix.hpp"

namespace amp {

/// Finite grid of cells tiling [bp[0], +inf) on each axis.
///
/// Cell i on an axis is [bp[i], bp[i+1]); the last cell is [bp[last], +inf).
/// A module represented on this geometry is zero at any point below bp[0]
/// on any axis. This is the concrete form of a cubically encoded module.
struct GridGeometry {
    std::vector<std::vector<double>> breakpoints;  // per axis, strictly increasing, >= 1 entry

    int dim() const { return static_cast<int>(breakpoints.size()); }
    int cells(int axis) const { return static_cast<int>(breakpoints[axis].size()); }
    std::size_t vertex_count() const;

    /// Row-major linearization, last axis fastest.
    std::size_t linear(const std::vector<int>& v) const;
    std::vector<int> unlinear(std::size_t idx) const;

    double cell_low(int axis, int i) const { return breakpoints[axis][i]; }
    /// +inf for the last cell on the axis.
    double cell_high(int axis, int i) const;
    /// Product of side lengths; +inf when any side is unbounded.
    double cell_volume(const std::vector<int>& v) const;

    /// Largest finite gap between consecutive breakpoints across all axes.
    double max_breakpoint_gap() const;

    bool contains(const std::vector<int>& v) const;
    /// Cell index containing a real point, or nullopt below bp[0] on some axis.
    std::optional<std::vector<int>> locate(const std::vector<double>& point) const;

    bool operator==(const GridGeometry&) const = default;
};

struct GridViolation {
    std::vector<int> vertex;
    int axis_i = -1;
    int axis_j = -1;
    std::string what;
};

/// Persistence module on a grid: one F_p vector space per vertex (cell)
/// and one structure matrix per axis step, commuting across square faces.
struct GridModule {
    GridGeometry geo;
    std::uint32_t mod = 2;
    std::vector<int> dims;                    // per linear vertex
    std::vector<std::vector<Matrix>> maps;    // maps[axis][linear(u)], shape dims(u+e_axis) x dims(u)

    int dim_at(const std::vector<int>& v) const { return dims[geo.linear(v)]; }
    const Matrix& map(int axis, const std::vector<int>& u) const { return maps[axis][geo.linear(u)]; }
    Matrix& map(int axis, const std::vector<int>& u) { return maps[axis][geo.linear(u)]; }

    /// Pointwise dimension at a real point (0 below the grid origin).
    int hilbert_at(const std::vector<double>& point) const;

    int max_dim() const;
    bool is_zero() const;
};

/// Zero module on a geometry (all dims 0, empty maps of correct shape).
GridModule zero_module(const GridGeometry& geo, std::uint32_t mod = 2);

/// Interval module of the index box [lo, hi]: dimension 1 on cells inside,
/// identity maps within the support, zero maps across the boundary.
/// hi entries may be -1, meaning "through the last cell" (the support then
/// extends to +inf on that axis).
GridModule interval_module(const GridGeometry& geo, const std::vector<int>& lo,
                           const std::vector<int>& hi, std::uint32_t mod = 2);

/// Shape and commutativity check; reports the first violating vertex.
std::optional<GridViolation> validate(const GridModule& m);

/// Composite structure map along any monotone lattice path u -> w
/// (well defined by commutativity). Requires u <= w componentwise.
Matrix structure_map(const GridModule& m, const std::vector<int>& u, const std::vector<int>& w);

GridModule direct_sum(const GridModule& a, const GridModule& b);

/// Morphism of modules on a shared geometry: one matrix per vertex,
/// commuting with the structure maps of source and target.
struct ModuleMorphism {
    GridModule source;
    GridModule target;
    std::vector<Matrix> components;  // per linear vertex, target-dims x source-dims

    const Matrix& at(const std::vector<int>& v) const { return components[source.geo.linear(v)]; }
};

std::optional<GridViolation> validate(const ModuleMorphism& f);

ModuleMorphism identity_morphism(const GridModule& m);
ModuleMorphism zero_morphism(const GridModule& source, const GridModule& target);

/// Re-represent m on a finer geometry (must contain all of m's breakpoints).
/// Cells of the fine grid below m's origin get dimension 0; maps inside an
/// original cell are identities. Hilbert functions agree at every point.
GridModule refine_to(const GridModule& m, const GridGeometry& fine);

/// Shared refinement: per-axis breakpoint union, both modules re-represented.
std::pair<GridModule, GridModule> common_refinement(const GridModule& a, const GridModule& b);

struct SubmodulePair {
    GridModule sub;
    ModuleMorphism incl;  // sub -> ambient, componentwise injective
};

struct QuotientPair {
    GridModule quot;
    ModuleMorphism proj;  // ambient -> quot, componentwise surjective
};

/// Homogeneous generator: coefficient vector at a vertex.
struct Generator {
    std::vector<int> vertex;
    std::vector<std::uint32_t> coeffs;  // length dims(vertex)
};

/// Submodule generated by pushforwards of the generators, computed by a
/// monotone sweep. Returns a valid module with a componentwise inclusion.
SubmodulePair submodule_generated(const GridModule& m, const std::vector<Generator>& gens);

/// Quotient by an injective inclusion; proj . incl = 0 and
/// dim Q = dim M - dim A at every vertex.
QuotientPair quotient(const GridModule& m, const ModuleMorphism& incl);

SubmodulePair kernel(const ModuleMorphism& f);
QuotientPair cokernel(const ModuleMorphism& f);

/// Face of the positive cone: a nonempty subset of axes (0-based, sorted).
struct Face {
    std::vector<int> axes;

    Face() = default;
    explicit Face(std::vector<int> ax);
    bool contains(int axis) const;
    /// The orthogonal face (remaining axes); may be empty.
    std::vector<int> complement(int n) const;
};

/// Localisation at a face: each rho-axis index clamped to its last cell.
/// Maps along rho-axes become identities; the rest come from the clamped
/// slice. Legitimate because the last (infinite) cell is stable.
GridModule localization(const GridModule& m, const Face& rho);

/// 0-th local cohomology H^0_tau: at each vertex, the intersection of the
/// kernels of the push-to-infinity maps along each tau-axis. A submodule.
SubmodulePair local_cohomology(const GridModule& m, const Face& tau);

/// Quotient restriction M/tau: directed colimit along tau, evaluated at the
/// last tau-cells (where the colimit stabilizes), indexed by the remaining
/// axes. When tau covers every axis the result is a single vector space,
/// represented as a 1-axis grid with one cell.
GridModule quotient_restriction(const GridModule& m, const Face& tau);

}  // namespace amp
