#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace amp {

/// Dense row-major matrix over the prime field F_p.
///
/// All arithmetic is exact mod p. Row reduction uses first-nonzero
/// pivoting so every derived basis is deterministic.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::uint32_t mod = 2;
    std::vector<std::uint32_t> a;  // rows*cols entries, each in [0, mod)

    Matrix() = default;
    Matrix(int r, int c, std::uint32_t p);

    static Matrix identity(int n, std::uint32_t p);

    std::uint32_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
};

std::uint32_t fp_inv(std::uint32_t x, std::uint32_t p);

/// Columns of `a` followed by columns of `b` (equal row counts).
Matrix hstack(const Matrix& a, const Matrix& b);
/// Rows of `a` followed by rows of `b` (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; pivot column indices appended to `pivots`.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);

int rank(const Matrix& m);

/// Columns form a deterministic basis of the null space {x : m x = 0}.
/// Column count equals cols(m) - rank(m).
Matrix kernel_basis(const Matrix& m);

/// Deterministic basis of the column space (the pivot columns of m).
Matrix column_space_basis(const Matrix& m);

/// Solve basis * X = target; nullopt when a target column is outside the span.
std::optional<Matrix> solve_in_span(const Matrix& basis, const Matrix& target);

/// Standard basis vectors extending sub's column space to F_p^ambient_dim.
/// Together with sub's columns they span the whole space; the returned
/// columns represent a basis of the quotient F_p^ambient_dim / col(sub).
Matrix quotient_basis(const Matrix& sub, int ambient_dim);

}  // namespace amp
