#include "amp/matrix.hpp"

#include <stdexcept>

namespace amp {

Matrix::Matrix(int r, int c, std::uint32_t p) : rows(r), cols(c), mod(p) {
    if (r < 0 || c < 0) throw std::invalid_argument("matrix: negative shape");
    if (p < 2) throw std::invalid_argument("matrix: modulus must be >= 2");
    a.assign(static_cast<std::size_t>(r) * c, 0);
}

Matrix Matrix::identity(int n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (std::uint32_t x : a)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix: shape mismatch in product");
    Matrix r(rows, o.cols, mod);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            std::uint64_t x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = static_cast<std::uint32_t>((r.at(i, j) + x * o.at(k, j)) % mod);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix: shape mismatch in sum");
    Matrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + o.a[i]) % mod;
    return r;
}

std::uint32_t fp_inv(std::uint32_t x, std::uint32_t p) {
    // Fermat: x^(p-2) mod p, p prime.
    std::uint64_t b = x % p, e = p - 2, r = 1;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
    Matrix r(a.rows, a.cols + b.cols, a.mod);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
    Matrix r(a.rows + b.rows, a.cols, a.mod);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
    return r;
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
    const std::uint32_t p = m.mod;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        std::uint64_t inv = fp_inv(m.at(row, col), p);
        for (int j = col; j < m.cols; ++j)
            m.at(row, j) = static_cast<std::uint32_t>(inv * m.at(row, j) % p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            std::uint64_t f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + (p - 1) * f % p * m.at(row, j)) % p);
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

int rank(const Matrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

Matrix kernel_basis(const Matrix& m) {
    std::vector<int> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : piv) is_pivot[c] = true;

    int nfree = m.cols - static_cast<int>(piv.size());
    Matrix k(m.cols, nfree, m.mod);
    int out = 0;
    for (int col = 0; col < m.cols; ++col) {
        if (is_pivot[col]) continue;
        k.at(col, out) = 1;
        // pivot rows read back the dependent coordinates
        for (std::size_t pi = 0; pi < piv.size(); ++pi) {
            std::uint32_t v = r.at(static_cast<int>(pi), col);
            if (v != 0) k.at(piv[pi], out) = m.mod - v;
        }
        ++out;
    }
    return k;
}

Matrix column_space_basis(const Matrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    Matrix b(m.rows, static_cast<int>(piv.size()), m.mod);
    for (std::size_t j = 0; j < piv.size(); ++j)
        for (int i = 0; i < m.rows; ++i) b.at(i, static_cast<int>(j)) = m.at(i, piv[j]);
    return b;
}

std::optional<Matrix> solve_in_span(const Matrix& basis, const Matrix& target) {
    if (basis.rows != target.rows) throw std::invalid_argument("solve_in_span: row mismatch");
    std::vector<int> piv;
    Matrix r = rref(hstack(basis, target), &piv);
    for (int c : piv)
        if (c >= basis.cols) return std::nullopt;  // target column outside span

    Matrix x(basis.cols, target.cols, basis.mod);
    for (std::size_t pi = 0; pi < piv.size(); ++pi)
        for (int j = 0; j < target.cols; ++j)
            x.at(piv[pi], j) = r.at(static_cast<int>(pi), basis.cols + j);
    return x;
}

Matrix quotient_basis(const Matrix& sub, int ambient_dim) {
    if (sub.rows != ambient_dim)
        throw std::invalid_argument("quotient_basis: sub rows != ambient_dim");
    Matrix acc = sub;
    int base_rank = rank(sub);
    Matrix out(ambient_dim, ambient_dim - base_rank, sub.mod);
    int taken = 0;
    for (int i = 0; i < ambient_dim && taken < out.cols; ++i) {
        Matrix e(ambient_dim, 1, sub.mod);
        e.at(i, 0) = 1;
        Matrix cand = hstack(acc, e);
        if (rank(cand) > rank(acc)) {
            out.at(i, taken) = 1;
            ++taken;
            acc = cand;
        }
    }
    return out;
}

}  // namespace amp
