#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

/// Dense row-major matrix over F_p. The field is passed to each operation.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, Vector data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw InvalidArgument("Matrix: entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    const Vector& data() const { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

// ---- vector helpers ----

inline bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

/// y += a * x
inline void axpy(const PrimeField& F, Scalar a, std::span<const Scalar> x, std::span<Scalar> y) {
    if (a == 0) return;
    const std::uint64_t p = F.p();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) y[i] = static_cast<Scalar>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
}

inline Vector scaled(const PrimeField& F, Scalar a, std::span<const Scalar> x) {
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.mul(a, x[i]);
    return r;
}

inline Vector add(const PrimeField& F, std::span<const Scalar> x, std::span<const Scalar> y) {
    Vector r(x.begin(), x.end());
    axpy(F, 1, y, r);
    return r;
}

inline Vector sub(const PrimeField& F, std::span<const Scalar> x, std::span<const Scalar> y) {
    Vector r(x.begin(), x.end());
    axpy(F, F.neg(1), y, r);
    return r;
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n, 0);
    v[i] = 1;
    return v;
}

// ---- matrix arithmetic ----

inline Matrix transpose(const Matrix& A) {
    Matrix T(A.cols(), A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) T(c, r) = A(r, c);
    return T;
}

inline Matrix multiply(const PrimeField& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw InvalidArgument("multiply: shape mismatch");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k)
            if (Scalar a = A(i, k)) axpy(F, a, B.row(k), C.row(i));
    return C;
}

inline Vector apply(const PrimeField& F, const Matrix& A, std::span<const Scalar> v) {
    if (A.cols() != v.size()) throw InvalidArgument("apply: shape mismatch");
    Vector r(A.rows(), 0);
    const std::uint64_t p = F.p();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::uint64_t acc = 0;
        auto row = A.row(i);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (row[k] && v[k]) acc = (acc + static_cast<std::uint64_t>(row[k]) * v[k]) % p;
        r[i] = static_cast<Scalar>(acc);
    }
    return r;
}

inline Matrix add(const PrimeField& F, const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw InvalidArgument("add: shape mismatch");
    Matrix C = A;
    for (std::size_t r = 0; r < A.rows(); ++r) axpy(F, 1, B.row(r), C.row(r));
    return C;
}

inline Matrix sub(const PrimeField& F, const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw InvalidArgument("sub: shape mismatch");
    Matrix C = A;
    for (std::size_t r = 0; r < A.rows(); ++r) axpy(F, F.neg(1), B.row(r), C.row(r));
    return C;
}

inline Matrix scaled(const PrimeField& F, Scalar a, const Matrix& A) {
    return Matrix(A.rows(), A.cols(), scaled(F, a, A.data()));
}

/// AB - BA
inline Matrix commutator(const PrimeField& F, const Matrix& A, const Matrix& B) {
    return sub(F, multiply(F, A, B), multiply(F, B, A));
}

inline Matrix power(const PrimeField& F, Matrix A, std::uint64_t e) {
    if (A.rows() != A.cols()) throw InvalidArgument("power: matrix not square");
    Matrix R = Matrix::identity(A.rows());
    while (e) {
        if (e & 1) R = multiply(F, R, A);
        e >>= 1;
        if (e) A = multiply(F, A, A);
    }
    return R;
}

inline Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix M(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) M(r, c) = cols[c][r];
    return M;
}

inline Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix M(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), M.row(r).begin());
    return M;
}

// ---- elimination ----

struct RowEchelon {
    Matrix reduced;                   ///< reduced row echelon form; zero rows removed
    std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RowEchelon rref(const PrimeField& F, Matrix A) {
    const std::size_t R = A.rows(), C = A.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t sel = R;
        for (std::size_t i = r; i < R; ++i)
            if (A(i, c)) {
                sel = i;
                break;
            }
        if (sel == R) continue;
        if (sel != r)
            for (std::size_t k = 0; k < C; ++k) std::swap(A(sel, k), A(r, k));
        const Scalar inv = F.inv(A(r, c));
        for (std::size_t k = c; k < C; ++k) A(r, k) = F.mul(A(r, k), inv);
        for (std::size_t i = 0; i < R; ++i)
            if (i != r && A(i, c)) axpy(F, F.neg(A(i, c)), A.row(r), A.row(i));
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, C);
    for (std::size_t i = 0; i < r; ++i) std::copy(A.row(i).begin(), A.row(i).end(), reduced.row(i).begin());
    return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const PrimeField& F, const Matrix& A) {
    // Forward elimination only.
    Matrix M = A;
    const std::size_t R = M.rows(), C = M.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t sel = R;
        for (std::size_t i = r; i < R; ++i)
            if (M(i, c)) {
                sel = i;
                break;
            }
        if (sel == R) continue;
        if (sel != r)
            for (std::size_t k = c; k < C; ++k) std::swap(M(sel, k), M(r, k));
        const Scalar inv = F.inv(M(r, c));
        for (std::size_t i = r + 1; i < R; ++i)
            if (M(i, c)) axpy(F, F.neg(F.mul(M(i, c), inv)), M.row(r), M.row(i));
        ++r;
    }
    return r;
}

/// Basis of the right null space {v : A v = 0}.
inline std::vector<Vector> kernel_basis(const PrimeField& F, const Matrix& A) {
    RowEchelon E = rref(F, A);
    const std::size_t C = A.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : E.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vector v(C, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < E.pivots.size(); ++i) v[E.pivots[i]] = F.neg(E.reduced(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with A x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const PrimeField& F, const Matrix& A, std::span<const Scalar> b) {
    if (b.size() != A.rows()) throw InvalidArgument("solve: right-hand side length does not match rows");
    Matrix Aug(A.rows(), A.cols() + 1);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        std::copy(A.row(r).begin(), A.row(r).end(), Aug.row(r).begin());
        Aug(r, A.cols()) = b[r];
    }
    RowEchelon E = rref(F, Aug);
    Vector x(A.cols(), 0);
    for (std::size_t i = 0; i < E.pivots.size(); ++i) {
        if (E.pivots[i] == A.cols()) return std::nullopt;
        x[E.pivots[i]] = E.reduced(i, A.cols());
    }
    return x;
}

inline std::optional<Matrix> inverse(const PrimeField& F, const Matrix& A) {
    if (A.rows() != A.cols()) throw InvalidArgument("inverse: matrix not square");
    const std::size_t n = A.rows();
    if (n == 0) return Matrix();
    Matrix Aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        std::copy(A.row(r).begin(), A.row(r).end(), Aug.row(r).begin());
        Aug(r, n + r) = 1;
    }
    RowEchelon E = rref(F, Aug);
    if (E.pivots.size() < n || E.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix Inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) Inv(r, c) = E.reduced(r, n + c);
    return Inv;
}

}  // namespace modlie
