#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "modlie/matrix.hpp"

namespace modlie {

struct SparseEntry {
    std::uint32_t col;
    Scalar val;
    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by column, all values nonzero.
using SparseRow = std::vector<SparseEntry>;

struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar val;
};

/// Row-compressed sparse matrix over F_p.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    /// Duplicate (row, col) pairs are summed; zero results are dropped.
    static SparseMatrix from_triplets(const PrimeField& F, std::size_t rows, std::size_t cols, std::vector<Triplet> t) {
        for (const auto& e : t)
            if (e.row >= rows || e.col >= cols) throw InvalidArgument("SparseMatrix: triplet index out of range");
        std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        SparseMatrix M(rows, cols);
        for (std::size_t i = 0; i < t.size();) {
            std::size_t j = i;
            Scalar acc = 0;
            while (j < t.size() && t[j].row == t[i].row && t[j].col == t[i].col) acc = F.add(acc, t[j++].val % F.p());
            if (acc) M.rows_[t[i].row].push_back({static_cast<std::uint32_t>(t[i].col), acc});
            i = j;
        }
        return M;
    }

    static SparseMatrix from_dense(const Matrix& A) {
        SparseMatrix M(A.rows(), A.cols());
        for (std::size_t r = 0; r < A.rows(); ++r)
            for (std::size_t c = 0; c < A.cols(); ++c)
                if (A(r, c)) M.rows_[r].push_back({static_cast<std::uint32_t>(c), A(r, c)});
        return M;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseRow& row(std::size_t r) const { return rows_[r]; }

    /// Replaces a row; entries must be sorted with nonzero values.
    void set_row(std::size_t r, SparseRow row) { rows_[r] = std::move(row); }

    /// Appends a row at the bottom.
    void push_row(SparseRow row) { rows_.push_back(std::move(row)); }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    std::vector<Triplet> triplets() const {
        std::vector<Triplet> t;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (const auto& e : rows_[r]) t.push_back({r, e.col, e.val});
        return t;
    }

    Matrix to_dense() const {
        Matrix A(rows(), cols_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (const auto& e : rows_[r]) A(r, e.col) = e.val;
        return A;
    }

    bool is_zero() const { return nnz() == 0; }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<SparseRow> rows_;
};

inline SparseMatrix transpose(const SparseMatrix& A) {
    SparseMatrix T(A.cols(), A.rows());
    std::vector<SparseRow> rows(A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (const auto& e : A.row(r)) rows[e.col].push_back({static_cast<std::uint32_t>(r), e.val});
    for (std::size_t c = 0; c < rows.size(); ++c) T.set_row(c, std::move(rows[c]));
    return T;
}

inline SparseMatrix multiply(const PrimeField& F, const SparseMatrix& A, const SparseMatrix& B) {
    if (A.cols() != B.rows()) throw InvalidArgument("sparse multiply: shape mismatch");
    SparseMatrix C(A.rows(), B.cols());
    Vector acc(B.cols(), 0);
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(B.cols(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (const auto& a : A.row(i))
            for (const auto& b : B.row(a.col)) {
                if (!mark[b.col]) {
                    mark[b.col] = 1;
                    touched.push_back(b.col);
                }
                acc[b.col] = F.add(acc[b.col], F.mul(a.val, b.val));
            }
        std::sort(touched.begin(), touched.end());
        SparseRow row;
        for (auto c : touched) {
            if (acc[c]) row.push_back({c, acc[c]});
            acc[c] = 0;
            mark[c] = 0;
        }
        touched.clear();
        C.set_row(i, std::move(row));
    }
    return C;
}

inline Vector apply(const PrimeField& F, const SparseMatrix& A, std::span<const Scalar> v) {
    if (A.cols() != v.size()) throw InvalidArgument("sparse apply: shape mismatch");
    Vector r(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Scalar acc = 0;
        for (const auto& e : A.row(i))
            if (v[e.col]) acc = F.add(acc, F.mul(e.val, v[e.col]));
        r[i] = acc;
    }
    return r;
}

/// Incremental semi-echelon basis of sparse rows.
///
/// Each inserted row is fully reduced against the existing pivots, so a pivot
/// row has zeros in the pivot columns of all older pivot rows. Reducing in
/// order of pivot age therefore terminates. The pivot column of a new row is
/// the nonzero column with the smallest static column weight (a Markowitz-style
/// fill heuristic); results never depend on that choice.
class SparseEchelon {
public:
    SparseEchelon(const PrimeField& F, std::size_t ncols, std::vector<std::uint32_t> col_weight = {},
                  std::optional<std::size_t> deferred_col = std::nullopt)
        : F_(F),
          ncols_(ncols),
          col_weight_(std::move(col_weight)),
          deferred_(deferred_col),
          col_to_pivot_(ncols, -1),
          work_(ncols, 0),
          mark_(ncols, 0) {}

    std::size_t rank() const { return pivot_rows_.size(); }
    std::size_t cols() const { return ncols_; }

    /// Returns true when the row was independent of the rows seen so far.
    bool insert(const SparseRow& row) {
        SparseRow r = reduce(row);
        if (r.empty()) return false;
        std::size_t best = 0;
        bool found = false;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (deferred_ && r[i].col == *deferred_ && r.size() > 1) continue;
            if (!found || weight(r[i].col) < weight(r[best].col)) {
                best = i;
                found = true;
            }
        }
        const Scalar inv = F_.inv(r[best].val);
        for (auto& e : r) e.val = F_.mul(e.val, inv);
        col_to_pivot_[r[best].col] = static_cast<std::int32_t>(pivot_rows_.size());
        pivot_col_.push_back(r[best].col);
        pivot_rows_.push_back(std::move(r));
        return true;
    }

    /// Residual of a row after elimination against all pivots.
    SparseRow reduce(const SparseRow& row) const { return reduce_impl(row, nullptr); }

    /// Residual plus the multiplier used for each pivot row (row = sum coeffs*pivots + residual).
    SparseRow reduce(const SparseRow& row, std::vector<std::pair<std::size_t, Scalar>>& coeffs) const {
        return reduce_impl(row, &coeffs);
    }

    bool is_pivot(std::size_t col) const { return col_to_pivot_[col] >= 0; }
    const std::vector<std::uint32_t>& pivot_columns() const { return pivot_col_; }
    const SparseRow& pivot_row(std::size_t k) const { return pivot_rows_[k]; }

    /// Null space basis of the inserted rows (one vector per non-pivot column).
    std::vector<Vector> kernel_basis() const {
        std::vector<Vector> basis;
        for (std::size_t f = 0; f < ncols_; ++f)
            if (!is_pivot(f)) basis.push_back(kernel_vector(f));
        return basis;
    }

    /// Null vector with a 1 at the free column f and zeros at the other free columns.
    Vector kernel_vector(std::size_t f) const {
        if (is_pivot(f)) throw InvalidArgument("kernel_vector: column is a pivot");
        Vector x(ncols_, 0);
        x[f] = 1;
        back_substitute(x, std::nullopt);
        return x;
    }

    /// With a deferred right-hand-side column, returns a particular solution
    /// (free variables zero) or nullopt if some row reduced to 0 = nonzero.
    std::optional<Vector> particular_solution() const {
        if (!deferred_) throw InvalidArgument("particular_solution: no right-hand-side column configured");
        if (is_pivot(*deferred_)) return std::nullopt;
        Vector x(ncols_, 0);
        back_substitute(x, deferred_);
        x.pop_back();
        return x;
    }

private:
    std::uint32_t weight(std::uint32_t c) const { return col_weight_.empty() ? 0 : col_weight_[c]; }

    void back_substitute(Vector& x, std::optional<std::size_t> rhs) const {
        for (std::size_t k = pivot_rows_.size(); k-- > 0;) {
            const auto pc = pivot_col_[k];
            Scalar acc = 0;
            for (const auto& e : pivot_rows_[k]) {
                if (e.col == pc) continue;
                if (rhs && e.col == *rhs)
                    acc = F_.add(acc, e.val);
                else if (x[e.col])
                    acc = F_.sub(acc, F_.mul(e.val, x[e.col]));
            }
            x[pc] = acc;
        }
    }

    SparseRow reduce_impl(const SparseRow& row, std::vector<std::pair<std::size_t, Scalar>>* coeffs) const {
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
        for (const auto& e : row) {
            if (e.val == 0) continue;
            work_[e.col] = F_.add(work_[e.col], e.val);
            touch(e.col);
            if (col_to_pivot_[e.col] >= 0) heap.push(static_cast<std::size_t>(col_to_pivot_[e.col]));
        }
        const std::uint64_t p = F_.p();
        while (!heap.empty()) {
            const std::size_t k = heap.top();
            heap.pop();
            while (!heap.empty() && heap.top() == k) heap.pop();
            const auto pc = pivot_col_[k];
            const Scalar f = work_[pc];
            if (f == 0) continue;
            if (coeffs) coeffs->push_back({k, f});
            const std::uint64_t nf = p - f;
            for (const auto& e : pivot_rows_[k]) {
                touch(e.col);
                work_[e.col] = static_cast<Scalar>((work_[e.col] + nf * e.val) % p);
                if (e.col != pc && work_[e.col] && col_to_pivot_[e.col] > static_cast<std::int32_t>(k))
                    heap.push(static_cast<std::size_t>(col_to_pivot_[e.col]));
            }
        }
        std::sort(touched_.begin(), touched_.end());
        SparseRow out;
        for (auto c : touched_) {
            if (work_[c]) out.push_back({c, work_[c]});
            work_[c] = 0;
            mark_[c] = 0;
        }
        touched_.clear();
        return out;
    }

    void touch(std::uint32_t c) const {
        if (!mark_[c]) {
            mark_[c] = 1;
            touched_.push_back(c);
        }
    }

    PrimeField F_;
    std::size_t ncols_;
    std::vector<std::uint32_t> col_weight_;
    std::optional<std::size_t> deferred_;
    std::vector<SparseRow> pivot_rows_;
    std::vector<std::uint32_t> pivot_col_;
    std::vector<std::int32_t> col_to_pivot_;
    mutable Vector work_;
    mutable std::vector<char> mark_;
    mutable std::vector<std::uint32_t> touched_;
};

namespace detail {

inline std::vector<std::uint32_t> column_weights(const SparseMatrix& A) {
    std::vector<std::uint32_t> w(A.cols(), 0);
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (const auto& e : A.row(r)) ++w[e.col];
    return w;
}

inline std::size_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

/// Rank of a set of rows that share a column block, choosing dense or sparse elimination.
inline std::size_t block_rank(const PrimeField& F, const SparseMatrix& A, const std::vector<std::uint32_t>& rows,
                              const std::vector<std::uint32_t>& cols, std::vector<std::int64_t>& local_col) {
    for (std::size_t i = 0; i < cols.size(); ++i) local_col[cols[i]] = static_cast<std::int64_t>(i);
    std::size_t result;
    if (rows.size() * cols.size() <= (std::size_t{1} << 18)) {
        Matrix D(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& e : A.row(rows[i])) D(i, static_cast<std::size_t>(local_col[e.col])) = e.val;
        result = rank(F, D);
    } else {
        std::vector<std::uint32_t> weight(cols.size(), 0);
        std::vector<SparseRow> local(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (const auto& e : A.row(rows[i])) {
                auto lc = static_cast<std::uint32_t>(local_col[e.col]);
                local[i].push_back({lc, e.val});
                ++weight[lc];
            }
            std::sort(local[i].begin(), local[i].end(), [](auto& a, auto& b) { return a.col < b.col; });
        }
        std::vector<std::size_t> order(rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return local[a].size() < local[b].size(); });
        SparseEchelon E(F, cols.size(), std::move(weight));
        for (auto i : order) {
            E.insert(local[i]);
            if (E.rank() == cols.size()) break;
        }
        result = E.rank();
    }
    for (auto c : cols) local_col[c] = -1;
    return result;
}

}  // namespace detail

/// Rank over F_p. The matrix is split into connected components of its
/// row/column incidence graph and each block is eliminated independently.
inline std::size_t rank(const PrimeField& F, const SparseMatrix& A) {
    const std::size_t C = A.cols();
    if (C == 0 || A.rows() == 0) return 0;
    std::vector<std::uint32_t> parent(C);
    std::iota(parent.begin(), parent.end(), 0u);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        const auto& row = A.row(r);
        if (row.empty()) continue;
        auto root = detail::find_root(parent, row[0].col);
        for (std::size_t i = 1; i < row.size(); ++i) {
            auto other = detail::find_root(parent, row[i].col);
            if (other != root) parent[other] = static_cast<std::uint32_t>(root);
        }
    }
    std::vector<std::int64_t> block_of(C, -1);
    std::vector<std::vector<std::uint32_t>> block_rows, block_cols;
    for (std::size_t r = 0; r < A.rows(); ++r) {
        const auto& row = A.row(r);
        if (row.empty()) continue;
        auto root = detail::find_root(parent, row[0].col);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<std::int64_t>(block_rows.size());
            block_rows.emplace_back();
            block_cols.emplace_back();
        }
        block_rows[static_cast<std::size_t>(block_of[root])].push_back(static_cast<std::uint32_t>(r));
    }
    for (std::uint32_t c = 0; c < C; ++c) {
        auto root = detail::find_root(parent, c);
        if (block_of[root] >= 0) block_cols[static_cast<std::size_t>(block_of[root])].push_back(c);
    }
    std::vector<std::int64_t> local_col(C, -1);
    std::size_t total = 0;
    for (std::size_t b = 0; b < block_rows.size(); ++b)
        total += detail::block_rank(F, A, block_rows[b], block_cols[b], local_col);
    return total;
}

/// Independent rows spanning the row space, eliminated block by block so that
/// every returned row stays inside one connected block of columns.
inline SparseMatrix row_basis(const PrimeField& F, const SparseMatrix& A) {
    const std::size_t C = A.cols();
    SparseMatrix out(0, C);
    if (C == 0) return out;
    std::vector<std::uint32_t> parent(C);
    std::iota(parent.begin(), parent.end(), 0u);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        const auto& row = A.row(r);
        if (row.empty()) continue;
        auto root = detail::find_root(parent, row[0].col);
        for (std::size_t i = 1; i < row.size(); ++i) {
            auto other = detail::find_root(parent, row[i].col);
            if (other != root) parent[other] = static_cast<std::uint32_t>(root);
        }
    }
    std::vector<std::int64_t> block_of(C, -1);
    std::vector<std::vector<std::uint32_t>> rows_of, cols_of;
    for (std::size_t r = 0; r < A.rows(); ++r) {
        if (A.row(r).empty()) continue;
        auto root = detail::find_root(parent, A.row(r)[0].col);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<std::int64_t>(rows_of.size());
            rows_of.emplace_back();
            cols_of.emplace_back();
        }
        rows_of[static_cast<std::size_t>(block_of[root])].push_back(static_cast<std::uint32_t>(r));
    }
    for (std::uint32_t c = 0; c < C; ++c) {
        auto root = detail::find_root(parent, c);
        if (block_of[root] >= 0) cols_of[static_cast<std::size_t>(block_of[root])].push_back(c);
    }
    std::vector<std::uint32_t> local(C, 0);
    for (std::size_t b = 0; b < rows_of.size(); ++b) {
        const auto& cols = cols_of[b];
        for (std::size_t i = 0; i < cols.size(); ++i) local[cols[i]] = static_cast<std::uint32_t>(i);
        std::vector<std::uint32_t> weight(cols.size(), 0);
        std::vector<SparseRow> lr;
        for (auto r : rows_of[b]) {
            SparseRow row;
            for (const auto& e : A.row(r)) {
                row.push_back({local[e.col], e.val});
                ++weight[local[e.col]];
            }
            lr.push_back(std::move(row));
        }
        std::stable_sort(lr.begin(), lr.end(), [](const SparseRow& x, const SparseRow& y) { return x.size() < y.size(); });
        SparseEchelon E(F, cols.size(), std::move(weight));
        for (const auto& row : lr) {
            E.insert(row);
            if (E.rank() == cols.size()) break;
        }
        for (std::size_t k = 0; k < E.rank(); ++k) {
            SparseRow g;
            for (const auto& e : E.pivot_row(k)) g.push_back({cols[e.col], e.val});
            std::sort(g.begin(), g.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.col < y.col; });
            out.push_row(std::move(g));
        }
    }
    return out;
}

inline std::vector<Vector> kernel_basis(const PrimeField& F, const SparseMatrix& A) {
    SparseEchelon E(F, A.cols(), detail::column_weights(A));
    for (std::size_t r = 0; r < A.rows(); ++r) E.insert(A.row(r));
    return E.kernel_basis();
}

inline std::optional<Vector> solve(const PrimeField& F, const SparseMatrix& A, std::span<const Scalar> b) {
    if (b.size() != A.rows()) throw InvalidArgument("solve: right-hand side length does not match rows");
    const std::size_t n = A.cols();
    SparseEchelon E(F, n + 1, {}, n);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        SparseRow row = A.row(r);
        if (b[r]) row.push_back({static_cast<std::uint32_t>(n), b[r]});
        E.insert(row);
    }
    return E.particular_solution();
}

}  // namespace modlie
