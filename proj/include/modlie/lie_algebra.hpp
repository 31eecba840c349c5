#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "modlie/matrix.hpp"

namespace modlie {

/// Sparse coordinate vector: (basis index, nonzero coefficient), sorted by index.
using Coeffs = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Subspace of F_p^n stored as the rows of its reduced echelon form, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
public:
    Subspace() = default;
    Subspace(const PrimeField& F, std::size_t ambient, const std::vector<Vector>& spanning) : F_(F.p()), n_(ambient) {
        Matrix M(spanning.size(), ambient);
        for (std::size_t r = 0; r < spanning.size(); ++r) {
            if (spanning[r].size() != ambient) throw InvalidArgument("Subspace: vector length does not match ambient dimension");
            std::copy(spanning[r].begin(), spanning[r].end(), M.row(r).begin());
        }
        auto E = rref(F, std::move(M));
        basis_ = std::move(E.reduced);
        pivots_ = std::move(E.pivots);
    }

    static Subspace whole(const PrimeField& F, std::size_t n) {
        std::vector<Vector> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(unit_vector(n, i));
        return Subspace(F, n, v);
    }
    static Subspace zero(const PrimeField& F, std::size_t n) { return Subspace(F, n, {}); }

    PrimeField field() const { return PrimeField(F_); }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return pivots_.size(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t r) const { return Vector(basis_.row(r).begin(), basis_.row(r).end()); }
    std::vector<Vector> basis_vectors() const {
        std::vector<Vector> v;
        for (std::size_t r = 0; r < dim(); ++r) v.push_back(basis_vector(r));
        return v;
    }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the echelon basis; zero iff v lies in the subspace.
    Vector reduce(std::span<const Scalar> v) const {
        const PrimeField F = field();
        Vector r(v.begin(), v.end());
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (Scalar c = r[pivots_[i]]) axpy(F, F.neg(c), basis_.row(i), r);
        return r;
    }

    bool contains(std::span<const Scalar> v) const { return modlie::is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    /// Coordinates of v in the echelon basis; throws if v is not in the subspace.
    Vector coordinates(std::span<const Scalar> v) const {
        if (!contains(v)) throw InvalidArgument("coordinates: vector not in subspace");
        Vector c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    /// Ambient vector with the given coordinates.
    Vector from_coordinates(std::span<const Scalar> c) const {
        const PrimeField F = field();
        Vector v(n_, 0);
        for (std::size_t i = 0; i < dim(); ++i) axpy(F, c[i], basis_.row(i), v);
        return v;
    }

    /// Coordinates not used as pivots; they index a canonical complement.
    std::vector<std::size_t> non_pivots() const {
        std::vector<bool> is_p(n_, false);
        for (auto c : pivots_) is_p[c] = true;
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < n_; ++c)
            if (!is_p[c]) out.push_back(c);
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

private:
    Scalar F_ = 2;
    std::size_t n_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace span_sum(const Subspace& a, const Subspace& b) {
    auto v = a.basis_vectors();
    auto w = b.basis_vectors();
    v.insert(v.end(), w.begin(), w.end());
    return Subspace(a.field(), a.ambient_dim(), v);
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        if (violations.size() < 50) violations.push_back(std::move(msg));
    }
};

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Finite-dimensional Lie algebra over F_p by structure constants.
/// The table holds [b_i, b_j] for every ordered pair.
class LieAlgebra {
public:
    /// Brackets given for i < j only; the rest is filled in by antisymmetry.
    static LieAlgebra from_upper(const PrimeField& F, std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, Coeffs>>& upper,
                                 std::vector<std::string> labels = {}) {
        std::vector<Coeffs> table(dim * dim);
        for (const auto& [i, j, c] : upper) {
            if (i >= j || j >= dim) throw InvalidArgument("from_upper: brackets must satisfy i < j < dim");
            Coeffs neg;
            for (const auto& [k, v] : c) {
                if (k >= dim) throw InvalidArgument("from_upper: coefficient index out of range");
                neg.push_back({k, F.neg(v)});
            }
            table[i * dim + j] = normalized(F, c);
            table[j * dim + i] = normalized(F, neg);
        }
        return LieAlgebra(F, dim, std::move(table), std::move(labels));
    }

    /// Raw table for every ordered pair; nothing is enforced here (see validate_algebra).
    LieAlgebra(const PrimeField& F, std::size_t dim, std::vector<Coeffs> table, std::vector<std::string> labels = {})
        : F_(F), dim_(dim), table_(std::move(table)), labels_(std::move(labels)) {
        if (table_.size() != dim * dim) throw InvalidArgument("LieAlgebra: table size must be dim^2");
        if (labels_.empty())
            for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
        if (labels_.size() != dim) throw InvalidArgument("LieAlgebra: label count must equal dim");
        for (auto& c : table_) c = normalized(F_, c);
    }

    const PrimeField& field() const { return F_; }
    Scalar p() const { return F_.p(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Coeffs& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    const std::optional<std::vector<int>>& grading() const { return grading_; }
    const std::optional<std::vector<Vector>>& pmap() const { return pmap_; }
    const std::optional<std::vector<std::pair<std::size_t, int>>>& provenance() const { return provenance_; }

    void set_grading(std::vector<int> g) {
        if (g.size() != dim_) throw InvalidArgument("grading length must equal dim");
        grading_ = std::move(g);
    }
    void set_pmap(std::vector<Vector> images) {
        if (images.size() != dim_) throw InvalidArgument("pmap must have one image per basis element");
        for (const auto& v : images)
            if (v.size() != dim_) throw InvalidArgument("pmap image length must equal dim");
        pmap_ = std::move(images);
    }
    void set_provenance(std::vector<std::pair<std::size_t, int>> prov) {
        if (prov.size() != dim_) throw InvalidArgument("provenance length must equal dim");
        provenance_ = std::move(prov);
    }
    void set_labels(std::vector<std::string> labels) {
        if (labels.size() != dim_) throw InvalidArgument("label count must equal dim");
        labels_ = std::move(labels);
    }

    Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
        if (x.size() != dim_ || y.size() != dim_) throw InvalidArgument("bracket: vector length does not match dim");
        std::vector<std::uint64_t> acc(dim_, 0);
        const std::uint64_t p = F_.p();
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!y[j]) continue;
                const std::uint64_t a = static_cast<std::uint64_t>(x[i]) * y[j] % p;
                for (const auto& [k, c] : table_[i * dim_ + j]) acc[k] = (acc[k] + a * c) % p;
            }
        }
        return Vector(acc.begin(), acc.end());
    }

    /// Matrix of ad(b_i): column j holds [b_i, b_j].
    Matrix ad_basis(std::size_t i) const {
        Matrix A(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& [k, c] : table_[i * dim_ + j]) A(k, j) = c;
        return A;
    }

    Matrix ad(std::span<const Scalar> x) const {
        Matrix A(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            if (x[i]) A = add(F_, A, scaled(F_, x[i], ad_basis(i)));
        return A;
    }

    Vector unit(std::size_t i) const { return unit_vector(dim_, i); }

private:
    static Coeffs normalized(const PrimeField& F, const Coeffs& c) {
        std::vector<Scalar> dense;
        Coeffs out;
        for (const auto& [k, v] : c) {
            if (k >= dense.size()) dense.resize(k + 1, 0);
            dense[k] = F.add(dense[k], v % F.p());
        }
        for (std::uint32_t k = 0; k < dense.size(); ++k)
            if (dense[k]) out.push_back({k, dense[k]});
        return out;
    }

    PrimeField F_;
    std::size_t dim_;
    std::vector<Coeffs> table_;
    std::vector<std::string> labels_;
    std::optional<std::vector<int>> grading_;
    std::optional<std::vector<Vector>> pmap_;
    std::optional<std::vector<std::pair<std::size_t, int>>> provenance_;
};

inline AlgebraPtr share(LieAlgebra L) { return std::make_shared<const LieAlgebra>(std::move(L)); }

inline Coeffs to_coeffs(std::span<const Scalar> v) {
    Coeffs c;
    for (std::uint32_t k = 0; k < v.size(); ++k)
        if (v[k]) c.push_back({k, v[k]});
    return c;
}

inline Vector from_coeffs(std::size_t n, const Coeffs& c) {
    Vector v(n, 0);
    for (const auto& [k, x] : c) v[k] = x;
    return v;
}

/// Antisymmetry, zero diagonal and the Jacobi identity on all basis triples.
inline ValidationReport validate_algebra(const LieAlgebra& L) {
    ValidationReport rep;
    const auto& F = L.field();
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (!L.bracket_basis(i, i).empty()) rep.fail("[b" + std::to_string(i) + ",b" + std::to_string(i) + "] != 0");
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector a = from_coeffs(n, L.bracket_basis(i, j));
            Vector b = from_coeffs(n, L.bracket_basis(j, i));
            if (!modlie::is_zero(add(F, a, b)))
                rep.fail("antisymmetry fails for (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] = 0
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c, std::vector<std::uint64_t>& acc) {
        for (const auto& [k, v] : L.bracket_basis(b, c))
            for (const auto& [l, w] : L.bracket_basis(a, k)) acc[l] = (acc[l] + static_cast<std::uint64_t>(v) * w) % F.p();
    };
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::fill(acc.begin(), acc.end(), 0);
                nested(i, j, k, acc);
                nested(j, k, i, acc);
                nested(k, i, j, acc);
                for (auto x : acc)
                    if (x) {
                        rep.fail("Jacobi fails for (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
                        break;
                    }
            }
    return rep;
}

// ---- subspaces inside an algebra ----

/// Smallest subspace containing the seeds and stable under all given matrices.
inline Subspace spin_subspace(const PrimeField& F, std::size_t n, const std::vector<Vector>& seeds,
                              const std::vector<Matrix>& gens) {
    // Incremental semi-echelon: rows kept with a leading 1 at distinct pivot columns.
    std::vector<Vector> rows;
    std::vector<std::size_t> piv;
    std::vector<Vector> queue;
    auto insert = [&](Vector v) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (Scalar c = v[piv[r]]) axpy(F, F.neg(c), rows[r], v);
        std::size_t c = 0;
        while (c < n && v[c] == 0) ++c;
        if (c == n) return;
        const Scalar inv = F.inv(v[c]);
        for (auto& x : v) x = F.mul(x, inv);
        rows.push_back(v);
        piv.push_back(c);
        queue.push_back(std::move(v));
    };
    for (const auto& s : seeds) insert(s);
    for (std::size_t q = 0; q < queue.size() && rows.size() < n; ++q)
        for (const auto& g : gens) {
            insert(apply(F, g, queue[q]));
            if (rows.size() == n) break;
        }
    return Subspace(F, n, rows);
}

inline Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
    std::vector<Vector> v;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j) v.push_back(L.bracket(A.basis().row(i), B.basis().row(j)));
    return Subspace(L.field(), L.dim(), v);
}

inline Subspace whole(const LieAlgebra& L) { return Subspace::whole(L.field(), L.dim()); }

inline Subspace basis_span(const LieAlgebra& L, const std::vector<std::size_t>& idx) {
    std::vector<Vector> v;
    for (auto i : idx) v.push_back(L.unit(i));
    return Subspace(L.field(), L.dim(), v);
}

inline Subspace center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    Matrix stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix A = L.ad_basis(j);
        for (std::size_t r = 0; r < n; ++r) std::copy(A.row(r).begin(), A.row(r).end(), stacked.row(j * n + r).begin());
    }
    return Subspace(L.field(), n, kernel_basis(L.field(), stacked));
}

inline Subspace derived_subalgebra(const LieAlgebra& L) { return bracket_span(L, whole(L), whole(L)); }

/// Terms L, [L,L], [[L,L],[L,L]], ... until the sequence stabilizes (last term repeated once dropped).
inline std::vector<Subspace> derived_series(const LieAlgebra& L) {
    std::vector<Subspace> s{whole(L)};
    while (true) {
        Subspace next = bracket_span(L, s.back(), s.back());
        if (next == s.back()) break;
        s.push_back(std::move(next));
    }
    return s;
}

inline std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
    std::vector<Subspace> s{whole(L)};
    while (true) {
        Subspace next = bracket_span(L, whole(L), s.back());
        if (next == s.back()) break;
        s.push_back(std::move(next));
    }
    return s;
}

inline bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().dim() == 0; }
inline bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().dim() == 0; }
inline bool is_abelian(const LieAlgebra& L) { return derived_subalgebra(L).dim() == 0; }

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& S) { return S.contains(bracket_span(L, S, S)); }

inline bool is_ideal(const LieAlgebra& L, const Subspace& S) { return S.contains(bracket_span(L, whole(L), S)); }

inline std::vector<Matrix> ad_matrices(const LieAlgebra& L) {
    std::vector<Matrix> m;
    for (std::size_t i = 0; i < L.dim(); ++i) m.push_back(L.ad_basis(i));
    return m;
}

inline Subspace ideal_closure(const LieAlgebra& L, const Subspace& S) {
    return spin_subspace(L.field(), L.dim(), S.basis_vectors(), ad_matrices(L));
}

/// Lie subalgebra generated by the given vectors (iterated left-normed brackets).
inline Subspace generated_subalgebra(const LieAlgebra& L, const std::vector<Vector>& gens) {
    std::vector<Matrix> ads;
    for (const auto& g : gens) ads.push_back(L.ad(g));
    return spin_subspace(L.field(), L.dim(), gens, ads);
}

/// Greedy generating set of basis indices: repeatedly add the basis element
/// that enlarges the generated subalgebra the most (first index on ties).
inline std::vector<std::size_t> lie_generators(const LieAlgebra& L) {
    std::vector<std::size_t> chosen;
    std::vector<Vector> vecs;
    std::size_t have = 0;
    while (have < L.dim()) {
        std::size_t best = L.dim(), best_dim = have;
        for (std::size_t i = 0; i < L.dim(); ++i) {
            auto trial = vecs;
            trial.push_back(L.unit(i));
            std::size_t d = generated_subalgebra(L, trial).dim();
            if (d > best_dim) {
                best_dim = d;
                best = i;
                if (d == L.dim()) break;
            }
        }
        if (best == L.dim()) throw InternalConsistencyError("lie_generators: no basis element enlarges the subalgebra");
        chosen.push_back(best);
        vecs.push_back(L.unit(best));
        have = best_dim;
    }
    return chosen;
}

/// Subalgebra S as an algebra in its echelon basis. Coordinates of a bracket
/// are read off at the pivot columns.
inline LieAlgebra subalgebra_as_algebra(const LieAlgebra& L, const Subspace& S) {
    if (!is_subalgebra(L, S)) throw InvalidArgument("subalgebra_as_algebra: subspace is not closed under the bracket");
    const std::size_t d = S.dim();
    std::vector<std::tuple<std::size_t, std::size_t, Coeffs>> upper;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vector b = L.bracket(S.basis().row(i), S.basis().row(j));
            upper.emplace_back(i, j, to_coeffs(S.coordinates(b)));
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
        auto row = S.basis().row(i);
        std::size_t nz = 0;
        for (auto x : row) nz += x != 0;
        labels.push_back(nz == 1 ? L.labels()[S.pivots()[i]] : "s" + std::to_string(i));
    }
    LieAlgebra K = LieAlgebra::from_upper(L.field(), d, upper, labels);
    if (L.grading()) {
        // Keep the grading when every basis vector is homogeneous.
        std::vector<int> g;
        for (std::size_t i = 0; i < d; ++i) {
            std::optional<int> deg;
            bool homog = true;
            for (std::size_t c = 0; c < L.dim(); ++c)
                if (S.basis()(i, c)) {
                    if (deg && *deg != (*L.grading())[c]) homog = false;
                    deg = (*L.grading())[c];
                }
            if (!homog) {
                g.clear();
                break;
            }
            g.push_back(deg.value_or(0));
        }
        if (g.size() == d) K.set_grading(g);
    }
    return K;
}

/// L/I with basis given by the non-pivot coordinates of I.
inline LieAlgebra quotient(const LieAlgebra& L, const Subspace& I) {
    if (!is_ideal(L, I)) throw InvalidArgument("quotient: subspace is not an ideal");
    auto comp = I.non_pivots();
    std::vector<std::tuple<std::size_t, std::size_t, Coeffs>> upper;
    for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = a + 1; b < comp.size(); ++b) {
            Vector v = I.reduce(from_coeffs(L.dim(), L.bracket_basis(comp[a], comp[b])));
            Coeffs c;
            for (std::uint32_t k = 0; k < comp.size(); ++k)
                if (v[comp[k]]) c.push_back({k, v[comp[k]]});
            upper.emplace_back(a, b, c);
        }
    std::vector<std::string> labels;
    for (auto c : comp) labels.push_back(L.labels()[c]);
    return LieAlgebra::from_upper(L.field(), comp.size(), upper, labels);
}

/// Trace of ad x acting on L/K, for each echelon basis vector x of K.
inline Vector sigma_character(const LieAlgebra& L, const Subspace& K) {
    if (!is_subalgebra(L, K)) throw InvalidArgument("sigma_character: subspace is not a subalgebra");
    const auto& F = L.field();
    auto comp = K.non_pivots();
    Vector chi(K.dim(), 0);
    for (std::size_t i = 0; i < K.dim(); ++i) {
        Scalar tr = 0;
        for (auto c : comp) {
            Vector v = K.reduce(L.bracket(K.basis().row(i), L.unit(c)));
            tr = F.add(tr, v[c]);
        }
        chi[i] = tr;
    }
    return chi;
}

/// A functional on L (one value per basis element) is a character when it kills [L,L].
inline bool is_character(const LieAlgebra& L, std::span<const Scalar> chi) {
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Scalar s = 0;
            for (const auto& [k, c] : L.bracket_basis(i, j)) s = L.field().add(s, L.field().mul(c, chi[k]));
            if (s) return false;
        }
    return true;
}

inline ValidationReport validate_grading(const LieAlgebra& L, const std::vector<int>& deg) {
    ValidationReport rep;
    if (deg.size() != L.dim()) {
        rep.fail("grading length differs from dim");
        return rep;
    }
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
            for (const auto& [k, c] : L.bracket_basis(i, j))
                if (deg[k] != deg[i] + deg[j])
                    rep.fail("[" + L.labels()[i] + "," + L.labels()[j] + "] has a component of degree " + std::to_string(deg[k]));
    return rep;
}

}  // namespace modlie
