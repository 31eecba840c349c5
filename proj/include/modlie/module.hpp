#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modlie/lie_algebra.hpp"

namespace modlie {

/// Representation of a Lie algebra: one action matrix per basis element.
class Module {
public:
    Module() = default;
    Module(AlgebraPtr L, std::size_t dim, std::vector<Matrix> action, std::string label = "")
        : L_(std::move(L)), dim_(dim), action_(std::move(action)), label_(std::move(label)) {
        if (!L_) throw InvalidArgument("Module: null algebra");
        if (action_.size() != L_->dim()) throw InvalidArgument("Module: need one action matrix per basis element");
        for (const auto& A : action_)
            if (A.rows() != dim_ || A.cols() != dim_) throw InvalidArgument("Module: action matrix has the wrong shape");
    }

    const AlgebraPtr& algebra() const { return L_; }
    const PrimeField& field() const { return L_->field(); }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const { return action_; }
    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }

    /// Action matrix of an arbitrary algebra element.
    Matrix act(std::span<const Scalar> x) const {
        Matrix A(dim_, dim_);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i]) A = add(field(), A, scaled(field(), x[i], action_[i]));
        return A;
    }

private:
    AlgebraPtr L_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
    std::string label_;
};

/// rho([b_i,b_j]) = rho(b_i) rho(b_j) - rho(b_j) rho(b_i) on all basis pairs.
inline ValidationReport validate_module(const Module& M) {
    ValidationReport rep;
    const auto& L = *M.algebra();
    const auto& F = M.field();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Matrix lhs(M.dim(), M.dim());
            for (const auto& [k, c] : L.bracket_basis(i, j)) lhs = add(F, lhs, scaled(F, c, M.action(k)));
            if (lhs != commutator(F, M.action(i), M.action(j)))
                rep.fail("bracket compatibility fails for (" + L.labels()[i] + "," + L.labels()[j] + ")");
        }
    return rep;
}

inline Module trivial_module(const AlgebraPtr& L, std::size_t dim = 1) {
    return Module(L, dim, std::vector<Matrix>(L->dim(), Matrix(dim, dim)), "trivial");
}

inline Module adjoint_rep(const AlgebraPtr& L) { return Module(L, L->dim(), ad_matrices(*L), "adjoint"); }

/// Contragredient module: x acts by -rho(x)^T.
inline Module dual(const Module& M) {
    std::vector<Matrix> a;
    for (const auto& A : M.actions()) a.push_back(scaled(M.field(), M.field().neg(1), transpose(A)));
    return Module(M.algebra(), M.dim(), std::move(a), "dual(" + M.label() + ")");
}

/// rho + chi * identity for a character chi of the acting algebra.
inline Module twist(const Module& M, std::span<const Scalar> chi) {
    const auto& L = *M.algebra();
    if (chi.size() != L.dim()) throw InvalidArgument("twist: character length does not match algebra dim");
    if (!is_character(L, chi)) throw InvalidArgument("twist: functional does not vanish on the derived subalgebra");
    std::vector<Matrix> a;
    for (std::size_t i = 0; i < L.dim(); ++i)
        a.push_back(add(M.field(), M.action(i), scaled(M.field(), chi[i], Matrix::identity(M.dim()))));
    return Module(M.algebra(), M.dim(), std::move(a), M.label() + "_twisted");
}

/// Restriction to the subalgebra K (given with its algebra in K's echelon basis).
inline Module restrict_to(const Module& M, const Subspace& K, const AlgebraPtr& K_alg) {
    if (K_alg->dim() != K.dim()) throw InvalidArgument("restrict_to: subalgebra dimension mismatch");
    std::vector<Matrix> a;
    for (std::size_t r = 0; r < K.dim(); ++r) a.push_back(M.act(K.basis().row(r)));
    return Module(K_alg, M.dim(), std::move(a), M.label());
}

inline Module restrict_to(const Module& M, const Subspace& K) {
    return restrict_to(M, K, share(subalgebra_as_algebra(*M.algebra(), K)));
}

inline bool is_submodule(const Module& M, const Subspace& S) {
    for (const auto& A : M.actions())
        for (std::size_t r = 0; r < S.dim(); ++r)
            if (!S.contains(apply(M.field(), A, S.basis().row(r)))) return false;
    return true;
}

/// Action on S in its echelon basis.
inline Module submodule(const Module& M, const Subspace& S) {
    if (!is_submodule(M, S)) throw InvalidArgument("submodule: subspace is not invariant");
    std::vector<Matrix> a;
    for (const auto& A : M.actions()) {
        Matrix B(S.dim(), S.dim());
        for (std::size_t c = 0; c < S.dim(); ++c) {
            Vector img = S.coordinates(apply(M.field(), A, S.basis().row(c)));
            for (std::size_t r = 0; r < S.dim(); ++r) B(r, c) = img[r];
        }
        a.push_back(std::move(B));
    }
    return Module(M.algebra(), S.dim(), std::move(a), "sub(" + M.label() + ")");
}

/// M/S with basis the non-pivot coordinates of S.
inline Module quotient_module(const Module& M, const Subspace& S) {
    if (!is_submodule(M, S)) throw InvalidArgument("quotient_module: subspace is not invariant");
    auto comp = S.non_pivots();
    std::vector<Matrix> a;
    for (const auto& A : M.actions()) {
        Matrix B(comp.size(), comp.size());
        for (std::size_t c = 0; c < comp.size(); ++c) {
            Vector img = S.reduce(A.column(comp[c]));
            for (std::size_t r = 0; r < comp.size(); ++r) B(r, c) = img[comp[r]];
        }
        a.push_back(std::move(B));
    }
    return Module(M.algebra(), comp.size(), std::move(a), M.label() + "/sub");
}

/// Joint kernel of all action matrices.
inline Subspace invariants(const Module& M) {
    const std::size_t n = M.dim();
    const auto& acts = M.actions();
    Matrix stacked(acts.size() * n, n);
    for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t r = 0; r < n; ++r)
            std::copy(acts[i].row(r).begin(), acts[i].row(r).end(), stacked.row(i * n + r).begin());
    return Subspace(M.field(), n, kernel_basis(M.field(), stacked));
}

/// Submodule generated by the seeds.
inline Subspace spin(const Module& M, const std::vector<Vector>& seeds) {
    return spin_subspace(M.field(), M.dim(), seeds, M.actions());
}

}  // namespace modlie
