#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "modlie/module.hpp"
#include "modlie/sparse.hpp"

namespace modlie {

struct MeatAxeOptions {
    std::uint64_t seed = 20240601;
    int rounds = 60;                 ///< random algebra elements tried
    std::size_t max_kernel_points = 4096;
    std::size_t burnside_max_dim = 16;  ///< fallback only below this module dim
};

struct SimplicityResult {
    Decision simple = Decision::undecided;
    std::optional<Subspace> witness;  ///< proper nonzero submodule when not simple
};

/// Action matrices of a Lie generating set; they generate the same associative algebra.
inline std::vector<Matrix> generator_actions(const Module& M) {
    std::vector<Matrix> g;
    for (auto i : lie_generators(*M.algebra())) g.push_back(M.action(i));
    return g;
}

namespace detail {

inline Scalar draw(std::mt19937_64& rng, Scalar p) { return static_cast<Scalar>(rng() % p); }

/// Each projective point of span(basis), as a representative vector.
inline void for_each_point(const PrimeField& F, const std::vector<Vector>& basis, const std::function<bool(const Vector&)>& f) {
    const std::size_t k = basis.size();
    const std::size_t n = basis.empty() ? 0 : basis[0].size();
    const Scalar p = F.p();
    // coefficient vectors whose first nonzero entry is 1
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<Scalar> c(k, 0);
        c[lead] = 1;
        while (true) {
            Vector v(n, 0);
            for (std::size_t i = 0; i < k; ++i) axpy(F, c[i], basis[i], v);
            if (!f(v)) return;
            std::size_t pos = lead + 1;
            while (pos < k && ++c[pos] == p) c[pos++] = 0;
            if (pos >= k) break;
        }
    }
}

inline Subspace annihilator(const PrimeField& F, const Subspace& S) {
    return Subspace(F, S.ambient_dim(), kernel_basis(F, S.basis()));
}

}  // namespace detail

/// Norton's irreducibility test with a deterministic fallback.
inline SimplicityResult is_simple(const Module& M, const MeatAxeOptions& opt = {}) {
    const auto& F = M.field();
    const std::size_t n = M.dim();
    if (n == 0) throw InvalidArgument("is_simple: zero module");
    if (n == 1) return {Decision::yes, std::nullopt};
    std::vector<Matrix> gens = generator_actions(M);
    std::vector<Matrix> gensT;
    for (const auto& g : gens) gensT.push_back(transpose(g));
    auto proper = [&](const Subspace& S) { return S.dim() > 0 && S.dim() < n; };

    // A common eigenvector or any vector spinning to a proper subspace ends the search.
    {
        Subspace S = spin_subspace(F, n, {unit_vector(n, 0)}, gens);
        if (proper(S)) return {Decision::no, S};
    }

    std::mt19937_64 rng(opt.seed);
    std::vector<Matrix> pool = gens;
    const Scalar p = F.p();
    for (int round = 0; round < opt.rounds; ++round) {
        if (!pool.empty()) {
            const auto& A = pool[rng() % pool.size()];
            const auto& B = pool[rng() % pool.size()];
            pool.push_back(multiply(F, A, B));
        }
        Matrix theta(n, n);
        for (const auto& A : pool)
            if (Scalar c = detail::draw(rng, p)) theta = add(F, theta, scaled(F, c, A));
        // pick a shift giving the smallest positive nullity
        std::optional<Matrix> best;
        std::size_t best_null = n + 1;
        const std::size_t shifts = std::min<std::size_t>(p, 8);
        for (std::size_t s = 0; s < shifts; ++s) {
            const Scalar mu = shifts == p ? static_cast<Scalar>(s) : detail::draw(rng, p);
            Matrix T = sub(F, theta, scaled(F, mu, Matrix::identity(n)));
            const std::size_t nul = n - rank(F, T);
            if (nul > 0 && nul < best_null) {
                best_null = nul;
                best = std::move(T);
            }
        }
        if (!best) continue;
        double points = 1;
        for (std::size_t i = 0; i < best_null; ++i) points *= p;
        if (points > static_cast<double>(opt.max_kernel_points)) continue;
        auto ker = kernel_basis(F, *best);
        std::optional<Subspace> wit;
        detail::for_each_point(F, ker, [&](const Vector& v) {
            Subspace S = spin_subspace(F, n, {v}, gens);
            if (proper(S)) {
                wit = std::move(S);
                return false;
            }
            return true;
        });
        if (wit) return {Decision::no, *wit};
        auto kerT = kernel_basis(F, transpose(*best));
        Subspace ST = spin_subspace(F, n, {kerT.front()}, gensT);
        if (ST.dim() < n) return {Decision::no, detail::annihilator(F, ST)};
        return {Decision::yes, std::nullopt};
    }

    // Burnside: the action algebra is all of End(M) exactly when M is absolutely simple.
    if (n <= opt.burnside_max_dim) {
        std::vector<Matrix> left;
        for (const auto& g : gens) {
            Matrix Lg(n * n, n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    if (Scalar a = g(i, k))
                        for (std::size_t j = 0; j < n; ++j) Lg(i * n + j, k * n + j) = a;
            left.push_back(std::move(Lg));
        }
        Subspace A = spin_subspace(F, n * n, {Matrix::identity(n).data()}, left);
        if (A.dim() == n * n) return {Decision::yes, std::nullopt};
    }
    return {Decision::undecided, std::nullopt};
}

/// Solutions T (dimN x dimM) of T rho_M(g) = rho_N(g) T over a Lie generating set.
inline std::vector<Matrix> intertwiner_space(const Module& M, const Module& N) {
    if (M.algebra() != N.algebra() && M.algebra()->dim() != N.algebra()->dim())
        throw InvalidArgument("intertwiner_space: modules over different algebras");
    const auto& F = M.field();
    const std::size_t m = M.dim(), n = N.dim();
    std::vector<Triplet> t;
    std::size_t row = 0;
    for (auto g : lie_generators(*M.algebra())) {
        const Matrix& A = M.action(g);
        const Matrix& B = N.action(g);
        // equation (r, c): sum_k T(r,k) A(k,c) - sum_k B(r,k) T(k,c) = 0
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c, ++row) {
                for (std::size_t k = 0; k < m; ++k)
                    if (A(k, c)) t.push_back({row, r * m + k, A(k, c)});
                for (std::size_t k = 0; k < n; ++k)
                    if (B(r, k)) t.push_back({row, k * m + c, F.neg(B(r, k))});
            }
    }
    SparseMatrix S = SparseMatrix::from_triplets(F, row, n * m, std::move(t));
    std::vector<Matrix> out;
    for (auto& v : kernel_basis(F, S)) out.emplace_back(n, m, std::move(v));
    return out;
}

struct IsoOptions {
    std::uint64_t seed = 20240601;
    int random_draws = 200;
    std::uint64_t enumeration_cutoff = 6561;  ///< 3^8
    MeatAxeOptions meataxe;
};

struct IsoResult {
    Decision iso = Decision::undecided;
    std::optional<Matrix> map;  ///< invertible intertwiner when found
    std::string method;
};

inline IsoResult is_isomorphic(const Module& M, const Module& N, const IsoOptions& opt = {}) {
    if (M.algebra()->dim() != N.algebra()->dim()) throw InvalidArgument("is_isomorphic: modules over different algebras");
    if (M.dim() != N.dim()) return {Decision::no, std::nullopt, "dimension"};
    const auto& F = M.field();
    auto space = intertwiner_space(M, N);
    if (space.empty()) return {Decision::no, std::nullopt, "no intertwiner"};
    const std::size_t n = M.dim();
    auto invertible = [&](const Matrix& T) { return rank(F, T) == n; };
    for (const auto& T : space)
        if (invertible(T)) return {Decision::yes, T, "basis intertwiner"};
    std::mt19937_64 rng(opt.seed);
    const Scalar p = F.p();
    for (int d = 0; d < opt.random_draws; ++d) {
        Matrix T(n, n);
        for (const auto& B : space)
            if (Scalar c = detail::draw(rng, p)) T = add(F, T, scaled(F, c, B));
        if (invertible(T)) return {Decision::yes, T, "random combination"};
    }
    double total = 1;
    for (std::size_t i = 0; i < space.size(); ++i) total *= p;
    if (total <= static_cast<double>(opt.enumeration_cutoff)) {
        std::vector<Vector> flat;
        for (const auto& B : space) flat.push_back(B.data());
        std::optional<Matrix> found;
        detail::for_each_point(F, flat, [&](const Vector& v) {
            Matrix T(n, n, v);
            if (invertible(T)) {
                found = std::move(T);
                return false;
            }
            return true;
        });
        if (found) return {Decision::yes, *found, "enumeration"};
        return {Decision::no, std::nullopt, "enumeration"};
    }
    if (is_simple(M, opt.meataxe).simple == Decision::yes && is_simple(N, opt.meataxe).simple == Decision::yes)
        return {Decision::yes, std::nullopt, "Schur"};
    return {Decision::undecided, std::nullopt, "search bounds exhausted"};
}

struct CompositionFactor {
    std::size_t dim;
    std::string label;
};

struct CompositionSeries {
    std::vector<CompositionFactor> factors;  ///< bottom to top
    std::vector<Subspace> flags;             ///< 0 < U_1 < ... < U_k = M
};

namespace detail {

inline CompositionSeries composition_series_rec(const Module& M, const MeatAxeOptions& opt) {
    auto res = is_simple(M, opt);
    if (res.simple == Decision::undecided) throw InternalConsistencyError("composition_series: simplicity undecided");
    const auto& F = M.field();
    const std::size_t n = M.dim();
    if (res.simple == Decision::yes) {
        bool trivial = true;
        for (const auto& A : M.actions()) trivial = trivial && A.is_zero();
        return {{{n, trivial ? "trivial" : ""}}, {Subspace::whole(F, n)}};
    }
    const Subspace& U = *res.witness;
    auto lower = composition_series_rec(submodule(M, U), opt);
    auto upper = composition_series_rec(quotient_module(M, U), opt);
    CompositionSeries out;
    out.factors = lower.factors;
    out.factors.insert(out.factors.end(), upper.factors.begin(), upper.factors.end());
    for (const auto& S : lower.flags) {
        std::vector<Vector> v;
        for (std::size_t r = 0; r < S.dim(); ++r) v.push_back(U.from_coordinates(S.basis().row(r)));
        out.flags.emplace_back(F, n, v);
    }
    auto comp = U.non_pivots();
    for (const auto& S : upper.flags) {
        std::vector<Vector> v = U.basis_vectors();
        for (std::size_t r = 0; r < S.dim(); ++r) {
            Vector lift(n, 0);
            for (std::size_t c = 0; c < comp.size(); ++c) lift[comp[c]] = S.basis()(r, c);
            v.push_back(std::move(lift));
        }
        out.flags.emplace_back(F, n, v);
    }
    return out;
}

}  // namespace detail

inline CompositionSeries composition_series(const Module& M, const MeatAxeOptions& opt = {}) {
    return detail::composition_series_rec(M, opt);
}

}  // namespace modlie
