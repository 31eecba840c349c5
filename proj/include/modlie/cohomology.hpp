#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "modlie/restricted.hpp"
#include "modlie/sparse.hpp"

namespace modlie {

/// Colexicographic ranking of n-subsets of {0, ..., D-1}:
/// rank(s_0 < ... < s_{n-1}) = sum_k C(s_k, k+1).
class SubsetIndex {
public:
    explicit SubsetIndex(std::size_t D) : D_(D), C_((D + 2) * (D + 2), 0) {
        for (std::size_t a = 0; a <= D + 1; ++a) {
            C_[a * (D + 2)] = 1;
            for (std::size_t b = 1; b <= a; ++b) {
                const std::uint64_t x = C_[(a - 1) * (D + 2) + b - 1], y = b < a ? C_[(a - 1) * (D + 2) + b] : 0;
                C_[a * (D + 2) + b] = (x > kSat - y) ? kSat : x + y;
            }
        }
    }

    std::uint64_t binom(std::size_t a, std::size_t b) const { return b > a ? 0 : C_[a * (D_ + 2) + b]; }
    std::uint64_t count(std::size_t n) const { return binom(D_, n); }

    std::uint64_t rank(std::span<const std::uint32_t> s) const {
        std::uint64_t r = 0;
        for (std::size_t k = 0; k < s.size(); ++k) r += binom(s[k], k + 1);
        return r;
    }

    /// Advances to the next subset in colex order; false after the last one.
    bool next(std::vector<std::uint32_t>& s) const {
        const std::size_t n = s.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t limit = i + 1 < n ? s[i + 1] : static_cast<std::uint32_t>(D_);
            if (s[i] + 1 < limit) {
                ++s[i];
                for (std::size_t j = 0; j < i; ++j) s[j] = static_cast<std::uint32_t>(j);
                return true;
            }
        }
        return false;
    }

    static constexpr std::uint64_t kSat = std::uint64_t{1} << 62;

private:
    std::size_t D_;
    std::vector<std::uint64_t> C_;
};

struct CohomologyOptions {
    long long max_cochain_dim = 100000;  ///< guard on dim C^{n+1} for the top coboundary
    bool check_dd = true;
};

/// Estimated dim C^n(L, M) = C(dim L, n) * dim M (saturating).
inline long long cochain_dim(std::size_t dimL, std::size_t dimM, std::size_t n) {
    if (n > dimL) return 0;
    double v = static_cast<double>(dimM);
    for (std::size_t i = 0; i < n; ++i) v = v * static_cast<double>(dimL - i) / static_cast<double>(i + 1);
    return v > 9e18 ? std::numeric_limits<long long>::max() : static_cast<long long>(std::llround(v));
}

inline void guard_cochain_dim(std::size_t dimL, std::size_t dimM, std::size_t n, const CohomologyOptions& opt) {
    const long long est = cochain_dim(dimL, dimM, n);
    if (est > opt.max_cochain_dim)
        throw SizeLimitError("cochain space of degree " + std::to_string(n) + " has " + std::to_string(est) +
                                 " basis elements, above the limit " + std::to_string(opt.max_cochain_dim),
                             est);
}

namespace detail {

struct MatrixEntries {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> e;  ///< (row, col, value)
};

inline std::vector<MatrixEntries> entries_of(const std::vector<Matrix>& mats) {
    std::vector<MatrixEntries> out(mats.size());
    for (std::size_t g = 0; g < mats.size(); ++g)
        for (std::size_t r = 0; r < mats[g].rows(); ++r)
            for (std::size_t c = 0; c < mats[g].cols(); ++c)
                if (mats[g](r, c)) out[g].e.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), mats[g](r, c));
    return out;
}

}  // namespace detail

/// Chevalley-Eilenberg coboundary d^n : C^n -> C^{n+1}. Basis of C^n: colex n-subsets
/// times module basis, module index fastest.
/// (d psi)(x_0..x_n) = sum_i (-1)^i x_i psi(..^x_i..) + sum_{i<j} (-1)^{i+j} psi([x_i,x_j], ..^x_i..^x_j..)
inline SparseMatrix coboundary(const LieAlgebra& L, const Module& M, std::size_t n) {
    const std::size_t D = L.dim(), dm = M.dim();
    if (n > D) throw InvalidArgument("coboundary: degree exceeds algebra dimension");
    if (M.algebra()->dim() != D) throw InvalidArgument("coboundary: module is over a different algebra");
    const auto& F = L.field();
    SubsetIndex idx(D);
    const std::size_t rows = static_cast<std::size_t>(idx.count(n + 1)) * dm;
    const std::size_t cols = static_cast<std::size_t>(idx.count(n)) * dm;
    if (n == D || dm == 0) return SparseMatrix(rows, cols);
    auto rho = detail::entries_of(M.actions());
    std::vector<Triplet> t;
    std::vector<std::uint32_t> T(n + 1), S(n), rest;
    for (std::uint32_t i = 0; i <= n; ++i) T[i] = i;
    std::size_t trank = 0;
    do {
        const std::size_t rbase = trank * dm;
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t w = 0;
            for (std::size_t k = 0; k <= n; ++k)
                if (k != i) S[w++] = T[k];
            const std::size_t cbase = static_cast<std::size_t>(idx.rank(S)) * dm;
            const bool neg = i % 2;
            for (const auto& [b, a, v] : rho[T[i]].e) t.push_back({rbase + b, cbase + a, neg ? F.neg(v) : v});
        }
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                const auto& br = L.bracket_basis(T[i], T[j]);
                if (br.empty()) continue;
                rest.clear();
                for (std::size_t k = 0; k <= n; ++k)
                    if (k != i && k != j) rest.push_back(T[k]);
                for (const auto& [k, c] : br) {
                    std::size_t pos = 0;
                    bool repeat = false;
                    for (auto x : rest) {
                        if (x == k) repeat = true;
                        if (x < k) ++pos;
                    }
                    if (repeat) continue;
                    std::size_t w = 0;
                    for (std::size_t q = 0; q < rest.size(); ++q) {
                        if (q == pos) S[w++] = k;
                        S[w++] = rest[q];
                    }
                    if (pos == rest.size()) S[w++] = k;
                    const std::size_t cbase = static_cast<std::size_t>(idx.rank(S)) * dm;
                    const Scalar v = (i + j + pos) % 2 ? F.neg(c) : c;
                    for (std::size_t a = 0; a < dm; ++a) t.push_back({rbase + a, cbase + a, v});
                }
            }
        ++trank;
    } while (idx.next(T));
    return SparseMatrix::from_triplets(F, rows, cols, std::move(t));
}

/// theta(x) on C^n(I, M) for an element acting by the derivation D on I and by X on M:
/// (x psi)(u_1..u_n) = X psi(u_1..u_n) - sum_i psi(u_1, .., D u_i, .., u_n).
inline SparseMatrix theta_matrix(const LieAlgebra& I, const Module& M, const Matrix& Dmat, const Matrix& X, std::size_t n) {
    const std::size_t D = I.dim(), dm = M.dim();
    if (n > D) throw InvalidArgument("theta_matrix: degree exceeds algebra dimension");
    if (Dmat.rows() != D || Dmat.cols() != D || X.rows() != dm || X.cols() != dm)
        throw InvalidArgument("theta_matrix: shape mismatch");
    const auto& F = I.field();
    SubsetIndex idx(D);
    const std::size_t size = static_cast<std::size_t>(idx.count(n)) * dm;
    std::vector<Triplet> t;
    std::vector<std::uint32_t> T(n), S(n), rest;
    for (std::uint32_t i = 0; i < n; ++i) T[i] = i;
    std::size_t trank = 0;
    do {
        const std::size_t base = trank * dm;
        for (std::size_t b = 0; b < dm; ++b)
            for (std::size_t a = 0; a < dm; ++a)
                if (X(b, a)) t.push_back({base + b, base + a, X(b, a)});
        for (std::size_t i = 0; i < n; ++i) {
            rest.clear();
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) rest.push_back(T[k]);
            for (std::uint32_t k = 0; k < D; ++k) {
                const Scalar dk = Dmat(k, T[i]);
                if (!dk) continue;
                std::size_t q = 0;
                bool repeat = false;
                for (auto x : rest) {
                    if (x == k) repeat = true;
                    if (x < k) ++q;
                }
                if (repeat) continue;
                std::size_t w = 0;
                for (std::size_t r = 0; r < rest.size(); ++r) {
                    if (r == q) S[w++] = k;
                    S[w++] = rest[r];
                }
                if (q == rest.size()) S[w++] = k;
                const std::size_t cbase = static_cast<std::size_t>(idx.rank(S)) * dm;
                const bool odd = (i > q ? i - q : q - i) % 2;
                const Scalar v = odd ? dk : F.neg(dk);
                for (std::size_t a = 0; a < dm; ++a) t.push_back({base + a, cbase + a, v});
            }
        }
        ++trank;
    } while (n > 0 && idx.next(T));
    return SparseMatrix::from_triplets(F, size, size, std::move(t));
}

/// theta for an element of I itself: D = ad x, X = rho(x).
inline SparseMatrix theta_action(const LieAlgebra& I, const Module& M, std::span<const Scalar> x, std::size_t n) {
    return theta_matrix(I, M, I.ad(x), M.act(x), n);
}

struct CohomologyResult {
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> dims;
};

/// dim H^n = dim C^n - rank d^n - rank d^{n-1} for n = 0..n_max.
inline CohomologyResult cohomology_dims(const LieAlgebra& L, const Module& M, std::size_t n_max, const CohomologyOptions& opt = {}) {
    if (n_max > L.dim()) throw InvalidArgument("cohomology_dims: degree exceeds algebra dimension");
    guard_cochain_dim(L.dim(), M.dim(), n_max + 1, opt);
    const auto& F = L.field();
    std::vector<std::size_t> ranks;
    SparseMatrix prev;
    for (std::size_t n = 0; n <= n_max; ++n) {
        SparseMatrix d = coboundary(L, M, n);
        if (opt.check_dd && n > 0 && !multiply(F, d, prev).is_zero())
            throw InternalConsistencyError("coboundary composition is not zero");
        ranks.push_back(rank(F, d));
        prev = std::move(d);
    }
    CohomologyResult res;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto c = static_cast<std::size_t>(cochain_dim(L.dim(), M.dim(), n));
        res.degrees.push_back(n);
        res.dims.push_back(c - ranks[n] - (n ? ranks[n - 1] : 0));
    }
    if (res.dims[0] != invariants(M).dim()) throw InternalConsistencyError("H^0 differs from the invariants");
    return res;
}

/// An outside element acting on the pair (I, M): derivation D of I and matrix X on M
/// with [X, rho(y)] = rho(D y).
struct CochainActor {
    Matrix D;
    Matrix X;
};

/// Matrix of ad x restricted to the subalgebra I (echelon basis coordinates).
inline Matrix derivation_on(const LieAlgebra& L, const Subspace& I, std::span<const Scalar> x) {
    Matrix D(I.dim(), I.dim());
    for (std::size_t c = 0; c < I.dim(); ++c) {
        Vector img = L.bracket(x, I.basis().row(c));
        if (!I.contains(img)) throw InvalidArgument("derivation_on: element does not normalize the subalgebra");
        Vector co = I.coordinates(img);
        for (std::size_t r = 0; r < I.dim(); ++r) D(r, c) = co[r];
    }
    return D;
}

/// Actor for each given element of L acting on (I, M|_I), where M is an L-module.
inline std::vector<CochainActor> actors_from(const LieAlgebra& L, const Subspace& I, const Module& M,
                                             const std::vector<Vector>& elements) {
    std::vector<CochainActor> out;
    for (const auto& x : elements) out.push_back({derivation_on(L, I, x), M.act(x)});
    return out;
}

/// Dimension of the joint invariants in H^n(I, M) of the induced actions.
/// A class [z] is invariant when theta_g z lies in B^n for every actor g, so with
/// K = [[d^n, 0], [theta_g, -d^{n-1} (one block per g)]] one gets
/// dim = dim C^n - rank K + (k - 1) rank d^{n-1}.
inline std::size_t invariant_cohomology_dim(const LieAlgebra& I, const Module& M, const std::vector<CochainActor>& actors,
                                            std::size_t n, const CohomologyOptions& opt = {}) {
    if (n > I.dim()) return 0;
    guard_cochain_dim(I.dim(), M.dim(), n + 1, opt);
    const auto& F = I.field();
    const std::size_t cn = static_cast<std::size_t>(cochain_dim(I.dim(), M.dim(), n));
    const std::size_t cm = n ? static_cast<std::size_t>(cochain_dim(I.dim(), M.dim(), n - 1)) : 0;
    const std::size_t k = actors.size();
    SparseMatrix dn = row_basis(F, coboundary(I, M, n));
    SparseMatrix dm1 = n ? coboundary(I, M, n - 1) : SparseMatrix(cn, 0);
    const std::size_t rank_dm1 = n ? rank(F, dm1) : 0;
    if (k == 0) return cn - dn.rows() - rank_dm1;
    SparseMatrix K(0, cn + k * cm);
    for (std::size_t r = 0; r < dn.rows(); ++r) K.push_row(dn.row(r));
    for (std::size_t g = 0; g < k; ++g) {
        SparseMatrix th = theta_matrix(I, M, actors[g].D, actors[g].X, n);
        const std::uint32_t off = static_cast<std::uint32_t>(cn + g * cm);
        for (std::size_t r = 0; r < cn; ++r) {
            SparseRow row = th.row(r);
            if (n)
                for (const auto& e : dm1.row(r)) row.push_back({off + e.col, F.neg(e.val)});
            K.push_row(std::move(row));
        }
    }
    return cn + (k - 1) * rank_dm1 - rank(F, K);
}

struct InducedActions {
    std::vector<Vector> representatives;  ///< cocycles whose classes form a basis of H^n
    std::vector<Matrix> actions;          ///< induced matrix in that basis, one per actor
};

/// Dense induced actions of several actors on H^n(I, M) sharing one basis of
/// representatives. The commutation of theta with d is asserted per actor.
inline InducedActions induced_actions_on_H(const LieAlgebra& I, const Module& M, const std::vector<CochainActor>& actors,
                                           std::size_t n) {
    if (n > I.dim()) throw InvalidArgument("induced_action_on_H: degree exceeds algebra dimension");
    const auto& F = I.field();
    const std::size_t cn = static_cast<std::size_t>(cochain_dim(I.dim(), M.dim(), n));
    SparseMatrix dn = coboundary(I, M, n);
    std::vector<SparseMatrix> thetas;
    for (const auto& a : actors) {
        thetas.push_back(theta_matrix(I, M, a.D, a.X, n));
        if (n < I.dim() && multiply(F, dn, thetas.back()) != multiply(F, theta_matrix(I, M, a.D, a.X, n + 1), dn))
            throw InvalidArgument("induced_action_on_H: theta does not commute with d");
    }
    SparseEchelon E(F, cn);
    if (n) {
        SparseMatrix dT = transpose(coboundary(I, M, n - 1));
        for (std::size_t r = 0; r < dT.rows(); ++r) E.insert(dT.row(r));
    }
    const std::size_t rank_b = E.rank();
    SparseEchelon Z(F, cn);
    for (std::size_t r = 0; r < dn.rows(); ++r) Z.insert(dn.row(r));
    const std::size_t h = cn - Z.rank() - rank_b;
    auto sparse_of = [](const Vector& v) {
        SparseRow row;
        for (std::uint32_t c = 0; c < v.size(); ++c)
            if (v[c]) row.push_back({c, v[c]});
        return row;
    };
    // cocycles one at a time until their classes span H^n
    for (std::size_t f = 0; f < cn && E.rank() < rank_b + h; ++f)
        if (!Z.is_pivot(f)) E.insert(sparse_of(Z.kernel_vector(f)));
    if (E.rank() != rank_b + h) throw InternalConsistencyError("induced_action_on_H: cocycles do not span the cohomology");
    InducedActions out;
    for (std::size_t k = 0; k < h; ++k) {
        Vector v(cn, 0);
        for (const auto& e : E.pivot_row(rank_b + k)) v[e.col] = e.val;
        out.representatives.push_back(std::move(v));
    }
    for (const auto& th : thetas) {
        Matrix A(h, h);
        for (std::size_t k = 0; k < h; ++k) {
            std::vector<std::pair<std::size_t, Scalar>> coeffs;
            if (!E.reduce(sparse_of(apply(F, th, out.representatives[k])), coeffs).empty())
                throw InvalidArgument("induced_action_on_H: theta does not preserve cocycles");
            for (const auto& [piv, f] : coeffs)
                if (piv >= rank_b) A(piv - rank_b, k) = F.add(A(piv - rank_b, k), f);
        }
        out.actions.push_back(std::move(A));
    }
    return out;
}

inline Matrix induced_action_on_H(const LieAlgebra& I, const Module& M, const CochainActor& actor, std::size_t n) {
    return induced_actions_on_H(I, M, {actor}, n).actions.front();
}

/// dim of the 0-eigenspace of the induced action of one torus element on H^n.
inline std::size_t torus_invariants_of_H(const LieAlgebra& I, const Module& M, const CochainActor& t, std::size_t n,
                                         const CohomologyOptions& opt = {}) {
    return invariant_cohomology_dim(I, M, {t}, n, opt);
}

/// Restricted derivations modulo inner ones: dim of solutions of
/// d([x,y]) = x d(y) - y d(x) and d(b_i^[p]) = rho(b_i)^{p-1} d(b_i), minus dim M + dim M^L.
inline std::size_t restricted_h1(const LieAlgebra& L, const PMap& pm, const Module& M, const CohomologyOptions& opt = {}) {
    const auto& F = L.field();
    if (pm.size() != L.dim()) throw InvalidArgument("restricted_h1: p-map size mismatch");
    if (!is_restricted_module(M, pm)) throw InvalidArgument("restricted_h1: module is not restricted");
    guard_cochain_dim(L.dim(), M.dim(), 2, opt);
    const std::size_t D = L.dim(), dm = M.dim();
    SparseMatrix d1 = coboundary(L, M, 1);
    SparseMatrix sys(0, D * dm);
    for (std::size_t r = 0; r < d1.rows(); ++r) sys.push_row(d1.row(r));
    for (std::size_t i = 0; i < D; ++i) {
        Matrix R = power(F, M.action(i), F.p() - 1);
        for (std::size_t b = 0; b < dm; ++b) {
            std::vector<std::pair<std::uint32_t, Scalar>> acc;
            for (std::size_t k = 0; k < D; ++k)
                if (pm[i][k]) acc.push_back({static_cast<std::uint32_t>(k * dm + b), pm[i][k]});
            for (std::size_t a = 0; a < dm; ++a)
                if (R(b, a)) acc.push_back({static_cast<std::uint32_t>(i * dm + a), F.neg(R(b, a))});
            std::sort(acc.begin(), acc.end());
            SparseRow row;
            for (const auto& [c, v] : acc) {
                if (!row.empty() && row.back().col == c) {
                    row.back().val = F.add(row.back().val, v);
                    if (!row.back().val) row.pop_back();
                } else {
                    row.push_back({c, v});
                }
            }
            sys.push_row(std::move(row));
        }
    }
    const std::size_t solutions = D * dm - rank(F, sys);
    const std::size_t inner = dm - invariants(M).dim();
    return solutions - inner;
}

}  // namespace modlie
