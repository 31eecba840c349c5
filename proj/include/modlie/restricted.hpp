#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modlie/module.hpp"

namespace modlie {

/// Images of the basis under the p-map, in the algebra's own coordinates.
using PMap = std::vector<Vector>;

/// s_1(x,y), ..., s_{p-1}(x,y): i*s_i is the coefficient of t^{i-1} in ad(tx+y)^{p-1}(x).
inline std::vector<Vector> jacobson_s_terms(const LieAlgebra& L, std::span<const Scalar> x, std::span<const Scalar> y) {
    const auto& F = L.field();
    const std::size_t p = F.p();
    std::vector<Vector> poly{Vector(x.begin(), x.end())};
    for (std::size_t it = 0; it + 1 < p; ++it) {
        std::vector<Vector> next(poly.size() + 1, Vector(L.dim(), 0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (modlie::is_zero(poly[k])) continue;
            axpy(F, 1, L.bracket(x, poly[k]), next[k + 1]);
            axpy(F, 1, L.bracket(y, poly[k]), next[k]);
        }
        poly = std::move(next);
    }
    std::vector<Vector> s;
    for (std::size_t i = 1; i < p; ++i) s.push_back(scaled(F, F.inv(static_cast<Scalar>(i)), poly[i - 1]));
    return s;
}

/// x^[p] from the basis images, adding one basis term at a time via Jacobson's formula.
inline Vector pmap_apply(const LieAlgebra& L, const PMap& pm, std::span<const Scalar> x) {
    const auto& F = L.field();
    Vector partial(L.dim(), 0), result(L.dim(), 0);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (!x[i]) continue;
        Vector z = scaled(F, x[i], L.unit(i));
        // (partial + z)^[p] = partial^[p] + z^[p] + sum_k s_k(partial, z), and a^p = a in F_p.
        axpy(F, x[i], pm[i], result);
        if (!modlie::is_zero(partial))
            for (const auto& s : jacobson_s_terms(L, partial, z)) axpy(F, 1, s, result);
        partial[i] = x[i];
    }
    return result;
}

/// (a) ad(b_i^[p]) = (ad b_i)^p; (b) ad of x^[p]+y^[p]+sum s_i(x,y) equals (ad(x+y))^p
/// for every pair of non-commuting basis elements x, y.
inline ValidationReport validate_pmap(const LieAlgebra& L, const PMap& pm) {
    ValidationReport rep;
    const auto& F = L.field();
    if (pm.size() != L.dim()) {
        rep.fail("pmap has the wrong number of images");
        return rep;
    }
    std::vector<Matrix> ads = ad_matrices(L);
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (L.ad(pm[i]) != power(F, ads[i], F.p())) rep.fail("ad(b^[p]) != (ad b)^p for " + L.labels()[i]);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            if (L.bracket_basis(i, j).empty()) continue;
            Vector q = add(F, pm[i], pm[j]);
            for (const auto& s : jacobson_s_terms(L, L.unit(i), L.unit(j))) axpy(F, 1, s, q);
            if (L.ad(q) != power(F, add(F, ads[i], ads[j]), F.p()))
                rep.fail("Jacobson sum formula fails for (" + L.labels()[i] + "," + L.labels()[j] + ")");
        }
    return rep;
}

inline bool is_restricted_module(const Module& M, const PMap& pm) {
    for (std::size_t i = 0; i < M.algebra()->dim(); ++i)
        if (power(M.field(), M.action(i), M.field().p()) != M.act(pm[i])) return false;
    return true;
}

/// A p-subalgebra is a subalgebra closed under the p-map.
inline bool is_p_subalgebra(const LieAlgebra& L, const PMap& pm, const Subspace& K) {
    if (!is_subalgebra(L, K)) return false;
    for (std::size_t r = 0; r < K.dim(); ++r)
        if (!K.contains(pmap_apply(L, pm, K.basis().row(r)))) return false;
    return true;
}

/// p-map of a p-subalgebra expressed in the subalgebra's echelon basis.
inline PMap restrict_pmap(const LieAlgebra& L, const PMap& pm, const Subspace& K) {
    PMap out;
    for (std::size_t r = 0; r < K.dim(); ++r) out.push_back(K.coordinates(pmap_apply(L, pm, K.basis().row(r))));
    return out;
}

struct Envelope {
    AlgebraPtr base;
    AlgebraPtr env;
    Matrix embed;  ///< env.dim x base.dim; column j = image of b_j
    std::vector<std::pair<std::size_t, int>> provenance;
};

namespace detail {

inline Vector flatten(const Matrix& A) { return A.data(); }

/// Coordinates of matrices with respect to a fixed independent list of matrices.
class MatrixCoords {
public:
    MatrixCoords(const PrimeField& F, const std::vector<Matrix>& basis) : F_(F), d_(basis.size()) {
        const std::size_t len = basis.empty() ? 0 : basis[0].data().size();
        len_ = len;
        Matrix aug(d_, len + d_);
        for (std::size_t k = 0; k < d_; ++k) {
            std::copy(basis[k].data().begin(), basis[k].data().end(), aug.row(k).begin());
            aug(k, len + k) = 1;
        }
        auto E = rref(F, std::move(aug));
        if (E.pivots.size() != d_ || (d_ && E.pivots.back() >= len))
            throw InvalidArgument("MatrixCoords: basis matrices are dependent");
        pivots_ = E.pivots;
        reduced_ = std::move(E.reduced);
    }

    Vector coords(const Matrix& X) const {
        const auto& x = X.data();
        Vector residual(x.begin(), x.end());
        Vector c(d_, 0);
        for (std::size_t r = 0; r < d_; ++r) {
            const Scalar a = residual[pivots_[r]];
            if (!a) continue;
            auto row = reduced_.row(r);
            for (std::size_t q = 0; q < len_; ++q)
                if (row[q]) residual[q] = F_.sub(residual[q], F_.mul(a, row[q]));
            for (std::size_t k = 0; k < d_; ++k)
                if (row[len_ + k]) c[k] = F_.add(c[k], F_.mul(a, row[len_ + k]));
        }
        if (!modlie::is_zero(residual)) throw InternalConsistencyError("matrix is not in the span");
        return c;
    }

private:
    PrimeField F_;
    std::size_t d_, len_ = 0;
    std::vector<std::size_t> pivots_;
    Matrix reduced_;
};

}  // namespace detail

/// Restricted closure of a Lie algebra of n x n matrices under p-th powers.
/// The result's bracket is the commutator and its p-map the p-th matrix power.
/// gens[i] is labelled labels[i]; appended elements are p^r-th powers of a generator.
inline Envelope p_closure(const AlgebraPtr& base, const std::vector<Matrix>& gens, const std::vector<std::string>& labels) {
    const auto& F = base->field();
    const std::size_t p = F.p();
    std::vector<Matrix> mats;
    std::vector<std::pair<std::size_t, int>> prov;
    std::vector<Vector> echelon;
    std::vector<std::size_t> piv;
    auto try_insert = [&](const Matrix& A) {
        Vector v = detail::flatten(A);
        for (std::size_t r = 0; r < echelon.size(); ++r)
            if (Scalar c = v[piv[r]]) axpy(F, F.neg(c), echelon[r], v);
        std::size_t c = 0;
        while (c < v.size() && v[c] == 0) ++c;
        if (c == v.size()) return false;
        const Scalar inv = F.inv(v[c]);
        for (auto& x : v) x = F.mul(x, inv);
        echelon.push_back(std::move(v));
        piv.push_back(c);
        return true;
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!try_insert(gens[i])) throw InvalidArgument("p_closure: generating matrices are dependent");
        mats.push_back(gens[i]);
        prov.push_back({i, 0});
    }
    for (std::size_t k = 0; k < mats.size(); ++k) {
        Matrix P = power(F, mats[k], p);
        if (try_insert(P)) {
            mats.push_back(std::move(P));
            prov.push_back({prov[k].first, prov[k].second + 1});
        }
    }
    detail::MatrixCoords coords(F, mats);
    const std::size_t d = mats.size();
    std::vector<std::tuple<std::size_t, std::size_t, Coeffs>> upper;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) upper.emplace_back(i, j, to_coeffs(coords.coords(commutator(F, mats[i], mats[j]))));
    std::vector<std::string> env_labels;
    for (const auto& [src, r] : prov) env_labels.push_back(r == 0 ? labels[src] : labels[src] + "^[p]^" + std::to_string(r));
    LieAlgebra env = LieAlgebra::from_upper(F, d, upper, env_labels);
    PMap pm;
    for (const auto& A : mats) pm.push_back(coords.coords(power(F, A, p)));
    env.set_pmap(std::move(pm));
    env.set_provenance(prov);
    if (base->grading() && gens.size() == base->dim()) {
        std::vector<int> g;
        for (const auto& [src, r] : prov) g.push_back((*base->grading())[src] * static_cast<int>(ipow(p, r)));
        env.set_grading(std::move(g));
    }
    Matrix embed(d, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) embed(j, j) = 1;
    return Envelope{base, share(std::move(env)), std::move(embed), std::move(prov)};
}

/// Closure of ad(L) inside gl(L); needs a centerless L so that ad is injective.
inline Envelope minimal_p_envelope(const AlgebraPtr& L) {
    if (center(*L).dim() != 0) throw Unsupported("minimal_p_envelope: algebra has nonzero center");
    return p_closure(L, ad_matrices(*L), L->labels());
}

/// Image of L inside the envelope as a subspace of env coordinates.
inline Subspace embedded_image(const Envelope& E) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < E.embed.cols(); ++j) cols.push_back(E.embed.column(j));
    return Subspace(E.env->field(), E.env->dim(), cols);
}

/// Envelope element with provenance (i, r) acts as rho(b_i)^(p^r).
inline Module extend_to_envelope(const Module& M, const Envelope& E) {
    if (M.algebra()->dim() != E.base->dim()) throw InvalidArgument("extend_to_envelope: module is over a different algebra");
    const auto& F = M.field();
    std::vector<Matrix> a;
    for (const auto& [src, r] : E.provenance) a.push_back(power(F, M.action(src), static_cast<std::uint64_t>(ipow(F.p(), r))));
    return Module(E.env, M.dim(), std::move(a), M.label());
}

namespace detail {

/// Normal forms in u(G) (x) V for the PBW basis c_1^{a_1}...c_r^{a_r} (x) v_t, 0 <= a_j < p.
class InducedAction {
public:
    InducedAction(const LieAlgebra& G, const PMap& pm, const Subspace& K, const Module& V, const std::vector<Vector>& cobasis)
        : G_(G), F_(G.field()), p_(G.field().p()), r_(cobasis.size()), s_(K.dim()), dv_(V.dim()), V_(V) {
        const std::size_t n = G.dim();
        if (r_ + s_ != n) throw InvalidArgument("restricted_induced_module: cobasis size plus subalgebra dim must equal dim");
        std::vector<Vector> adapted = cobasis;
        for (std::size_t q = 0; q < s_; ++q) adapted.push_back(K.basis_vector(q));
        for (const auto& v : adapted)
            if (v.size() != n) throw InvalidArgument("restricted_induced_module: cobasis vector has wrong length");
        auto inv = inverse(F_, from_columns(n, adapted));
        if (!inv) throw InvalidArgument("restricted_induced_module: cobasis does not span a complement");
        to_adapted_ = std::move(*inv);
        adapted_ = adapted;
        brackets_.resize(n * n);
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) brackets_[g * n + h] = apply(F_, to_adapted_, G.bracket(adapted[g], adapted[h]));
        for (std::size_t j = 0; j < r_; ++j) cpow_.push_back(apply(F_, to_adapted_, pmap_apply(G, pm, cobasis[j])));
        nmono_ = static_cast<std::size_t>(ipow(p_, static_cast<int>(r_)));
        dim_ = nmono_ * dv_;
        memo_.resize(n * dim_);
        state_.assign(n * dim_, 0);
    }

    std::size_t dim() const { return dim_; }

    Matrix matrix_of(std::span<const Scalar> x) {
        Vector y = apply(F_, to_adapted_, x);
        Matrix A(dim_, dim_);
        for (std::size_t b = 0; b < dim_; ++b) {
            Vector col = apply_elem(y, b);
            for (std::size_t r = 0; r < dim_; ++r) A(r, b) = col[r];
        }
        return A;
    }

private:
    std::size_t exponent(std::size_t mono, std::size_t j) const { return mono / static_cast<std::size_t>(ipow(p_, static_cast<int>(j))) % p_; }
    std::size_t with_exponent(std::size_t mono, std::size_t j, std::size_t e) const {
        const auto pw = static_cast<std::size_t>(ipow(p_, static_cast<int>(j)));
        return mono - exponent(mono, j) * pw + e * pw;
    }

    Vector apply_elem(std::span<const Scalar> y, std::size_t b) {
        Vector out(dim_, 0);
        for (std::size_t g = 0; g < y.size(); ++g)
            if (y[g]) axpy(F_, y[g], act_gen(g, b), out);
        return out;
    }

    Vector apply_gen_vec(std::size_t g, std::span<const Scalar> v) {
        Vector out(dim_, 0);
        for (std::size_t b = 0; b < dim_; ++b)
            if (v[b]) axpy(F_, v[b], act_gen(g, b), out);
        return out;
    }

    const Vector& act_gen(std::size_t g, std::size_t b) {
        const std::size_t key = g * dim_ + b;
        if (state_[key] == 2) return memo_[key];
        if (state_[key] == 1) throw InternalConsistencyError("restricted_induced_module: rewriting did not terminate");
        state_[key] = 1;
        const std::size_t mono = b / dv_, t = b % dv_;
        std::size_t j0 = r_;
        for (std::size_t j = 0; j < r_; ++j)
            if (exponent(mono, j)) {
                j0 = j;
                break;
            }
        Vector res(dim_, 0);
        if (g >= r_) {
            const Matrix& rho = V_.action(g - r_);
            if (j0 == r_) {
                for (std::size_t u = 0; u < dv_; ++u) res[u] = rho(u, t);
            } else {
                // k (c_j0 X) = c_j0 (k X) + [k, c_j0] X
                const std::size_t X = with_exponent(mono, j0, exponent(mono, j0) - 1) * dv_ + t;
                Vector kX = act_gen(g, X);
                res = apply_gen_vec(j0, kX);
                axpy(F_, 1, apply_elem(brackets_[g * G_.dim() + j0], X), res);
            }
        } else {
            const std::size_t j = g;
            if (j < j0) {
                res[with_exponent(mono, j, 1) * dv_ + t] = 1;
            } else if (j == j0) {
                const std::size_t e = exponent(mono, j);
                if (e + 1 < p_) {
                    res[with_exponent(mono, j, e + 1) * dv_ + t] = 1;
                } else {
                    // c_j^p = c_j^[p] in the restricted enveloping algebra
                    res = apply_elem(cpow_[j], with_exponent(mono, j, 0) * dv_ + t);
                }
            } else {
                // c_j (c_j0 X) = c_j0 (c_j X) + [c_j, c_j0] X
                const std::size_t X = with_exponent(mono, j0, exponent(mono, j0) - 1) * dv_ + t;
                Vector cX = act_gen(j, X);
                res = apply_gen_vec(j0, cX);
                axpy(F_, 1, apply_elem(brackets_[j * G_.dim() + j0], X), res);
            }
        }
        memo_[key] = std::move(res);
        state_[key] = 2;
        return memo_[key];
    }

    const LieAlgebra& G_;
    PrimeField F_;
    std::size_t p_, r_, s_, dv_;
    const Module& V_;
    Matrix to_adapted_;
    std::vector<Vector> adapted_;
    std::vector<Vector> brackets_;
    std::vector<Vector> cpow_;
    std::size_t nmono_ = 1, dim_ = 0;
    std::vector<Vector> memo_;
    std::vector<char> state_;
};

}  // namespace detail

/// u(G) (x)_{u(K)} V for a p-subalgebra K and a restricted K-module V given in
/// K's echelon basis. Basis: monomials in the cobasis (first factor leftmost,
/// exponents below p, exponent of c_1 least significant), tensor V, V index fastest.
inline Module restricted_induced_module(const AlgebraPtr& G, const Subspace& K, const Module& V, const std::vector<Vector>& cobasis) {
    if (!G->pmap()) throw InvalidArgument("restricted_induced_module: algebra has no p-map");
    const PMap& pm = *G->pmap();
    if (!is_p_subalgebra(*G, pm, K)) throw InvalidArgument("restricted_induced_module: K is not a p-subalgebra");
    if (V.algebra()->dim() != K.dim()) throw InvalidArgument("restricted_induced_module: V is not a K-module");
    if (!is_restricted_module(V, restrict_pmap(*G, pm, K)))
        throw InvalidArgument("restricted_induced_module: V is not a restricted module");
    detail::InducedAction act(*G, pm, K, V, cobasis);
    std::vector<Matrix> a;
    for (std::size_t i = 0; i < G->dim(); ++i) a.push_back(act.matrix_of(G->unit(i)));
    return Module(G, act.dim(), std::move(a), "induced(" + V.label() + ")");
}

}  // namespace modlie
