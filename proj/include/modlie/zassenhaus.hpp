#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modlie/meataxe.hpp"
#include "modlie/restricted.hpp"

namespace modlie {

/// Basis e_{-1}, ..., e_{N-2} of W(p,m) sits at indices 0..N-1.
inline std::size_t zidx(std::int64_t i) { return static_cast<std::size_t>(i + 1); }

struct ZassParams {
    int p;
    int m;
    std::int64_t N;  ///< p^m
};

inline ZassParams zass_params(int p, int m) {
    if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw InvalidArgument("m must be positive");
    return {p, m, ipow(p, m)};
}

/// Recovers (p, m) from a Zassenhaus algebra built by witt_algebra.
inline ZassParams zass_params(const LieAlgebra& W) {
    const int p = static_cast<int>(W.p());
    int m = 0;
    std::int64_t N = 1;
    while (N < static_cast<std::int64_t>(W.dim())) {
        N *= p;
        ++m;
    }
    if (N != static_cast<std::int64_t>(W.dim()) || m < 1) throw InvalidArgument("algebra dimension is not a power of p");
    return {p, m, N};
}

inline std::string zlabel(std::int64_t i) { return "e" + std::to_string(i); }

/// [e_i, e_j] = (C(i+j+1, j) - C(i+j+1, i)) e_{i+j}, graded by deg e_i = i.
inline AlgebraPtr witt_algebra(int p, int m) {
    const auto P = zass_params(p, m);
    const PrimeField F(p);
    const std::int64_t N = P.N;
    std::vector<std::tuple<std::size_t, std::size_t, Coeffs>> upper;
    for (std::int64_t i = -1; i <= N - 2; ++i)
        for (std::int64_t j = i + 1; j <= N - 2; ++j) {
            const std::int64_t s = i + j;
            if (s < -1 || s > N - 2) continue;
            const Scalar c = F.sub(lucas_binomial(s + 1, j, p), lucas_binomial(s + 1, i, p));
            if (c) upper.emplace_back(zidx(i), zidx(j), Coeffs{{static_cast<std::uint32_t>(zidx(s)), c}});
        }
    std::vector<std::string> labels;
    std::vector<int> grading;
    for (std::int64_t i = -1; i <= N - 2; ++i) {
        labels.push_back(zlabel(i));
        grading.push_back(static_cast<int>(i));
    }
    LieAlgebra W = LieAlgebra::from_upper(F, static_cast<std::size_t>(N), upper, labels);
    W.set_grading(grading);
    return share(std::move(W));
}

inline Subspace zspan(const LieAlgebra& W, std::int64_t from) {
    std::vector<std::size_t> idx;
    for (std::size_t k = zidx(from); k < W.dim(); ++k) idx.push_back(k);
    return basis_span(W, idx);
}

inline Subspace borel(const LieAlgebra& W) { return zspan(W, 0); }
inline Subspace nilradical(const LieAlgebra& W) { return zspan(W, 1); }
inline Subspace torus(const LieAlgebra& W) { return basis_span(W, {zidx(0)}); }

/// p-map of the Borel subalgebra in its basis e_0, ..., e_{N-2}:
/// e_0 -> e_0, e_{p^t-1} -> (p-1)! e_{p^{t+1}-p} for 1 <= t <= m-1, all others -> 0.
inline PMap borel_pmap(int p, int m) {
    const auto P = zass_params(p, m);
    const PrimeField F(p);
    const std::size_t d = static_cast<std::size_t>(P.N - 1);
    PMap pm(d, Vector(d, 0));
    pm[0][0] = 1;
    const Scalar fact = factorial_mod(p - 1, F);
    for (int t = 1; t <= m - 1; ++t) {
        const std::int64_t i = ipow(p, t) - 1;
        pm[static_cast<std::size_t>(i)][static_cast<std::size_t>(p * i)] = fact;
    }
    return pm;
}

/// The Borel subalgebra as a restricted algebra with grading.
inline AlgebraPtr borel_algebra(const AlgebraPtr& W) {
    const auto P = zass_params(*W);
    LieAlgebra B = subalgebra_as_algebra(*W, borel(*W));
    B.set_pmap(borel_pmap(P.p, P.m));
    return share(std::move(B));
}

/// The nilradical with the restriction of the Borel p-map.
inline AlgebraPtr nilradical_algebra(const AlgebraPtr& W) {
    const auto P = zass_params(*W);
    LieAlgebra U = subalgebra_as_algebra(*W, nilradical(*W));
    PMap bpm = borel_pmap(P.p, P.m);
    PMap pm;
    for (std::size_t t = 1; t < bpm.size(); ++t) pm.emplace_back(bpm[t].begin() + 1, bpm[t].end());
    U.set_pmap(std::move(pm));
    return share(std::move(U));
}

inline AlgebraPtr torus_algebra(const AlgebraPtr& W) {
    LieAlgebra T = subalgebra_as_algebra(*W, torus(*W));
    T.set_pmap({Vector{1}});
    return share(std::move(T));
}

/// Minimal p-envelope of W(p,m), checked against the closed form
/// [e_{-1}^{[p]^r}, e_j] = e_{j-p^r} of the appended elements.
inline Envelope restricted_zassenhaus(const AlgebraPtr& W) {
    const auto P = zass_params(*W);
    Envelope E = minimal_p_envelope(W);
    const auto& G = *E.env;
    const std::size_t n = W->dim();
    if (G.dim() != static_cast<std::size_t>(P.N + P.m - 1))
        throw InternalConsistencyError("restricted_zassenhaus: envelope dimension differs from p^m + m - 1");
    for (int r = 1; r <= P.m - 1; ++r) {
        const std::size_t k = n + static_cast<std::size_t>(r) - 1;
        if (E.provenance[k] != std::pair<std::size_t, int>{zidx(-1), r})
            throw InternalConsistencyError("restricted_zassenhaus: unexpected provenance of appended element");
        const std::int64_t shift = ipow(P.p, r);
        for (std::int64_t j = -1; j <= P.N - 2; ++j) {
            Coeffs expect;
            if (j - shift >= -1) expect.push_back({static_cast<std::uint32_t>(zidx(j - shift)), 1});
            if (G.bracket_basis(k, zidx(j)) != expect)
                throw InternalConsistencyError("restricted_zassenhaus: closed-form bracket mismatch");
        }
    }
    return E;
}

/// V(lambda, c): basis v_n = e_{-1}^n (x) 1, e_{-1} v_n = v_{n+1}, e_{-1} v_{N-1} = c v_0,
/// e_i v_n = (-1)^i [lambda C(n,i) - C(n,i+1)] v_{n-i} for i >= 0.
inline Module verma(const AlgebraPtr& W, Scalar lambda, Scalar c = 0) {
    const auto P = zass_params(*W);
    const PrimeField& F = W->field();
    const std::int64_t N = P.N;
    const std::size_t n = static_cast<std::size_t>(N);
    lambda %= F.p();
    c %= F.p();
    std::vector<Matrix> act(n, Matrix(n, n));
    for (std::int64_t k = 0; k + 1 < N; ++k) act[zidx(-1)](static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)) = 1;
    act[zidx(-1)](0, n - 1) = c;
    for (std::int64_t i = 0; i <= N - 2; ++i)
        for (std::int64_t k = i; k < N; ++k) {
            const Scalar coeff = F.mul(F.sign(i), F.sub(F.mul(lambda, lucas_binomial(k, i, P.p)), lucas_binomial(k, i + 1, P.p)));
            if (coeff) act[zidx(i)](static_cast<std::size_t>(k - i), static_cast<std::size_t>(k)) = coeff;
        }
    std::string label = "V(" + std::to_string(lambda) + (c ? "," + std::to_string(c) : "") + ")";
    Module M(W, n, std::move(act), label);
    auto rep = validate_module(M);
    if (!rep.ok) throw ConstructionInvalid(label + " is not a module: " + rep.violations.front());
    return M;
}

/// A_lambda(m): e_i x^(a) = [C(a+i, i+1) + lambda C(a+i, i)] x^(a+i), zero outside 0..N-1.
inline Module divided_power_module(const AlgebraPtr& W, Scalar lambda) {
    const auto P = zass_params(*W);
    const PrimeField& F = W->field();
    const std::int64_t N = P.N;
    const std::size_t n = static_cast<std::size_t>(N);
    lambda %= F.p();
    std::vector<Matrix> act(n, Matrix(n, n));
    for (std::int64_t i = -1; i <= N - 2; ++i)
        for (std::int64_t a = 0; a < N; ++a) {
            const std::int64_t t = a + i;
            if (t < 0 || t >= N) continue;
            const Scalar coeff = F.add(lucas_binomial(t, i + 1, P.p), F.mul(lambda, lucas_binomial(t, i, P.p)));
            if (coeff) act[zidx(i)](static_cast<std::size_t>(t), static_cast<std::size_t>(a)) = coeff;
        }
    return Module(W, n, std::move(act), "A_" + std::to_string(lambda));
}

/// S(lambda): V(lambda) off {0, p-1}, trivial for 0, V(p-1)/F v_{N-1} for p-1.
inline Module simple_module(const AlgebraPtr& W, Scalar lambda, const MeatAxeOptions& opt = {}) {
    const auto P = zass_params(*W);
    if (P.p == 2) throw InvalidArgument("simple_module: needs p > 2");
    lambda %= static_cast<Scalar>(P.p);
    Module S;
    if (lambda == 0) {
        S = trivial_module(W);
    } else if (lambda == static_cast<Scalar>(P.p - 1)) {
        Module V = verma(W, lambda);
        S = quotient_module(V, Subspace(W->field(), V.dim(), {unit_vector(V.dim(), V.dim() - 1)}));
    } else {
        S = verma(W, lambda);
    }
    S.set_label("S(" + std::to_string(lambda) + ")");
    if (is_simple(S, opt).simple != Decision::yes) throw ConstructionInvalid(S.label() + " was not certified simple");
    return S;
}

/// One-dimensional module of the Borel subalgebra (basis e_0, e_1, ...) on which e_0 acts by lambda.
inline Module weight_module(const AlgebraPtr& B, Scalar lambda) {
    std::vector<Matrix> act(B->dim(), Matrix(1, 1));
    act[0](0, 0) = lambda % B->p();
    return Module(B, 1, std::move(act), "F_" + std::to_string(lambda % B->p()));
}

/// Gram matrix of (e_i, e_j) = coefficient of x^(N-1) in x^(i+1) x^(j+1), for p = 3.
inline Matrix invariant_form(const AlgebraPtr& W) {
    const auto P = zass_params(*W);
    if (P.p != 3) throw Unsupported("invariant_form: only defined for p = 3");
    const std::size_t n = static_cast<std::size_t>(P.N);
    Matrix G(n, n);
    for (std::int64_t a = 0; a < P.N; ++a)
        for (std::int64_t b = 0; b < P.N; ++b)
            if (a + b == P.N - 1) G(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = lucas_binomial(a + b, a, 3);
    return G;
}

}  // namespace modlie
