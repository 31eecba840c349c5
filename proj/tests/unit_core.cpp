#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace modlie;

namespace {

const std::vector<std::pair<int, int>> kGrid = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {3, 3}};


Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Scalar p, int zero_bias) {
    Matrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (static_cast<int>(rng() % 10) >= zero_bias) A(i, j) = static_cast<Scalar>(rng() % p);
    return A;
}

}  // namespace

// ---- field ----

TEST(Field, ArithmeticIdentities) {
    for (Scalar p : {2u, 3u, 5u, 7u, 101u}) {
        PrimeField F(p);
        for (Scalar a = 1; a < p; ++a) {
            EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
            EXPECT_EQ(F.pow(a, p - 1), 1u);
            EXPECT_EQ(F.add(a, F.neg(a)), 0u);
        }
        EXPECT_EQ(F.from_int(-1), p - 1);
        if (p > 2) EXPECT_EQ(F.to_signed(p - 1), -1);
    }
    EXPECT_THROW(PrimeField(4), InvalidArgument);
    EXPECT_THROW(PrimeField(5).inv(0), InvalidArgument);
}

TEST(Lucas, KnownValues) {
    EXPECT_EQ(lucas_binomial(5, 0, 3), 1u);
    EXPECT_EQ(lucas_binomial(4, 2, 3), 0u);
    EXPECT_EQ(lucas_binomial(10, 5, 3), 0u);
    EXPECT_EQ(lucas_binomial(3, -1, 5), 0u);
    EXPECT_EQ(lucas_binomial(3, 4, 5), 0u);
    EXPECT_THROW(lucas_binomial(5, 2, 4), InvalidArgument);
    EXPECT_THROW(lucas_binomial(5, 2, 1), InvalidArgument);
}

TEST(Lucas, MatchesFactorialOracleOn500RandomCases) {
    std::mt19937_64 rng(7);
    const long long primes[] = {2, 3, 5, 7, 11, 13, 31, 97};
    for (int t = 0; t < 500; ++t) {
        const long long p = primes[rng() % 8];
        const long long n = static_cast<long long>(rng() % 400);
        const long long k = static_cast<long long>(rng() % (n + 3)) - 1;
        ASSERT_EQ(static_cast<long long>(lucas_binomial(n, k, p)), oracle::binom_big(n, k, p)) << n << " " << k << " " << p;
    }
}

// ---- dense and sparse linear algebra ----

TEST(Dense, Examples) {
    PrimeField F5(5), F3(3);
    EXPECT_EQ(rank(F5, Matrix(3, 3)), 0u);
    EXPECT_EQ(rank(F5, Matrix::identity(4)), 4u);
    EXPECT_EQ(rank(F5, Matrix(2, 2, {1, 2, 2, 4})), 1u);
    EXPECT_TRUE(kernel_basis(F5, Matrix::identity(3)).empty());
    EXPECT_EQ(kernel_basis(F5, Matrix(2, 4)).size(), 4u);
    auto k = kernel_basis(F3, Matrix(1, 2, {1, 1}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(F3.add(k[0][0], k[0][1]), 0u);
    EXPECT_NE(k[0][0], 0u);
    Vector b = {3, 1, 4};
    EXPECT_EQ(*solve(F5, Matrix::identity(3), b), b);
    EXPECT_FALSE(solve(F5, Matrix(3, 3), b).has_value());
    EXPECT_EQ(*solve(F5, Matrix(1, 1, {2}), Vector{3}), Vector{4});
    EXPECT_THROW(solve(F5, Matrix::identity(2), b), InvalidArgument);
}

TEST(Dense, RankProperties) {
    std::mt19937_64 rng(11);
    for (Scalar p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
            Matrix A = random_matrix(rng, r, c, p, static_cast<int>(rng() % 8));
            const std::size_t rk = rank(F, A);
            EXPECT_EQ(rk, rank(F, transpose(A)));
            EXPECT_EQ(rk, oracle::rank(oracle::to_rows(A), p));
            auto K = kernel_basis(F, A);
            EXPECT_EQ(rk + K.size(), c);
            for (const auto& v : K) EXPECT_TRUE(is_zero(apply(F, A, v)));
            // solve on a consistent right-hand side returns a genuine solution
            Vector x(c);
            for (auto& e : x) e = static_cast<Scalar>(rng() % p);
            const Vector y = apply(F, A, x);
            auto s = solve(F, A, y);
            ASSERT_TRUE(s.has_value());
            EXPECT_EQ(apply(F, A, *s), y);
            if (r == c) {
                auto inv = inverse(F, A);
                EXPECT_EQ(inv.has_value(), rk == r);
                if (inv) EXPECT_EQ(multiply(F, A, *inv).data(), Matrix::identity(r).data());
            }
        }
    }
}

TEST(Sparse, AgreesWithDense) {
    std::mt19937_64 rng(13);
    for (Scalar p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
            Matrix A = random_matrix(rng, r, c, p, 7);
            SparseMatrix S = SparseMatrix::from_dense(A);
            EXPECT_EQ(S.to_dense().data(), A.data());
            EXPECT_EQ(rank(F, S), rank(F, A));
            EXPECT_EQ(rank(F, transpose(S)), rank(F, A));
            EXPECT_EQ(rank(F, row_basis(F, S)), rank(F, A));
            auto K = kernel_basis(F, S);
            EXPECT_EQ(K.size() + rank(F, A), c);
            for (const auto& v : K) EXPECT_TRUE(is_zero(apply(F, S, v)));
            Matrix B = random_matrix(rng, c, 1 + rng() % 6, p, 6);
            EXPECT_EQ(multiply(F, S, SparseMatrix::from_dense(B)).to_dense().data(), multiply(F, A, B).data());
            Vector x(c);
            for (auto& e : x) e = static_cast<Scalar>(rng() % p);
            const Vector y = apply(F, S, x);
            auto s = solve(F, S, y);
            ASSERT_TRUE(s.has_value());
            EXPECT_EQ(apply(F, S, *s), y);
        }
    }
}

// ---- Lie algebras ----

TEST(LieCore, AbelianAndBrokenTables) {
    PrimeField F(3);
    auto A = share(LieAlgebra::from_upper(F, 3, {}));
    EXPECT_TRUE(validate_algebra(*A).ok);
    EXPECT_EQ(center(*A).dim(), 3u);
    EXPECT_EQ(derived_subalgebra(*A).dim(), 0u);
    EXPECT_TRUE(is_abelian(*A));
    const Module ad = adjoint_rep(A);
    for (const auto& M : ad.actions()) EXPECT_TRUE(M.is_zero());
    EXPECT_TRUE(validate_grading(*A, {0, 0, 0}).ok);
    EXPECT_TRUE(validate_pmap(*A, PMap(3, Vector(3, 0))).ok);
    EXPECT_TRUE(is_zero(pmap_apply(*A, PMap(3, Vector(3, 0)), Vector{1, 2, 1})));
    for (const auto& s : jacobson_s_terms(*A, Vector{1, 0, 2}, Vector{0, 1, 1})) EXPECT_TRUE(is_zero(s));
    EXPECT_TRUE(is_zero(sigma_character(*A, whole(*A))));

    // a bracket table violating Jacobi is rejected with the triple named
    auto bad = LieAlgebra::from_upper(F, 3, {{0, 1, {{1, 1}}}, {0, 2, {{2, 1}}}, {1, 2, {{0, 1}}}});
    auto rep = validate_algebra(bad);
    EXPECT_FALSE(rep.ok);
    ASSERT_FALSE(rep.violations.empty());
}

TEST(Witt, BracketMatchesDerivationsOfDividedPowers) {
    for (auto [p, m] : kGrid) {
        auto W = witt_algebra(p, m);
        const long long N = static_cast<long long>(W->dim());
        ASSERT_EQ(N, ipow(p, m));
        const auto ref = oracle::witt_brackets(p, N);
        for (long long i = 0; i < N; ++i)
            for (long long j = 0; j < N; ++j) {
                auto got = oracle::bracket(*W, i, j);
                ASSERT_EQ(got, ref[i][j]) << "p=" << p << " m=" << m << " [e" << i - 1 << ",e" << j - 1 << "]";
            }
    }
}

TEST(Witt, SmallBrackets) {
    auto W = witt_algebra(3, 1);
    const auto& F = W->field();
    EXPECT_EQ(W->bracket(W->unit(zidx(1)), W->unit(zidx(-1))), scaled(F, F.neg(1), W->unit(zidx(0))));
    EXPECT_EQ(W->bracket(W->unit(zidx(0)), W->unit(zidx(1))), W->unit(zidx(1)));
    for (auto [p, m] : kGrid) {
        auto Wp = witt_algebra(p, m);
        const auto& G = Wp->field();
        const long long N = static_cast<long long>(Wp->dim());
        for (long long j = -1; j <= N - 2; ++j) {
            EXPECT_EQ(Wp->bracket(Wp->unit(zidx(0)), Wp->unit(zidx(j))), scaled(G, G.from_int(j), Wp->unit(zidx(j))));
            EXPECT_TRUE(is_zero(Wp->bracket(Wp->unit(zidx(j)), Wp->unit(zidx(j)))));
            for (long long i = -1; i <= N - 2; ++i)
                if (i + j > N - 2) EXPECT_TRUE(Wp->bracket_basis(zidx(i), zidx(j)).empty());
        }
    }
    EXPECT_THROW(W->bracket(Vector{1, 0}, Vector{0, 1, 0}), InvalidArgument);
}

TEST(Witt, StructureAcrossGrid) {
    for (auto [p, m] : kGrid) {
        auto W = witt_algebra(p, m);
        SCOPED_TRACE("p=" + std::to_string(p) + " m=" + std::to_string(m));
        EXPECT_TRUE(validate_algebra(*W).ok);
        ASSERT_TRUE(W->grading().has_value());
        EXPECT_TRUE(validate_grading(*W, *W->grading()).ok);
        EXPECT_EQ(center(*W).dim(), 0u);
        // for odd p every basis element generates W as an ideal
        if (p > 2)
            for (std::size_t i = 0; i < W->dim(); ++i) EXPECT_EQ(ideal_closure(*W, basis_span(*W, {i})).dim(), W->dim());
        auto B = borel_algebra(W);
        auto U = nilradical_algebra(W);
        auto T = torus_algebra(W);
        for (const auto& A : {B, U, T}) {
            EXPECT_TRUE(validate_algebra(*A).ok);
            ASSERT_TRUE(A->pmap().has_value());
            EXPECT_TRUE(validate_pmap(*A, *A->pmap()).ok);
        }
        EXPECT_TRUE(is_solvable(*B));
        EXPECT_TRUE(is_nilpotent(*U));
        EXPECT_TRUE(is_ideal(*B, detail::units(B->field(), B->dim(), 1, B->dim())));
        EXPECT_TRUE(is_subalgebra(*W, borel(*W)));
    }
}

TEST(Witt, GradingRejectsWrongDegree) {
    auto W = witt_algebra(3, 1);
    std::vector<int> deg = *W->grading();
    deg[zidx(0)] = 1;
    EXPECT_FALSE(validate_grading(*W, deg).ok);
}

TEST(Restricted, BorelPmapTable) {
    for (auto [p, m] : kGrid) {
        auto W = witt_algebra(p, m);
        auto B = borel_algebra(W);
        const auto& F = B->field();
        const auto& pm = *B->pmap();
        const std::size_t N = W->dim();
        // e_0 is index 0 in the Borel basis, e_i is index i
        EXPECT_EQ(pm[0], B->unit(0));
        for (std::size_t i = 1; i + 1 < N; ++i) {
            bool power_minus_one = false;
            for (int t = 1; t < m; ++t) power_minus_one = power_minus_one || static_cast<long long>(i) == ipow(p, t) - 1;
            Vector want(B->dim(), 0);
            if (power_minus_one) want[p * i] = factorial_mod(p - 1, F);
            EXPECT_EQ(pm[i], want) << "i=" << i;
            // every element of the nilradical has vanishing second p-power
            EXPECT_TRUE(is_zero(pmap_apply(*B, pm, pmap_apply(*B, pm, B->unit(i)))));
        }
    }
    // e_0^[p] := 0 breaks ad(x^[p]) = (ad x)^p
    auto B = borel_algebra(witt_algebra(3, 1));
    PMap broken = *B->pmap();
    broken[0] = Vector(B->dim(), 0);
    EXPECT_FALSE(validate_pmap(*B, broken).ok);
}

TEST(Restricted, EnvelopeShape) {
    for (auto [p, m] : kGrid) {
        auto W = witt_algebra(p, m);
        Envelope E = restricted_zassenhaus(W);
        const auto& G = *E.env;
        const auto& F = G.field();
        const std::size_t N = W->dim();
        SCOPED_TRACE("p=" + std::to_string(p) + " m=" + std::to_string(m));
        EXPECT_EQ(G.dim(), N + m - 1);
        EXPECT_TRUE(validate_algebra(G).ok);
        ASSERT_TRUE(G.pmap().has_value());
        EXPECT_TRUE(validate_pmap(G, *G.pmap()).ok);
        Subspace image = embedded_image(E);
        EXPECT_EQ(image.dim(), N);
        EXPECT_TRUE(is_ideal(G, image));
        EXPECT_TRUE(image.contains(derived_subalgebra(G)));
        EXPECT_TRUE(image.contains(center(G)));
        // appended element r acts on W as (ad e_{-1})^{p^r}
        Matrix ad = W->ad_basis(zidx(-1));
        EXPECT_TRUE(power(F, ad, static_cast<std::uint64_t>(ipow(p, m))).is_zero());
        for (int r = 1; r < m; ++r) {
            const std::size_t er = N + r - 1;
            Matrix want = power(F, ad, static_cast<std::uint64_t>(ipow(p, r)));
            for (std::size_t j = 0; j < N; ++j) {
                Vector got = G.bracket(G.unit(er), G.unit(j));
                Vector exp(G.dim(), 0);
                for (std::size_t a = 0; a < N; ++a) exp[a] = want(a, j);
                EXPECT_EQ(got, exp);
            }
        }
        if (m == 1) EXPECT_EQ(G.dim(), W->dim());
    }
    PrimeField F(3);
    auto A = share(LieAlgebra::from_upper(F, 2, {}));
    EXPECT_THROW(minimal_p_envelope(A), Unsupported);
}

// ---- modules ----

namespace {

std::vector<Module> generators(const AlgebraPtr& W, const Envelope& E) {
    std::vector<Module> out;
    const auto& F = W->field();
    for (Scalar l = 0; l < F.p(); ++l) {
        out.push_back(verma(W, l));
        out.push_back(divided_power_module(W, l));
    }
    out.push_back(adjoint_rep(W));
    out.push_back(trivial_module(W));
    out.push_back(adjoint_rep(E.env));
    out.push_back(extend_to_envelope(verma(W, 0), E));
    return out;
}

}  // namespace

TEST(Modules, GeneratorsValidate) {
    for (auto [p, m] : kGrid) {
        auto W = witt_algebra(p, m);
        Envelope E = restricted_zassenhaus(W);
        for (const auto& M : generators(W, E)) {
            EXPECT_TRUE(validate_module(M).ok) << M.label() << " p=" << p << " m=" << m;
            EXPECT_TRUE(validate_module(dual(M)).ok);
            // dual of the dual is the module itself
            EXPECT_EQ(dual(dual(M)).actions(), M.actions());
        }
        if (p > 2)
            for (Scalar l = 0; l < static_cast<Scalar>(p); ++l) EXPECT_TRUE(validate_module(simple_module(W, l)).ok);
        auto B = borel_algebra(W);
        for (Scalar l = 0; l < static_cast<Scalar>(p); ++l) EXPECT_TRUE(validate_module(weight_module(B, l)).ok);
    }
}

TEST(Modules, VermaActionFormulas) {
    auto W = witt_algebra(3, 1);
    Module V = verma(W, 1);
    // e_1 (e_{-1}^2 (x) 1) = 2 e_{-1} (x) 1
    EXPECT_EQ(V.action(zidx(1))(1, 2), 2u);
    for (auto [p, m] : kGrid) {
        auto Wp = witt_algebra(p, m);
        const auto& F = Wp->field();
        for (Scalar l = 0; l < F.p(); ++l) {
            Module M = verma(Wp, l);
            const Matrix& e0 = M.action(zidx(0));
            for (std::size_t n = 0; n < M.dim(); ++n) EXPECT_EQ(e0(n, n), F.sub(l, F.from_int(static_cast<long long>(n))));
        }
    }
}

TEST(Modules, TwistAndRestriction) {
    auto W = witt_algebra(5, 2);
    auto B = borel_algebra(W);
    const auto& F = B->field();
    Module M = weight_module(B, 2);
    Vector zero(B->dim(), 0);
    EXPECT_EQ(twist(M, zero).actions(), M.actions());
    Vector chi(B->dim(), 0);
    chi[0] = 3;
    Vector back(B->dim(), 0);
    back[0] = F.neg(3);
    EXPECT_EQ(twist(twist(M, chi), back).actions(), M.actions());
    Vector bad(B->dim(), 0);
    bad[1] = 1;
    EXPECT_THROW(twist(M, bad), InvalidArgument);

    Envelope E = restricted_zassenhaus(W);
    Module V = verma(W, 3);
    Module ext = extend_to_envelope(V, E);
    Module back_to_W = restrict_to(ext, embedded_image(E), W);
    EXPECT_EQ(back_to_W.actions(), V.actions());
    EXPECT_TRUE(is_restricted_module(ext, *E.env->pmap()));
    EXPECT_THROW(sigma_character(*W, Subspace(F, W->dim(), {W->unit(zidx(-1)), W->unit(zidx(1))})), InvalidArgument);
}

TEST(Modules, SpinAndInvariants) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        auto W = witt_algebra(p, m);
        const std::size_t N = W->dim();
        EXPECT_EQ(invariants(trivial_module(W, 2)).dim(), 2u);
        for (Scalar l = 0; l < static_cast<Scalar>(p); ++l) {
            Module V = verma(W, l);
            EXPECT_EQ(invariants(V).dim(), l + 1 == static_cast<Scalar>(p) ? 1u : 0u);
            EXPECT_EQ(spin(V, {unit_vector(N, 0)}).dim(), N);
        }
        Module top = verma(W, p - 1);
        EXPECT_EQ(spin(top, {unit_vector(N, N - 1)}).dim(), 1u);
    }
}

TEST(Modules, IdentityIsomorphism) {
    auto W = witt_algebra(3, 2);
    Module V = verma(W, 1);
    auto r = is_isomorphic(V, V);
    EXPECT_EQ(r.iso, Decision::yes);
    EXPECT_EQ(is_isomorphic(V, trivial_module(W)).iso, Decision::no);
    EXPECT_THROW(is_isomorphic(V, trivial_module(borel_algebra(W))), InvalidArgument);
    EXPECT_EQ(is_simple(trivial_module(W)).simple, Decision::yes);
    EXPECT_EQ(composition_series(V).factors.size(), 1u);
}

TEST(Modules, SimpleModuleDimensions) {
    auto W = witt_algebra(5, 1);
    EXPECT_EQ(simple_module(W, 0).dim(), 1u);
    EXPECT_EQ(simple_module(W, 4).dim(), 4u);
    Module S2 = simple_module(W, 2);
    EXPECT_EQ(S2.dim(), 5u);
    EXPECT_EQ(is_simple(S2).simple, Decision::yes);
    EXPECT_EQ(is_simple(verma(W, 4)).simple, Decision::no);
    auto wit = is_simple(verma(W, 4)).witness;
    ASSERT_TRUE(wit.has_value());
    EXPECT_EQ(wit->dim(), 1u);
    EXPECT_THROW(invariant_form(W), Unsupported);
}

TEST(Modules, RestrictedInductionOfTheWholeAlgebraIsIdentity) {
    auto W = witt_algebra(3, 1);
    Envelope E = restricted_zassenhaus(W);
    Module V = extend_to_envelope(verma(W, 2), E);
    Module I = restricted_induced_module(E.env, whole(*E.env), V, {});
    EXPECT_EQ(I.actions(), V.actions());
}

TEST(Modules, InductionRejectsBadCobasis) {
    // W(3,1) is its own envelope, with the same basis
    auto W = witt_algebra(3, 1);
    auto G = restricted_zassenhaus(W).env;
    Module Fl = weight_module(borel_algebra(W), 1);
    // e_0 lies in the Borel subalgebra, so it is no complement
    EXPECT_THROW(restricted_induced_module(G, borel(*W), Fl, {G->unit(zidx(0))}), InvalidArgument);
    EXPECT_THROW(restricted_induced_module(G, borel(*W), Fl, {}), InvalidArgument);
    EXPECT_THROW(restricted_induced_module(W, borel(*W), Fl, {W->unit(zidx(-1))}), InvalidArgument);
    Module I = restricted_induced_module(G, borel(*W), Fl, {G->unit(zidx(-1))});
    EXPECT_EQ(I.dim(), 3u);
    EXPECT_EQ(is_isomorphic(I, Module(G, 3, verma(W, 1).actions())).iso, Decision::yes);
}
