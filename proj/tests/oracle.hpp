#pragma once
// Reference computations for the tests. Nothing here calls the library's
// elimination, binomial or cohomology code: values are recomputed from
// definitions with plain integer arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "modlie/modlie.hpp"

namespace oracle {

using Row = std::vector<long long>;

inline long long md(long long a, long long p) { return ((a % p) + p) % p; }

inline long long inv_mod(long long a, long long p) {
    long long r = 1, b = md(a, p), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// C(n, k) mod p from exact big-integer factorials.
inline long long binom_big(long long n, long long k, long long p) {
    using boost::multiprecision::cpp_int;
    if (k < 0 || k > n) return 0;
    cpp_int num = 1, den = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    cpp_int q = num / den;
    return static_cast<long long>(q % p);
}

/// Pascal's triangle mod p up to row n.
inline std::vector<Row> pascal(long long n, long long p) {
    std::vector<Row> t(n + 1, Row(n + 1, 0));
    for (long long a = 0; a <= n; ++a) {
        t[a][0] = 1 % p;
        for (long long b = 1; b <= a; ++b) t[a][b] = (t[a - 1][b - 1] + t[a - 1][b]) % p;
    }
    return t;
}

/// Rank by straightforward Gaussian elimination on a copy.
inline std::size_t rank(std::vector<Row> A, long long p) {
    if (A.empty()) return 0;
    const std::size_t cols = A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
        std::size_t piv = r;
        while (piv < A.size() && md(A[piv][c], p) == 0) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[piv], A[r]);
        const long long iv = inv_mod(A[r][c], p);
        for (auto& x : A[r]) x = md(x * iv, p);
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (i == r) continue;
            const long long f = md(A[i][c], p);
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j) A[i][j] = md(A[i][j] - f * A[r][j], p);
        }
        ++r;
    }
    return r;
}

inline std::vector<Row> to_rows(const modlie::Matrix& M) {
    std::vector<Row> out(M.rows(), Row(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out[i][j] = M(i, j);
    return out;
}

/// e_i = x^{(i+1)} d as a matrix on the divided power algebra A(m) of dimension N.
/// x^{(a)} d x^{(c)} = C(a+c-1, a) x^{(a+c-1)}.
inline std::vector<Row> derivation(long long i, long long N, const std::vector<Row>& C, long long p) {
    std::vector<Row> D(N, Row(N, 0));
    const long long a = i + 1;
    for (long long c = 1; c < N; ++c) {
        const long long t = a + c - 1;
        if (t < N) D[t][c] = md(C[t][a], p);
    }
    return D;
}

/// Structure constants of W(p, m) recovered from commutators of derivations of A(m).
/// out[i+1][j+1] is the coefficient vector of [e_i, e_j] in the basis e_{-1}..e_{N-2}.
inline std::vector<std::vector<Row>> witt_brackets(long long p, long long N) {
    const auto C = pascal(2 * N, p);
    std::vector<std::vector<Row>> D;
    for (long long i = -1; i <= N - 2; ++i) D.push_back(derivation(i, N, C, p));
    std::vector<std::vector<Row>> out(N, std::vector<Row>(N, Row(N, 0)));
    for (long long i = 0; i < N; ++i)
        for (long long j = 0; j < N; ++j) {
            // [D_i, D_j] applied to x^{(1)} is the coefficient column: D_k x^{(1)} = x^{(k)}
            std::vector<long long> col(N, 0);
            for (long long r = 0; r < N; ++r) {
                long long s = 0;
                for (long long t = 0; t < N; ++t) s += D[i][r][t] * D[j][t][1] - D[j][r][t] * D[i][t][1];
                col[r] = md(s, p);
            }
            // x^{(k)} = D_{k-1} x^{(1)}, index of e_{k-1} is k
            for (long long k = 0; k < N; ++k) out[i][j][k] = col[k];
        }
    return out;
}

inline std::vector<long long> bracket(const modlie::LieAlgebra& L, std::size_t i, std::size_t j) {
    std::vector<long long> v(L.dim(), 0);
    for (const auto& [k, c] : L.bracket_basis(i, j)) v[k] = c;
    return v;
}

/// dim Z^1 - dim B^1 from the definition of a derivation.
inline std::size_t h1(const modlie::Module& M) {
    const auto& L = *M.algebra();
    const long long p = L.p();
    const std::size_t D = L.dim(), d = M.dim();
    std::vector<Row> eqs;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = i + 1; j < D; ++j) {
            const auto b = bracket(L, i, j);
            for (std::size_t r = 0; r < d; ++r) {
                Row e(D * d, 0);
                // f([e_i,e_j])_r - (e_i f(e_j))_r + (e_j f(e_i))_r
                for (std::size_t k = 0; k < D; ++k) e[k * d + r] += b[k];
                for (std::size_t s = 0; s < d; ++s) {
                    e[j * d + s] -= M.action(i)(r, s);
                    e[i * d + s] += M.action(j)(r, s);
                }
                eqs.push_back(std::move(e));
            }
        }
    const std::size_t z = D * d - (eqs.empty() ? 0 : rank(eqs, p));
    std::vector<Row> inner;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t r = 0; r < d; ++r) {
            Row e(d);
            for (std::size_t s = 0; s < d; ++s) e[s] = M.action(i)(r, s);
            inner.push_back(std::move(e));
        }
    return z - rank(inner, p);
}

/// dim H^2(L, F) from alternating forms: cocycles modulo forms (x,y) -> f([x,y]).
inline std::size_t h2_trivial(const modlie::LieAlgebra& L) {
    const long long p = L.p();
    const std::size_t D = L.dim();
    std::vector<std::vector<long long>> pid(D, std::vector<long long>(D, -1));
    std::size_t np = 0;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = i + 1; j < D; ++j) pid[i][j] = static_cast<long long>(np++);
    // w(x, e_c) for x = sum b_k e_k, added into row e with sign
    auto add_form = [&](Row& e, const std::vector<long long>& x, std::size_t c, long long sign) {
        for (std::size_t k = 0; k < D; ++k) {
            if (!x[k] || k == c) continue;
            if (k < c) e[pid[k][c]] += sign * x[k];
            else e[pid[c][k]] -= sign * x[k];
        }
    };
    std::vector<Row> eqs;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = i + 1; j < D; ++j)
            for (std::size_t k = j + 1; k < D; ++k) {
                Row e(np, 0);
                add_form(e, bracket(L, i, j), k, 1);
                add_form(e, bracket(L, i, k), j, -1);
                add_form(e, bracket(L, j, k), i, 1);
                eqs.push_back(std::move(e));
            }
    const std::size_t z = np - (eqs.empty() ? 0 : rank(eqs, p));
    std::vector<Row> cob;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = i + 1; j < D; ++j) cob.push_back(bracket(L, i, j));
    return z - (cob.empty() ? 0 : rank(cob, p));
}

}  // namespace oracle
