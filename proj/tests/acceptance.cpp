// Acceptance run: one line per criterion, nonzero exit when any criterion fails.
// The expected tables below are typed in from the theorem statements and do not
// reuse the tables compiled into the library.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle.hpp"

using namespace modlie;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::pair<int, int>> kGrid = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}};

struct Tally {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 12) failures.push_back(what);
        if (!ok && failures.size() == 12) failures.push_back("...");
    }
    void eq(long long want, long long got, const std::string& what) {
        expect(want == got, what + ": expected " + std::to_string(want) + ", computed " + std::to_string(got));
    }
};

std::string at(int p, int m) { return "(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ")"; }
std::string at(int p, int m, long long l) { return "(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",l=" + std::to_string(l) + ")"; }

// dim H^1(W(m), V(l))
long long verma_w(int p, int m, int l) {
    if (p == 3) {
        const long long t[] = {1, m - 1, 2};
        return t[l];
    }
    if (l == 0) return 1;
    if (l == 1) return 1;
    if (l == p - 2) return m - 1;
    if (l == p - 1) return 2;
    return 0;
}

// dim H^1 of the minimal p-envelope with coefficients V(l)
long long verma_env(int p, int m, int l) {
    if (l == p - 1) return m + 1;
    return verma_w(p, m, l);
}

// restricted H^1 of the envelope, V(l)
long long verma_res(int p, int m, int l) {
    if (p == 3) {
        const long long t[] = {1, m - 1, 0};
        return t[l];
    }
    if (l == 0 || l == 1) return 1;
    if (l == p - 2) return m - 1;
    return 0;
}

long long simple_w(int p, int m, int l) {
    if (p == 3) {
        const long long t[] = {0, m - 1, 2};
        return t[l];
    }
    if (l == 1) return 1;
    if (l == p - 2) return m - 1;
    if (l == p - 1) return 2;
    return 0;
}

long long simple_env(int p, int m, int l) {
    if (p == 3) {
        const long long t[] = {m - 1, m - 1, 2};
        return t[l];
    }
    if (l == 0 || l == p - 2) return m - 1;
    if (l == 1) return 1;
    if (l == p - 1) return 2;
    return 0;
}

long long simple_res(int p, int m, int l) { return simple_w(p, m, l); }

long long central_w(int p, int m) { return p == 2 ? 0 : p == 3 ? m - 1 : 1; }
long long central_env(int p, int m) { return p == 3 ? (m - 1) * m / 2 : (m * m - 3 * m + 4) / 2; }

std::size_t h(const LieAlgebra& L, const Module& M, std::size_t n) { return cohomology_dims(L, M, n).dims[n]; }

long long choose(long long n, long long k) { return binom_int(n, k); }

// C(v+k-1, k-1) with the k = 0 convention C(v-1, -1) = [v == 0]
long long multichoose(long long v, long long k) {
    if (k == 0) return v == 0 ? 1 : 0;
    return binom_int(v + k - 1, k - 1);
}

void check_reports(Tally& t, const std::string& name, int p, int m, std::uint64_t seed) {
    VerifyOptions opt;
    opt.timing = false;
    CheckReport r = run_check(name, p, m, seed, opt);
    t.expect(!r.cases.empty(), name + " " + at(p, m) + " produced no cases");
    for (const auto& c : r.cases)
        t.expect(c.pass, name + " " + at(p, m) + " seed " + std::to_string(seed) + " " + c.inputs.dump() + " expected " + c.expected.dump() +
                             " computed " + c.computed.dump());
}

struct Criterion {
    int id;
    std::string title;
    std::function<void(Tally&)> body;
    double budget_s = 0;  ///< 0: no runtime bound
};

}  // namespace

int main() {
    std::vector<Criterion> crits;

    crits.push_back({1, "H^1(W(m), V(lambda)) table", [](Tally& t) {
                         for (auto [p, m] : kGrid) {
                             auto W = witt_algebra(p, m);
                             for (int l = 0; l < p; ++l) t.eq(verma_w(p, m, l), h(*W, verma(W, l), 1), "H^1 W " + at(p, m, l));
                         }
                     },
                     60});

    crits.push_back({2, "H^1 of the minimal p-envelope, V(lambda)", [](Tally& t) {
                         for (auto [p, m] : kGrid) {
                             auto W = witt_algebra(p, m);
                             Envelope E = restricted_zassenhaus(W);
                             for (int l = 0; l < p; ++l) {
                                 Module V = verma(W, l);
                                 const long long env = static_cast<long long>(h(*E.env, extend_to_envelope(V, E), 1));
                                 t.eq(verma_env(p, m, l), env, "H^1 env " + at(p, m, l));
                                 const long long inv = static_cast<long long>(invariants(V).dim());
                                 t.eq(static_cast<long long>(h(*W, V, 1)) + (m - 1) * inv, env, "H^1 env = H^1 W + k dim V^W " + at(p, m, l));
                             }
                         }
                     }});

    crits.push_back({3, "restricted H^1 of the envelope, V(lambda) and S(lambda)", [](Tally& t) {
                         for (auto [p, m] : kGrid) {
                             auto W = witt_algebra(p, m);
                             Envelope E = restricted_zassenhaus(W);
                             const auto& pm = *E.env->pmap();
                             for (int l = 0; l < p; ++l) {
                                 t.eq(verma_res(p, m, l), static_cast<long long>(restricted_h1(*E.env, pm, extend_to_envelope(verma(W, l), E))),
                                      "H^1_* V " + at(p, m, l));
                                 t.eq(simple_res(p, m, l), static_cast<long long>(restricted_h1(*E.env, pm, extend_to_envelope(simple_module(W, l), E))),
                                      "H^1_* S " + at(p, m, l));
                             }
                         }
                     }});

    crits.push_back({4, "H^1 with simple coefficients", [](Tally& t) {
                         for (auto [p, m] : kGrid) {
                             auto W = witt_algebra(p, m);
                             Envelope E = restricted_zassenhaus(W);
                             for (int l = 0; l < p; ++l) {
                                 Module S = simple_module(W, l);
                                 t.eq(simple_w(p, m, l), static_cast<long long>(h(*W, S, 1)), "H^1 W S " + at(p, m, l));
                                 t.eq(simple_env(p, m, l), static_cast<long long>(h(*E.env, extend_to_envelope(S, E), 1)), "H^1 env S " + at(p, m, l));
                             }
                         }
                     }});

    crits.push_back({5, "central extensions", [](Tally& t) {
                         for (auto [p, m] : kGrid) {
                             auto W = witt_algebra(p, m);
                             t.eq(central_w(p, m), static_cast<long long>(h(*W, trivial_module(W), 2)), "H^2(W,F) " + at(p, m));
                             if (m > 2) continue;
                             Envelope E = restricted_zassenhaus(W);
                             t.eq(central_env(p, m), static_cast<long long>(h(*E.env, trivial_module(E.env), 2)), "H^2(env,F) " + at(p, m));
                         }
                         auto W2 = witt_algebra(2, 1);
                         t.eq(0, static_cast<long long>(h(*W2, trivial_module(W2), 2)), "H^2(W,F) " + at(2, 1));
                     },
                     120});

    crits.push_back({6, "dimension transfer between W(m) and its envelope", [](Tally& t) {
                         for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}}) {
                             auto W = witt_algebra(p, m);
                             Envelope E = restricted_zassenhaus(W);
                             const long long k = static_cast<long long>(E.env->dim() - W->dim());
                             t.eq(m - 1, k, "k " + at(p, m));
                             std::vector<std::pair<std::string, Module>> mods;
                             for (int l = 0; l < p; ++l) mods.emplace_back("V(" + std::to_string(l) + ")", verma(W, l));
                             mods.emplace_back("adjoint", adjoint_rep(W));
                             mods.emplace_back("trivial", trivial_module(W));
                             for (const auto& [name, M] : mods) {
                                 const auto hw = cohomology_dims(*W, M, 2).dims;
                                 const auto he = cohomology_dims(*E.env, extend_to_envelope(M, E), 2).dims;
                                 for (long long n = 0; n <= 2; ++n) {
                                     long long fwd = 0, back = 0;
                                     for (long long j = 0; j <= n; ++j) fwd += choose(k, j) * static_cast<long long>(hw[n - j]);
                                     for (long long v = 0; v <= n; ++v)
                                         back += (v % 2 ? -1 : 1) * multichoose(v, k) * static_cast<long long>(he[n - v]);
                                     const std::string tag = name + " n=" + std::to_string(n) + " " + at(p, m);
                                     t.eq(fwd, static_cast<long long>(he[n]), "forward " + tag);
                                     t.eq(back, static_cast<long long>(hw[n]), "inverse " + tag);
                                 }
                             }
                         }
                     }});

    crits.push_back({7, "reduction to the Borel and nilradical", [](Tally& t) {
                         for (auto [p, m] : kGrid) check_reports(t, "shapiro-cohzas", p, m, 20240601);
                     }});

    crits.push_back({8, "module structure", [](Tally& t) {
                         const std::vector<std::string> names = {"module-structure", "invzas",           "adjnat",           "divpowalg",
                                                                 "verma-restricted", "frobrec-verma-duality", "invariant-form-p3"};
                         for (auto [p, m] : kGrid)
                             for (const auto& n : names) check_reports(t, n, p, m, 20240601);
                         for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}})
                             for (std::uint64_t seed = 1; seed <= 20; ++seed)
                                 for (const auto& n : names) check_reports(t, n, p, m, seed);
                         // the statements checked above, recomputed directly at one point
                         auto W = witt_algebra(5, 1);
                         t.expect(is_simple(verma(W, 2)).simple == Decision::yes, "V(2) simple at (5,1)");
                         t.expect(is_simple(verma(W, 4)).simple == Decision::no, "V(4) not simple at (5,1)");
                         std::vector<std::size_t> f0, f4;
                         for (const auto& f : composition_series(verma(W, 0)).factors) f0.push_back(f.dim);
                         for (const auto& f : composition_series(verma(W, 4)).factors) f4.push_back(f.dim);
                         t.expect(f0 == std::vector<std::size_t>{4, 1}, "composition series of V(0) at (5,1)");
                         t.expect(f4 == std::vector<std::size_t>{1, 4}, "composition series of V(4) at (5,1)");
                         t.expect(is_isomorphic(adjoint_rep(W), dual(adjoint_rep(W))).iso == Decision::no, "W not self-dual at p=5");
                         auto W3 = witt_algebra(3, 2);
                         t.expect(is_isomorphic(adjoint_rep(W3), dual(adjoint_rep(W3))).iso == Decision::yes, "W self-dual at p=3");
                     }});

    crits.push_back({9, "property suites", [](Tally& t) {
                         for (auto [p, m] : kGrid) {
                             auto W = witt_algebra(p, m);
                             Envelope E = restricted_zassenhaus(W);
                             for (const auto& L : {W, borel_algebra(W), nilradical_algebra(W), torus_algebra(W), E.env}) {
                                 t.expect(validate_algebra(*L).ok, "validate_algebra " + at(p, m));
                                 if (L->pmap()) t.expect(validate_pmap(*L, *L->pmap()).ok, "validate_pmap " + at(p, m));
                             }
                             std::vector<Module> mods = {adjoint_rep(W), trivial_module(W), adjoint_rep(E.env)};
                             for (int l = 0; l < p; ++l) {
                                 mods.push_back(verma(W, l));
                                 mods.push_back(divided_power_module(W, l));
                                 mods.push_back(simple_module(W, l));
                                 mods.push_back(extend_to_envelope(verma(W, l), E));
                                 mods.push_back(weight_module(borel_algebra(W), l));
                             }
                             for (const auto& M : mods) {
                                 t.expect(validate_module(M).ok, "validate_module " + M.label() + " " + at(p, m));
                                 const auto& L = *M.algebra();
                                 const auto& F = L.field();
                                 const std::size_t top = std::min<std::size_t>(2, L.dim() - 1);
                                 for (std::size_t n = 0; n < top; ++n)
                                     if (cochain_dim(L.dim(), M.dim(), n + 2) <= 100000)
                                         t.expect(multiply(F, coboundary(L, M, n + 1), coboundary(L, M, n)).is_zero(),
                                                  "d d = 0 " + M.label() + " n=" + std::to_string(n) + " " + at(p, m));
                             }
                             for (const auto& n : {"triv", "codim1", "vancoh", "vancohgrad"}) check_reports(t, n, p, m, 20240601);
                         }
                         std::mt19937_64 rng(500);
                         const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 101};
                         for (int i = 0; i < 500; ++i) {
                             const long long p = primes[rng() % 8];
                             const long long n = static_cast<long long>(rng() % 600);
                             const long long k = static_cast<long long>(rng() % (n + 1));
                             t.eq(oracle::binom_big(n, k, p), static_cast<long long>(lucas_binomial(n, k, p)),
                                  "lucas C(" + std::to_string(n) + "," + std::to_string(k) + ") mod " + std::to_string(p));
                         }
                     }});

    crits.push_back({10, "outer derivations of W(m)", [](Tally& t) {
                          for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
                              auto W = witt_algebra(p, m);
                              t.eq(m - 1, static_cast<long long>(h(*W, adjoint_rep(W), 1)), "H^1(W,W) " + at(p, m));
                              check_reports(t, "outer-derivations", p, m, 20240601);
                          }
                      }});

    bool all = true;
    for (const auto& c : crits) {
        Tally t;
        std::string error;
        const auto t0 = Clock::now();
        try {
            c.body(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool ok = error.empty() && t.failures.empty() && t.checked > 0;
        std::ostringstream line;
        line.precision(1);
        line << std::fixed;
        if (c.budget_s > 0 && secs > c.budget_s) {
            ok = false;
            t.failures.push_back("runtime " + std::to_string(secs) + " s above " + std::to_string(c.budget_s) + " s");
        }
        line << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << t.checked << " assertions, " << secs << " s)";
        std::cout << line.str() << std::endl;
        if (!error.empty()) std::cout << "    exception: " << error << "\n";
        for (const auto& f : t.failures) std::cout << "    " << f << "\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}
