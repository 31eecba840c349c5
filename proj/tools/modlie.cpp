// Command-line front end: build algebras and modules, compute cohomology, run checks.
// Exit codes: 0 success, 1 a check failed (or a decision stayed open), 2 usage or size error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "modlie/modlie.hpp"

using namespace modlie;

namespace {

struct Options {
    std::optional<int> p, m;
    std::optional<std::int64_t> lambda, c;
    std::size_t max_degree = 2;
    std::uint64_t seed = 20240601;
    std::string format = "json";
    std::string out;
    long long max_cochain_dim = 100000;
    bool no_timing = false;
    std::string algebra, module, module2, check;
    bool all = false;
};

SpecDefaults defaults(const Options& o) { return {o.p, o.m, o.lambda, o.c}; }

MeatAxeOptions meataxe(const Options& o) {
    MeatAxeOptions mo;
    mo.seed = o.seed;
    return mo;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InvalidArgument("cannot write '" + o.out + "'");
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

int cmd_algebra(const Options& o) {
    auto h = parse_algebra_spec(o.algebra, defaults(o));
    const Json j = algebra_to_json(*h.alg);
    if (o.format == "table") {
        std::ostringstream s;
        s << "p = " << h.alg->p() << ", dim = " << h.alg->dim() << "\n";
        const auto& lab = h.alg->labels();
        for (const auto& b : j["brackets"]) {
            s << "[" << lab[b["i"].get<std::size_t>()] << ", " << lab[b["j"].get<std::size_t>()] << "] =";
            for (const auto& kc : b["coeffs"]) s << " " << kc[1].get<Scalar>() << "*" << lab[kc[0].get<std::size_t>()];
            s << "\n";
        }
        emit(o, s.str());
    } else {
        emit(o, dump(j));
    }
    return 0;
}

int cmd_module(const Options& o) {
    auto h = parse_algebra_spec(o.algebra, defaults(o));
    Module M = parse_module_spec(h, o.module, defaults(o), meataxe(o));
    if (o.format == "table") {
        std::ostringstream s;
        s << M.label() << ": dim " << M.dim() << " over " << o.algebra << "\n";
        for (std::size_t i = 0; i < M.actions().size(); ++i) {
            s << h.alg->labels()[i] << ":\n";
            for (std::size_t r = 0; r < M.dim(); ++r) {
                s << " ";
                for (std::size_t c = 0; c < M.dim(); ++c) s << " " << std::setw(2) << M.action(i)(r, c);
                s << "\n";
            }
        }
        emit(o, s.str());
    } else {
        emit(o, dump(module_to_json(M, algebra_to_json(*h.alg))));
    }
    return 0;
}

int cmd_cohomology(const Options& o) {
    auto h = parse_algebra_spec(o.algebra, defaults(o));
    Module M = parse_module_spec(h, o.module, defaults(o), meataxe(o));
    CohomologyOptions co;
    co.max_cochain_dim = o.max_cochain_dim;
    if (o.max_degree > h.alg->dim()) throw InvalidArgument("--max-degree exceeds the algebra dimension");
    auto r = cohomology_dims(*h.alg, M, o.max_degree, co);
    if (o.format == "table") {
        std::ostringstream s;
        s << "H^n(" << o.algebra << ", " << o.module << ")\n";
        s << pad("n", 8) << "dim\n";
        for (std::size_t i = 0; i < r.degrees.size(); ++i) s << pad(std::to_string(r.degrees[i]), 8) << r.dims[i] << "\n";
        emit(o, s.str());
    } else {
        emit(o, dump(result_to_json(o.algebra, o.module, r)));
    }
    return 0;
}

int cmd_restricted_h1(const Options& o) {
    auto h = parse_algebra_spec(o.algebra, defaults(o));
    if (!h.alg->pmap()) throw InvalidArgument("algebra '" + o.algebra + "' carries no p-map");
    Module M = parse_module_spec(h, o.module, defaults(o), meataxe(o));
    CohomologyOptions co;
    co.max_cochain_dim = o.max_cochain_dim;
    const std::size_t h1 = restricted_h1(*h.alg, *h.alg->pmap(), M, co);
    CohomologyResult r{{0}, {invariants(M).dim()}};
    if (o.format == "table") {
        std::ostringstream s;
        s << "H^0_* = " << r.dims[0] << "\nH^1_* = " << h1 << "\n";
        emit(o, s.str());
    } else {
        emit(o, dump(result_to_json(o.algebra, o.module, r, h1)));
    }
    return 0;
}

std::string report_table(const std::vector<CheckReport>& reps) {
    std::ostringstream s;
    s << pad("check", 24) << pad("cases", 8) << pad("ms", 8) << "result\n";
    for (const auto& r : reps) {
        s << pad(r.check, 24) << pad(std::to_string(r.cases.size()), 8) << pad(std::to_string(r.ms), 8) << (r.pass ? "pass" : "FAIL")
          << "\n";
        for (const auto& c : r.cases)
            if (!c.pass)
                s << "    " << c.inputs.dump() << " expected " << c.expected.dump() << " computed " << c.computed.dump() << "  [" << c.cite
                  << "]\n";
    }
    return s.str();
}

int cmd_verify(const Options& o) {
    if (o.all == !o.check.empty()) throw InvalidArgument("verify needs exactly one of --check NAME or --all");
    if (!o.p || !o.m) throw InvalidArgument("verify needs --p and --m");
    VerifyOptions vo;
    vo.cohomology.max_cochain_dim = o.max_cochain_dim;
    vo.timing = !o.no_timing;
    std::vector<CheckReport> reps;
    if (o.all)
        reps = run_all(*o.p, *o.m, o.seed, vo);
    else
        reps.push_back(run_check(o.check, *o.p, *o.m, o.seed, vo));
    bool pass = true;
    for (const auto& r : reps) pass = pass && r.pass;
    if (o.format == "table") {
        emit(o, report_table(reps));
    } else if (o.all) {
        Json a = Json::array();
        for (const auto& r : reps) a.push_back(r.to_json());
        emit(o, dump(a));
    } else {
        emit(o, dump(reps.front().to_json()));
    }
    return pass ? 0 : 1;
}

int cmd_composition_series(const Options& o) {
    auto h = parse_algebra_spec(o.algebra, defaults(o));
    Module M = parse_module_spec(h, o.module, defaults(o), meataxe(o));
    auto cs = composition_series(M, meataxe(o));
    Json f = Json::array();
    for (const auto& x : cs.factors) f.push_back({{"dim", x.dim}, {"label", x.label}});
    if (o.format == "table") {
        std::ostringstream s;
        s << "composition factors of " << o.module << ", bottom to top:";
        for (const auto& x : cs.factors) s << " " << x.dim << (x.label.empty() ? "" : "(" + x.label + ")");
        s << "\n";
        emit(o, s.str());
    } else {
        emit(o, dump(Json{{"algebra", o.algebra}, {"module", o.module}, {"seed", o.seed}, {"factors", f}}));
    }
    return 0;
}

int cmd_isomorphic(const Options& o) {
    auto h = parse_algebra_spec(o.algebra, defaults(o));
    Module M = parse_module_spec(h, o.module, defaults(o), meataxe(o));
    Module N = parse_module_spec(h, o.module2, defaults(o), meataxe(o));
    IsoOptions io;
    io.seed = o.seed;
    io.meataxe = meataxe(o);
    auto r = is_isomorphic(M, N, io);
    if (o.format == "table")
        emit(o, o.module + " ~ " + o.module2 + ": " + to_string(r.iso) + " (" + r.method + ")\n");
    else
        emit(o, dump(Json{{"algebra", o.algebra}, {"modules", {o.module, o.module2}}, {"isomorphic", to_string(r.iso)}, {"method", r.method}}));
    return r.iso == Decision::undecided ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* env = std::getenv("MODLIE_SEED")) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: MODLIE_SEED is not an unsigned integer\n";
            return 2;
        }
    }
    CLI::App app{"Modular Lie algebras: Zassenhaus algebras, their modules and cohomology"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* c) {
        c->add_option("--p", o.p, "prime for specs without parameters");
        c->add_option("--m", o.m, "m for specs without parameters");
        c->add_option("--lambda", o.lambda, "weight for module specs without parameters");
        c->add_option("--c", o.c, "top-shift scalar for verma specs without parameters");
        c->add_option("--seed", o.seed, "seed for randomized module analysis (default 20240601 or MODLIE_SEED)");
        c->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        c->add_option("--out", o.out, "write output to this file");
    };
    auto guard = [&](CLI::App* c) { c->add_option("--max-cochain-dim", o.max_cochain_dim, "size guard on cochain spaces"); };

    auto* alg = app.add_subcommand("algebra", "write an algebra as JSON");
    alg->add_option("spec", o.algebra, "witt:p,m | borel:p,m | envelope:p,m | path.json")->required();
    common(alg);

    auto* mod = app.add_subcommand("module", "write a module as JSON");
    mod->add_option("algebra", o.algebra)->required();
    mod->add_option("module", o.module, "verma:l[,c] | dpow:l | simple:l | weight:l | adjoint | trivial | dual:<spec> | path.json")
        ->required();
    common(mod);

    auto* coh = app.add_subcommand("cohomology", "dimensions of H^0..H^n");
    coh->add_option("algebra", o.algebra)->required();
    coh->add_option("module", o.module)->required();
    coh->add_option("--max-degree", o.max_degree, "highest degree n");
    common(coh);
    guard(coh);

    auto* res = app.add_subcommand("restricted-h1", "restricted cohomology in degree one");
    res->add_option("algebra", o.algebra)->required();
    res->add_option("module", o.module)->required();
    common(res);
    guard(res);

    auto* ver = app.add_subcommand("verify", "run theorem checks");
    ver->add_option("--check", o.check, "check name");
    ver->add_flag("--all", o.all, "run every check applicable at (p, m)");
    ver->add_flag("--no-timing", o.no_timing, "report ms as 0 for byte-stable output");
    common(ver);
    guard(ver);

    auto* cs = app.add_subcommand("composition-series", "composition factors bottom to top");
    cs->add_option("algebra", o.algebra)->required();
    cs->add_option("module", o.module)->required();
    common(cs);

    auto* iso = app.add_subcommand("isomorphic", "decide whether two modules are isomorphic");
    iso->add_option("algebra", o.algebra)->required();
    iso->add_option("module", o.module)->required();
    iso->add_option("other", o.module2)->required();
    common(iso);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (alg->parsed()) return cmd_algebra(o);
        if (mod->parsed()) return cmd_module(o);
        if (coh->parsed()) return cmd_cohomology(o);
        if (res->parsed()) return cmd_restricted_h1(o);
        if (ver->parsed()) return cmd_verify(o);
        if (cs->parsed()) return cmd_composition_series(o);
        if (iso->parsed()) return cmd_isomorphic(o);
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << " (estimated cochain dimension " << e.estimate() << ")\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstructionInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
