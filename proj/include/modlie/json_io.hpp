#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "modlie/cohomology.hpp"
#include "modlie/zassenhaus.hpp"

namespace modlie {

using Json = nlohmann::ordered_json;

// ---- algebra ------------------------------------------------------------

inline Json algebra_to_json(const LieAlgebra& L) {
    Json br = Json::array();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            const auto& c = L.bracket_basis(i, j);
            if (c.empty()) continue;
            Json coeffs = Json::array();
            for (const auto& [k, v] : c) coeffs.push_back({k, v});
            br.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    Json out = {{"p", L.p()}, {"dim", L.dim()}, {"labels", L.labels()}, {"brackets", br}};
    if (L.pmap()) out["pmap"] = *L.pmap();
    if (L.grading()) out["grading"] = *L.grading();
    if (L.provenance()) {
        Json prov = Json::array();
        for (const auto& [src, r] : *L.provenance()) prov.push_back({src, r});
        out["provenance"] = prov;
    }
    return out;
}

namespace detail {

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidArgument(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace detail

/// Parses and validates (Jacobi, and the p-map axioms when a p-map is present).
inline AlgebraPtr algebra_from_json(const Json& j) {
    const auto p = detail::get_field<std::int64_t>(j, "p");
    if (!is_prime(p)) throw InvalidArgument("algebra: p = " + std::to_string(p) + " is not prime");
    const PrimeField F(static_cast<Scalar>(p));
    const auto dim = detail::get_field<std::size_t>(j, "dim");
    auto labels = j.contains("labels") ? detail::get_field<std::vector<std::string>>(j, "labels") : std::vector<std::string>{};
    std::vector<std::tuple<std::size_t, std::size_t, Coeffs>> upper;
    for (const auto& b : detail::get_field<Json>(j, "brackets")) {
        Coeffs c;
        for (const auto& kc : detail::get_field<Json>(b, "coeffs")) {
            if (!kc.is_array() || kc.size() != 2) throw InvalidArgument("bracket coefficient must be a pair [k, c]");
            const auto k = kc[0].get<std::int64_t>();
            const auto v = kc[1].get<std::int64_t>();
            if (k < 0) throw InvalidArgument("bracket coefficient index is negative");
            c.push_back({static_cast<std::uint32_t>(k), F.from_int(v)});
        }
        upper.emplace_back(detail::get_field<std::size_t>(b, "i"), detail::get_field<std::size_t>(b, "j"), std::move(c));
    }
    LieAlgebra L = LieAlgebra::from_upper(F, dim, upper, labels);
    auto rep = validate_algebra(L);
    if (!rep.ok) throw InvalidArgument("algebra: " + rep.violations.front());
    if (j.contains("grading")) L.set_grading(detail::get_field<std::vector<int>>(j, "grading"));
    if (j.contains("pmap")) {
        std::vector<Vector> pm;
        for (const auto& row : j.at("pmap")) {
            Vector v;
            for (const auto& x : row) v.push_back(F.from_int(x.get<std::int64_t>()));
            pm.push_back(std::move(v));
        }
        L.set_pmap(pm);
        auto prep = validate_pmap(L, pm);
        if (!prep.ok) throw InvalidArgument("algebra: " + prep.violations.front());
    }
    if (j.contains("provenance")) {
        std::vector<std::pair<std::size_t, int>> prov;
        for (const auto& e : j.at("provenance")) prov.push_back({e.at(0).get<std::size_t>(), e.at(1).get<int>()});
        L.set_provenance(std::move(prov));
    }
    return share(std::move(L));
}

// ---- module -------------------------------------------------------------

inline Json module_to_json(const Module& M, Json algebra) {
    Json act = Json::array();
    for (const auto& A : M.actions()) act.push_back(A.data());
    return {{"algebra", std::move(algebra)}, {"dim", M.dim()}, {"action", act}, {"label", M.label()}};
}

inline Module module_from_json(const Json& j, const AlgebraPtr& L) {
    const auto dim = detail::get_field<std::size_t>(j, "dim");
    const auto& act = detail::get_field<Json>(j, "action");
    if (act.size() != L->dim()) throw InvalidArgument("module: need one action matrix per algebra basis element");
    std::vector<Matrix> mats;
    for (const auto& a : act) {
        if (a.size() != dim * dim) throw InvalidArgument("module: action matrix must have dim*dim entries");
        Vector v;
        for (const auto& x : a) v.push_back(L->field().from_int(x.get<std::int64_t>()));
        mats.emplace_back(dim, dim, std::move(v));
    }
    Module M(L, dim, std::move(mats), j.value("label", std::string{}));
    auto rep = validate_module(M);
    if (!rep.ok) throw InvalidArgument("module: " + rep.violations.front());
    return M;
}

// ---- results ------------------------------------------------------------

inline Json result_to_json(const std::string& algebra, const std::string& module, const CohomologyResult& r,
                           std::optional<std::size_t> restricted_h1 = std::nullopt) {
    Json out = {{"algebra", algebra}, {"module", module}, {"degrees", r.degrees}, {"dims", r.dims}};
    if (restricted_h1) out["restricted_h1"] = *restricted_h1;
    return out;
}

// ---- built-in specs -----------------------------------------------------

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
    }
}

/// Defaults used when a spec leaves parameters out ("witt" instead of "witt:3,2").
struct SpecDefaults {
    std::optional<int> p, m;
    std::optional<std::int64_t> lambda, c;
};

/// An algebra built from a spec, with the Zassenhaus context needed for module specs.
struct AlgebraHandle {
    std::string spec;
    std::string kind;  ///< witt, borel, envelope or json
    AlgebraPtr alg;
    AlgebraPtr witt;                  ///< W(p,m) for the built-in kinds
    std::optional<Envelope> envelope; ///< for kind == envelope
};

namespace detail {

inline std::vector<std::int64_t> parse_ints(const std::string& s, const std::string& spec) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("bad number '" + tok + "' in spec '" + spec + "'");
        }
        if (used != tok.size()) throw InvalidArgument("bad number '" + tok + "' in spec '" + spec + "'");
        out.push_back(v);
    }
    return out;
}

inline std::pair<std::string, std::string> split_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return {spec, ""};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

inline std::pair<int, int> pm_of(const std::string& args, const std::string& spec, const SpecDefaults& d) {
    auto v = args.empty() ? std::vector<std::int64_t>{} : parse_ints(args, spec);
    if (v.empty() && d.p && d.m) return {*d.p, *d.m};
    if (v.size() != 2) throw InvalidArgument("spec '" + spec + "' needs p,m (or --p and --m)");
    return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

}  // namespace detail

inline AlgebraHandle parse_algebra_spec(const std::string& spec, const SpecDefaults& d = {}) {
    auto [head, args] = detail::split_spec(spec);
    AlgebraHandle h;
    h.spec = spec;
    if (head == "witt" || head == "borel" || head == "envelope") {
        auto [p, m] = detail::pm_of(args, spec, d);
        h.witt = witt_algebra(p, m);
        h.kind = head;
        if (head == "witt") {
            h.alg = h.witt;
        } else if (head == "borel") {
            h.alg = borel_algebra(h.witt);
        } else {
            h.envelope = restricted_zassenhaus(h.witt);
            h.alg = h.envelope->env;
        }
        return h;
    }
    h.kind = "json";
    h.alg = algebra_from_json(read_json_file(spec));
    return h;
}

/// Module specs: verma:l[,c], dpow:l, simple:l, weight:l, adjoint, trivial, dual:<spec>, or a JSON path.
/// On the envelope, W-modules are extended through the p-power provenance.
inline Module parse_module_spec(const AlgebraHandle& h, const std::string& spec, const SpecDefaults& d = {},
                                const MeatAxeOptions& opt = {}) {
    auto [head, args] = detail::split_spec(spec);
    auto lam_c = [&](std::size_t max_args) {
        auto v = args.empty() ? std::vector<std::int64_t>{} : detail::parse_ints(args, spec);
        if (v.empty() && d.lambda) {
            v.push_back(*d.lambda);
            if (d.c) v.push_back(*d.c);
        }
        if (v.empty() || v.size() > max_args) throw InvalidArgument("spec '" + spec + "' has the wrong number of parameters");
        return v;
    };
    auto over_witt = [&](Module M) {
        if (h.kind == "witt") return M;
        if (h.kind == "envelope") return extend_to_envelope(M, *h.envelope);
        throw InvalidArgument("module '" + spec + "' needs a witt or envelope algebra");
    };
    if (head == "dual") {
        if (args.empty()) throw InvalidArgument("dual needs an inner module spec");
        return dual(parse_module_spec(h, args, d, opt));
    }
    if (head == "trivial") return trivial_module(h.alg);
    if (head == "adjoint") return adjoint_rep(h.alg);
    if (head == "verma" || head == "dpow" || head == "simple") {
        if (!h.witt) throw InvalidArgument("module '" + spec + "' needs a witt or envelope algebra");
        const auto v = lam_c(head == "verma" ? 2 : 1);
        const auto& F = h.witt->field();
        const Scalar l = F.from_int(v[0]);
        if (head == "verma") return over_witt(verma(h.witt, l, v.size() > 1 ? F.from_int(v[1]) : 0));
        if (head == "dpow") return over_witt(divided_power_module(h.witt, l));
        return over_witt(simple_module(h.witt, l, opt));
    }
    if (head == "weight") {
        if (h.kind != "borel") throw InvalidArgument("weight modules live on a borel algebra");
        return weight_module(h.alg, h.alg->field().from_int(lam_c(1)[0]));
    }
    const Json j = read_json_file(spec);
    return module_from_json(j, h.alg);
}

}  // namespace modlie
