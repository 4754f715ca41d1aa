#include "aralg/verify.hpp"

#include <algorithm>
#include <cctype>

#include "aralg/errors.hpp"

namespace aralg {

namespace {

using io::json;

std::string squash(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != '-' && c != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

json dims_of(const Module& m) {
    json out = json::array();
    for (auto d : m.dimension_vector()) out.push_back(d);
    return out;
}

SuiteResult ar_formula(const AlgebraPtr& a) {
    auto rows = verify_ar_formula_modules(examples::curated_indecomposables(a));
    SuiteResult r;
    r.passed = true;
    json table = json::array();
    for (const auto& row : rows) {
        table.push_back({{"m", row.m}, {"n", row.n}, {"ext1", row.ext}, {"stable_hom", row.stable}, {"ok", row.ok()}});
        r.passed = r.passed && row.ok();
    }
    r.report["rows"] = table;
    return r;
}

SuiteResult dtr_routes(const AlgebraPtr& a) {
    SuiteResult r;
    r.passed = true;
    json table = json::array();
    for (const auto& nm : examples::curated_indecomposables(a)) {
        const Module& m = nm.module;
        if (is_projective(m)) continue;
        Module viaTr = dtr(m);
        Module viaTensor = dtr_via_tensor(m);
        Module viaNu = dtr_via_nakayama(minimal_projective_presentation(m), a).module;
        bool i1 = find_isomorphism(viaTr, viaTensor).has_value();
        bool i2 = find_isomorphism(viaTr, viaNu).has_value();
        table.push_back({{"module", nm.name},
                         {"transpose", dims_of(viaTr)},
                         {"tensor", dims_of(viaTensor)},
                         {"nakayama", dims_of(viaNu)},
                         {"iso_tensor", i1},
                         {"iso_nakayama", i2}});
        r.passed = r.passed && i1 && i2;
    }
    r.report["rows"] = table;
    return r;
}

SuiteResult six_term(const AlgebraPtr& a, const SuiteOptions& opt) {
    SuiteResult r;
    r.passed = true;
    json table = json::array();
    for (const auto& sd : examples::random_short_exact_sequences(a, opt.random_count, opt.seed)) {
        SixTermReport rep = six_term_sequence(make_ses(sd.iota, sd.pi));
        table.push_back(io::six_term_to_json(rep));
        r.passed = r.passed && rep.exact();
    }
    r.report["sequences"] = table;
    json proj = json::array();
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        std::size_t d = a_functor(examples::projective(a, v)).dim();
        proj.push_back({{"vertex", a->vertex_names()[v]}, {"dim_a", d}});
        r.passed = r.passed && d == 0;
    }
    r.report["projectives"] = proj;
    return r;
}

SuiteResult serre(const AlgebraPtr& a, const SuiteOptions& opt) {
    SuiteResult r;
    r.passed = true;
    Window wide{opt.window.lo - 2, opt.window.hi + 2, opt.window.guard};
    auto objs = test_compacts(a);
    json table = json::array();
    for (const auto& x : objs)
        for (const auto& y : objs) {
            PairCheck c = check_pair(x, y, opt.window);
            PairCheck c2 = check_pair(x, y, wide);
            bool stable = c.hom == c2.hom && c.dual == c2.dual && c.translated == c2.translated;
            table.push_back({{"x", c.x},
                             {"y", c.y},
                             {"hom", c.hom},
                             {"hom_to_translate", c.dual},
                             {"hom_translates", c.translated},
                             {"nondegenerate", c.nondegenerate},
                             {"vanishes_on_boundaries", c.vanishes_on_boundaries},
                             {"window_stable", stable}});
            r.passed = r.passed && c.ok() && c2.ok() && stable;
        }
    r.report["window"] = {opt.window.lo, opt.window.hi, opt.window.guard};
    r.report["pairs"] = table;
    return r;
}

SuiteResult happel(const AlgebraPtr& a, const SuiteOptions& opt) {
    SuiteResult r;
    r.passed = true;
    json table = json::array();
    for (const auto& nm : examples::curated_indecomposables(a)) {
        if (is_projective(nm.module)) continue;
        HappelReport h = happel_compare(nm.module, opt.rep_lo, opt.rep_hi);
        json j = io::happel_to_json(h);
        j["module"] = nm.name;
        table.push_back(j);
        r.passed = r.passed && h.passed();
    }
    r.report["modules"] = table;
    return r;
}

}  // namespace

Suite parse_suite(const std::string& s) {
    std::string k = squash(s);
    if (k == "arformula") return Suite::ArFormula;
    if (k == "dtrroutes") return Suite::DtrRoutes;
    if (k == "sixterm") return Suite::SixTerm;
    if (k == "serrepairing") return Suite::SerrePairing;
    if (k == "happel") return Suite::Happel;
    throw ParseError("unknown suite '" + s + "'");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::ArFormula: return "ArFormula";
        case Suite::DtrRoutes: return "DtrRoutes";
        case Suite::SixTerm: return "SixTerm";
        case Suite::SerrePairing: return "SerrePairing";
        case Suite::Happel: return "Happel";
    }
    return "";
}

std::vector<NamedCompact> test_compacts(const AlgebraPtr& a) {
    std::vector<NamedCompact> out;
    const auto& vn = a->vertex_names();
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
        out.push_back({"iS" + vn[v], CompactObject::of_module(examples::simple(a, v))});
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
        out.push_back({"iP" + vn[v], CompactObject::of_module(examples::projective(a, v))});
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        Module s = examples::simple(a, v);
        if (is_projective(s)) continue;
        auto p = minimal_projective_presentation(s);
        Complex c(a, -1, {p.delta1.source, p.delta1.target}, {p.delta1.mat});
        out.push_back({"P1->P0(S" + vn[v] + ")", {c}});
    }
    return out;
}

PairCheck check_pair(const NamedCompact& x, const NamedCompact& y, const Window& w) {
    PairCheck c;
    c.x = x.name;
    c.y = y.name;
    SerrePairing sp = serre_pairing(x.object, y.object, w);
    c.hom = hom_k(x.object, y.object, w).dim;
    c.dual = hom_k_to_translate(y.object, x.object, w).dim;
    c.translated = hom_k_translates(x.object, y.object, w).dim;
    c.nondegenerate = sp.nondegenerate() && sp.left.dim == c.hom && sp.right.dim == c.dual;
    c.vanishes_on_boundaries = sp.vanishes_on_boundaries;
    return c;
}

SuiteResult run_suite(Suite s, const AlgebraPtr& a, const SuiteOptions& opt) {
    SuiteResult r;
    switch (s) {
        case Suite::ArFormula: r = ar_formula(a); break;
        case Suite::DtrRoutes: r = dtr_routes(a); break;
        case Suite::SixTerm: r = six_term(a, opt); break;
        case Suite::SerrePairing: r = serre(a, opt); break;
        case Suite::Happel: r = happel(a, opt); break;
    }
    io::json out;
    out["suite"] = suite_name(s);
    out["passed"] = r.passed;
    for (auto it = r.report.begin(); it != r.report.end(); ++it) out[it.key()] = it.value();
    r.report = out;
    return r;
}

}  // namespace aralg
