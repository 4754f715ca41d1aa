#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "aralg/errors.hpp"
#include "aralg/verify.hpp"

using namespace aralg;
using io::json;

namespace {

struct Opts {
    std::string file;
    std::vector<std::string> modules;
    std::vector<int> window;
    int guard = 2;
    std::string emit = "dims";
    bool dot = false;
    int steps = 3;
    long extension = 0;
    std::string suite, kind;
};

Window window_of(const Opts& o) {
    Window w;
    if (o.window.size() == 2) {
        w.lo = o.window[0];
        w.hi = o.window[1];
    }
    w.guard = o.guard;
    if (w.lo > w.hi) throw ParseError("--window LO HI needs LO <= HI");
    return w;
}


// --module accepts a descriptor or an inline JSON object.
json descriptor_json(const std::string& s) {
    if (!s.empty() && s.front() == '{') return json::parse(s);
    return json(s);
}

std::string element_text(const Algebra& a, const Vec& r) {
    std::string s;
    for (std::size_t b = 0; b < r.size(); ++b) {
        if (r[b] == 0) continue;
        if (!s.empty()) s += " + ";
        s += Field::format(r[b]) + "*" + a.labels()[b];
    }
    return s.empty() ? "0" : s;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const Opts& o, const AlgebraPtr& a) {
    json out;
    out["command"] = "validate";
    out["file"] = o.file;
    out["field"] = a->field().descriptor();
    out["dim"] = a->dim();
    out["vertices"] = a->vertex_names();
    out["radical_dim"] = a->radical().dim();
    out["self_injective"] = is_self_injective(a);
    json mods = json::array();
    for (const auto& d : o.modules) {
        Module m = io::module_from_json(descriptor_json(d), a);
        json j = io::module_to_json(m, o.emit == "matrices");
        j["descriptor"] = d;
        mods.push_back(j);
    }
    if (!mods.empty()) out["modules"] = mods;
    out["valid"] = true;
    print(out);
    return 0;
}

int cmd_verify(const Opts& o, const AlgebraPtr& a) {
    SuiteOptions so;
    so.window = window_of(o);
    if (o.window.size() == 2) {
        so.rep_lo = o.window[0];
        so.rep_hi = o.window[1];
    }
    Suite s = parse_suite(o.suite);
    SuiteResult r = run_suite(s, a, so);
    json out;
    out["command"] = "verify";
    out["file"] = o.file;
    for (auto it = r.report.begin(); it != r.report.end(); ++it) out[it.key()] = it.value();
    print(out);
    return r.passed ? 0 : 1;
}

int cmd_ar(const Opts& o, const AlgebraPtr& a) {
    bool mats = o.emit == "matrices";
    std::string k;
    for (char c : o.kind) k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    json out;
    out["command"] = "ar " + k;
    out["file"] = o.file;
    if (k == "sequence") {
        Module n = io::module_from_json(descriptor_json(o.modules.empty() ? "" : o.modules.front()), a);
        auto c = ar_sequence(n, ArOptions{o.extension, true});
        out["certificate"] = io::certificate_to_json(c, mats);
        print(out);
        return c.verifies() ? 0 : 1;
    }
    if (k == "triangle") {
        if (o.modules.empty()) throw ParseError("--module is required");
        Module n = io::module_from_json(descriptor_json(o.modules.front()), a);
        Triangle t = ar_triangle(CompactObject::of_module(n), window_of(o));
        out["triangle"] = io::triangle_to_json(t, mats);
        if (auto r = gamma_as_multiplication(t)) out["gamma_multiplication"] = element_text(*a, *r);
        bool ok = t.gamma_nonzero && t.gamma_kills_radical && t.composites_null;
        out["verified"] = ok;
        print(out);
        return ok ? 0 : 1;
    }
    if (k == "quiver") {
        std::vector<Module> seeds;
        if (o.modules.empty())
            for (std::size_t v = 0; v < a->num_vertices(); ++v) seeds.push_back(examples::simple(a, v));
        for (const auto& d : o.modules) seeds.push_back(io::module_from_json(descriptor_json(d), a));
        QuiverFragment q = ar_quiver_fragment(a, seeds, o.steps);
        if (o.dot) {
            std::cout << io::quiver_to_dot(q);
            return 0;
        }
        json nodes = json::array();
        for (const auto& nd : q.nodes) {
            json j = io::module_to_json(nd.module, mats);
            j["name"] = nd.name;
            j["projective"] = nd.projective;
            nodes.push_back(j);
        }
        json arrows = json::array();
        for (const auto& e : q.arrows) arrows.push_back({{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity}});
        json tau = json::array();
        for (const auto& [n, t] : q.tau) tau.push_back({n, t});
        out["nodes"] = nodes;
        out["arrows"] = arrows;
        out["tau"] = tau;
        print(out);
        return 0;
    }
    throw ParseError("unknown kind '" + o.kind + "' (sequence, triangle, quiver)");
}

int cmd_dtr(const Opts& o, const AlgebraPtr& a) {
    bool mats = o.emit == "matrices";
    if (o.modules.empty()) throw ParseError("--module is required");
    json out;
    out["command"] = "dtr";
    out["file"] = o.file;
    json rows = json::array();
    bool ok = true;
    for (const auto& d : o.modules) {
        Module m = io::module_from_json(descriptor_json(d), a);
        Module t1 = dtr(m);
        Module t2 = dtr_via_tensor(m);
        bool iso = find_isomorphism(t1, t2).has_value();
        ok = ok && iso;
        rows.push_back({{"module", d}, {"dtr", io::module_to_json(t1, mats)}, {"routes_agree", iso}});
    }
    out["results"] = rows;
    print(out);
    return ok ? 0 : 1;
}

int cmd_repetitive_compare(const Opts& o, const AlgebraPtr& a) {
    if (o.modules.empty()) throw ParseError("--module is required");
    Module n = io::module_from_json(descriptor_json(o.modules.front()), a);
    int lo = -2, hi = 2;
    if (o.window.size() == 2) {
        lo = o.window[0];
        hi = o.window[1];
    }
    HappelReport r = happel_compare(n, lo, hi);
    json out;
    out["command"] = "repetitive compare";
    out["file"] = o.file;
    out["report"] = io::happel_to_json(r);
    print(out);
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Auslander-Reiten theory for finite-dimensional algebras"};
    app.require_subcommand(1);
    Opts o;

    auto common = [&](CLI::App* c) {
        c->add_option("--window", o.window, "LO HI")->expected(2);
        c->add_option("--guard", o.guard, "guard band")->capture_default_str();
        c->add_option("--emit", o.emit, "matrices|dims")->check(CLI::IsMember({"matrices", "dims"}))->capture_default_str();
        c->add_option("--module", o.modules, "descriptor: S:v, P:v, I:v, A, DA, curated name or JSON");
    };

    auto* validate = app.add_subcommand("validate", "parse and validate an algebra file");
    validate->add_option("file", o.file)->required();
    common(validate);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "ArFormula|DtrRoutes|SixTerm|SerrePairing|Happel")->required();
    verify->add_option("file", o.file)->required();
    common(verify);

    auto* ar = app.add_subcommand("ar", "almost split sequence, AR triangle or quiver fragment");
    ar->add_option("kind", o.kind, "sequence|triangle|quiver")->required();
    ar->add_option("file", o.file)->required();
    ar->add_flag("--dot", o.dot, "print the quiver fragment as DOT");
    ar->add_option("--steps", o.steps)->capture_default_str();
    ar->add_option("--extension", o.extension, "value used to extend the functional")->capture_default_str();
    common(ar);

    auto* dtrc = app.add_subcommand("dtr", "Auslander-Reiten translate");
    dtrc->add_option("file", o.file)->required();
    common(dtrc);

    auto* rep = app.add_subcommand("repetitive", "repetitive algebra tools");
    auto* cmp = rep->add_subcommand("compare", "compare AR data over a truncation with the base algebra");
    rep->require_subcommand(1);
    cmp->add_option("file", o.file)->required();
    common(cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        AlgebraPtr a = io::load_algebra(o.file);
        if (*validate) return cmd_validate(o, a);
        if (*verify) return cmd_verify(o, a);
        if (*ar) return cmd_ar(o, a);
        if (*dtrc) return cmd_dtr(o, a);
        if (*cmp) return cmd_repetitive_compare(o, a);
    } catch (const UnsupportedCharacteristic& e) {
        std::cerr << "unsupported characteristic: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidAlgebra& e) {
        std::cerr << "invalid algebra: " << e.what() << "\n";
        return 2;
    } catch (const InvalidModule& e) {
        std::cerr << "invalid module: " << e.what() << "\n";
        return 2;
    } catch (const InadmissibleRelation& e) {
        std::cerr << "inadmissible relation: " << e.what() << "\n";
        return 2;
    } catch (const InfiniteDimensional& e) {
        std::cerr << "infinite dimensional: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
