#include "aralg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "aralg/errors.hpp"
#include "aralg/examples.hpp"

namespace aralg::io {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("scalars must be strings or integers");
}

Vec vec_from_json(const Field& f, const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw ParseError("vector of length " + std::to_string(n) + " expected");
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f.parse_scalar(scalar_text(j[i]));
    return v;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(Field::format(x));
    return out;
}

std::size_t vertex_by_name(const Algebra& a, const std::string& name) {
    const auto& vn = a.vertex_names();
    for (std::size_t v = 0; v < vn.size(); ++v)
        if (vn[v] == name) return v;
    throw ParseError("unknown vertex '" + name + "'");
}

json dims(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row_vec(i)));
    return out;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix with " + std::to_string(rows) + " rows expected");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r = vec_from_json(f, j[i], cols);
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = r[c];
    }
    return m;
}

AlgebraPtr algebra_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be an object");
    Field f = Field::parse(need(j, "field").get<std::string>());
    AlgebraPtr a;
    if (j.contains("quiver")) {
        const json& q = j.at("quiver");
        Quiver quiver;
        for (const auto& v : need(q, "vertices")) quiver.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        for (const auto& ar : need(q, "arrows")) {
            auto vname = [&](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
            Quiver::Arrow arrow;
            arrow.name = need(ar, "name").get<std::string>();
            arrow.source = quiver.vertex_index(vname(need(ar, "source")));
            arrow.target = quiver.vertex_index(vname(need(ar, "target")));
            quiver.arrows.push_back(arrow);
        }
        std::vector<Relation> rels;
        if (j.contains("relations")) {
            for (const auto& r : j.at("relations")) {
                Relation rel;
                for (const auto& t : r) {
                    Relation::Term term;
                    term.coefficient = f.parse_scalar(t.contains("coefficient") ? scalar_text(t.at("coefficient")) : "1");
                    for (const auto& name : need(t, "path")) term.arrows.push_back(quiver.arrow_index(name.get<std::string>()));
                    rel.terms.push_back(std::move(term));
                }
                rels.push_back(std::move(rel));
            }
        }
        std::optional<std::size_t> bound;
        if (j.contains("nilpotency_bound") && !j.at("nilpotency_bound").is_null())
            bound = j.at("nilpotency_bound").get<std::size_t>();
        a = build_path_algebra(f, quiver, rels, bound);
    } else if (j.contains("structure")) {
        const json& s = j.at("structure");
        Algebra::Data d;
        d.field = f;
        d.dim = need(s, "dim").get<std::size_t>();
        d.labels = need(s, "labels").get<std::vector<std::string>>();
        d.vertex_names = need(s, "vertices").get<std::vector<std::string>>();
        d.idempotents = need(s, "idempotents").get<std::vector<std::size_t>>();
        d.left_vertex = need(s, "left").get<std::vector<std::size_t>>();
        d.right_vertex = need(s, "right").get<std::vector<std::size_t>>();
        const json& t = need(s, "table");
        if (!t.is_array() || t.size() != d.dim) throw ParseError("table must have dim rows");
        for (std::size_t i = 0; i < d.dim; ++i) {
            if (!t[i].is_array() || t[i].size() != d.dim) throw ParseError("table must be dim x dim");
            for (std::size_t k = 0; k < d.dim; ++k) d.table.push_back(vec_from_json(f, t[i][k], d.dim));
        }
        d.unit = vec_from_json(f, need(s, "unit"), d.dim);
        const json& rad = need(s, "radical");
        d.radical = matrix_from_json(f, rad, rad.size(), d.dim);
        for (auto e : d.idempotents)
            if (e >= d.dim) throw InvalidAlgebra("idempotent index out of range");
        if (auto err = AbstractAlgebra(f, d.dim, d.table, d.unit).check_axioms()) throw InvalidAlgebra(*err);
        a = Algebra::create(std::move(d));
    } else {
        throw ParseError("algebra file needs 'quiver' or 'structure'");
    }
    if (auto err = a->validate()) throw InvalidAlgebra(*err);
    return a;
}

AlgebraPtr load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return algebra_from_json(j);
}

json algebra_to_json(const Algebra& a) {
    json s;
    s["dim"] = a.dim();
    s["labels"] = a.labels();
    s["vertices"] = a.vertex_names();
    std::vector<std::size_t> idem, left, right;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) idem.push_back(a.idempotent(v));
    for (std::size_t b = 0; b < a.dim(); ++b) {
        left.push_back(a.left_vertex(b));
        right.push_back(a.right_vertex(b));
    }
    s["idempotents"] = idem;
    s["left"] = left;
    s["right"] = right;
    json table = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vec_to_json(a.product(i, k)));
        table.push_back(row);
    }
    s["table"] = table;
    s["unit"] = vec_to_json(a.unit());
    s["radical"] = matrix_to_json(a.radical().basis());
    json out;
    out["field"] = a.field().descriptor();
    out["structure"] = s;
    return out;
}

Module module_from_json(const json& j, const AlgebraPtr& a) {
    const Field& f = a->field();
    if (j.is_string()) {
        std::string d = j.get<std::string>();
        if (d == "A") return regular_module(a);
        if (d == "DA") {
            std::vector<std::size_t> all;
            for (std::size_t v = 0; v < a->num_vertices(); ++v) all.push_back(v);
            return injective_module(a, all);
        }
        auto colon = d.find(':');
        if (colon != std::string::npos) {
            std::string kind = d.substr(0, colon);
            std::size_t v = vertex_by_name(*a, d.substr(colon + 1));
            if (kind == "S") return examples::simple(a, v);
            if (kind == "P") return examples::projective(a, v);
            if (kind == "I") return examples::injective(a, v);
            throw ParseError("unknown module kind '" + kind + "'");
        }
        if (a->num_vertices() == 1 && (d == "S" || d == "P" || d == "I"))
            return module_from_json(d + ":" + a->vertex_names()[0], a);
        for (auto& n : examples::curated_indecomposables(a))
            if (n.name == d) return n.module;
        throw ParseError("unknown module '" + d + "'");
    }
    if (!j.is_object()) throw ParseError("module must be a descriptor string or an object");
    if (j.contains("dims") && !j.contains("actions")) {
        if (!a->quiver()) throw ParseError("'dims' form needs an algebra with a quiver; use 'actions'");
        const Quiver& q = *a->quiver();
        auto dv = j.at("dims").get<std::vector<std::size_t>>();
        if (dv.size() != q.vertices.size()) throw ParseError("dims length must match the vertex count");
        std::vector<Matrix> arrows;
        const json empty = json::object();
        const json& given = j.contains("arrows") ? j.at("arrows") : empty;
        for (const auto& ar : q.arrows) {
            std::size_t r = dv[ar.source], c = dv[ar.target];
            if (given.contains(ar.name)) arrows.push_back(matrix_from_json(f, given.at(ar.name), r, c));
            else arrows.emplace_back(f, r, c);
        }
        Module m = Module::from_representation(a, dv, arrows);
        if (auto err = m.validate()) throw InvalidModule(*err);
        return m;
    }
    std::size_t n = need(j, "dim").get<std::size_t>();
    const json& acts = need(j, "actions");
    if (!acts.is_array() || acts.size() != a->dim()) throw ParseError("one action matrix per basis element expected");
    std::vector<Matrix> action;
    for (const auto& m : acts) action.push_back(matrix_from_json(f, m, n, n));
    Module m(a, n, std::move(action));
    if (auto err = m.validate()) throw InvalidModule(*err);
    return m;
}

json module_to_json(const Module& m, bool matrices) {
    json out;
    out["dim"] = m.dim();
    out["dims"] = dims(m.dimension_vector());
    if (matrices) {
        json acts = json::array();
        for (const auto& x : m.actions()) acts.push_back(matrix_to_json(x));
        out["actions"] = acts;
    }
    return out;
}

json ses_to_json(const ShortExactSequence& s, bool matrices) {
    json out;
    out["L"] = module_to_json(s.L, matrices);
    out["M"] = module_to_json(s.M, matrices);
    out["N"] = module_to_json(s.N, matrices);
    if (matrices) {
        out["iota"] = matrix_to_json(s.iota.mat);
        out["pi"] = matrix_to_json(s.pi.mat);
    }
    out["exact"] = s.verifies();
    out["split"] = s.split_witness.has_value();
    return out;
}

json certificate_to_json(const AlmostSplitCertificate& c, bool matrices) {
    json out;
    out["sequence"] = ses_to_json(c.sequence, matrices);
    out["non_split"] = c.non_split;
    out["left_end_is_dtr"] = c.left_end_iso.has_value();
    out["left_local"] = c.left_local;
    out["right_local"] = c.right_local;
    json log = json::array();
    for (const auto& e : c.factorization_log)
        log.push_back({{"module", e.module}, {"non_retractions", e.non_retractions}, {"factors", e.factors}});
    out["factorizations"] = log;
    out["verified"] = c.verifies();
    return out;
}

json complex_to_json(const Complex& x, bool matrices) {
    json out;
    out["lo"] = x.lo();
    out["hi"] = x.hi();
    json terms = json::array();
    for (int n = x.lo(); n <= x.hi(); ++n) {
        json t = module_to_json(x.at(n), matrices);
        t["degree"] = n;
        if (matrices && n < x.hi()) t["d"] = matrix_to_json(x.d(n));
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

json triangle_to_json(const Triangle& t, bool matrices) {
    json out;
    out["x"] = complex_to_json(t.x, matrices);
    out["y"] = complex_to_json(t.y, matrices);
    out["z"] = complex_to_json(t.z, matrices);
    json g = json::array();
    for (std::size_t i = 0; i < t.gamma.comps.size(); ++i) {
        const Matrix& m = t.gamma.comps[i];
        if (m.is_zero()) continue;
        json c;
        c["degree"] = t.gamma.lo + static_cast<int>(i);
        c["rank"] = m.rank();
        if (matrices) c["matrix"] = matrix_to_json(m);
        g.push_back(c);
    }
    out["gamma"] = g;
    out["gamma_nonzero"] = t.gamma_nonzero;
    out["gamma_kills_radical"] = t.gamma_kills_radical;
    out["composites_null"] = t.composites_null;
    return out;
}

json happel_to_json(const HappelReport& r) {
    json out;
    out["window"] = {r.a, r.b};
    out["over_truncation"] = certificate_to_json(r.over_truncation, false);
    out["direct"] = certificate_to_json(r.direct, false);
    out["support_inside"] = r.support_inside;
    out["tau_support"] = {r.tau_support.first, r.tau_support.second};
    out["interior_self_injective"] = r.interior_self_injective;
    out["restricted_exact"] = r.restricted_exact;
    out["end_matches"] = r.end_matches;
    out["left_matches"] = r.left_matches;
    out["middle_matches"] = r.middle_matches;
    json w = json::array();
    for (const auto& s : r.w_summands) w.push_back(dims(s));
    out["w_summands"] = w;
    out["nonsplit_middle"] = dims(r.nonsplit_middle);
    out["triangle_checks"] = r.triangle_checks;
    out["notes"] = r.notes;
    out["passed"] = r.passed();
    return out;
}

json six_term_to_json(const SixTermReport& r) {
    json out;
    json t = json::array();
    for (const auto& m : r.terms) t.push_back(dims(m.dimension_vector()));
    out["terms"] = t;
    out["exact_at"] = r.exact_at;
    out["alternating_sum"] = r.alternating_sum;
    out["exact"] = r.exact();
    return out;
}

std::string quiver_to_dot(const QuiverFragment& q) {
    auto label = [](const Module& m) {
        std::string s = "[";
        auto dv = m.dimension_vector();
        for (std::size_t i = 0; i < dv.size(); ++i) s += (i ? "," : "") + std::to_string(dv[i]);
        return s + "]";
    };
    std::ostringstream os;
    os << "digraph AR {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << label(q.nodes[i].module) << "\"";
        if (q.nodes[i].projective) os << ", shape=box";
        os << "];\n";
    }
    for (const auto& e : q.arrows) {
        os << "  n" << e.from << " -> n" << e.to;
        if (e.multiplicity > 1) os << " [label=\"" << e.multiplicity << "\"]";
        os << ";\n";
    }
    for (const auto& [n, t] : q.tau) os << "  n" << n << " -> n" << t << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

}  // namespace aralg::io
