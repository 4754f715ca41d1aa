#include "aralg/examples.hpp"
#include <random>

#include "aralg/errors.hpp"
#include "aralg/homological.hpp"

namespace aralg::examples {

namespace {

Quiver loop() {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    return q;
}

}  // namespace

AlgebraPtr t1(Field f) { return build_path_algebra(f, loop(), {Relation{{{1, {0, 0}}}}}); }

AlgebraPtr t2(Field f) {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return build_path_algebra(f, q, {});
}

AlgebraPtr t3(Field f) { return build_path_algebra(f, loop(), {Relation{{{1, {0, 0, 0}}}}}); }

AlgebraPtr t4(Field f) {
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
    return build_path_algebra(f, q, {Relation{{{1, {0, 2}}, {-1, {1, 3}}}}});
}

AlgebraPtr by_name(const std::string& name, Field f) {
    if (name == "T1") return t1(f);
    if (name == "T2") return t2(f);
    if (name == "T3") return t3(f);
    if (name == "T4") return t4(f);
    throw ParseError("unknown example algebra " + name);
}

Module simple(const AlgebraPtr& a, std::size_t v) {
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < a->dim(); ++b) {
        Matrix m(a->field(), 1, 1);
        if (b == a->idempotent(v)) m.at(0, 0) = 1;
        act.push_back(m);
    }
    return Module(a, 1, std::move(act));
}

Module projective(const AlgebraPtr& a, std::size_t v) { return projective_module(a, {v}); }
Module injective(const AlgebraPtr& a, std::size_t v) { return injective_module(a, {v}); }

std::vector<Named> curated_indecomposables(const AlgebraPtr& a) {
    std::vector<Named> out;
    auto add = [&](const std::string& name, const Module& m) {
        if (m.dim() == 0) return;
        for (const auto& n : out)
            if (n.module.dim() == m.dim() && is_isomorphic(n.module, m)) return;
        out.push_back({name, m});
    };
    auto add_summands = [&](const std::string& name, const Module& m) {
        if (m.dim() == 0) return;
        auto parts = decompose_module(m);
        for (std::size_t i = 0; i < parts.size(); ++i)
            add(parts.size() == 1 ? name : name + "." + std::to_string(i + 1), parts[i].module);
    };
    const auto& vn = a->vertex_names();
    for (std::size_t v = 0; v < a->num_vertices(); ++v) add("S" + vn[v], simple(a, v));
    for (std::size_t v = 0; v < a->num_vertices(); ++v) add("P" + vn[v], projective(a, v));
    for (std::size_t v = 0; v < a->num_vertices(); ++v) add("I" + vn[v], injective(a, v));
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        Module p = projective(a, v);
        add_summands("radP" + vn[v], submodule(p, radical_submodule(p)).module);
    }
    for (std::size_t v = 0; v < a->num_vertices(); ++v) add_summands("tauS" + vn[v], dtr(simple(a, v)));
    return out;
}

}  // namespace aralg::examples

namespace aralg::examples {

std::vector<SesData> random_short_exact_sequences(const AlgebraPtr& a, std::size_t count, unsigned seed) {
    const Field& f = a->field();
    auto mods = curated_indecomposables(a);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, mods.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<SesData> out;
    for (std::size_t k = 0; k < count; ++k) {
        Module m = mods[pick(rng)].module;
        if (k % 3 != 0) m = direct_sum(m, mods[pick(rng)].module);
        std::size_t gens = 1 + k % 2;
        Matrix rows(f, gens, m.dim());
        for (std::size_t i = 0; i < gens; ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) rows.at(i, j) = f.from_int(coef(rng));
        Subspace s = generated_submodule(m, rows);
        SubResult l = submodule(m, s);
        SubResult n = quotient_module(m, s);
        out.push_back({l.map, n.map});
    }
    return out;
}

}  // namespace aralg::examples

namespace aralg::examples {

namespace {

Complex random_complex(const AlgebraPtr& a, const std::vector<Named>& mods, std::mt19937& rng) {
    const Field& f = a->field();
    std::uniform_int_distribution<std::size_t> pick(0, mods.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    Module m0 = mods[pick(rng)].module;
    Module m1 = mods[pick(rng)].module;
    HomSpace h = hom_space(m0, m1);
    Vec c(h.dim());
    for (auto& x : c) x = f.from_int(coef(rng));
    ModuleHom d0 = h.dim() ? h.combination(c) : ModuleHom::zero(m0, m1);
    int lo = -coin(rng);
    if (coin(rng)) {
        SubResult q = cokernel(d0);
        return Complex(a, lo, {m0, m1, q.module}, {d0.mat, q.map.mat});
    }
    return Complex(a, lo, {m0, m1}, {d0.mat});
}

}  // namespace

std::vector<std::pair<Complex, Complex>> random_complex_pairs(const AlgebraPtr& a, std::size_t count, unsigned seed) {
    auto mods = curated_indecomposables(a);
    std::mt19937 rng(seed);
    std::vector<std::pair<Complex, Complex>> out;
    for (std::size_t k = 0; k < count; ++k) {
        Complex x = random_complex(a, mods, rng);
        Complex y = random_complex(a, mods, rng);
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

}  // namespace aralg::examples
