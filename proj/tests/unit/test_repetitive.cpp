#include <doctest.h>

#include "aralg/errors.hpp"
#include "aralg/repetitive.hpp"

using namespace aralg;
using namespace aralg::examples;

TEST_CASE("truncated repetitive algebras") {
    auto a1 = t1();
    auto w = build_truncation(a1, -1, 1);
    CHECK(w.algebra->dim() == 10);
    CHECK(w.algebra->validate() == std::nullopt);
    CHECK(build_truncation(a1, 0, 0).algebra->dim() == 2);
    auto a2 = t2();
    auto w2 = build_truncation(a2, 0, 1);
    CHECK(w2.algebra->dim() == 9);
    CHECK(w2.algebra->validate() == std::nullopt);
    auto w4 = build_truncation(t4(), -1, 1);
    CHECK(w4.algebra->validate() == std::nullopt);
    for (auto* ww : {&w, &w4})
        for (std::size_t v = 0; v < ww->algebra->num_vertices(); ++v)
            if (ww->interior_vertex(v)) CHECK(is_injective(projective_module(ww->algebra, {v})));
}

TEST_CASE("modules over the truncation") {
    auto a = t2();
    auto w = build_truncation(a, -1, 1);
    for (std::size_t v = 0; v < w.algebra->num_vertices(); ++v) {
        Module p = projective_module(w.algebra, {v});
        RepModule r = from_module(p, w);
        CHECK(r.validate(w) == std::nullopt);
        CHECK(r.dim() == p.dim());
        Module back = to_module(r, w);
        CHECK(back.validate() == std::nullopt);
        CHECK(is_isomorphic(back, p));
    }
    Module s = simple(a, 0);
    RepModule e = happel_embed(s, w);
    CHECK(e.dim() == 1);
    CHECK(e.support() == std::make_pair(0, 0));
    Module z = to_module(e, w);
    CHECK(is_isomorphic(restrict_along_lambda(z, w).module, s));
    CHECK(to_module(happel_embed(Module::zero(a), w), w).dim() == 0);
    // the embedded regular module is not projective over the truncation
    CHECK_FALSE(is_projective(to_module(happel_embed(regular_module(a), w), w)));
    // S at index 1 restricts to zero
    RepModule r1 = happel_embed(s, w);
    std::swap(r1.parts[1], r1.parts[2]);
    for (auto& bs : r1.beta)
        for (auto& m : bs) m = Matrix(a->field(), 0, 0);
    r1.beta[1] = std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 1));
    r1.beta[2].clear();
    r1.beta[0] = std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0));
    CHECK(r1.validate(w) == std::nullopt);
    CHECK(restrict_along_lambda(to_module(r1, w), w).module.dim() == 0);
    // additive
    Module zz = direct_sum(z, z);
    CHECK(restrict_along_lambda(zz, w).module.dim() == 2);
    CHECK_THROWS_AS(happel_embed(s, build_truncation(a, 1, 2)), IndexOutOfWindow);
}

TEST_CASE("truncation comparison with the base algebra") {
    for (auto [a, v] : {std::make_pair(t1(), std::size_t{0}), std::make_pair(t2(), std::size_t{0})}) {
        Module n = simple(a, v);
        HappelReport r = happel_compare(n, -2, 2);
        CHECK(r.passed());
        HappelReport r3 = happel_compare(n, -3, 3);
        CHECK(r3.passed());
        CHECK(r.w_summands == r3.w_summands);
        CHECK(r.nonsplit_middle == r3.nonsplit_middle);
        CHECK(r.tau_support.first >= -1);
        CHECK(r.tau_support.second <= 1);
    }
    CHECK_THROWS_AS(happel_compare(regular_module(t1())), ProjectiveInput);
}
