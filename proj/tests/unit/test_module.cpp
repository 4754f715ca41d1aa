#include <doctest.h>

#include "aralg/examples.hpp"
#include "aralg/homological.hpp"

using namespace aralg;
using namespace aralg::examples;

TEST_CASE("hom dimensions over A2") {
    auto a = t2();
    Module s1 = simple(a, 0), s2 = simple(a, 1), p1 = projective(a, 0);
    CHECK(p1.dim() == 2);
    CHECK(p1.validate() == std::nullopt);
    CHECK(hom_space(s1, s2).dim() == 0);
    CHECK(hom_space(p1, s1).dim() == 1);
    Module lam = regular_module(a);
    CHECK(hom_space(lam, p1).dim() == 2);
    CHECK(injective(a, 1).dim() == 2);
    CHECK(injective(a, 1).validate() == std::nullopt);
    // dual preserves hom dimensions
    CHECK(hom_space(dual_module(s1), dual_module(p1)).dim() == hom_space(p1, s1).dim());
}

TEST_CASE("regular bimodule and its dual validate") {
    for (auto a : {t1(), t2(), t4()}) {
        CHECK(regular_bimodule(a).validate() == std::nullopt);
        CHECK(dual_bimodule(a).validate() == std::nullopt);
    }
}

TEST_CASE("tensor products") {
    auto a = t1();
    Bimodule d = dual_bimodule(a);
    Tensor t = tensor_over_algebra(regular_module(a), d);
    CHECK(t.module.dim() == 2);
    CHECK(tensor_over_algebra(simple(a, 0), d).module.dim() == 1);
    auto b = t2();
    for (std::size_t v = 0; v < 2; ++v) {
        Module nu = tensor_over_algebra(projective(b, v), dual_bimodule(b)).module;
        CHECK(is_isomorphic(nu, injective(b, v)));
    }
}

TEST_CASE("projective covers and presentations") {
    auto a = t1();
    auto c = projective_cover(simple(a, 0));
    CHECK(c.P.dim() == 2);
    auto p = minimal_projective_presentation(simple(a, 0));
    CHECK(p.p1.size() == 1);
    CHECK(p.delta1.is_hom());
    auto b = t2();
    auto q = minimal_projective_presentation(simple(b, 0));
    CHECK(q.p0 == std::vector<std::size_t>{0});
    CHECK(q.p1 == std::vector<std::size_t>{1});
    CHECK(minimal_projective_presentation(projective(b, 0)).p1.empty());
}

TEST_CASE("injective presentations") {
    auto b = t2();
    auto ip = injective_presentation(simple(b, 1));
    CHECK(ip.i0 == std::vector<std::size_t>{1});
    CHECK(ip.iota.is_hom());
    CHECK(ip.delta0.is_hom());
    CHECK((ip.iota.mat * ip.delta0.mat).is_zero());
    CHECK(is_injective(injective(b, 0)));
    auto a = t1();
    CHECK(injective_presentation(simple(a, 0)).i0.size() == 1);
}

TEST_CASE("transpose and dtr") {
    auto a = t1();
    CHECK(transpose_module(projective(a, 0)).dim() == 0);
    CHECK(dtr(simple(a, 0)).dim() == 1);
    CHECK(is_isomorphic(dtr(simple(a, 0)), dtr_via_tensor(simple(a, 0))));
    auto b = t2();
    CHECK(is_isomorphic(dtr(simple(b, 0)), simple(b, 1)));
    CHECK(is_isomorphic(dtr_via_tensor(simple(b, 0)), simple(b, 1)));
    CHECK(dtr(projective(b, 0)).dim() == 0);
}

TEST_CASE("ext and stable homs") {
    auto a = t1();
    Module s = simple(a, 0);
    CHECK(ext1(s, s).dim == 1);
    CHECK(ext1(projective(a, 0), s).dim == 0);
    CHECK(stable_hom(s, dtr(s), StableMode::ModuloInjectives).dim == 1);
    CHECK(stable_hom(projective(a, 0), s, StableMode::ModuloProjectives).dim == 0);
    auto b = t2();
    CHECK(ext1(simple(b, 0), simple(b, 1)).dim == 1);
    CHECK(ext1(simple(b, 1), simple(b, 0)).dim == 0);
}

TEST_CASE("endomorphism algebras and decomposition") {
    auto b = t2();
    CHECK(end_algebra(simple(b, 0)).is_local);
    auto e = end_algebra(regular_module(b));
    CHECK(e.hom.dim() == 3);
    CHECK_FALSE(e.is_local);
    auto parts = decompose_module(regular_module(b));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].module.dim() + parts[1].module.dim() == 3);
    for (const auto& p : parts) {
        CHECK(p.inclusion.is_hom());
        CHECK((p.inclusion.mat * p.projection.mat).is_identity());
    }
    auto a = t1();
    Module ss = direct_sum(simple(a, 0), simple(a, 0));
    CHECK_FALSE(end_algebra(ss).is_local);
    CHECK(decompose_module(ss).size() == 2);
}

TEST_CASE("natural maps") {
    auto b = t2();
    for (std::size_t v = 0; v < 2; ++v)
        for (const auto& n : {simple(b, 0), simple(b, 1), projective(b, 0)}) {
            CHECK(natural_map_sigma(n, projective(b, v)).bijective());
            CHECK(natural_map_lem2(n, projective(b, v)).bijective());
            CHECK(natural_map_lem2(n, simple(b, v)).bijective());
        }
    auto a = t1();
    auto r = natural_map_sigma(simple(a, 0), simple(a, 0));
    CHECK(r.source_dim == 1);
    CHECK(r.target_dim == 1);
}

TEST_CASE("curated indecomposables") {
    CHECK(curated_indecomposables(t1()).size() == 2);
    CHECK(curated_indecomposables(t2()).size() == 3);
    CHECK(curated_indecomposables(t3()).size() == 3);
    auto c4 = curated_indecomposables(t4());
    CHECK(c4.size() >= 8);
    for (const auto& n : c4) CHECK(end_algebra(n.module).is_local);
}
