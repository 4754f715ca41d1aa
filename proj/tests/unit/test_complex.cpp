#include <doctest.h>

#include "aralg/complex.hpp"
#include "aralg/errors.hpp"
#include "aralg/examples.hpp"
#include "aralg/homological.hpp"

using namespace aralg;
using namespace aralg::examples;

TEST_CASE("projective resolution of a complex") {
    auto a = t1();
    Module s = simple(a, 0);
    Resolution r = projective_resolution_complex(Complex::concentrated(s, 0), -4);
    Complex p = r.res.complex();
    CHECK(p.validate() == std::nullopt);
    CHECK(r.map.is_chain_map());
    CHECK(p.lo() == -4);
    for (int n = -4; n <= 0; ++n) CHECK(p.dim(n) == 2);
    for (int n = -3; n < 0; ++n) CHECK(cohomology(p, n).dim() == 0);
    CHECK(cohomology(p, 0).dim() == 1);
    // projective input resolves to itself
    Resolution rp = projective_resolution_complex(Complex::concentrated(regular_module(a), 0), -4);
    CHECK(rp.res.lo == 0);
    CHECK(rp.res.complex().dim(0) == 2);
}

TEST_CASE("injective resolutions compute H^0 = M") {
    for (auto a : {t1(), t2(), t3(), t4()}) {
        for (const auto& nm : curated_indecomposables(a)) {
            Resolution r = injective_resolution_complex(Complex::concentrated(nm.module, 0), 4);
            Complex i = r.res.complex();
            CHECK(i.validate() == std::nullopt);
            CHECK(r.map.is_chain_map());
            CHECK(is_isomorphic(cohomology(i, 0), nm.module));
            for (int n = 1; n < 4; ++n) CHECK(cohomology(i, n).dim() == 0);
        }
    }
}

TEST_CASE("cones, shifts and homotopies") {
    auto a = t2();
    Complex x = Complex::concentrated(projective(a, 0), 0);
    Cone c = cone(ChainMap::identity(x));
    CHECK(c.complex.validate() == std::nullopt);
    CHECK(c.inclusion.is_chain_map());
    CHECK(c.projection.is_chain_map());
    CHECK(find_null_homotopy(ChainMap::identity(c.complex)).has_value());
    CHECK(homotopy_classes(c.complex, x).dim == 0);
    CHECK_FALSE(find_null_homotopy(ChainMap::identity(x)).has_value());
    Complex p = projective_resolution_complex(Complex::concentrated(simple(a, 0), 0), -3).res.complex();
    Complex ps = p.shift(1);
    CHECK(ps.validate() == std::nullopt);
    CHECK(ps.lo() == p.lo() - 1);
}

TEST_CASE("total Hom agrees with homotopy classes") {
    for (auto a : {t1(), t2(), t4()}) {
        auto mods = curated_indecomposables(a);
        for (const auto& m : mods)
            for (const auto& n : mods) {
                Complex pm = projective_resolution_complex(Complex::concentrated(m.module, 0), -3).res.complex();
                Complex in = injective_resolution_complex(Complex::concentrated(n.module, 0), 3).res.complex();
                HomK h = homotopy_classes(pm, in);
                CHECK(h.dim == hom_space(m.module, n.module).dim());
                CHECK(homotopy_hom_dim(pm, in) == h.dim);
                for (const auto& c : h.basis) CHECK(c.is_chain_map());
                TotalHom t = total_hom_complex(pm, in, 0, 2);
                CHECK(cohomology(t.complex, 1).dim() == ext1(m.module, n.module).dim);
            }
    }
}

TEST_CASE("Hom_K in the window") {
    auto a = t1();
    Module s = simple(a, 0);
    Window w;
    CHECK(hom_k(CompactObject::of_module(s), CompactObject::of_module(s), w).dim == 1);
    CHECK(hom_k(CompactObject::of_module(s), CompactObject::of_module(s, -1), w).dim == 1);
    Window tiny{0, 1, 1};
    CHECK_THROWS_AS(hom_k(CompactObject::of_module(s), CompactObject::of_module(s), tiny), WindowTooSmall);
}

TEST_CASE("Nakayama translate") {
    auto a = t2();
    GridComplex t = nakayama_translate(CompactObject::of_module(regular_module(a)), -4);
    Complex tc = t.complex();
    CHECK(tc.lo() == 0);
    CHECK(is_isomorphic(tc.at(0), tensor_over_algebra(regular_module(a), dual_bimodule(a)).module));
    for (auto b : {t1(), t2(), t3(), t4()})
        for (const auto& nm : curated_indecomposables(b)) {
            if (is_projective(nm.module)) continue;
            Complex tm = nakayama_translate(CompactObject::of_module(nm.module), -4).complex();
            CHECK(tm.validate() == std::nullopt);
            CHECK(is_isomorphic(cycles(tm, -1).module, dtr(nm.module)));
        }
    // degreewise tensor with D(A) gives the same complex
    Complex p = projective_resolution_complex(Complex::concentrated(simple(a, 0), 0), -3).res.complex();
    Complex pt = total_tensor_complex(p, dual_bimodule(a));
    CHECK(pt.validate() == std::nullopt);
    Complex nu = projective_resolution_complex(Complex::concentrated(simple(a, 0), 0), -3).res.nakayama().complex();
    for (int n = -3; n <= 0; ++n) CHECK(is_isomorphic(pt.at(n), nu.at(n)));
}

TEST_CASE("Serre pairing is perfect") {
    Window w;
    for (auto a : {t1(), t2(), t3(), t4()}) {
        auto mods = curated_indecomposables(a);
        for (const auto& m : mods)
            for (const auto& n : mods)
                for (int shift : {0, -1}) {
                    auto x = CompactObject::of_module(m.module);
                    auto y = CompactObject::of_module(n.module, shift);
                    SerrePairing sp = serre_pairing(x, y, w);
                    CHECK(sp.vanishes_on_boundaries);
                    CHECK(sp.nondegenerate());
                    CHECK(sp.left.dim == hom_k(x, y, w).dim);
                    CHECK(sp.right.dim == hom_k_to_translate(y, x, w).dim);
                }
    }
}

TEST_CASE("t is fully faithful on compacts") {
    Window w;
    for (auto a : {t1(), t2(), t4()}) {
        auto mods = curated_indecomposables(a);
        for (const auto& m : mods)
            for (const auto& n : mods)
                for (int shift : {0, -1}) {
                    auto x = CompactObject::of_module(m.module);
                    auto y = CompactObject::of_module(n.module, shift);
                    CHECK(hom_k_translates(x, y, w).dim == hom_k(x, y, w).dim);
                }
    }
}

TEST_CASE("complete resolutions over a self-injective algebra") {
    auto a = t1();
    CHECK(is_self_injective(a));
    CHECK_FALSE(is_self_injective(t2()));
    Window w;
    CompleteResolution c = complete_resolution(simple(a, 0), w);
    CHECK(c.complex.validate() == std::nullopt);
    for (int n = w.inner_lo(); n <= w.inner_hi(); ++n) {
        CHECK(cohomology(c.complex, n).dim() == 0);
        CHECK(c.complex.dim(n) == 2);
    }
    CHECK(is_isomorphic(cycles(c.complex, 0).module, simple(a, 0)));
    CHECK_THROWS_AS(complete_resolution(simple(t2(), 0), w), NotSelfInjective);
    CHECK(is_isomorphic(hom_from_dual(Complex::concentrated(tensor_over_algebra(regular_module(a), dual_bimodule(a)).module, 0)).at(0),
                        regular_module(a)));
}
