#include <doctest.h>

#include "aralg/algebra.hpp"
#include "aralg/errors.hpp"

using namespace aralg;

namespace {

Quiver loop_quiver() {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    return q;
}

Quiver a2() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return q;
}

}  // namespace

TEST_CASE("kernel of the all-ones 2x2 matrix") {
    Field q = Field::rationals();
    Matrix m = Matrix::from_rows(q, 2, {{1, 1}, {1, 1}});
    Subspace k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    Vec v = k.basis().row_vec(0);
    CHECK(v[0] == -v[1]);
    CHECK(v[0] != 0);
}

TEST_CASE("dual numbers") {
    Field q = Field::rationals();
    Relation r{{{1, {0, 0}}}};
    auto a = build_path_algebra(q, loop_quiver(), {r});
    CHECK(a->dim() == 2);
    CHECK_FALSE(a->validate().has_value());
    CHECK(a->radical().dim() == 1);
    CHECK(a->labels()[1] == "x");
    // x*x = 0
    CHECK(vec_is_zero(a->product(1, 1)));
}

TEST_CASE("loop with bound 3 and no relations") {
    auto a = build_path_algebra(Field::rationals(), loop_quiver(), {}, 3);
    CHECK(a->dim() == 3);
    CHECK(a->labels()[2] == "x*x");
    CHECK(a->product(1, 1) == Vec{0, 0, 1});
}

TEST_CASE("cyclic quiver without bound and with inhomogeneous relation") {
    Relation r{{{1, {0, 0}}, {-1, {0, 0, 0}}}};
    CHECK_THROWS_AS(build_path_algebra(Field::rationals(), loop_quiver(), {r}), InfiniteDimensional);
    CHECK_THROWS_AS(build_path_algebra(Field::rationals(), loop_quiver(), {}), InfiniteDimensional);
}

TEST_CASE("A2 and its opposite") {
    auto a = build_path_algebra(Field::rationals(), a2(), {});
    CHECK(a->dim() == 3);
    CHECK_FALSE(a->validate().has_value());
    CHECK(a->left_basis(0).size() == 2);
    CHECK(a->right_basis(1).size() == 2);
    CHECK(a->generators().size() == 1);
    auto op = a->opposite();
    CHECK(op->opposite().get() == a.get());
    Quiver rq = a2().reversed();
    auto b = build_path_algebra(Field::rationals(), rq, {});
    CHECK(op->table() == b->table());
    CHECK_FALSE(op->validate().has_value());
}

TEST_CASE("commutative square") {
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
    Relation r{{{1, {0, 2}}, {-1, {1, 3}}}};
    auto a = build_path_algebra(Field::rationals(), q, {r});
    CHECK(a->dim() == 9);
    CHECK_FALSE(a->validate().has_value());
    Relation bad{{{1, {0, 3}}}};
    CHECK_THROWS_AS(build_path_algebra(Field::rationals(), q, {bad}), InadmissibleRelation);
}

TEST_CASE("radical via trace form") {
    auto a = build_path_algebra(Field::rationals(), loop_quiver(), {}, 3);
    Subspace r = radical_of_endo_algebra(*a);
    CHECK(r == a->radical());
    CHECK(nilpotency_index(*a, r) == 3);
    auto small = build_path_algebra(Field::prime(2), loop_quiver(), {}, 3);
    CHECK_THROWS_AS(radical_of_endo_algebra(*small), UnsupportedCharacteristic);
    auto ok = build_path_algebra(Field::prime(5), loop_quiver(), {}, 3);
    CHECK(radical_of_endo_algebra(*ok).dim() == 2);
}
