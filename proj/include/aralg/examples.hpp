#pragma once

#include <string>
#include <vector>

#include "aralg/complex.hpp"
#include "aralg/module.hpp"

namespace aralg::examples {

// k[x]/(x^2), path algebra of 1 -> 2, k[x]/(x^3), commutative square.
AlgebraPtr t1(Field f = Field::rationals());
AlgebraPtr t2(Field f = Field::rationals());
AlgebraPtr t3(Field f = Field::rationals());
AlgebraPtr t4(Field f = Field::rationals());
AlgebraPtr by_name(const std::string& name, Field f = Field::rationals());

Module simple(const AlgebraPtr& a, std::size_t v);
Module projective(const AlgebraPtr& a, std::size_t v);
Module injective(const AlgebraPtr& a, std::size_t v);

struct Named {
    std::string name;
    Module module;
};

// Simples, indecomposable projectives and injectives, indecomposable summands of
// radicals and of tau of simples; deduplicated up to isomorphism.
std::vector<Named> curated_indecomposables(const AlgebraPtr& a);

}  // namespace aralg::examples

namespace aralg::examples {

struct SesData {
    ModuleHom iota;  // L -> M
    ModuleHom pi;    // M -> N
};
// Deterministic pseudo-random short exact sequences: M is a sum of one or two curated
// modules, L the submodule generated by one or two random vectors, N = M/L.
std::vector<SesData> random_short_exact_sequences(const AlgebraPtr& a, std::size_t count, unsigned seed = 2024);

}  // namespace aralg::examples

namespace aralg::examples {

// Small bounded complexes M0 -> M1 (-> coker) of curated modules with random maps,
// starting in degree -1 or 0.
std::vector<std::pair<Complex, Complex>> random_complex_pairs(const AlgebraPtr& a, std::size_t count,
                                                              unsigned seed = 7);

}  // namespace aralg::examples
