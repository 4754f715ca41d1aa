#pragma once

#include <optional>
#include <vector>

#include "aralg/module.hpp"

namespace aralg {

struct ProjectiveCover {
    std::vector<std::size_t> vertices;
    Module P;
    ModuleHom epi;
};
// Minimal: generators are lifted from a basis of top(M) = M / M.rad.
ProjectiveCover projective_cover(const Module& m);

// P1 --delta1--> P0 --epsilon--> M --> 0, minimal.
struct ProjectivePresentation {
    std::vector<std::size_t> p0, p1;
    Grid d1;
    ModuleHom delta1;
    ModuleHom epsilon;
};
ProjectivePresentation minimal_projective_presentation(const Module& m);

// ... -> P2 -> P1 -> P0 -> M, d[i] : P_{i+1} -> P_i. Stops early once a kernel vanishes.
struct ProjectiveResolution {
    std::vector<std::vector<std::size_t>> terms;
    std::vector<Grid> d;
    ModuleHom epsilon;
};
ProjectiveResolution minimal_projective_resolution(const Module& m, std::size_t length);

// 0 -> M --iota--> I0 --delta0--> I1, minimal (dual of a minimal presentation of DM).
struct InjectivePresentation {
    std::vector<std::size_t> i0, i1;
    Grid d0;  // injective grid I0 -> I1
    ModuleHom iota;
    ModuleHom delta0;
};
InjectivePresentation injective_presentation(const Module& m);

// Tr M over the opposite algebra; the presentation used is returned when asked.
Module transpose_module(const Module& m, ProjectivePresentation* used = nullptr);
// D Tr M via the transpose.
Module dtr(const Module& m);
// Kernel of pM (x) DA in degree -1, computed with the generic tensor product.
Module dtr_via_tensor(const Module& m);
// Kernel of the Nakayama image nu(P1) -> nu(P0) of the minimal presentation.
SubResult dtr_via_nakayama(const ProjectivePresentation& p, const AlgebraPtr& a);

struct ExtSpace {
    std::size_t dim = 0;
    std::vector<Matrix> classes;  // cocycles P1 -> N spanning a complement of the coboundaries
};
ExtSpace ext1(const Module& m, const Module& n);

enum class StableMode { ModuloProjectives, ModuloInjectives };
struct StableHom {
    std::size_t dim = 0;
    HomSpace hom;
    Subspace factoring;  // flattened homs factoring through a projective / injective
};
StableHom stable_hom(const Module& m, const Module& n, StableMode mode);

struct EndAlgebra {
    HomSpace hom;
    AbstractAlgebra algebra;  // product x*y = "x then y"
    Subspace radical;
    bool is_local = false;
    Vec identity;  // coordinates of id_M
};
EndAlgebra end_algebra(const Module& m);

struct Summand {
    Module module;
    ModuleHom inclusion;
    ModuleHom projection;
};
std::vector<Summand> decompose_module(const Module& m);

// An isomorphism M -> N, if one is found. Exact for indecomposable M;
// otherwise random combinations of a Hom basis are tried.
std::optional<ModuleHom> find_isomorphism(const Module& m, const Module& n);
bool is_isomorphic(const Module& m, const Module& n);
bool is_projective(const Module& m);
bool is_injective(const Module& m);

// sigma : N (x)_A Hom(M,A) -> Hom(M,N), n (x) phi |-> (m |-> n phi(m)).
struct NaturalMapReport {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    bool bijective() const { return source_dim == target_dim && rank == source_dim; }
};
NaturalMapReport natural_map_sigma(const Module& n, const Module& m);
// M (x)_A DN -> D Hom(M,N), m (x) xi |-> (f |-> xi(f(m))).
NaturalMapReport natural_map_lem2(const Module& m, const Module& n);

}  // namespace aralg
