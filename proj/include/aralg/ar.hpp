#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aralg/complex.hpp"
#include "aralg/examples.hpp"
#include "aralg/homological.hpp"

namespace aralg {

struct ShortExactSequence {
    Module L, M, N;
    ModuleHom iota, pi;
    std::optional<Matrix> split_witness;  // section N -> M of pi

    bool iota_injective() const;
    bool pi_surjective() const;
    bool exact_middle() const;
    bool verifies() const;
};
// Certifies exactness and searches for a section.
ShortExactSequence make_ses(const ModuleHom& iota, const ModuleHom& pi);

struct FactorizationEntry {
    std::string module;
    std::size_t non_retractions = 0;  // dimension of the space checked
    bool factors = false;
};

struct AlmostSplitCertificate {
    ShortExactSequence sequence;
    bool non_split = false;
    std::optional<ModuleHom> left_end_iso;  // L -> DTr N
    bool left_local = false;
    bool right_local = false;
    std::vector<FactorizationEntry> factorization_log;

    bool verifies() const;
};

// Section search, dtr comparison, locality of both ends, factorizations over the curated list.
AlmostSplitCertificate certify_almost_split(ShortExactSequence s, bool check_factorizations = true);

// Checks every map from the test modules into N that is not a retraction factors through pi.
std::vector<FactorizationEntry> check_right_almost_split(const ModuleHom& pi,
                                                         const std::vector<examples::Named>& tests);

struct ArOptions {
    // 0: extend the functional by zero on the echelon complement; otherwise by this value.
    long extension_value = 0;
    bool check_factorizations = true;
};

// Middle column recipe from a minimal presentation and an injective presentation of N.
AlmostSplitCertificate ar_sequence(const Module& n, const ArOptions& opt = {});

struct Triangle {
    Complex x, y, z;  // x = (t z)[-1]
    ChainMap alpha, beta, gamma;  // gamma : z -> x[1] = t z
    GridComplex p;  // truncated projective resolution of the model
    ChainMap z_map;  // model -> z
    bool gamma_nonzero = false;
    bool gamma_kills_radical = false;
    bool composites_null = false;
};
Triangle ar_triangle(const CompactObject& z, const Window& w = {});
AlmostSplitCertificate triangle_to_sequence(const Triangle& t, const Module& n);
// For z = A in degree 0: r with gamma^0 = (left multiplication by r) then u, for a chosen
// isomorphism u : A -> DA. nullopt when z is not of that shape.
std::optional<Vec> gamma_as_multiplication(const Triangle& t);

// b : M -> M' with b.pi' = pi, invertible; nullopt when none is found.
std::optional<ModuleHom> sequence_isomorphism(const ShortExactSequence& s, const ShortExactSequence& t);

struct ArFormulaRow {
    std::string m, n;
    std::size_t ext = 0;
    std::size_t stable = 0;
    bool ok() const { return ext == stable; }
};
std::vector<ArFormulaRow> verify_ar_formula_modules(const std::vector<examples::Named>& mods);

struct SixTermReport {
    std::vector<Module> terms;   // aL aM aN L(x)DA M(x)DA N(x)DA
    std::vector<Matrix> maps;    // five maps between consecutive terms
    std::vector<bool> exact_at;  // positions 0..5 (first: injective, last: surjective)
    long alternating_sum = 0;
    bool exact() const;
};
SixTermReport six_term_sequence(const ShortExactSequence& s);
// Z^{-1}(pX (x) DA) from a minimal presentation.
Module a_functor(const Module& x);

struct QuiverNode {
    std::string name;
    Module module;
    bool projective = false;
};
struct QuiverEdge {
    std::size_t from, to;
    std::size_t multiplicity;
};
struct QuiverFragment {
    std::vector<QuiverNode> nodes;
    std::vector<QuiverEdge> arrows;
    std::vector<std::pair<std::size_t, std::size_t>> tau;  // (N, tau N)
};
QuiverFragment ar_quiver_fragment(const AlgebraPtr& a, const std::vector<Module>& seeds, int steps);

}  // namespace aralg
