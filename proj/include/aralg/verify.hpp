#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aralg/io.hpp"

namespace aralg {

enum class Suite { ArFormula, DtrRoutes, SixTerm, SerrePairing, Happel };
// "ArFormula" or "ar-formula" style; ParseError otherwise.
Suite parse_suite(const std::string& s);
std::string suite_name(Suite s);

struct SuiteOptions {
    Window window;
    int rep_lo = -2, rep_hi = 2;  // truncation indices for the repetitive comparison
    std::size_t random_count = 20;
    unsigned seed = 2024;
};

struct SuiteResult {
    bool passed = false;
    io::json report;
};
SuiteResult run_suite(Suite s, const AlgebraPtr& a, const SuiteOptions& opt = {});

struct NamedCompact {
    std::string name;
    CompactObject object;
};
// iS and iP for every vertex, and the minimal presentation P1 -> P0 of each
// simple placed in degrees -1, 0.
std::vector<NamedCompact> test_compacts(const AlgebraPtr& a);

// Dimensions of Hom_K(X,Y), Hom_K(Y,tX), Hom_K(tX,tY) plus pairing checks for one pair.
struct PairCheck {
    std::string x, y;
    std::size_t hom = 0, dual = 0, translated = 0;
    bool nondegenerate = false;
    bool vanishes_on_boundaries = false;
    bool ok() const { return hom == dual && hom == translated && nondegenerate && vanishes_on_boundaries; }
};
PairCheck check_pair(const NamedCompact& x, const NamedCompact& y, const Window& w);

}  // namespace aralg
