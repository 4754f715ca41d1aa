// One line per criterion; exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "aralg/errors.hpp"
#include "aralg/verify.hpp"

using namespace aralg;
using namespace aralg::examples;

namespace {

int failures = 0;

void criterion(int n, const char* what, double limit, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > limit) {
        ok = false;
        detail += " (time limit " + std::to_string(limit) + " s exceeded)";
    }
    std::printf("criterion %2d %s %.2fs  %s%s%s\n", n, ok ? "PASS" : "FAIL", s, what, detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<AlgebraPtr> all_algebras() { return {t1(), t2(), t3(), t4()}; }

// Modules are compared through dim Hom(X, -) over all curated X as well as by an explicit iso.
bool same_module(const Module& m, const Module& e) {
    if (m.dimension_vector() != e.dimension_vector()) return false;
    for (const auto& x : curated_indecomposables(m.algebra()))
        if (hom_space(x.module, m).dim() != hom_space(x.module, e).dim()) return false;
    return is_isomorphic(m, e);
}

Module by_name(const AlgebraPtr& a, const std::string& name) {
    for (auto& n : curated_indecomposables(a))
        if (n.name == name) return n.module;
    throw Error("no curated module " + name);
}

bool sequence_case(const Module& n, const Module& expected_middle, std::string& detail, const std::string& tag) {
    AlmostSplitCertificate c = ar_sequence(n);
    bool ok = c.verifies() && same_module(c.sequence.M, expected_middle);
    for (const auto& e : c.factorization_log) ok = ok && e.factors;
    if (!ok) detail += tag + " ";
    return ok;
}

}  // namespace

int main() {
    criterion(1, "AR formula Ext1(M,N) = stable Hom(N, DTr M)", 30, [](std::string& d) {
        std::size_t pairs = 0;
        bool ok = true;
        for (auto a : all_algebras())
            for (const auto& r : verify_ar_formula_modules(curated_indecomposables(a))) {
                ++pairs;
                if (!r.ok()) {
                    ok = false;
                    d += r.m + "," + r.n + " ";
                }
            }
        d += std::to_string(pairs) + " pairs";
        return ok && pairs > 0;
    });

    criterion(2, "DTr via transpose agrees with Z^-1(pM (x) DA)", 10, [](std::string& d) {
        std::size_t n = 0;
        for (auto a : all_algebras())
            for (const auto& m : curated_indecomposables(a)) {
                Module x = dtr(m.module), y = dtr_via_tensor(m.module);
                ++n;
                if (x.dim() == 0 && y.dim() == 0) continue;
                auto iso = find_isomorphism(x, y);
                if (!iso || !inverse(iso->mat) || !iso->is_hom()) {
                    d += m.name;
                    return false;
                }
            }
        d = std::to_string(n) + " modules";
        return true;
    });

    criterion(3, "almost split sequences with expected middle terms", 60, [](std::string& d) {
        bool ok = true;
        auto a1 = t1();
        ok &= sequence_case(simple(a1, 0), regular_module(a1), d, "T1/S");
        auto a2 = t2();
        ok &= sequence_case(simple(a2, 0), projective(a2, 0), d, "T2/S1");
        auto a3 = t3();
        ok &= sequence_case(by_name(a3, "radP1"), direct_sum(simple(a3, 0), regular_module(a3)), d, "T3/radP1");
        auto a4 = t4();
        ok &= sequence_case(by_name(a4, "radP1"), direct_sum(projective(a4, 1), projective(a4, 2)), d, "T4/radP1");
        return ok;
    });

    criterion(4, "AR triangles restrict to almost split sequences", 60, [](std::string& d) {
        std::size_t n = 0;
        for (auto a : all_algebras())
            for (const auto& m : curated_indecomposables(a)) {
                if (is_projective(m.module)) continue;
                Triangle t = ar_triangle(CompactObject::of_module(m.module));
                AlmostSplitCertificate from_t = triangle_to_sequence(t, m.module);
                AlmostSplitCertificate direct = ar_sequence(m.module, ArOptions{0, false});
                ++n;
                if (!from_t.sequence.verifies() || !from_t.non_split ||
                    !sequence_isomorphism(from_t.sequence, direct.sequence)) {
                    d += m.name;
                    return false;
                }
            }
        d = std::to_string(n) + " modules";
        return n > 0;
    });

    std::vector<std::pair<AlgebraPtr, std::vector<NamedCompact>>> objs;
    for (auto a : {t1(), t2()}) objs.emplace_back(a, test_compacts(a));

    criterion(5, "Serre pairing perfect, Hom_K(X,Y) = Hom_K(Y,tX), window stable", 120, [&](std::string& d) {
        Window w{-6, 6, 2}, wide{-8, 8, 2};
        std::size_t n = 0;
        for (auto& [a, list] : objs)
            for (const auto& x : list)
                for (const auto& y : list) {
                    PairCheck c = check_pair(x, y, w), c2 = check_pair(x, y, wide);
                    ++n;
                    if (!c.nondegenerate || !c.vanishes_on_boundaries || c.hom != c.dual || c2.hom != c.hom ||
                        c2.dual != c.dual || !c2.nondegenerate) {
                        d += x.name + "," + y.name;
                        return false;
                    }
                }
        d = std::to_string(n) + " pairs";
        return true;
    });

    criterion(6, "AR triangle ending at A over k[x]/(x^2): gamma is multiplication by x", 5, [](std::string& d) {
        auto a = t1();
        Triangle t = ar_triangle(CompactObject::of_module(regular_module(a)));
        Module lam = regular_module(a);
        auto u = find_isomorphism(lam, t.x.shift(1).at(0));
        if (!u || t.z.lo() != 0 || t.z.hi() != 0) return false;
        auto zi = find_isomorphism(lam, t.z.at(0));
        if (!zi) return false;
        // x acts on A by the basis element labelled x
        std::size_t xb = 0;
        for (std::size_t b = 0; b < a->dim(); ++b)
            if (a->labels()[b] == "x") xb = b;
        Matrix xu = lam.action(xb) * u->mat;
        Matrix g = zi->mat * t.gamma.at(0);
        bool ok = !g.is_zero() && vstack(xu, g).rank() == 1 && t.gamma_nonzero;
        d = "rank(x.u ; gamma) = " + std::to_string(vstack(xu, g).rank());
        return ok;
    });

    criterion(7, "six-term sequence exact, a(P) = 0", 60, [](std::string& d) {
        bool ok = true;
        for (auto a : all_algebras()) {
            SuiteResult r = run_suite(Suite::SixTerm, a);
            ok = ok && r.passed;
            if (!r.passed) d += a->field().descriptor() + " ";
        }
        d += "20 sequences per algebra";
        return ok;
    });

    criterion(8, "natural maps bijective, H^0 total Hom = homotopy classes", 30, [](std::string& d) {
        bool ok = true;
        for (auto a : all_algebras()) {
            auto mods = curated_indecomposables(a);
            for (const auto& m : mods) {
                auto res = minimal_projective_resolution(m.module, 3);
                for (const auto& term : res.terms) {
                    if (term.empty()) continue;
                    Module p = projective_module(a, term);
                    for (const auto& n : mods) ok = ok && natural_map_sigma(n.module, p).bijective();
                }
                for (const auto& n : mods) ok = ok && natural_map_lem2(m.module, n.module).bijective();
            }
            if (!ok) {
                d = "natural map";
                return false;
            }
            for (const auto& [x, y] : random_complex_pairs(a, 20))
                if (homotopy_classes(x, y).dim != homotopy_hom_dim(x, y)) {
                    d = "homotopy classes";
                    return false;
                }
        }
        d = "20 complex pairs per algebra";
        return true;
    });

    criterion(9, "t is fully faithful on compacts", 60, [&](std::string& d) {
        Window w{-6, 6, 2};
        std::size_t n = 0;
        for (auto& [a, list] : objs)
            for (const auto& x : list)
                for (const auto& y : list) {
                    ++n;
                    if (hom_k(x.object, y.object, w).dim != hom_k_translates(x.object, y.object, w).dim) {
                        d = x.name + "," + y.name;
                        return false;
                    }
                }
        d = std::to_string(n) + " pairs";
        return true;
    });

    criterion(10, "repetitive truncation comparison, margin stable", 120, [](std::string& d) {
        bool ok = true;
        std::vector<std::pair<AlgebraPtr, Module>> cases{{t1(), simple(t1(), 0)}, {t2(), simple(t2(), 0)}};
        for (auto& [a, n] : cases) {
            HappelReport r = happel_compare(n, -2, 2);
            HappelReport r2 = happel_compare(n, -3, 3);
            bool stable = r2.passed() && r.nonsplit_middle == r2.nonsplit_middle && r.w_summands == r2.w_summands;
            ok = ok && r.passed() && stable;
            if (!r.passed() || !stable) d += "dim " + std::to_string(a->dim()) + " ";
        }
        return ok;
    });

    return failures == 0 ? 0 : 1;
}
