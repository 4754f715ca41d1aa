#include <algorithm>

#include "aralg/complex.hpp"
#include "aralg/errors.hpp"
#include "aralg/homological.hpp"

namespace aralg {

namespace {

// Lowest / highest degree carrying a nonzero term.
std::optional<std::pair<int, int>> support(const Complex& x) {
    std::optional<std::pair<int, int>> s;
    for (int n = x.lo(); n <= x.hi() && !x.empty(); ++n) {
        if (x.dim(n) == 0) continue;
        if (!s) s = std::make_pair(n, n);
        s->second = n;
    }
    return s;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw WindowTooSmall("window too small: " + what);
}

}  // namespace

CompactWitness check_compact(const CompactObject& x) {
    CompactWitness w;
    w.bounded_below = true;
    w.finitely_generated = true;
    w.bounded_cohomology = true;
    bool seen = false;
    for (int n = x.model.lo(); n <= x.model.hi() && !x.model.empty(); ++n) {
        if (cohomology(x.model, n).dim() == 0) continue;
        if (!seen) w.lowest = n;
        w.highest = n;
        seen = true;
    }
    return w;
}

Complex injective_model(const CompactObject& x, int U) { return injective_resolution_complex(x.model, U).res.complex(); }

GridComplex nakayama_translate(const CompactObject& x, int L) {
    return projective_resolution_complex(x.model, L).res.nakayama();
}

HomK hom_k(const CompactObject& x, const CompactObject& y, const Window& w) {
    auto sx = support(x.model), sy = support(y.model);
    if (!sx || !sy) return {};
    const int L = w.inner_lo(), U = w.inner_hi();
    need(L <= sy->first - 1, "lower guard must sit below the target");
    need(U >= sx->second + 1, "upper guard must sit above the source");
    Complex p = projective_resolution_complex(x.model, L).res.complex();
    return homotopy_classes(p, injective_model(y, U));
}

HomK hom_k_to_translate(const CompactObject& y, const CompactObject& x, const Window& w) {
    auto sx = support(x.model), sy = support(y.model);
    if (!sx || !sy) return {};
    const int L = w.inner_lo(), U = w.inner_hi();
    need(L <= sy->first - 1, "lower guard must sit below the source");
    need(U >= sx->second + 1, "upper guard must sit above the translate");
    return homotopy_classes(injective_model(y, U), nakayama_translate(x, L).complex());
}

HomK hom_k_translates(const CompactObject& x, const CompactObject& y, const Window& w) {
    auto sx = support(x.model), sy = support(y.model);
    if (!sx || !sy) return {};
    const int L = w.inner_lo();
    need(L <= sy->first - 1 && L - 1 >= w.lo, "lower guard must sit below the target");
    return homotopy_classes(nakayama_translate(x, L).complex(), nakayama_translate(y, L - 1).complex());
}

Scalar serre_trace(const Algebra& a, const std::vector<std::size_t>& p, const Matrix& h) {
    const Field& f = a.field();
    Scalar s = 0;
    std::size_t ro = 0, co = 0;
    for (std::size_t v : p) {
        const auto& lb = a.left_basis(v);
        const auto& rb = a.right_basis(v);
        std::size_t e = a.idempotent(v);
        std::size_t i = static_cast<std::size_t>(std::find(lb.begin(), lb.end(), e) - lb.begin());
        std::size_t j = static_cast<std::size_t>(std::find(rb.begin(), rb.end(), e) - rb.begin());
        s = f.add(s, h.at(ro + i, co + j));
        ro += lb.size();
        co += rb.size();
    }
    return s;
}

bool SerrePairing::nondegenerate() const {
    return matrix.rows() == matrix.cols() && matrix.rank() == matrix.rows();
}

SerrePairing serre_pairing(const CompactObject& x, const CompactObject& y, const Window& w) {
    SerrePairing out;
    auto sx = support(x.model), sy = support(y.model);
    const Field f = x.model.field();
    if (!sx || !sy) {
        out.matrix = Matrix(f, 0, 0);
        out.vanishes_on_boundaries = true;
        return out;
    }
    const int L = w.inner_lo(), U = w.inner_hi();
    need(L <= sy->first - 1, "lower guard must sit below the target");
    need(U >= sx->second + 1, "upper guard must sit above the source");
    GridComplex pg = projective_resolution_complex(x.model, L).res;
    Complex p = pg.complex();
    Complex i = injective_model(y, U);
    Complex tp = pg.nakayama().complex();
    TotalHom lt = total_hom_complex(p, i, -1, 1);
    TotalHom rt = total_hom_complex(i, tp, -1, 1);
    KCohomology lh = cohomology(lt.complex, 0), rh = cohomology(rt.complex, 0);
    const Algebra& a = *x.model.algebra();
    auto pair = [&](const ChainMap& fm, const ChainMap& gm) {
        Scalar s = 0;
        for (int n = pg.lo; n <= pg.hi(); ++n) {
            Scalar t = serre_trace(a, pg.terms[n - pg.lo], fm.at(n) * gm.at(n));
            s = (n % 2 == 0) ? f.add(s, t) : f.sub(s, t);
        }
        return s;
    };
    for (std::size_t k = 0; k < lh.dim(); ++k) out.left.basis.push_back(lt.chain_map(lh.representatives.row_vec(k)));
    for (std::size_t k = 0; k < rh.dim(); ++k) out.right.basis.push_back(rt.chain_map(rh.representatives.row_vec(k)));
    out.left.dim = lh.dim();
    out.right.dim = rh.dim();
    out.matrix = Matrix(f, lh.dim(), rh.dim());
    for (std::size_t r = 0; r < lh.dim(); ++r)
        for (std::size_t c = 0; c < rh.dim(); ++c) out.matrix.at(r, c) = pair(out.left.basis[r], out.right.basis[c]);
    // boundaries pair to zero against cycles on the other side
    bool ok = true;
    for (std::size_t k = 0; k < lh.boundaries.dim() && ok; ++k) {
        ChainMap b = lt.chain_map(lh.boundaries.basis().row_vec(k));
        for (const auto& g : out.right.basis) ok = ok && pair(b, g) == 0;
    }
    for (std::size_t k = 0; k < rh.boundaries.dim() && ok; ++k) {
        ChainMap b = rt.chain_map(rh.boundaries.basis().row_vec(k));
        for (const auto& g : out.left.basis) ok = ok && pair(g, b) == 0;
    }
    out.vanishes_on_boundaries = ok;
    return out;
}

Complex hom_from_dual(const Complex& y) {
    const AlgebraPtr& a = y.algebra();
    if (y.empty()) return Complex::zero(a);
    Bimodule db = dual_bimodule(a);
    Module dm(a, db.dim, db.right);
    std::vector<HomSpace> hs;
    std::vector<Module> obj;
    for (int n = y.lo(); n <= y.hi(); ++n) {
        hs.push_back(hom_space(dm, y.at(n)));
        const HomSpace& h = hs.back();
        std::vector<Matrix> act;
        for (std::size_t b = 0; b < a->dim(); ++b) {
            std::vector<Vec> rows;
            for (const auto& fm : h.basis()) rows.push_back(h.coordinates(db.left[b] * fm));
            act.push_back(Matrix::from_rows(a->field(), h.dim(), rows));
        }
        obj.emplace_back(a, h.dim(), std::move(act));
    }
    std::vector<Matrix> d;
    for (int n = y.lo(); n < y.hi(); ++n) {
        const HomSpace &h = hs[n - y.lo()], &h1 = hs[n + 1 - y.lo()];
        std::vector<Vec> rows;
        for (const auto& fm : h.basis()) rows.push_back(h1.coordinates(fm * y.d(n)));
        d.push_back(Matrix::from_rows(a->field(), h1.dim(), rows));
    }
    return Complex(a, y.lo(), std::move(obj), std::move(d));
}

bool is_self_injective(const AlgebraPtr& a) {
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
        if (!is_injective(projective_module(a, {v}))) return false;
    return true;
}

CompleteResolution complete_resolution(const Module& m, const Window& w) {
    if (!is_self_injective(m.algebra())) throw NotSelfInjective("projective and injective modules differ");
    Complex mc = Complex::concentrated(m, 0);
    Resolution p = projective_resolution_complex(mc, w.lo);
    Resolution i = injective_resolution_complex(mc, w.hi);
    Complex pc = p.res.complex(), ic = i.res.complex();
    ChainMap phi = make_chain_map(pc, ic, 0, {p.map.at(0) * i.map.at(0)});
    return {cone(phi).complex, p, i};
}

}  // namespace aralg
