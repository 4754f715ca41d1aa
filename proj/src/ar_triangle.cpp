#include "aralg/ar.hpp"
#include "aralg/errors.hpp"

namespace aralg {

namespace {

// Coordinates of a degree-0 cycle in the basis of cohomology representatives.
Vec class_coordinates(const KCohomology& h, const Vec& v) {
    const Field& f = h.cycles.field();
    Matrix stack = vstack(h.representatives, h.boundaries.basis());
    auto s = solve_factorization(Matrix::row_vector(f, v), stack);
    if (!s) throw Error("not a cycle");
    Vec c = s->row_vec(0);
    c.resize(h.dim());
    return c;
}

ChainMap compose(const ChainMap& f, const ChainMap& g, const Complex& x, const Complex& z) {
    std::vector<Matrix> c;
    for (int n = x.lo(); n <= x.hi(); ++n) c.push_back(f.at(n) * g.at(n));
    return make_chain_map(x, z, x.lo(), std::move(c));
}

ChainMap retarget(const ChainMap& f, const Complex& y) { return make_chain_map(f.source, y, f.lo, f.comps); }

// f[k] between the shifted complexes.
ChainMap shifted(const ChainMap& f, int k, const Complex& xs, const Complex& ys) {
    return make_chain_map(xs, ys, f.lo - k, f.comps);
}

bool null_homotopic(const ChainMap& f) { return find_null_homotopy(f).has_value(); }

}  // namespace

Triangle ar_triangle(const CompactObject& z, const Window& w) {
    const Complex& model = z.model;
    const Field& f = model.field();
    int lo = model.hi() + 1, hi = model.lo() - 1;
    for (int n = model.lo(); n <= model.hi() && !model.empty(); ++n)
        if (model.dim(n)) lo = std::min(lo, n), hi = std::max(hi, n);
    if (lo > hi) throw NotIndecomposable("zero object");
    const int L = w.inner_lo(), U = w.inner_hi();
    if (!(L <= lo - 1 && U >= hi + 1 && L - 1 >= w.lo)) throw WindowTooSmall("window too small for the triangle");

    Resolution rp = projective_resolution_complex(model, L - 1);
    GridComplex pg = rp.res.truncate_below(L);
    Complex pw = rp.res.complex(), p = pg.complex();
    Resolution ri = injective_resolution_complex(model, U);
    Complex i = ri.res.complex();
    GridComplex tg = pg.nakayama();
    Complex tp = tg.complex(), tpw = rp.res.nakayama().complex();
    ChainMap c = compose(rp.map, ri.map, p, i);

    // End_K(z) as classes of chain maps p -> pw
    TotalHom te = total_hom_complex(p, pw, -1, 1);
    KCohomology ke = cohomology(te.complex, 0);
    const std::size_t r = ke.dim();
    std::vector<ChainMap> ends;
    for (std::size_t k = 0; k < r; ++k) ends.push_back(te.chain_map(ke.representatives.row_vec(k)));
    auto coords_end = [&](const ChainMap& m) {
        std::vector<std::pair<int, Matrix>> comps;
        for (int n = p.lo(); n <= p.hi(); ++n) comps.push_back({n, m.at(n)});
        return class_coordinates(ke, te.coordinates(0, comps));
    };
    std::vector<Vec> table;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) table.push_back(coords_end(compose(ends[a], ends[b], p, pw)));
    Vec unit = coords_end(retarget(ChainMap::identity(p), pw));
    AbstractAlgebra ring(f, r, table, unit);
    Subspace rad = radical_of_endo_algebra(ring);
    if (r - rad.dim() != 1) throw NotIndecomposable("End_K(z) is not local");
    Matrix B(f, r, r);
    for (std::size_t j = 0; j < r; ++j) B.at(0, j) = unit[j];
    for (std::size_t a = 0; a + 1 < r; ++a)
        for (std::size_t j = 0; j < r; ++j) B.at(a + 1, j) = rad.basis().at(a, j);
    Matrix Binv = *inverse(B);

    // gamma pairs with e.c to the residue functional
    TotalHom rt = total_hom_complex(i, tp, -1, 1);
    KCohomology rh = cohomology(rt.complex, 0);
    if (rh.dim() != r) throw Error("Hom_K(z, tz) has the wrong dimension");
    std::vector<ChainMap> rights;
    for (std::size_t k = 0; k < r; ++k) rights.push_back(rt.chain_map(rh.representatives.row_vec(k)));
    Matrix pair(f, r, r);  // rows: right basis, cols: End basis
    for (std::size_t a = 0; a < r; ++a) {
        ChainMap ec = compose(ends[a], c, p, i);
        for (std::size_t b = 0; b < r; ++b) {
            Scalar s = 0;
            for (int n = pg.lo; n <= pg.hi(); ++n) {
                Scalar t = serre_trace(*model.algebra(), pg.terms[n - pg.lo], ec.at(n) * rights[b].at(n));
                s = (n % 2 == 0) ? f.add(s, t) : f.sub(s, t);
            }
            pair.at(b, a) = s;
        }
    }
    Vec phi(r);
    for (std::size_t a = 0; a < r; ++a) phi[a] = Binv.at(a, 0);
    auto y = solve_factorization(Matrix::row_vector(f, phi), pair);
    if (!y) throw Error("Serre pairing is degenerate");
    Vec gc(rt.complex.dim(0));
    for (std::size_t b = 0; b < r; ++b) gc = vec_add(f, gc, vec_scale(f, rh.representatives.row_vec(b), y->at(0, b)));
    ChainMap gamma = rt.chain_map(gc);
    if (gamma.comps.empty()) gamma = ChainMap::zero(i, tp);

    Cone cn = cone(gamma);
    Triangle t;
    t.z = i;
    t.x = tp.shift(-1);
    t.y = cn.complex.shift(-1);
    t.alpha = shifted(cn.inclusion, -1, t.x, t.y);
    t.beta = shifted(cn.projection, -1, t.y, i);
    t.gamma = gamma;
    t.p = pg;
    t.z_map = ri.map;
    t.gamma_nonzero = !null_homotopic(gamma);
    bool kills = true;
    for (std::size_t a = 0; a < rad.dim(); ++a) {
        Vec e = rad.basis().row_vec(a);
        std::vector<Matrix> comps;
        for (int n = p.lo(); n <= p.hi(); ++n) {
            Matrix m(f, p.dim(n), pw.dim(n));
            for (std::size_t k = 0; k < r; ++k) m = m + ends[k].at(n).scaled(e[k]);
            comps.push_back(m * c.at(n) * gamma.at(n));
        }
        kills = kills && null_homotopic(make_chain_map(p, tpw, p.lo(), std::move(comps)));
    }
    t.gamma_kills_radical = kills;
    t.composites_null = t.alpha.is_chain_map() && t.beta.is_chain_map() && null_homotopic(t.alpha.then(t.beta)) &&
                        null_homotopic(t.beta.then(gamma));
    return t;
}

AlmostSplitCertificate triangle_to_sequence(const Triangle& t, const Module& n) {
    SubResult zl = cycles(t.x, 0), zm = cycles(t.y, 0), zn = cycles(t.z, 0);
    auto a = solve_factorization(zl.map.mat * t.alpha.at(0), zm.map.mat);
    auto b = solve_factorization(zm.map.mat * t.beta.at(0), zn.map.mat);
    auto iso = solve_factorization(zn.map.mat, t.z_map.at(0));
    if (!a || !b || !iso) throw Error("Z^0 of the triangle is not defined on cycles");
    return certify_almost_split(make_ses(ModuleHom(zl.module, zm.module, *a), ModuleHom(zm.module, n, *b * *iso)));
}

}  // namespace aralg

namespace aralg {

std::optional<Vec> gamma_as_multiplication(const Triangle& t) {
    const AlgebraPtr& a = t.z.algebra();
    if (!a || t.z.lo() != 0 || t.z.hi() != 0) return std::nullopt;
    Module lam = regular_module(a);
    if (!is_isomorphic(t.z.at(0), lam)) return std::nullopt;
    auto zi = find_isomorphism(lam, t.z.at(0));
    auto u = find_isomorphism(lam, t.x.shift(1).at(0));
    if (!zi || !u) return std::nullopt;
    const Field& f = a->field();
    Matrix g = zi->mat * t.gamma.at(0);
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < a->dim(); ++b) rows.push_back((a->left_mult(a->basis_vector(b)) * u->mat).flatten());
    Matrix gm = Matrix::from_rows(f, g.rows() * g.cols(), rows);
    auto h = solve_factorization(Matrix::row_vector(f, g.flatten()), gm);
    if (!h) return std::nullopt;
    return h->row_vec(0);
}

}  // namespace aralg
