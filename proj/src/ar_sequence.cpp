#include <random>

#include "aralg/ar.hpp"
#include "aralg/errors.hpp"

namespace aralg {

namespace {

// Coefficients c with sum c_i (hom_i * post) = target, if any.
std::optional<Vec> solve_through(const HomSpace& h, const Matrix& post, const Matrix& target) {
    const Field& f = target.field();
    if (h.dim() == 0) {
        if (target.is_zero()) return Vec{};
        return std::nullopt;
    }
    std::vector<Vec> rows;
    for (const auto& b : h.basis()) rows.push_back((b * post).flatten());
    auto sol = solve_factorization(Matrix::row_vector(f, target.flatten()), Matrix::from_rows(f, target.rows() * target.cols(), rows));
    if (!sol) return std::nullopt;
    return sol->row_vec(0);
}

}  // namespace

bool ShortExactSequence::iota_injective() const { return iota.mat.rank() == L.dim(); }
bool ShortExactSequence::pi_surjective() const { return pi.mat.rank() == N.dim(); }
bool ShortExactSequence::exact_middle() const {
    return (iota.mat * pi.mat).is_zero() && iota.mat.rank() + pi.mat.rank() == M.dim();
}
bool ShortExactSequence::verifies() const {
    return iota.is_hom() && pi.is_hom() && iota_injective() && pi_surjective() && exact_middle() &&
           M.dim() == L.dim() + N.dim();
}

ShortExactSequence make_ses(const ModuleHom& iota, const ModuleHom& pi) {
    if (!iota.target.algebra()->same_as(*pi.source.algebra()) || iota.target.dim() != pi.source.dim())
        throw ShapeError("maps of a short exact sequence do not compose");
    ShortExactSequence s{iota.source, iota.target, pi.target, iota, pi, std::nullopt};
    HomSpace h = hom_space(s.N, s.M);
    if (auto c = solve_through(h, pi.mat, Matrix::identity(s.N.field(), s.N.dim()))) s.split_witness = h.combination(*c).mat;
    return s;
}

bool AlmostSplitCertificate::verifies() const {
    bool f = true;
    for (const auto& e : factorization_log) f = f && e.factors;
    return sequence.verifies() && non_split && left_end_iso.has_value() && left_local && right_local && f;
}

std::vector<FactorizationEntry> check_right_almost_split(const ModuleHom& pi, const std::vector<examples::Named>& tests) {
    std::vector<FactorizationEntry> log;
    const Module &M = pi.source, &N = pi.target;
    for (const auto& t : tests) {
        const Module& X = t.module;
        std::vector<Matrix> maps;
        if (auto u = find_isomorphism(X, N)) {
            EndAlgebra e = end_algebra(X);
            for (std::size_t i = 0; i < e.radical.dim(); ++i) maps.push_back(e.hom.combination(e.radical.basis().row_vec(i)).mat * u->mat);
        } else {
            HomSpace h = hom_space(X, N);
            maps = h.basis();
        }
        HomSpace through = hom_space(X, M);
        bool ok = true;
        for (const auto& f : maps) ok = ok && solve_through(through, pi.mat, f).has_value();
        log.push_back({t.name, maps.size(), ok});
    }
    return log;
}

AlmostSplitCertificate ar_sequence(const Module& n, const ArOptions& opt) {
    const AlgebraPtr& a = n.algebra();
    const Field& f = a->field();
    if (n.dim() == 0 || is_projective(n)) throw ProjectiveInput("almost split sequences need a non-projective module");
    EndAlgebra en = end_algebra(n);
    if (!en.is_local) throw NotIndecomposable("End(N) is not local");

    ProjectivePresentation pres = minimal_projective_presentation(n);
    InjectivePresentation ip = injective_presentation(n);
    const Module& P0 = pres.epsilon.source;
    const Module& I0 = ip.iota.target;
    const Module& I1 = ip.delta0.target;

    // residue functional on End(N): coefficient of the identity against a radical basis
    const std::size_t r = en.hom.dim();
    Matrix B(f, r, r);
    for (std::size_t j = 0; j < r; ++j) B.at(0, j) = en.identity[j];
    for (std::size_t i = 0; i + 1 < r; ++i)
        for (std::size_t j = 0; j < r; ++j) B.at(i + 1, j) = en.radical.basis().at(i, j);
    Matrix Binv = *inverse(B);

    // extend through End(N) -> Hom(P0, I0), f |-> eps f iota
    HomSpace H = hom_space(P0, I0);
    std::vector<Vec> rows;
    Vec vals;
    for (std::size_t k = 0; k < r; ++k) {
        rows.push_back(H.coordinates(pres.epsilon.mat * en.hom.basis()[k] * ip.iota.mat));
        vals.push_back(Binv.at(k, 0));
    }
    Subspace w = Subspace::span(Matrix::from_rows(f, H.dim(), rows));
    Matrix comp = w.complement();
    for (std::size_t i = 0; i < comp.rows(); ++i) {
        rows.push_back(comp.row_vec(i));
        vals.push_back(f.from_int(opt.extension_value));
    }
    Matrix B2inv = *inverse(Matrix::from_rows(f, H.dim(), rows));
    Vec phi(H.dim());
    for (std::size_t i = 0; i < H.dim(); ++i)
        for (std::size_t j = 0; j < H.dim(); ++j) phi[i] = f.add(phi[i], f.mul(B2inv.at(i, j), vals[j]));

    // phi-bar in Hom(I0, nu P0) with tr(h phi-bar) = phi(h)
    Module nuP0 = injective_module(a, pres.p0);
    HomSpace G = hom_space(I0, nuP0);
    Matrix T(f, G.dim(), H.dim());
    for (std::size_t i = 0; i < H.dim(); ++i)
        for (std::size_t j = 0; j < G.dim(); ++j) T.at(j, i) = serre_trace(*a, pres.p0, H.basis()[i] * G.basis()[j]);
    auto y = solve_factorization(Matrix::row_vector(f, phi), T);
    if (!y) throw Error("trace pairing is degenerate");
    Matrix phibar = G.combination(y->row_vec(0)).mat;

    ModuleHom nud1 = injective_grid_hom(a, pres.d1);
    const Module& nuP1 = nud1.source;
    const std::size_t n1 = nuP1.dim(), i0 = I0.dim(), t0 = nuP0.dim();
    Matrix D(f, n1 + i0, t0 + I1.dim());
    D.set_block(0, 0, nud1.mat);
    D.set_block(n1, 0, phibar);
    D.set_block(n1, t0, ip.delta0.mat);
    DirectSum mid = direct_sum(std::vector<Module>{nuP1, I0});
    DirectSum tgt = direct_sum(std::vector<Module>{nuP0, I1});
    SubResult mk = kernel(ModuleHom(mid.module, tgt.module, D));
    SubResult lk = kernel(nud1);

    Matrix lpad(f, lk.module.dim(), n1 + i0);
    lpad.set_block(0, 0, lk.map.mat);
    Matrix alpha = *solve_factorization(lpad, mk.map.mat);
    Matrix toI0 = mk.map.mat.cols_slice(n1, n1 + i0);
    auto beta = solve_factorization(toI0, ip.iota.mat);
    if (!beta) throw Error("middle term does not map into N");

    return certify_almost_split(make_ses(ModuleHom(lk.module, mk.module, alpha), ModuleHom(mk.module, n, *beta)),
                                opt.check_factorizations);
}

AlmostSplitCertificate certify_almost_split(ShortExactSequence s, bool check_factorizations) {
    AlmostSplitCertificate c;
    c.sequence = std::move(s);
    const Module& n = c.sequence.N;
    c.non_split = !c.sequence.split_witness.has_value();
    c.left_end_iso = find_isomorphism(c.sequence.L, dtr(n));
    c.left_local = c.sequence.L.dim() > 0 && end_algebra(c.sequence.L).is_local;
    c.right_local = n.dim() > 0 && end_algebra(n).is_local;
    if (check_factorizations)
        c.factorization_log = check_right_almost_split(c.sequence.pi, examples::curated_indecomposables(n.algebra()));
    return c;
}

std::optional<ModuleHom> sequence_isomorphism(const ShortExactSequence& s, const ShortExactSequence& t) {
    if (s.M.dim() != t.M.dim() || s.N.dim() != t.N.dim()) return std::nullopt;
    const Field& f = s.M.field();
    HomSpace h = hom_space(s.M, t.M);
    auto c0 = solve_through(h, t.pi.mat, s.pi.mat);
    if (!c0) return std::nullopt;
    std::vector<Vec> rows;
    for (const auto& b : h.basis()) rows.push_back((b * t.pi.mat).flatten());
    Subspace free = h.dim() ? kernel_basis(Matrix::from_rows(f, s.M.dim() * t.N.dim(), rows)) : Subspace(f, 0);
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Vec c = *c0;
        if (attempt > 0)
            for (std::size_t i = 0; i < free.dim(); ++i) c = vec_add(f, c, vec_scale(f, free.basis().row_vec(i), f.from_int(coef(rng))));
        Matrix b = h.combination(c).mat;
        if (inverse(b)) return ModuleHom(s.M, t.M, b);
    }
    return std::nullopt;
}

std::vector<ArFormulaRow> verify_ar_formula_modules(const std::vector<examples::Named>& mods) {
    std::vector<ArFormulaRow> out;
    for (const auto& m : mods) {
        if (is_projective(m.module)) continue;
        Module t = dtr(m.module);
        for (const auto& n : mods)
            out.push_back({m.name, n.name, ext1(m.module, n.module).dim, stable_hom(n.module, t, StableMode::ModuloInjectives).dim});
    }
    return out;
}

}  // namespace aralg
