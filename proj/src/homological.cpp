#include "aralg/homological.hpp"

#include <random>

#include "aralg/errors.hpp"

namespace aralg {

ProjectiveCover projective_cover(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    const Field& f = a->field();
    Subspace rad = radical_submodule(m);
    std::vector<std::size_t> verts;
    std::vector<Vec> gens;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        const Matrix& ev = m.action(a->idempotent(v));
        Subspace mv = Subspace::span(ev);
        Subspace radv = Subspace::span(rad.basis() * ev);
        Matrix top = radv.complement_in(mv);
        for (std::size_t i = 0; i < top.rows(); ++i) {
            verts.push_back(v);
            gens.push_back(top.row_vec(i));
        }
    }
    Module P = projective_module(a, verts);
    Matrix epi(f, P.dim(), m.dim());
    std::size_t row = 0;
    for (std::size_t j = 0; j < verts.size(); ++j)
        for (auto b : a->left_basis(verts[j])) {
            Vec img = vec_mul(f, gens[j], m.action(b));
            for (std::size_t c = 0; c < m.dim(); ++c) epi.at(row, c) = img[c];
            ++row;
        }
    return {verts, P, ModuleHom(P, m, epi)};
}

ProjectivePresentation minimal_projective_presentation(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    ProjectiveCover c0 = projective_cover(m);
    SubResult k = kernel(c0.epi);
    ProjectiveCover c1 = projective_cover(k.module);
    Matrix d = c1.epi.mat * k.map.mat;
    ProjectivePresentation p;
    p.p0 = c0.vertices;
    p.p1 = c1.vertices;
    p.d1 = grid_of_projective_hom(*a, p.p1, p.p0, d);
    p.delta1 = ModuleHom(c1.P, c0.P, d);
    p.epsilon = c0.epi;
    return p;
}

ProjectiveResolution minimal_projective_resolution(const Module& m, std::size_t length) {
    const AlgebraPtr& a = m.algebra();
    ProjectiveResolution r;
    ProjectiveCover c = projective_cover(m);
    r.terms.push_back(c.vertices);
    r.epsilon = c.epi;
    ModuleHom prev = c.epi;
    for (std::size_t i = 0; i < length; ++i) {
        SubResult k = kernel(prev);
        if (k.module.dim() == 0) break;
        ProjectiveCover ck = projective_cover(k.module);
        Matrix d = ck.epi.mat * k.map.mat;
        r.d.push_back(grid_of_projective_hom(*a, ck.vertices, r.terms.back(), d));
        r.terms.push_back(ck.vertices);
        prev = ModuleHom(ck.P, prev.source, d);
    }
    return r;
}

InjectivePresentation injective_presentation(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    ProjectivePresentation op = minimal_projective_presentation(dual_module(m));
    InjectivePresentation r;
    r.i0 = op.p0;
    r.i1 = op.p1;
    r.d0 = transpose(op.d1);
    Module I0 = injective_module(a, r.i0);
    r.iota = ModuleHom(m, I0, op.epsilon.mat.transpose());
    r.delta0 = injective_grid_hom(a, r.d0);
    return r;
}

Module transpose_module(const Module& m, ProjectivePresentation* used) {
    ProjectivePresentation p = minimal_projective_presentation(m);
    AlgebraPtr op = m.algebra()->opposite();
    ModuleHom f = projective_grid_hom(op, transpose(p.d1));
    Module t = cokernel(f).module;
    if (used) *used = std::move(p);
    return t;
}

Module dtr(const Module& m) { return dual_module(transpose_module(m)); }

Module dtr_via_tensor(const Module& m) {
    ProjectivePresentation p = minimal_projective_presentation(m);
    Bimodule x = dual_bimodule(m.algebra());
    Tensor t1 = tensor_over_algebra(p.delta1.source, x);
    Tensor t0 = tensor_over_algebra(p.delta1.target, x);
    return kernel(tensor_hom(p.delta1, t1, t0, x)).module;
}

SubResult dtr_via_nakayama(const ProjectivePresentation& p, const AlgebraPtr& a) {
    return kernel(injective_grid_hom(a, p.d1));
}

ExtSpace ext1(const Module& m, const Module& n) {
    const AlgebraPtr& a = m.algebra();
    const Field& f = a->field();
    ProjectiveResolution r = minimal_projective_resolution(m, 2);
    ExtSpace e;
    if (r.terms.size() < 2) return e;
    Module P1 = projective_module(a, r.terms[1]);
    Module P0 = projective_module(a, r.terms[0]);
    HomSpace h1 = hom_space(P1, n);
    if (h1.dim() == 0) return e;
    Subspace cocycles = Subspace::full(f, h1.dim());
    if (r.terms.size() > 2) {
        Matrix d2 = projective_grid_hom(a, r.d[1]).mat;
        std::vector<Vec> rows;
        for (const auto& b : h1.basis()) rows.push_back((d2 * b).flatten());
        cocycles = kernel_basis(Matrix::from_rows(f, d2.rows() * n.dim(), rows));
    }
    Matrix d1 = projective_grid_hom(a, r.d[0]).mat;
    HomSpace h0 = hom_space(P0, n);
    std::vector<Vec> bd;
    for (const auto& g : h0.basis()) bd.push_back(h1.coordinates(d1 * g));
    Subspace boundaries = Subspace::span(Matrix::from_rows(f, h1.dim(), bd));
    Matrix comp = boundaries.complement_in(cocycles);
    e.dim = comp.rows();
    for (std::size_t i = 0; i < comp.rows(); ++i) e.classes.push_back(h1.combination(comp.row_vec(i)).mat);
    return e;
}

StableHom stable_hom(const Module& m, const Module& n, StableMode mode) {
    const Field& f = m.field();
    StableHom s;
    s.hom = hom_space(m, n);
    std::vector<Vec> rows;
    if (mode == StableMode::ModuloProjectives) {
        ProjectiveCover c = projective_cover(n);
        HomSpace h = hom_space(m, c.P);
        for (const auto& g : h.basis()) rows.push_back((g * c.epi.mat).flatten());
    } else {
        InjectivePresentation ip = injective_presentation(m);
        HomSpace h = hom_space(ip.iota.target, n);
        for (const auto& g : h.basis()) rows.push_back((ip.iota.mat * g).flatten());
    }
    s.factoring = Subspace::span(Matrix::from_rows(f, m.dim() * n.dim(), rows));
    s.dim = s.hom.dim() - s.factoring.dim();
    return s;
}

EndAlgebra end_algebra(const Module& m) {
    const Field& f = m.field();
    HomSpace h = hom_space(m, m);
    const std::size_t r = h.dim();
    std::vector<Vec> table(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) table[i * r + j] = h.coordinates(h.basis()[i] * h.basis()[j]);
    Vec unit = r ? h.coordinates(Matrix::identity(f, m.dim())) : Vec{};
    EndAlgebra e{h, AbstractAlgebra(f, r, std::move(table), unit), Subspace(f, r), false, unit};
    if (r > 0) {
        e.radical = radical_of_endo_algebra(e.algebra);
        e.is_local = r - e.radical.dim() == 1;
    }
    return e;
}

}  // namespace aralg
