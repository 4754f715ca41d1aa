#include <algorithm>

#include "aralg/errors.hpp"
#include "aralg/module.hpp"

namespace aralg {

Subspace generated_submodule(const Module& m, const Matrix& rows) {
    const Algebra& a = *m.algebra();
    std::vector<std::size_t> gens;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) gens.push_back(a.idempotent(v));
    std::vector<Matrix> gen_act;
    for (auto g : gens) gen_act.push_back(m.action(g));
    for (const auto& g : a.generators()) gen_act.push_back(m.act(g.element));
    Subspace s = Subspace::span(rows);
    while (true) {
        std::vector<Matrix> parts{s.basis()};
        for (const auto& ga : gen_act) parts.push_back(s.basis() * ga);
        Subspace next = Subspace::span(vstack(m.field(), m.dim(), parts));
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

SubResult submodule(const Module& m, const Subspace& s) {
    const Matrix& B = s.basis();
    CoordinateMap cm(B);
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < m.algebra()->dim(); ++b) {
        Matrix img = B * m.action(b);
        Matrix r(m.field(), s.dim(), s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) {
            if (!cm.contains(img.row(i))) throw InvalidModule("subspace is not a submodule");
            Vec c = cm(img.row(i));
            for (std::size_t j = 0; j < s.dim(); ++j) r.at(i, j) = c[j];
        }
        act.push_back(std::move(r));
    }
    Module sub(m.algebra(), s.dim(), std::move(act));
    return {sub, ModuleHom(sub, m, B)};
}

SubResult quotient_module(const Module& m, const Subspace& s) {
    Matrix Q = s.complement();
    Matrix B = vstack(s.basis(), Q);
    Matrix P = inverse(B)->cols_slice(s.dim(), m.dim());
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < m.algebra()->dim(); ++b) act.push_back(Q * m.action(b) * P);
    Module q(m.algebra(), Q.rows(), std::move(act));
    return {q, ModuleHom(m, q, P)};
}

SubResult kernel(const ModuleHom& f) { return submodule(f.source, kernel_basis(f.mat)); }
SubResult cokernel(const ModuleHom& f) { return quotient_module(f.target, Subspace::span(f.mat)); }
SubResult image(const ModuleHom& f) { return submodule(f.target, Subspace::span(f.mat)); }

Subspace radical_submodule(const Module& m) {
    const Algebra& a = *m.algebra();
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < a.radical().dim(); ++i) parts.push_back(m.act(a.radical().basis().row_vec(i)));
    return Subspace::span(vstack(m.field(), m.dim(), parts));
}

DirectSum direct_sum(const std::vector<Module>& parts) {
    if (parts.empty()) throw InvalidModule("empty direct sum needs an algebra");
    const AlgebraPtr& a = parts.front().algebra();
    const Field& f = a->field();
    std::size_t n = 0;
    std::vector<std::size_t> off;
    for (const auto& p : parts) {
        if (!p.algebra()->same_as(*a)) throw AlgebraMismatch("direct sum over different algebras");
        off.push_back(n);
        n += p.dim();
    }
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < a->dim(); ++b) {
        Matrix r(f, n, n);
        for (std::size_t i = 0; i < parts.size(); ++i) r.set_block(off[i], off[i], parts[i].action(b));
        act.push_back(std::move(r));
    }
    DirectSum s;
    s.module = Module(a, n, std::move(act));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Matrix inc(f, parts[i].dim(), n), pr(f, n, parts[i].dim());
        for (std::size_t k = 0; k < parts[i].dim(); ++k) {
            inc.at(k, off[i] + k) = 1;
            pr.at(off[i] + k, k) = 1;
        }
        s.inclusions.emplace_back(parts[i], s.module, inc);
        s.projections.emplace_back(s.module, parts[i], pr);
    }
    return s;
}

Module direct_sum(const Module& a, const Module& b) { return direct_sum(std::vector<Module>{a, b}).module; }

ModuleHom hom_from_sum(const DirectSum& s, const std::vector<ModuleHom>& maps) {
    if (maps.size() != s.inclusions.size()) throw ShapeError("hom_from_sum: wrong number of maps");
    std::vector<Matrix> rows;
    for (const auto& m : maps) rows.push_back(m.mat);
    return {s.module, maps.front().target, vstack(s.module.field(), maps.front().target.dim(), rows)};
}

ModuleHom hom_into_sum(const DirectSum& s, const std::vector<ModuleHom>& maps) {
    if (maps.size() != s.projections.size()) throw ShapeError("hom_into_sum: wrong number of maps");
    Matrix r(s.module.field(), maps.front().source.dim(), 0);
    for (const auto& m : maps) r = hstack(r, m.mat);
    return {maps.front().source, s.module, r};
}

Module dual_module(const Module& m) {
    std::vector<Matrix> act;
    for (const auto& a : m.actions()) act.push_back(a.transpose());
    return Module(m.algebra()->opposite(), m.dim(), std::move(act));
}

ModuleHom dual_hom(const ModuleHom& f) { return {dual_module(f.target), dual_module(f.source), f.mat.transpose()}; }

Module regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < a->dim(); ++b) act.push_back(a->right_mult(a->basis_vector(b)));
    return Module(a, a->dim(), std::move(act));
}

namespace {

// Position of basis element b inside left_basis(left(b)) resp. right_basis(right(b)).
std::vector<std::size_t> left_positions(const Algebra& a) {
    std::vector<std::size_t> pos(a.dim());
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        for (std::size_t i = 0; i < a.left_basis(v).size(); ++i) pos[a.left_basis(v)[i]] = i;
    return pos;
}

std::vector<std::size_t> offsets(const std::vector<std::size_t>& verts,
                                 const std::vector<std::vector<std::size_t>>& sizes) {
    std::vector<std::size_t> off{0};
    for (auto v : verts) off.push_back(off.back() + sizes[v].size());
    return off;
}

std::vector<std::vector<std::size_t>> lefts(const Algebra& a) {
    std::vector<std::vector<std::size_t>> r;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) r.push_back(a.left_basis(v));
    return r;
}

std::vector<std::vector<std::size_t>> rights(const Algebra& a) {
    std::vector<std::vector<std::size_t>> r;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) r.push_back(a.right_basis(v));
    return r;
}

void check_vertices(const Algebra& a, const std::vector<std::size_t>& verts) {
    for (auto v : verts)
        if (v >= a.num_vertices()) throw InvalidModule("vertex index out of range");
}

}  // namespace

Module projective_module(const AlgebraPtr& a, const std::vector<std::size_t>& verts) {
    check_vertices(*a, verts);
    const Field& f = a->field();
    auto L = lefts(*a);
    auto pos = left_positions(*a);
    auto off = offsets(verts, L);
    const std::size_t n = off.back();
    std::vector<Matrix> act;
    for (std::size_t c = 0; c < a->dim(); ++c) {
        Matrix r(f, n, n);
        for (std::size_t j = 0; j < verts.size(); ++j)
            for (std::size_t i = 0; i < L[verts[j]].size(); ++i) {
                const Vec& p = a->product(L[verts[j]][i], c);
                for (std::size_t k = 0; k < a->dim(); ++k)
                    if (p[k] != 0) r.at(off[j] + i, off[j] + pos[k]) = p[k];
            }
        act.push_back(std::move(r));
    }
    return Module(a, n, std::move(act));
}

Module injective_module(const AlgebraPtr& a, const std::vector<std::size_t>& verts) {
    check_vertices(*a, verts);
    const Field& f = a->field();
    auto R = rights(*a);
    auto off = offsets(verts, R);
    const std::size_t n = off.back();
    std::vector<Matrix> act;
    for (std::size_t c = 0; c < a->dim(); ++c) {
        Matrix r(f, n, n);
        // xi_b . c = sum_{b'} (c b')[b] xi_{b'}
        for (std::size_t j = 0; j < verts.size(); ++j) {
            const auto& rb = R[verts[j]];
            for (std::size_t i2 = 0; i2 < rb.size(); ++i2) {
                const Vec& p = a->product(c, rb[i2]);
                for (std::size_t i = 0; i < rb.size(); ++i)
                    if (p[rb[i]] != 0) r.at(off[j] + i, off[j] + i2) = p[rb[i]];
            }
        }
        act.push_back(std::move(r));
    }
    return Module(a, n, std::move(act));
}

Grid zero_grid(const Algebra& a, std::vector<std::size_t> from, std::vector<std::size_t> to) {
    Grid g;
    g.from = std::move(from);
    g.to = std::move(to);
    g.entries.assign(g.from.size() * g.to.size(), Vec(a.dim()));
    return g;
}

Grid compose(const Algebra& a, const Grid& c, const Grid& d) {
    if (c.to != d.from) throw ShapeError("grid composition: middle terms differ");
    Grid r = zero_grid(a, c.from, d.to);
    const Field& f = a.field();
    for (std::size_t i = 0; i < c.from.size(); ++i)
        for (std::size_t k = 0; k < d.to.size(); ++k)
            for (std::size_t j = 0; j < c.to.size(); ++j)
                if (!vec_is_zero(c.at(i, j)) && !vec_is_zero(d.at(j, k)))
                    r.at(i, k) = vec_add(f, r.at(i, k), a.multiply(d.at(j, k), c.at(i, j)));
    return r;
}

Grid transpose(const Grid& c) {
    Grid r;
    r.from = c.to;
    r.to = c.from;
    r.entries.resize(c.entries.size());
    for (std::size_t j = 0; j < c.from.size(); ++j)
        for (std::size_t k = 0; k < c.to.size(); ++k) r.at(k, j) = c.at(j, k);
    return r;
}

ModuleHom projective_grid_hom(const AlgebraPtr& a, const Grid& c) {
    Module P = projective_module(a, c.from), Q = projective_module(a, c.to);
    auto L = lefts(*a);
    auto pos = left_positions(*a);
    auto po = offsets(c.from, L), qo = offsets(c.to, L);
    Matrix m(a->field(), P.dim(), Q.dim());
    for (std::size_t j = 0; j < c.from.size(); ++j)
        for (std::size_t i = 0; i < L[c.from[j]].size(); ++i) {
            Vec b = a->basis_vector(L[c.from[j]][i]);
            for (std::size_t k = 0; k < c.to.size(); ++k) {
                if (vec_is_zero(c.at(j, k))) continue;
                Vec p = a->multiply(c.at(j, k), b);
                for (std::size_t t = 0; t < a->dim(); ++t)
                    if (p[t] != 0) {
                        if (a->left_vertex(t) != c.to[k]) throw ShapeError("grid entry not in e_w A e_v");
                        m.at(po[j] + i, qo[k] + pos[t]) = p[t];
                    }
            }
        }
    return {P, Q, m};
}

ModuleHom injective_grid_hom(const AlgebraPtr& a, const Grid& c) {
    Module I = injective_module(a, c.from), J = injective_module(a, c.to);
    auto R = rights(*a);
    auto io = offsets(c.from, R), jo = offsets(c.to, R);
    Matrix m(a->field(), I.dim(), J.dim());
    // (c.xi_b)(x) = xi_b(x c), x in A e_w
    for (std::size_t j = 0; j < c.from.size(); ++j) {
        const auto& rb = R[c.from[j]];
        for (std::size_t k = 0; k < c.to.size(); ++k) {
            if (vec_is_zero(c.at(j, k))) continue;
            const auto& rx = R[c.to[k]];
            for (std::size_t ix = 0; ix < rx.size(); ++ix) {
                Vec p = a->multiply(a->basis_vector(rx[ix]), c.at(j, k));
                for (std::size_t i = 0; i < rb.size(); ++i)
                    if (p[rb[i]] != 0) m.at(io[j] + i, jo[k] + ix) = p[rb[i]];
            }
        }
    }
    return {I, J, m};
}

Grid grid_of_projective_hom(const Algebra& a, const std::vector<std::size_t>& from,
                            const std::vector<std::size_t>& to, const Matrix& f) {
    auto L = lefts(a);
    auto pos = left_positions(a);
    auto po = offsets(from, L), qo = offsets(to, L);
    if (f.rows() != po.back() || f.cols() != qo.back()) throw ShapeError("hom does not match the projective sums");
    Grid g = zero_grid(a, from, to);
    for (std::size_t j = 0; j < from.size(); ++j) {
        std::size_t row = po[j] + pos[a.idempotent(from[j])];
        for (std::size_t k = 0; k < to.size(); ++k)
            for (std::size_t i = 0; i < L[to[k]].size(); ++i) g.at(j, k)[L[to[k]][i]] = f.at(row, qo[k] + i);
    }
    return g;
}

std::optional<std::string> Bimodule::validate() const {
    const Field& f = left_algebra->field();
    auto check = [&](const AbstractAlgebra& alg, const std::vector<Matrix>& act, bool is_left) -> std::optional<std::string> {
        Matrix unit(f, dim, dim);
        for (std::size_t b = 0; b < alg.dim(); ++b)
            if (alg.unit()[b] != 0) unit = unit + act[b].scaled(alg.unit()[b]);
        if (!unit.is_identity()) return std::string("unit does not act as identity");
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                Matrix prod(f, dim, dim);
                const Vec& p = alg.product(i, j);
                for (std::size_t k = 0; k < alg.dim(); ++k)
                    if (p[k] != 0) prod = prod + act[k].scaled(p[k]);
                Matrix lhs = is_left ? act[j] * act[i] : act[i] * act[j];
                if (lhs != prod) return std::string(is_left ? "left" : "right") + " action is not multiplicative";
            }
        return std::nullopt;
    };
    if (auto e = check(*left_algebra, left, true)) return e;
    if (auto e = check(*right_algebra, right, false)) return e;
    for (const auto& l : left)
        for (const auto& r : right)
            if (l * r != r * l) return "left and right actions do not commute";
    return std::nullopt;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
    Bimodule b{a, a, a->dim(), {}, {}};
    for (std::size_t i = 0; i < a->dim(); ++i) {
        b.left.push_back(a->left_mult(a->basis_vector(i)));
        b.right.push_back(a->right_mult(a->basis_vector(i)));
    }
    return b;
}

Bimodule dual_bimodule(const AlgebraPtr& a) {
    Bimodule b{a, a, a->dim(), {}, {}};
    for (std::size_t i = 0; i < a->dim(); ++i) {
        b.left.push_back(a->right_mult(a->basis_vector(i)).transpose());
        b.right.push_back(a->left_mult(a->basis_vector(i)).transpose());
    }
    return b;
}

Tensor tensor_over_algebra(const Module& m, const Bimodule& x) {
    if (!m.algebra()->same_as(*x.left_algebra)) throw AlgebraMismatch("tensor: module is not over the left algebra");
    const Algebra& a = *m.algebra();
    const Field& f = a.field();
    const std::size_t dm = m.dim(), dx = x.dim, n = dm * dx;
    std::vector<Vec> gens;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) gens.push_back(a.idempotent_vector(v));
    for (const auto& g : a.generators()) gens.push_back(g.element);
    std::vector<Vec> rel;
    for (const auto& g : gens) {
        Matrix ma = m.act(g);
        Matrix xa(f, dx, dx);
        for (std::size_t b = 0; b < a.dim(); ++b)
            if (g[b] != 0) xa = xa + x.left[b].scaled(g[b]);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dx; ++j) {
                Vec r(n);
                for (std::size_t i2 = 0; i2 < dm; ++i2)
                    if (ma.at(i, i2) != 0) r[i2 * dx + j] = f.add(r[i2 * dx + j], ma.at(i, i2));
                for (std::size_t j2 = 0; j2 < dx; ++j2)
                    if (xa.at(j, j2) != 0) r[i * dx + j2] = f.sub(r[i * dx + j2], xa.at(j, j2));
                if (!vec_is_zero(r)) rel.push_back(std::move(r));
            }
    }
    Subspace s = Subspace::span(Matrix::from_rows(f, n, rel));
    Matrix Q = s.complement();
    Matrix P = inverse(vstack(s.basis(), Q))->cols_slice(s.dim(), n);
    const AlgebraPtr& B = x.right_algebra;
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < B->dim(); ++b) {
        Matrix r(f, Q.rows(), Q.rows());
        for (std::size_t q = 0; q < Q.rows(); ++q) {
            Vec img(Q.rows());
            for (std::size_t idx = 0; idx < n; ++idx) {
                if (Q.at(q, idx) == 0) continue;
                std::size_t i = idx / dx, j = idx % dx;
                for (std::size_t j2 = 0; j2 < dx; ++j2)
                    if (x.right[b].at(j, j2) != 0) {
                        Scalar c = f.mul(Q.at(q, idx), x.right[b].at(j, j2));
                        for (std::size_t t = 0; t < Q.rows(); ++t)
                            if (P.at(i * dx + j2, t) != 0) img[t] = f.add(img[t], f.mul(c, P.at(i * dx + j2, t)));
                    }
            }
            for (std::size_t t = 0; t < Q.rows(); ++t) r.at(q, t) = img[t];
        }
        act.push_back(std::move(r));
    }
    return {Module(B, Q.rows(), std::move(act)), P, Q};
}

ModuleHom tensor_hom(const ModuleHom& fh, const Tensor& src, const Tensor& dst, const Bimodule& x) {
    const Field& f = fh.mat.field();
    const std::size_t dx = x.dim;
    Matrix r(f, src.module.dim(), dst.module.dim());
    for (std::size_t q = 0; q < src.section.rows(); ++q)
        for (std::size_t idx = 0; idx < src.section.cols(); ++idx) {
            const Scalar& s = src.section.at(q, idx);
            if (s == 0) continue;
            std::size_t i = idx / dx, j = idx % dx;
            for (std::size_t i2 = 0; i2 < fh.mat.cols(); ++i2) {
                if (fh.mat.at(i, i2) == 0) continue;
                Scalar c = f.mul(s, fh.mat.at(i, i2));
                for (std::size_t t = 0; t < r.cols(); ++t)
                    if (dst.proj.at(i2 * dx + j, t) != 0) r.at(q, t) = f.add(r.at(q, t), f.mul(c, dst.proj.at(i2 * dx + j, t)));
            }
        }
    return {src.module, dst.module, r};
}

}  // namespace aralg
