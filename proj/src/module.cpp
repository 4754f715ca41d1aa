#include "aralg/module.hpp"

#include <sstream>

#include "aralg/errors.hpp"

namespace aralg {

namespace {

void same_algebra(const Module& a, const Module& b, const char* what) {
    if (!a.algebra() || !b.algebra() || !a.algebra()->same_as(*b.algebra()))
        throw AlgebraMismatch(std::string(what) + ": modules over different algebras");
}

}  // namespace

Module::Module(AlgebraPtr a, std::size_t dim, std::vector<Matrix> action) {
    if (!a) throw InvalidModule("module without algebra");
    if (action.size() != a->dim()) throw ShapeError("one action matrix per basis element expected");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim) throw ShapeError("action matrix has wrong shape");
        else if (m.field() != a->field()) throw FieldMismatch("action matrix over a different field");
    auto d = std::make_shared<Data>();
    d->alg = std::move(a);
    d->dim = dim;
    d->action = std::move(action);
    const Algebra& alg = *d->alg;
    const Field& f = alg.field();
    std::vector<Matrix> parts;
    d->offset.push_back(0);
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        Subspace s = Subspace::span(d->action[alg.idempotent(v)]);
        parts.push_back(s.basis());
        d->offset.push_back(d->offset.back() + s.dim());
    }
    d->T = vstack(f, dim, parts);
    auto inv = inverse(d->T);
    if (!inv) throw InvalidModule("idempotent actions do not decompose the module");
    d->Tinv = *inv;
    for (const auto& g : alg.generators()) {
        Matrix act(f, dim, dim);
        for (std::size_t b = 0; b < alg.dim(); ++b)
            if (g.element[b] != 0) act = act + d->action[b].scaled(g.element[b]);
        Matrix ad = d->T * act * d->Tinv;
        std::size_t ou = d->offset[g.left], nu = d->offset[g.left + 1] - ou;
        std::size_t ow = d->offset[g.right], nw = d->offset[g.right + 1] - ow;
        d->gen_blocks.push_back(ad.block(ou, ow, nu, nw));
    }
    d_ = std::move(d);
}

Module Module::zero(AlgebraPtr a) {
    std::vector<Matrix> act(a->dim(), Matrix(a->field(), 0, 0));
    return Module(std::move(a), 0, std::move(act));
}

Module Module::from_representation(AlgebraPtr a, const std::vector<std::size_t>& dims,
                                   const std::vector<Matrix>& arrows) {
    if (!a->quiver()) throw InvalidModule("algebra has no quiver presentation");
    const Quiver& q = *a->quiver();
    if (dims.size() != q.vertices.size() || arrows.size() != q.arrows.size())
        throw ShapeError("representation does not match the quiver");
    std::vector<std::size_t> off{0};
    for (auto d : dims) off.push_back(off.back() + d);
    const std::size_t n = off.back();
    const Field& f = a->field();
    auto embed = [&](const Matrix& m, std::size_t s, std::size_t t) {
        Matrix r(f, n, n);
        r.set_block(off[s], off[t], m);
        return r;
    };
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const auto& ar = q.arrows[i];
        if (arrows[i].rows() != dims[ar.source] || arrows[i].cols() != dims[ar.target])
            throw ShapeError("arrow matrix for " + ar.name + " has wrong shape");
    }
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < a->dim(); ++b) {
        const std::string& label = a->labels()[b];
        std::size_t s = a->left_vertex(b);
        if (label.rfind("e_", 0) == 0 && a->idempotent(s) == b) {
            act.push_back(embed(Matrix::identity(f, dims[s]), s, s));
            continue;
        }
        Matrix m = Matrix::identity(f, dims[s]);
        std::stringstream ss(label);
        std::string name;
        while (std::getline(ss, name, '*')) m = m * arrows[q.arrow_index(name)];
        act.push_back(embed(m, s, a->right_vertex(b)));
    }
    return Module(std::move(a), n, std::move(act));
}

Matrix Module::act(const Vec& a) const {
    const Field& f = field();
    Matrix r(f, dim(), dim());
    for (std::size_t b = 0; b < a.size(); ++b)
        if (a[b] != 0) r = r + d_->action[b].scaled(a[b]);
    return r;
}

Vec Module::act(const Vec& m, const Vec& a) const { return vec_mul(field(), m, act(a)); }

std::vector<std::size_t> Module::dimension_vector() const {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i + 1 < d_->offset.size(); ++i) v.push_back(vertex_dim(i));
    return v;
}

std::optional<std::string> Module::validate() const {
    const Algebra& a = *algebra();
    if (act(a.unit()) != Matrix::identity(field(), dim())) return "unit does not act as the identity";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (action(i) * action(j) != act(a.product(i, j)))
                return "action is not multiplicative at (" + a.labels()[i] + "," + a.labels()[j] + ")";
    return std::nullopt;
}

ModuleHom::ModuleHom(Module s, Module t, Matrix m) : source(std::move(s)), target(std::move(t)), mat(std::move(m)) {
    if (mat.rows() != source.dim() || mat.cols() != target.dim()) throw ShapeError("hom matrix has wrong shape");
}

ModuleHom ModuleHom::identity(const Module& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

ModuleHom ModuleHom::zero(const Module& s, const Module& t) { return {s, t, Matrix(s.field(), s.dim(), t.dim())}; }

ModuleHom ModuleHom::then(const ModuleHom& g) const {
    if (target.dim() != g.source.dim()) throw ShapeError("composition of incompatible homs");
    return {source, g.target, mat * g.mat};
}

ModuleHom ModuleHom::operator+(const ModuleHom& o) const { return {source, target, mat + o.mat}; }
ModuleHom ModuleHom::operator-(const ModuleHom& o) const { return {source, target, mat - o.mat}; }
ModuleHom ModuleHom::scaled(const Scalar& s) const { return {source, target, mat.scaled(s)}; }

bool ModuleHom::is_hom() const {
    const Algebra& a = *source.algebra();
    for (std::size_t b = 0; b < a.dim(); ++b)
        if (source.action(b) * mat != mat * target.action(b)) return false;
    return true;
}

HomSpace::HomSpace(Module m, Module n, std::vector<Matrix> basis)
    : m_(std::move(m)), n_(std::move(n)), basis_(std::move(basis)), coords_(flat()) {}

Matrix HomSpace::flat() const {
    std::vector<Vec> rows;
    for (const auto& b : basis_) rows.push_back(b.flatten());
    return Matrix::from_rows(m_.field(), m_.dim() * n_.dim(), rows);
}

ModuleHom HomSpace::combination(const Vec& c) const {
    Matrix r(m_.field(), m_.dim(), n_.dim());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (c[i] != 0) r = r + basis_[i].scaled(c[i]);
    return {m_, n_, r};
}

Vec HomSpace::coordinates(const Matrix& f) const { return coords_(f.flatten()); }
bool HomSpace::contains(const Matrix& f) const { return coords_.contains(f.flatten()); }

HomSpace hom_space(const Module& m, const Module& n) {
    same_algebra(m, n, "hom_space");
    const Algebra& a = *m.algebra();
    const Field& f = a.field();
    const std::size_t nv = a.num_vertices();
    // Unknowns: blocks X_v : M e_v -> N e_v in adapted coordinates.
    std::vector<std::size_t> base{0};
    for (std::size_t v = 0; v < nv; ++v) base.push_back(base.back() + m.vertex_dim(v) * n.vertex_dim(v));
    const std::size_t unknowns = base.back();
    std::vector<Matrix> sols;
    if (unknowns > 0) {
        std::size_t neq = 0;
        for (const auto& g : a.generators()) neq += m.vertex_dim(g.left) * n.vertex_dim(g.right);
        Matrix eq(f, unknowns, neq);
        std::size_t col = 0;
        for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
            const auto& g = a.generators()[gi];
            const Matrix& mg = m.generator_block(gi);
            const Matrix& ng = n.generator_block(gi);
            const std::size_t mu = m.vertex_dim(g.left), mw = m.vertex_dim(g.right);
            const std::size_t nu = n.vertex_dim(g.left), nw = n.vertex_dim(g.right);
            // (M_g X_w - X_u N_g)[i][l]
            for (std::size_t i = 0; i < mu; ++i)
                for (std::size_t l = 0; l < nw; ++l, ++col) {
                    for (std::size_t k = 0; k < mw; ++k)
                        if (mg.at(i, k) != 0) {
                            std::size_t x = base[g.right] + k * nw + l;
                            eq.at(x, col) = f.add(eq.at(x, col), mg.at(i, k));
                        }
                    for (std::size_t k = 0; k < nu; ++k)
                        if (ng.at(k, l) != 0) {
                            std::size_t x = base[g.left] + i * nu + k;
                            eq.at(x, col) = f.sub(eq.at(x, col), ng.at(k, l));
                        }
                }
        }
        Subspace sol = kernel_basis(eq);
        for (std::size_t s = 0; s < sol.dim(); ++s) {
            Matrix x(f, m.dim(), n.dim());
            for (std::size_t v = 0; v < nv; ++v) {
                const std::size_t mv = m.vertex_dim(v), nvd = n.vertex_dim(v);
                for (std::size_t i = 0; i < mv; ++i)
                    for (std::size_t j = 0; j < nvd; ++j)
                        x.at(m.vertex_offset(v) + i, n.vertex_offset(v) + j) = sol.basis().at(s, base[v] + i * nvd + j);
            }
            sols.push_back(m.adapted_inverse() * x * n.adapted_basis());
        }
    }
    return HomSpace(m, n, std::move(sols));
}

}  // namespace aralg
