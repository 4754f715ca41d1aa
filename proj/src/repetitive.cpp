#include "aralg/repetitive.hpp"

#include "aralg/errors.hpp"

namespace aralg {

std::size_t RepetitiveWindow::lambda_index(int i, std::size_t basis) const {
    return static_cast<std::size_t>(i - a) * base->dim() + basis;
}
std::size_t RepetitiveWindow::dual_index(int i, std::size_t basis) const {
    return static_cast<std::size_t>(b - a + 1) * base->dim() + static_cast<std::size_t>(i - a) * base->dim() + basis;
}
std::size_t RepetitiveWindow::vertex(int i, std::size_t v) const {
    return static_cast<std::size_t>(i - a) * base->num_vertices() + v;
}
int RepetitiveWindow::index_of_vertex(std::size_t w) const { return a + static_cast<int>(w / base->num_vertices()); }
bool RepetitiveWindow::interior_vertex(std::size_t w) const {
    int i = index_of_vertex(w);
    return a < i && i < b;
}

RepetitiveWindow build_truncation(const AlgebraPtr& base, int a, int b) {
    if (b < a) throw ShapeError("empty index interval");
    RepetitiveWindow w{base, a, b, nullptr};
    const Field& f = base->field();
    const std::size_t d = base->dim(), nv = base->num_vertices();
    const std::size_t copies = static_cast<std::size_t>(b - a + 1);
    const std::size_t dim = copies * d + (copies - 1) * d;
    Bimodule db = dual_bimodule(base);
    Algebra::Data data;
    data.field = f;
    data.dim = dim;
    data.table.assign(dim * dim, Vec(dim));
    data.unit = Vec(dim);
    data.labels.resize(dim);
    data.left_vertex.resize(dim);
    data.right_vertex.resize(dim);
    std::vector<Vec> rad;
    for (int i = a; i <= b; ++i) {
        for (std::size_t v = 0; v < nv; ++v) {
            data.vertex_names.push_back(base->vertex_names()[v] + "@" + std::to_string(i));
            data.idempotents.push_back(w.lambda_index(i, base->idempotent(v)));
        }
        for (std::size_t p = 0; p < d; ++p) {
            std::size_t x = w.lambda_index(i, p);
            data.labels[x] = base->labels()[p] + "@" + std::to_string(i);
            data.left_vertex[x] = w.vertex(i, base->left_vertex(p));
            data.right_vertex[x] = w.vertex(i, base->right_vertex(p));
            data.unit[x] = base->unit()[p];
            for (std::size_t q = 0; q < d; ++q) {
                Vec& out = data.table[x * dim + w.lambda_index(i, q)];
                const Vec& pq = base->product(p, q);
                for (std::size_t r = 0; r < d; ++r) out[w.lambda_index(i, r)] = pq[r];
            }
            if (i < b)
                for (std::size_t c = 0; c < d; ++c) {
                    // p . xi_c and xi_c . q
                    Vec& l = data.table[x * dim + w.dual_index(i, c)];
                    for (std::size_t r = 0; r < d; ++r) l[w.dual_index(i, r)] = db.left[p].at(c, r);
                    Vec& rr = data.table[w.dual_index(i, c) * dim + w.lambda_index(i + 1, p)];
                    for (std::size_t r = 0; r < d; ++r) rr[w.dual_index(i, r)] = db.right[p].at(c, r);
                }
        }
        for (std::size_t k = 0; k < base->radical().dim(); ++k) {
            Vec v(dim);
            for (std::size_t p = 0; p < d; ++p) v[w.lambda_index(i, p)] = base->radical().basis().at(k, p);
            rad.push_back(std::move(v));
        }
        if (i < b)
            for (std::size_t c = 0; c < d; ++c) {
                std::size_t x = w.dual_index(i, c);
                data.labels[x] = "D(" + base->labels()[c] + ")@" + std::to_string(i);
                data.left_vertex[x] = w.vertex(i, base->right_vertex(c));
                data.right_vertex[x] = w.vertex(i + 1, base->left_vertex(c));
                Vec v(dim);
                v[x] = 1;
                rad.push_back(std::move(v));
            }
    }
    data.radical = Matrix::from_rows(f, dim, rad);
    w.algebra = Algebra::create(std::move(data));
    return w;
}

std::size_t RepModule::dim() const {
    std::size_t s = 0;
    for (const auto& m : parts) s += m.dim();
    return s;
}

std::pair<int, int> RepModule::support() const {
    int lo = b + 1, hi = a - 1;
    for (int i = a; i <= b; ++i)
        if (at(i).dim()) lo = std::min(lo, i), hi = std::max(hi, i);
    return {lo, hi};
}

std::optional<std::string> RepModule::validate(const RepetitiveWindow& w) const {
    for (const auto& m : parts)
        if (auto e = m.validate()) return e;
    return to_module(*this, w).validate();
}

Module to_module(const RepModule& m, const RepetitiveWindow& w) {
    const Field& f = w.base->field();
    const std::size_t d = w.base->dim();
    std::vector<std::size_t> off{0};
    for (int i = w.a; i <= w.b; ++i) off.push_back(off.back() + m.at(i).dim());
    const std::size_t n = off.back();
    std::vector<Matrix> act(w.algebra->dim(), Matrix(f, n, n));
    for (int i = w.a; i <= w.b; ++i) {
        const Module& mi = m.at(i);
        if (mi.dim() == 0) continue;
        for (std::size_t p = 0; p < d; ++p) act[w.lambda_index(i, p)].set_block(off[i - w.a], off[i - w.a], mi.action(p));
        if (i < w.b && m.at(i + 1).dim())
            for (std::size_t c = 0; c < d; ++c) act[w.dual_index(i, c)].set_block(off[i - w.a], off[i + 1 - w.a], m.beta[i - w.a][c]);
    }
    return Module(w.algebra, n, std::move(act));
}

RepModule from_module(const Module& m, const RepetitiveWindow& w) {
    const Field& f = w.base->field();
    const std::size_t d = w.base->dim();
    RepModule r{w.base, w.a, w.b, {}, {}};
    std::vector<Matrix> rows;
    for (int i = w.a; i <= w.b; ++i) {
        Matrix e(f, m.dim(), m.dim());
        for (std::size_t v = 0; v < w.base->num_vertices(); ++v) e = e + m.action(w.lambda_index(i, w.base->idempotent(v)));
        rows.push_back(Subspace::span(e).basis());
    }
    for (int i = w.a; i <= w.b; ++i) {
        const Matrix& ri = rows[i - w.a];
        CoordinateMap cm(ri);
        std::vector<Matrix> act;
        for (std::size_t p = 0; p < d; ++p) {
            Matrix im = ri * m.action(w.lambda_index(i, p));
            std::vector<Vec> c;
            for (std::size_t k = 0; k < im.rows(); ++k) c.push_back(cm(im.row(k)));
            act.push_back(Matrix::from_rows(f, ri.rows(), c));
        }
        r.parts.push_back(ri.rows() ? Module(w.base, ri.rows(), std::move(act)) : Module::zero(w.base));
        std::vector<Matrix> bs;
        if (i < w.b) {
            const Matrix& rn = rows[i + 1 - w.a];
            CoordinateMap cn(rn);
            for (std::size_t c = 0; c < d; ++c) {
                Matrix im = ri * m.action(w.dual_index(i, c));
                std::vector<Vec> cc;
                for (std::size_t k = 0; k < im.rows(); ++k) cc.push_back(cn(im.row(k)));
                bs.push_back(Matrix::from_rows(f, rn.rows(), cc));
            }
        }
        r.beta.push_back(std::move(bs));
    }
    return r;
}

RepModule happel_embed(const Module& m, const RepetitiveWindow& w) {
    if (w.a > 0 || w.b < 0) throw IndexOutOfWindow("index 0 is outside the truncation");
    if (!m.algebra()->same_as(*w.base)) throw AlgebraMismatch("module over a different algebra");
    const Field& f = w.base->field();
    RepModule r{w.base, w.a, w.b, {}, {}};
    for (int i = w.a; i <= w.b; ++i) {
        r.parts.push_back(i == 0 ? m : Module::zero(w.base));
        std::vector<Matrix> bs;
        if (i < w.b)
            for (std::size_t c = 0; c < w.base->dim(); ++c) bs.push_back(Matrix(f, r.parts.back().dim(), i + 1 == 0 ? m.dim() : 0));
        r.beta.push_back(std::move(bs));
    }
    return r;
}

}  // namespace aralg
