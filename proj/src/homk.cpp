#include <algorithm>

#include "aralg/complex.hpp"
#include "aralg/errors.hpp"

namespace aralg {

std::size_t KComplex::dim(int n) const {
    if (n < lo || n >= lo + static_cast<int>(dims.size())) return 0;
    return dims[n - lo];
}

Matrix KComplex::diff(int n) const {
    if (n >= lo && n + 1 < lo + static_cast<int>(dims.size())) return d[n - lo];
    return Matrix(field, dim(n), dim(n + 1));
}

KCohomology cohomology(const KComplex& c, int n) {
    Subspace z = kernel_basis(c.diff(n));
    Subspace b = row_space(c.diff(n - 1));
    if (b.ambient_dim() != z.ambient_dim()) b = Subspace(c.field, z.ambient_dim());
    return {z, b, b.complement_in(z)};
}

namespace {

int sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

TotalHom total_hom_complex(const Complex& x, const Complex& y, int nlo, int nhi) {
    const Field& f = x.field();
    TotalHom t{x, y, nlo, {}, KComplex{f, nlo, {}, {}}};
    for (int n = nlo; n <= nhi; ++n) {
        std::vector<TotalHom::Block> bl;
        std::size_t off = 0;
        if (!x.empty() && !y.empty()) {
            for (int p = std::max(x.lo(), y.lo() - n); p <= std::min(x.hi(), y.hi() - n); ++p) {
                HomSpace h = hom_space(x.at(p), y.at(p + n));
                std::size_t d = h.dim();
                bl.push_back({p, std::move(h), off});
                off += d;
            }
        }
        t.blocks.push_back(std::move(bl));
        t.complex.dims.push_back(off);
    }
    for (int n = nlo; n < nhi; ++n) {
        const auto& src = t.blocks[n - nlo];
        Matrix m(f, t.complex.dim(n), t.complex.dim(n + 1));
        const Scalar s = f.from_int(-sign(n));
        for (const auto& b : src) {
            for (std::size_t i = 0; i < b.hom.dim(); ++i) {
                const Matrix& h = b.hom.basis()[i];
                // (df)^p = f^p d_Y^{p+n} - (-1)^n d_X^{p-1} f^p, sitting in blocks p and p-1
                std::vector<std::pair<int, Matrix>> comps{{b.p, h * y.d(b.p + n)}, {b.p - 1, (x.d(b.p - 1) * h).scaled(s)}};
                Vec row = t.coordinates(n + 1, comps);
                for (std::size_t k = 0; k < row.size(); ++k) m.at(b.offset + i, k) = row[k];
            }
        }
        t.complex.d.push_back(std::move(m));
    }
    return t;
}

std::vector<std::pair<int, Matrix>> TotalHom::components(int n, const Vec& coords) const {
    std::vector<std::pair<int, Matrix>> out;
    for (const auto& b : blocks[n - nlo]) {
        Vec c(coords.begin() + b.offset, coords.begin() + b.offset + b.hom.dim());
        out.push_back({b.p, b.hom.combination(c).mat});
    }
    return out;
}

Vec TotalHom::coordinates(int n, const std::vector<std::pair<int, Matrix>>& comps) const {
    Vec out(complex.dim(n));
    const Field& f = complex.field;
    for (const auto& [p, m] : comps) {
        const TotalHom::Block* blk = nullptr;
        for (const auto& b : blocks[n - nlo])
            if (b.p == p) blk = &b;
        if (!blk) {
            if (!m.is_zero()) throw ShapeError("component outside the total Hom");
            continue;
        }
        Vec c = blk->hom.coordinates(m);
        for (std::size_t i = 0; i < c.size(); ++i) out[blk->offset + i] = f.add(out[blk->offset + i], c[i]);
    }
    return out;
}

ChainMap TotalHom::chain_map(const Vec& coords) const {
    auto comps = components(0, coords);
    if (comps.empty()) return ChainMap::zero(x, y);
    std::vector<Matrix> c;
    for (auto& [p, m] : comps) c.push_back(std::move(m));
    return make_chain_map(x, y, comps.front().first, std::move(c));
}

HomK homotopy_classes(const Complex& x, const Complex& y) {
    TotalHom t = total_hom_complex(x, y, -1, 1);
    KCohomology h = cohomology(t.complex, 0);
    HomK out;
    out.dim = h.dim();
    for (std::size_t i = 0; i < h.dim(); ++i) out.basis.push_back(t.chain_map(h.representatives.row_vec(i)));
    return out;
}

namespace {

// Module maps M -> N as flattened rows, from the raw equations on every basis element.
Matrix raw_hom_basis(const Module& m, const Module& n) {
    const Field& f = m.field();
    const std::size_t r = m.dim(), c = n.dim(), nb = m.algebra()->dim();
    if (r == 0 || c == 0) return Matrix(f, 0, r * c);
    // unknown X (r x c), equation A_b X - X B_b = 0 for every b; columns of the system are equations
    Matrix sys(f, r * c, nb * r * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            std::size_t u = i * c + j;
            for (std::size_t b = 0; b < nb; ++b) {
                const Matrix &A = m.action(b), &B = n.action(b);
                std::size_t base = b * r * c;
                for (std::size_t k = 0; k < r; ++k) sys.at(u, base + k * c + j) = f.add(sys.at(u, base + k * c + j), A.at(k, i));
                for (std::size_t l = 0; l < c; ++l) sys.at(u, base + i * c + l) = f.sub(sys.at(u, base + i * c + l), B.at(j, l));
            }
        }
    return kernel_basis(sys).basis();
}

}  // namespace

std::size_t homotopy_hom_dim(const Complex& x, const Complex& y) {
    const Field& f = x.field();
    if (x.empty() || y.empty()) return 0;
    int a = std::max(x.lo(), y.lo()) - 1, b = std::min(x.hi(), y.hi()) + 1;
    // raw degree-0 unknowns: all module maps X^p -> Y^p
    std::vector<Matrix> mb;
    std::vector<std::size_t> off{0};
    for (int p = a; p <= b; ++p) {
        mb.push_back(raw_hom_basis(x.at(p), y.at(p)));
        off.push_back(off.back() + mb.back().rows());
    }
    const std::size_t nu = off.back();
    // chain condition f^p d_Y^p - d_X^p f^{p+1} = 0 for p in a-1..b, expressed in the raw entries
    std::vector<std::size_t> eoff{0};
    for (int p = a - 1; p <= b; ++p) eoff.push_back(eoff.back() + x.dim(p) * y.dim(p + 1));
    Matrix sys(f, nu, eoff.back());
    auto flatmap = [&](int p, std::size_t i) {
        const Matrix& B = mb[p - a];
        return Matrix::unflatten(f, x.dim(p), y.dim(p), B.row(i));
    };
    for (int p = a; p <= b; ++p)
        for (std::size_t i = 0; i < mb[p - a].rows(); ++i) {
            Matrix h = flatmap(p, i);
            Vec r1 = (h * y.d(p)).flatten();
            Vec r0 = (x.d(p - 1) * h).flatten();
            std::size_t u = off[p - a] + i;
            for (std::size_t k = 0; k < r1.size(); ++k) sys.at(u, eoff[p - (a - 1)] + k) = r1[k];
            for (std::size_t k = 0; k < r0.size(); ++k)
                sys.at(u, eoff[p - 1 - (a - 1)] + k) = f.sub(sys.at(u, eoff[p - 1 - (a - 1)] + k), r0[k]);
        }
    Subspace chains = kernel_basis(sys);
    // null-homotopic ones: h d + d h for raw module maps h^p : X^p -> Y^{p-1}
    std::vector<Vec> nulls;
    for (int p = a; p <= b + 1; ++p) {
        Matrix hb = raw_hom_basis(x.at(p), y.at(p - 1));
        for (std::size_t i = 0; i < hb.rows(); ++i) {
            Matrix h = Matrix::unflatten(f, x.dim(p), y.dim(p - 1), hb.row(i));
            Vec v(nu);
            auto put = [&](int q, const Matrix& m) {
                if (q < a || q > b || m.is_zero()) return;
                Matrix basis = mb[q - a];
                auto sol = solve_factorization(Matrix::row_vector(f, m.flatten()), basis);
                if (!sol) throw Error("homotopy image is not a module map");
                for (std::size_t k = 0; k < basis.rows(); ++k) v[off[q - a] + k] = f.add(v[off[q - a] + k], sol->at(0, k));
            };
            put(p, h * y.d(p - 1));
            put(p - 1, x.d(p - 1) * h);
            nulls.push_back(std::move(v));
        }
    }
    std::size_t nd = nulls.empty() ? 0 : Matrix::from_rows(f, nu, nulls).rank();
    return chains.dim() - nd;
}

Complex total_tensor_complex(const Complex& x, const Bimodule& b) {
    if (x.empty()) return Complex::zero(b.right_algebra);
    std::vector<Tensor> ts;
    std::vector<Module> obj;
    for (int p = x.lo(); p <= x.hi(); ++p) {
        ts.push_back(tensor_over_algebra(x.at(p), b));
        obj.push_back(ts.back().module);
    }
    std::vector<Matrix> d;
    for (int p = x.lo(); p < x.hi(); ++p)
        d.push_back(tensor_hom(x.d_hom(p), ts[p - x.lo()], ts[p + 1 - x.lo()], b).mat);
    return Complex(b.right_algebra, x.lo(), std::move(obj), std::move(d));
}

}  // namespace aralg
