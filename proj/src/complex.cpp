#include "aralg/complex.hpp"

#include <algorithm>

#include "aralg/errors.hpp"

namespace aralg {

Complex::Complex(AlgebraPtr a, int lo, std::vector<Module> objects, std::vector<Matrix> d)
    : alg_(std::move(a)), lo_(lo), obj_(std::move(objects)), d_(std::move(d)), zero_(Module::zero(alg_)) {
    if (obj_.empty()) {
        d_.clear();
        return;
    }
    if (d_.size() + 1 != obj_.size()) throw ShapeError("complex needs one differential between consecutive terms");
    for (std::size_t i = 0; i < d_.size(); ++i)
        if (d_[i].rows() != obj_[i].dim() || d_[i].cols() != obj_[i + 1].dim())
            throw ShapeError("differential has wrong shape");
    for (const auto& m : obj_)
        if (!m.algebra()->same_as(*alg_)) throw AlgebraMismatch("complex terms over different algebras");
}

Complex Complex::concentrated(const Module& m, int degree) { return Complex(m.algebra(), degree, {m}, {}); }
Complex Complex::zero(AlgebraPtr a) { return Complex(std::move(a), 0, {}, {}); }

const Module& Complex::at(int n) const {
    if (n < lo_ || n > hi()) return zero_;
    return obj_[n - lo_];
}

Matrix Complex::d(int n) const {
    if (n >= lo_ && n < hi()) return d_[n - lo_];
    return Matrix(field(), dim(n), dim(n + 1));
}

std::optional<std::string> Complex::validate() const {
    for (int n = lo_; n < hi(); ++n) {
        if (!d_hom(n).is_hom()) return "d^" + std::to_string(n) + " is not a module map";
        if (!(d(n) * d(n + 1)).is_zero()) return "d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0";
    }
    return std::nullopt;
}

Complex Complex::shift(int k) const {
    std::vector<Matrix> d = d_;
    if (k % 2 != 0)
        for (auto& m : d) m = -m;
    return Complex(alg_, lo_ - k, obj_, std::move(d));
}

Complex Complex::truncate_below(int L) const {
    if (empty() || L <= lo_) return *this;
    if (L > hi()) return zero(alg_);
    std::vector<Module> o(obj_.begin() + (L - lo_), obj_.end());
    std::vector<Matrix> d(d_.begin() + (L - lo_), d_.end());
    return Complex(alg_, L, std::move(o), std::move(d));
}

Complex Complex::truncate_above(int U) const {
    if (empty() || U >= hi()) return *this;
    if (U < lo_) return zero(alg_);
    std::vector<Module> o(obj_.begin(), obj_.begin() + (U - lo_ + 1));
    std::vector<Matrix> d(d_.begin(), d_.begin() + (U - lo_));
    return Complex(alg_, lo_, std::move(o), std::move(d));
}

Complex Complex::padded(int lo, int hi) const {
    std::vector<Module> o;
    std::vector<Matrix> d;
    for (int n = lo; n <= hi; ++n) {
        o.push_back(at(n));
        if (n < hi) d.push_back(this->d(n));
    }
    return Complex(alg_, lo, std::move(o), std::move(d));
}

Matrix ChainMap::at(int n) const {
    if (n >= lo && n < lo + static_cast<int>(comps.size())) return comps[n - lo];
    return Matrix(source.field(), source.dim(n), target.dim(n));
}

bool ChainMap::is_chain_map() const {
    int a = std::min({source.lo(), target.lo(), lo}) - 1;
    int b = std::max({source.hi(), target.hi(), lo + static_cast<int>(comps.size())}) + 1;
    for (int n = a; n <= b; ++n) {
        if (at(n) * target.d(n) != source.d(n) * at(n + 1)) return false;
        if (source.dim(n) && target.dim(n) && !ModuleHom(source.at(n), target.at(n), at(n)).is_hom()) return false;
    }
    return true;
}

ChainMap make_chain_map(const Complex& x, const Complex& y, int lo, std::vector<Matrix> comps) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
        int n = lo + static_cast<int>(i);
        if (comps[i].rows() != x.dim(n) || comps[i].cols() != y.dim(n)) throw ShapeError("chain map component has wrong shape");
    }
    return ChainMap{x, y, lo, std::move(comps)};
}

ChainMap ChainMap::then(const ChainMap& g) const {
    int a = std::min(lo, g.lo);
    int b = std::max(lo + static_cast<int>(comps.size()), g.lo + static_cast<int>(g.comps.size()));
    std::vector<Matrix> c;
    for (int n = a; n < b; ++n) c.push_back(at(n) * g.at(n));
    return make_chain_map(source, g.target, a, std::move(c));
}

ChainMap ChainMap::identity(const Complex& x) {
    std::vector<Matrix> c;
    for (int n = x.lo(); n <= x.hi(); ++n) c.push_back(Matrix::identity(x.field(), x.dim(n)));
    return make_chain_map(x, x, x.lo(), std::move(c));
}

ChainMap ChainMap::zero(const Complex& x, const Complex& y) { return make_chain_map(x, y, 0, {}); }

Matrix Homotopy::at(int n) const {
    if (n >= lo && n < lo + static_cast<int>(comps.size())) return comps[n - lo];
    return Matrix(map.source.field(), map.source.dim(n), map.target.dim(n - 1));
}

bool Homotopy::verifies() const {
    const Complex &x = map.source, &y = map.target;
    int a = std::min({x.lo(), y.lo(), lo, map.lo}) - 1;
    int b = std::max({x.hi(), y.hi(), lo + static_cast<int>(comps.size()), map.lo + static_cast<int>(map.comps.size())}) + 1;
    for (int n = a; n <= b; ++n)
        if (map.at(n) != at(n) * y.d(n - 1) + x.d(n) * at(n + 1)) return false;
    return true;
}

std::optional<Homotopy> find_null_homotopy(const ChainMap& phi) {
    const Complex &x = phi.source, &y = phi.target;
    const Field& f = x.field();
    int a = std::max(x.lo(), y.lo() + 1), b = std::min(x.hi(), y.hi() + 1);
    int ma = std::min(x.lo(), y.lo()), mb = std::max(x.hi(), y.hi());
    // target: all components of phi flattened over degrees ma..mb
    std::vector<std::size_t> off{0};
    for (int n = ma; n <= mb; ++n) off.push_back(off.back() + x.dim(n) * y.dim(n));
    const std::size_t total = off.back();
    Vec target(total);
    for (int n = ma; n <= mb; ++n) {
        Vec v = phi.at(n).flatten();
        std::copy(v.begin(), v.end(), target.begin() + off[n - ma]);
    }
    std::vector<HomSpace> spaces;
    std::vector<Vec> rows;
    for (int n = a; n <= b; ++n) {
        spaces.push_back(hom_space(x.at(n), y.at(n - 1)));
        for (const auto& h : spaces.back().basis()) {
            Vec r(total);
            Vec p = (h * y.d(n - 1)).flatten();
            std::copy(p.begin(), p.end(), r.begin() + off[n - ma]);
            if (n - 1 >= ma) {
                Vec q = (x.d(n - 1) * h).flatten();
                for (std::size_t i = 0; i < q.size(); ++i) r[off[n - 1 - ma] + i] = f.add(r[off[n - 1 - ma] + i], q[i]);
            }
            rows.push_back(std::move(r));
        }
    }
    Homotopy h{phi, a, {}};
    if (rows.empty()) {
        if (!vec_is_zero(target)) return std::nullopt;
        return h;
    }
    auto sol = solve_factorization(Matrix::row_vector(f, target), Matrix::from_rows(f, total, rows));
    if (!sol) return std::nullopt;
    std::size_t k = 0;
    for (int n = a; n <= b; ++n) {
        const HomSpace& hs = spaces[n - a];
        Vec c(hs.dim());
        for (std::size_t i = 0; i < hs.dim(); ++i) c[i] = sol->at(0, k++);
        h.comps.push_back(hs.combination(c).mat);
    }
    return h;
}

Cone cone(const ChainMap& phi) {
    const Complex &x = phi.source, &y = phi.target;
    const AlgebraPtr& a = x.algebra();
    const Field& f = a->field();
    int lo = std::min(x.lo() - 1, y.lo()), hi = std::max(x.hi() - 1, y.hi());
    if (x.empty()) lo = y.lo(), hi = y.hi();
    if (y.empty()) lo = x.lo() - 1, hi = x.hi() - 1;
    std::vector<Module> obj;
    std::vector<Matrix> d;
    for (int n = lo; n <= hi; ++n) obj.push_back(direct_sum(x.at(n + 1), y.at(n)));
    for (int n = lo; n < hi; ++n) {
        Matrix m(f, x.dim(n + 1) + y.dim(n), x.dim(n + 2) + y.dim(n + 1));
        m.set_block(0, 0, -x.d(n + 1));
        m.set_block(0, x.dim(n + 2), phi.at(n + 1));
        m.set_block(x.dim(n + 1), x.dim(n + 2), y.d(n));
        d.push_back(std::move(m));
    }
    Complex c(a, lo, std::move(obj), std::move(d));
    Complex x1 = x.shift(1);
    std::vector<Matrix> inc, proj;
    for (int n = lo; n <= hi; ++n) {
        Matrix i(f, y.dim(n), c.dim(n)), p(f, c.dim(n), x.dim(n + 1));
        for (std::size_t k = 0; k < y.dim(n); ++k) i.at(k, x.dim(n + 1) + k) = 1;
        for (std::size_t k = 0; k < x.dim(n + 1); ++k) p.at(k, k) = 1;
        inc.push_back(std::move(i));
        proj.push_back(std::move(p));
    }
    return {c, make_chain_map(y, c, lo, std::move(inc)), make_chain_map(c, x1, lo, std::move(proj))};
}

SubResult cycles(const Complex& x, int n) { return kernel(x.d_hom(n)); }

Module cohomology(const Complex& x, int n) {
    SubResult z = cycles(x, n);
    CoordinateMap cm(z.map.mat);
    Matrix img = x.d(n - 1);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < img.rows(); ++i) rows.push_back(cm(img.row(i)));
    return quotient_module(z.module, Subspace::span(Matrix::from_rows(x.field(), z.module.dim(), rows))).module;
}

Complex dual_complex(const Complex& x) {
    AlgebraPtr op = x.algebra()->opposite();
    if (x.empty()) return Complex::zero(op);
    std::vector<Module> obj;
    std::vector<Matrix> d;
    for (int n = -x.hi(); n <= -x.lo(); ++n) obj.push_back(dual_module(x.at(-n)));
    for (int n = -x.hi(); n < -x.lo(); ++n) d.push_back(x.d(-n - 1).transpose());
    return Complex(op, -x.hi(), std::move(obj), std::move(d));
}

Complex GridComplex::complex() const {
    std::vector<Module> obj;
    std::vector<Matrix> dm;
    for (const auto& t : terms) obj.push_back(injective ? injective_module(algebra, t) : projective_module(algebra, t));
    for (const auto& g : d) dm.push_back(injective ? injective_grid_hom(algebra, g).mat : projective_grid_hom(algebra, g).mat);
    return Complex(algebra, lo, std::move(obj), std::move(dm));
}

GridComplex GridComplex::nakayama() const {
    if (injective) throw InvalidModule("Nakayama translate expects a complex of projectives");
    GridComplex g = *this;
    g.injective = true;
    return g;
}

GridComplex GridComplex::dual() const {
    GridComplex g;
    g.algebra = algebra->opposite();
    g.injective = !injective;
    g.lo = -hi();
    for (int n = g.lo; n <= -lo; ++n) g.terms.push_back(terms[-n - lo]);
    for (int n = g.lo; n < -lo; ++n) g.d.push_back(transpose(d[-n - 1 - lo]));
    return g;
}

GridComplex GridComplex::truncate_below(int L) const {
    if (L <= lo) return *this;
    GridComplex g = *this;
    std::size_t cut = std::min<std::size_t>(L - lo, terms.size());
    g.terms.erase(g.terms.begin(), g.terms.begin() + cut);
    g.d.erase(g.d.begin(), g.d.begin() + std::min(cut, g.d.size()));
    g.lo = L;
    return g;
}

Resolution projective_resolution_complex(const Complex& x, int L) {
    const AlgebraPtr& a = x.algebra();
    const Field& f = a->field();
    GridComplex res{a, false, 0, {}, {}};
    if (x.empty() || L > x.hi()) {
        res.lo = L;
        Complex pc = res.complex();
        return {res, ChainMap::zero(pc, x)};
    }
    // Built from the top degree down; index 0 of these vectors is degree `top`.
    const int top = x.hi();
    std::vector<std::vector<std::size_t>> terms;
    std::vector<Matrix> dmat;  // d^n : P^n -> P^{n+1}
    std::vector<Matrix> qmat;
    std::vector<std::size_t> next_verts;
    Module next_p = Module::zero(a);
    Matrix next_d(f, 0, 0), next_q(f, 0, x.dim(top + 1));
    Module next_next = Module::zero(a);
    int lowest = top + 1;
    for (int n = top; n >= L; --n) {
        const Module& b = x.at(n);
        DirectSum c = direct_sum(std::vector<Module>{next_p, b});
        // d_C^n(p, b) = (-p d_P, p q + b d_B)
        Matrix dc(f, next_p.dim() + b.dim(), next_next.dim() + x.dim(n + 1));
        dc.set_block(0, 0, -next_d);
        dc.set_block(0, next_next.dim(), next_q);
        dc.set_block(next_p.dim(), next_next.dim(), x.d(n));
        SubResult z = kernel(ModuleHom(c.module, direct_sum(next_next, x.at(n + 1)), dc));
        CoordinateMap cm(z.map.mat);
        Matrix bd = x.d(n - 1);
        std::vector<Vec> srows;
        for (std::size_t i = 0; i < bd.rows(); ++i) {
            Vec v(c.module.dim());
            for (std::size_t j = 0; j < b.dim(); ++j) v[next_p.dim() + j] = bd.at(i, j);
            srows.push_back(cm(v));
        }
        Subspace s = Subspace::span(Matrix::from_rows(f, z.module.dim(), srows));
        SubResult q = quotient_module(z.module, s);
        ProjectiveCover cov = projective_cover(q.module);
        Matrix section = s.complement();  // quotient coordinates -> Z coordinates
        std::vector<std::size_t> lpos(a->dim());
        Module P = cov.P;
        Matrix toC(f, P.dim(), c.module.dim());
        std::size_t row = 0;
        for (std::size_t j = 0; j < cov.vertices.size(); ++j) {
            std::size_t v = cov.vertices[j];
            const auto& lb = a->left_basis(v);
            std::size_t gi = row + static_cast<std::size_t>(std::find(lb.begin(), lb.end(), a->idempotent(v)) - lb.begin());
            Vec gen = vec_mul(f, cov.epi.mat.row(gi), section);
            gen = vec_mul(f, gen, z.map.mat);
            gen = vec_mul(f, gen, c.module.action(a->idempotent(v)));
            for (auto bb : lb) {
                Vec img = vec_mul(f, gen, c.module.action(bb));
                for (std::size_t k = 0; k < img.size(); ++k) toC.at(row, k) = img[k];
                ++row;
            }
        }
        Matrix u = toC.cols_slice(0, next_p.dim());
        Matrix vq = toC.cols_slice(next_p.dim(), c.module.dim());
        terms.push_back(cov.vertices);
        dmat.push_back(-u);
        qmat.push_back(vq);
        lowest = n;
        next_next = next_p;
        next_p = P;
        next_d = -u;
        next_q = vq;
        if (cov.vertices.empty() && n < x.lo()) break;
    }
    // Reverse into increasing degree order.
    std::reverse(terms.begin(), terms.end());
    std::reverse(dmat.begin(), dmat.end());
    std::reverse(qmat.begin(), qmat.end());
    // drop the zero terms left below a finite resolution
    while (!terms.empty() && terms.front().empty() && lowest < x.lo()) {
        terms.erase(terms.begin());
        dmat.erase(dmat.begin());
        qmat.erase(qmat.begin());
        ++lowest;
    }
    res.lo = lowest;
    res.terms = terms;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) res.d.push_back(grid_of_projective_hom(*a, terms[i], terms[i + 1], dmat[i]));
    Complex pc = res.complex();
    return {res, make_chain_map(pc, x, lowest, std::move(qmat))};
}

Resolution injective_resolution_complex(const Complex& x, int U) {
    Resolution r = projective_resolution_complex(dual_complex(x), -U);
    GridComplex i = r.res.dual();
    Complex ic = i.complex();
    std::vector<Matrix> comps;
    for (int n = i.lo; n <= i.hi(); ++n) comps.push_back(r.map.at(-n).transpose());
    return {i, make_chain_map(x, ic, i.lo, std::move(comps))};
}

}  // namespace aralg
