#include <random>

#include "aralg/errors.hpp"
#include "aralg/homological.hpp"

namespace aralg {

namespace {

using Poly = std::vector<Scalar>;  // coefficients, lowest degree first

Scalar eval(const Field& f, const Poly& p, const Scalar& x) {
    Scalar r;
    for (std::size_t i = p.size(); i-- > 0;) r = f.add(f.mul(r, x), p[i]);
    return r;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n) d.push_back(n / i);
        }
    return d;
}

std::optional<Scalar> find_root(const Field& f, const Poly& p) {
    if (p[0] == 0) return Scalar(0);
    if (!f.is_rationals()) {
        if (f.characteristic() > 100003) return std::nullopt;
        for (long x = 1; x < f.characteristic(); ++x)
            if (eval(f, p, Scalar(x)) == 0) return Scalar(x);
        return std::nullopt;
    }
    mpz_class l = 1;
    for (const auto& c : p) l = lcm(l, mpz_class(c.get_den()));
    mpz_class a0 = mpz_class(p.front() * l), an = mpz_class(p.back() * l);
    const mpz_class cap = 1000000000;
    if (abs(a0) > cap || abs(an) > cap) return std::nullopt;
    for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an))
            for (int s : {1, -1}) {
                Scalar x(num * s, den);
                x.canonicalize();
                if (eval(f, p, x) == 0) return x;
            }
    return std::nullopt;
}

// Nontrivial idempotent of a semisimple split algebra (given as a quotient), if found.
std::optional<Vec> split_idempotent(const AbstractAlgebra& q) {
    const Field& f = q.field();
    const std::size_t n = q.dim();
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(q.basis_vector(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(vec_add(f, q.basis_vector(i), q.basis_vector(j)));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 64; ++t) {
        Vec v(n);
        for (auto& x : v) x = f.from_int(coef(rng));
        candidates.push_back(std::move(v));
    }
    for (const auto& c : candidates) {
        std::vector<Vec> powers{q.unit()};
        Poly minpoly;
        while (true) {
            Vec next = q.multiply(powers.back(), c);
            Matrix pm = Matrix::from_rows(f, n, powers);
            auto sol = solve_factorization(Matrix::row_vector(f, next), pm);
            if (sol) {
                for (std::size_t i = 0; i < powers.size(); ++i) minpoly.push_back(f.neg(sol->at(0, i)));
                minpoly.push_back(Scalar(1));
                break;
            }
            powers.push_back(std::move(next));
        }
        if (minpoly.size() <= 2) continue;
        auto root = find_root(f, minpoly);
        if (!root) continue;
        // g = minpoly / (x - root)
        const std::size_t deg = minpoly.size() - 1;
        Poly g(deg);
        Scalar carry;
        for (std::size_t i = deg; i-- > 0;) {
            carry = f.add(minpoly[i + 1], f.mul(carry, *root));
            g[i] = carry;
        }
        Scalar gl = eval(f, g, *root);
        if (gl == 0) continue;
        Vec e(n);
        for (std::size_t i = 0; i < g.size(); ++i) e = vec_add(f, e, vec_scale(f, powers[i], g[i]));
        e = vec_scale(f, e, f.inv(gl));
        if (q.multiply(e, e) == e && !vec_is_zero(e) && e != q.unit()) return e;
    }
    return std::nullopt;
}

Matrix projection_onto(const Matrix& e, const Subspace& img) {
    CoordinateMap cm(img.basis());
    Matrix p(e.field(), e.rows(), img.dim());
    for (std::size_t i = 0; i < e.rows(); ++i) {
        Vec c = cm(e.row(i));
        for (std::size_t j = 0; j < img.dim(); ++j) p.at(i, j) = c[j];
    }
    return p;
}

void decompose_into(const Module& m, const Matrix& inc, const Matrix& proj, std::vector<Summand>& out,
                    const Module& top) {
    if (m.dim() == 0) return;
    EndAlgebra e = end_algebra(m);
    if (e.is_local) {
        out.push_back({m, ModuleHom(m, top, inc), ModuleHom(top, m, proj)});
        return;
    }
    const Field& f = m.field();
    AbstractAlgebra q = e.algebra.quotient(e.radical);
    auto eq = split_idempotent(q);
    if (!eq) throw NotIndecomposable("could not split the endomorphism algebra");
    std::vector<bool> piv(e.hom.dim(), false);
    for (auto p : e.radical.pivots()) piv[p] = true;
    Vec lift(e.hom.dim());
    for (std::size_t c = 0, k = 0; c < e.hom.dim(); ++c)
        if (!piv[c]) lift[c] = (*eq)[k++];
    for (int it = 0; it < 64; ++it) {
        Vec sq = e.algebra.multiply(lift, lift);
        if (sq == lift) break;
        Vec cube = e.algebra.multiply(sq, lift);
        lift = vec_add(f, vec_scale(f, sq, Scalar(3)), vec_scale(f, cube, Scalar(-2)));
    }
    Matrix em = e.hom.combination(lift).mat;
    Matrix fm = Matrix::identity(f, m.dim()) - em;
    for (const Matrix* idem : {&em, &fm}) {
        Subspace img = Subspace::span(*idem);
        SubResult s = submodule(m, img);
        Matrix p = projection_onto(*idem, img);
        decompose_into(s.module, s.map.mat * inc, proj * p, out, top);
    }
}

}  // namespace

std::vector<Summand> decompose_module(const Module& m) {
    std::vector<Summand> out;
    const Field& f = m.field();
    decompose_into(m, Matrix::identity(f, m.dim()), Matrix::identity(f, m.dim()), out, m);
    return out;
}

std::optional<ModuleHom> find_isomorphism(const Module& m, const Module& n) {
    if (m.dim() != n.dim() || m.dimension_vector() != n.dimension_vector()) return std::nullopt;
    const Field& f = m.field();
    if (m.dim() == 0) return ModuleHom::zero(m, n);
    HomSpace h = hom_space(m, n);
    if (h.dim() == 0) return std::nullopt;
    HomSpace g = hom_space(n, m);
    EndAlgebra e = end_algebra(m);
    if (e.is_local) {
        for (const auto& fi : h.basis())
            for (const auto& gj : g.basis())
                if (!e.radical.contains(e.hom.coordinates(fi * gj))) return ModuleHom(m, n, fi);
        return std::nullopt;
    }
    for (const auto& fi : h.basis())
        if (fi.rank() == m.dim()) return ModuleHom(m, n, fi);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 64; ++t) {
        Vec c(h.dim());
        for (auto& x : c) x = f.from_int(coef(rng));
        ModuleHom cand = h.combination(c);
        if (cand.mat.rank() == m.dim()) return cand;
    }
    return std::nullopt;
}

bool is_isomorphic(const Module& m, const Module& n) { return find_isomorphism(m, n).has_value(); }

bool is_projective(const Module& m) { return projective_cover(m).P.dim() == m.dim(); }

bool is_injective(const Module& m) {
    if (m.dim() == 0) return true;
    return injective_presentation(m).iota.target.dim() == m.dim();
}

NaturalMapReport natural_map_sigma(const Module& n, const Module& m) {
    const AlgebraPtr& a = m.algebra();
    const Field& f = a->field();
    HomSpace dual = hom_space(m, regular_module(a));
    AlgebraPtr k = ground_algebra(f);
    Bimodule x{a, k, dual.dim(), {}, {Matrix::identity(f, dual.dim())}};
    for (std::size_t b = 0; b < a->dim(); ++b) {
        Matrix lm = a->left_mult(a->basis_vector(b));
        Matrix l(f, dual.dim(), dual.dim());
        for (std::size_t j = 0; j < dual.dim(); ++j) {
            Vec c = dual.coordinates(dual.basis()[j] * lm);
            for (std::size_t t = 0; t < dual.dim(); ++t) l.at(j, t) = c[t];
        }
        x.left.push_back(std::move(l));
    }
    Tensor t = tensor_over_algebra(n, x);
    HomSpace target = hom_space(m, n);
    std::vector<Vec> rows;
    for (std::size_t q = 0; q < t.section.rows(); ++q) {
        Matrix s(f, m.dim(), n.dim());
        for (std::size_t idx = 0; idx < t.section.cols(); ++idx) {
            const Scalar& c = t.section.at(q, idx);
            if (c == 0) continue;
            std::size_t i = idx / x.dim, j = idx % x.dim;
            const Matrix& phi = dual.basis()[j];
            for (std::size_t b = 0; b < a->dim(); ++b) {
                Vec nb = n.action(b).row_vec(i);
                for (std::size_t r = 0; r < m.dim(); ++r) {
                    if (phi.at(r, b) == 0) continue;
                    Scalar w = f.mul(c, phi.at(r, b));
                    for (std::size_t col = 0; col < n.dim(); ++col)
                        if (nb[col] != 0) s.at(r, col) = f.add(s.at(r, col), f.mul(w, nb[col]));
                }
            }
        }
        if (!target.contains(s)) throw Error("sigma image is not a module hom");
        rows.push_back(target.coordinates(s));
    }
    Matrix mat = Matrix::from_rows(f, target.dim(), rows);
    return {t.module.dim(), target.dim(), mat.rank()};
}

NaturalMapReport natural_map_lem2(const Module& m, const Module& n) {
    const AlgebraPtr& a = m.algebra();
    const Field& f = a->field();
    AlgebraPtr k = ground_algebra(f);
    Bimodule x{a, k, n.dim(), {}, {Matrix::identity(f, n.dim())}};
    for (std::size_t b = 0; b < a->dim(); ++b) x.left.push_back(n.action(b).transpose());
    Tensor t = tensor_over_algebra(m, x);
    HomSpace h = hom_space(m, n);
    Matrix mat(f, t.module.dim(), h.dim());
    for (std::size_t q = 0; q < t.section.rows(); ++q)
        for (std::size_t idx = 0; idx < t.section.cols(); ++idx) {
            const Scalar& c = t.section.at(q, idx);
            if (c == 0) continue;
            std::size_t i = idx / n.dim(), j = idx % n.dim();
            for (std::size_t l = 0; l < h.dim(); ++l)
                mat.at(q, l) = f.add(mat.at(q, l), f.mul(c, h.basis()[l].at(i, j)));
        }
    return {t.module.dim(), h.dim(), mat.rank()};
}

}  // namespace aralg
