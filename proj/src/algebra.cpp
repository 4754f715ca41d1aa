#include "aralg/algebra.hpp"

#include <algorithm>
#include <map>

#include "aralg/errors.hpp"

namespace aralg {

AbstractAlgebra::AbstractAlgebra(Field f, std::size_t dim, std::vector<Vec> table, Vec unit)
    : field_(f), dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
    if (table_.size() != dim_ * dim_) throw ShapeError("structure constant table has wrong size");
    for (const auto& v : table_)
        if (v.size() != dim_) throw ShapeError("structure constant vector has wrong length");
    if (unit_.size() != dim_) throw ShapeError("unit has wrong length");
}

Vec AbstractAlgebra::basis_vector(std::size_t i) const {
    Vec v(dim_);
    v[i] = 1;
    return v;
}

Vec AbstractAlgebra::multiply(const Vec& x, const Vec& y) const {
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Scalar c = field_.mul(x[i], y[j]);
            const Vec& p = product(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                if (p[k] != 0) r[k] = field_.add(r[k], field_.mul(c, p[k]));
        }
    }
    return r;
}

Matrix AbstractAlgebra::left_mult(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec r = multiply(x, basis_vector(i));
        for (std::size_t k = 0; k < dim_; ++k) m.at(i, k) = r[k];
    }
    return m;
}

Matrix AbstractAlgebra::right_mult(const Vec& y) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec r = multiply(basis_vector(i), y);
        for (std::size_t k = 0; k < dim_; ++k) m.at(i, k) = r[k];
    }
    return m;
}

std::optional<std::string> AbstractAlgebra::check_axioms() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec b = basis_vector(i);
        if (multiply(unit_, b) != b || multiply(b, unit_) != b)
            return "unit is not a two-sided identity on basis element " + std::to_string(i);
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const Vec& ij = product(i, j);
            for (std::size_t l = 0; l < dim_; ++l) {
                Vec lhs = multiply(ij, basis_vector(l));
                Vec rhs = multiply(basis_vector(i), product(j, l));
                if (lhs != rhs)
                    return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(l) + ")";
            }
        }
    return std::nullopt;
}

AbstractAlgebra AbstractAlgebra::quotient(const Subspace& ideal) const {
    Matrix comp = ideal.complement();
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < comp.rows(); ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (comp.at(r, c) != 0) keep.push_back(c);
    auto reduce = [&](Vec v) {
        for (std::size_t i = 0; i < ideal.dim(); ++i) {
            Scalar c = v[ideal.pivots()[i]];
            if (c == 0) continue;
            for (std::size_t k = 0; k < dim_; ++k)
                if (ideal.basis().at(i, k) != 0) v[k] = field_.sub(v[k], field_.mul(c, ideal.basis().at(i, k)));
        }
        Vec out(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) out[i] = v[keep[i]];
        return out;
    };
    const std::size_t n = keep.size();
    std::vector<Vec> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = reduce(product(keep[i], keep[j]));
    return AbstractAlgebra(field_, n, std::move(table), reduce(unit_));
}

AbstractAlgebra AbstractAlgebra::opposite() const {
    std::vector<Vec> table(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) table[i * dim_ + j] = product(j, i);
    return AbstractAlgebra(field_, dim_, std::move(table), unit_);
}

Subspace radical_of_endo_algebra(const AbstractAlgebra& e) {
    const Field& f = e.field();
    const std::size_t n = e.dim();
    if (!f.is_rationals() && static_cast<std::size_t>(f.characteristic()) <= n)
        throw UnsupportedCharacteristic("radical over " + f.descriptor() + " of an algebra of dimension " +
                                        std::to_string(n) + " needs characteristic 0 or p > dimension");
    // t_k = tr(L_{b_k})
    Vec t(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t[k] = f.add(t[k], e.product(k, l)[l]);
    Matrix form(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s;
            const Vec& p = e.product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (p[k] != 0) s = f.add(s, f.mul(p[k], t[k]));
            form.at(i, j) = s;
        }
    return kernel_basis(form);
}

bool is_two_sided_ideal(const AbstractAlgebra& a, const Subspace& ideal) {
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
        Vec x = ideal.basis().row_vec(i);
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec b = a.basis_vector(j);
            if (!ideal.contains(a.multiply(x, b)) || !ideal.contains(a.multiply(b, x))) return false;
        }
    }
    return true;
}

std::optional<std::size_t> nilpotency_index(const AbstractAlgebra& a, const Subspace& ideal) {
    Subspace power = ideal;
    std::size_t n = 1;
    while (power.dim() > 0) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < power.dim(); ++i)
            for (std::size_t j = 0; j < ideal.dim(); ++j)
                rows.push_back(a.multiply(power.basis().row_vec(i), ideal.basis().row_vec(j)));
        Subspace next = Subspace::span(Matrix::from_rows(a.field(), a.dim(), rows));
        if (next.dim() == power.dim()) return std::nullopt;
        power = std::move(next);
        ++n;
    }
    return n;
}

std::size_t Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
    throw ParseError("unknown vertex '" + name + "'");
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    throw ParseError("unknown arrow '" + name + "'");
}

bool Quiver::has_oriented_cycle() const {
    // Kahn's algorithm.
    std::vector<std::size_t> indeg(vertices.size(), 0);
    for (const auto& a : arrows) ++indeg[a.target];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& a : arrows)
            if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
    }
    return seen != vertices.size();
}

Quiver Quiver::reversed() const {
    Quiver q = *this;
    for (auto& a : q.arrows) std::swap(a.source, a.target);
    return q;
}

AlgebraPtr Algebra::create(Data d) {
    std::shared_ptr<Algebra> a(new Algebra());
    static_cast<AbstractAlgebra&>(*a) = AbstractAlgebra(d.field, d.dim, std::move(d.table), std::move(d.unit));
    a->labels_ = std::move(d.labels);
    a->vertex_names_ = std::move(d.vertex_names);
    a->idempotents_ = std::move(d.idempotents);
    a->left_ = std::move(d.left_vertex);
    a->right_ = std::move(d.right_vertex);
    a->radical_ = Subspace::span(d.radical.rows() ? d.radical : Matrix(d.field, 0, d.dim));
    if (a->labels_.size() != a->dim_ || a->left_.size() != a->dim_ || a->right_.size() != a->dim_)
        throw InvalidAlgebra("per-basis metadata has wrong length");
    if (a->vertex_names_.size() != a->idempotents_.size()) throw InvalidAlgebra("vertex names mismatch");
    a->finish();
    a->self_ = a;
    return a;
}

void Algebra::finish() {
    const std::size_t nv = idempotents_.size();
    left_basis_.assign(nv, {});
    right_basis_.assign(nv, {});
    for (std::size_t b = 0; b < dim_; ++b) {
        if (left_[b] >= nv || right_[b] >= nv) throw InvalidAlgebra("vertex index out of range");
        left_basis_[left_[b]].push_back(b);
        right_basis_[right_[b]].push_back(b);
    }
    generators_.clear();
    std::vector<Vec> sq;
    for (std::size_t i = 0; i < radical_.dim(); ++i)
        for (std::size_t j = 0; j < radical_.dim(); ++j)
            sq.push_back(multiply(radical_.basis().row_vec(i), radical_.basis().row_vec(j)));
    Subspace rad2 = Subspace::span(Matrix::from_rows(field_, dim_, sq));
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t w = 0; w < nv; ++w) {
            Vec eu = idempotent_vector(u), ew = idempotent_vector(w);
            auto sandwich = [&](const Subspace& s) {
                std::vector<Vec> rows;
                for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(multiply(multiply(eu, s.basis().row_vec(i)), ew));
                return Subspace::span(Matrix::from_rows(field_, dim_, rows));
            };
            Subspace r_uw = sandwich(radical_), r2_uw = sandwich(rad2);
            Matrix comp = r2_uw.complement_in(r_uw);
            for (std::size_t i = 0; i < comp.rows(); ++i) generators_.push_back({comp.row_vec(i), u, w});
        }
}

AlgebraPtr Algebra::opposite() const {
    std::lock_guard<std::mutex> lock(op_mutex_);
    if (op_strong_) return op_strong_;
    if (auto p = op_weak_.lock()) return p;
    Data d = data();
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) d.table[i * dim_ + j] = product(j, i);
    std::swap(d.left_vertex, d.right_vertex);
    std::shared_ptr<Algebra> op(new Algebra());
    static_cast<AbstractAlgebra&>(*op) = AbstractAlgebra(d.field, d.dim, std::move(d.table), std::move(d.unit));
    op->labels_ = std::move(d.labels);
    op->vertex_names_ = std::move(d.vertex_names);
    op->idempotents_ = std::move(d.idempotents);
    op->left_ = std::move(d.left_vertex);
    op->right_ = std::move(d.right_vertex);
    op->radical_ = radical_;
    op->opposite_flag_ = !opposite_flag_;
    if (quiver_) op->quiver_ = quiver_->reversed();
    op->finish();
    op->self_ = op;
    op->op_weak_ = self_;
    op_strong_ = op;
    return op;
}

Algebra::Data Algebra::data() const {
    Data d;
    d.field = field_;
    d.dim = dim_;
    d.table = table_;
    d.unit = unit_;
    d.labels = labels_;
    d.vertex_names = vertex_names_;
    d.idempotents = idempotents_;
    d.left_vertex = left_;
    d.right_vertex = right_;
    d.radical = radical_.basis();
    return d;
}

bool Algebra::same_as(const Algebra& o) const {
    return this == &o || (field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_ &&
                          idempotents_ == o.idempotents_ && left_ == o.left_ && right_ == o.right_);
}

std::optional<std::string> Algebra::validate() const {
    if (auto e = check_axioms()) return e;
    const std::size_t nv = num_vertices();
    Vec sum(dim_);
    for (std::size_t u = 0; u < nv; ++u) {
        Vec eu = idempotent_vector(u);
        sum = vec_add(field_, sum, eu);
        for (std::size_t w = 0; w < nv; ++w) {
            Vec p = multiply(eu, idempotent_vector(w));
            if (p != (u == w ? eu : Vec(dim_))) return "idempotents are not orthogonal idempotents";
        }
    }
    if (sum != unit_) return "idempotents do not sum to the unit";
    for (std::size_t b = 0; b < dim_; ++b) {
        Vec v = basis_vector(b);
        if (multiply(multiply(idempotent_vector(left_[b]), v), idempotent_vector(right_[b])) != v)
            return "basis element " + labels_[b] + " is not sandwiched by its idempotents";
    }
    if (!is_two_sided_ideal(*this, radical_)) return "radical is not a two-sided ideal";
    if (!nilpotency_index(*this, radical_)) return "radical is not nilpotent";
    // A / rad must be the product of copies of k, one per vertex.
    if (dim_ - radical_.dim() != nv) return "algebra is not basic: dim A/rad differs from vertex count";
    for (std::size_t u = 0; u < nv; ++u)
        if (radical_.contains(idempotent_vector(u))) return "an idempotent lies in the radical";
    return std::nullopt;
}

namespace {

struct Path {
    std::size_t start = 0;
    std::vector<std::size_t> arrows;
    auto key() const { return std::make_pair(start, arrows); }
};

std::size_t path_target(const Quiver& q, const Path& p) {
    return p.arrows.empty() ? p.start : q.arrows[p.arrows.back()].target;
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t len) {
    std::vector<Path> cur;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) cur.push_back({v, {}});
    for (std::size_t l = 0; l < len; ++l) {
        std::vector<Path> next;
        for (const auto& p : cur)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == path_target(q, p)) {
                    Path n = p;
                    n.arrows.push_back(a);
                    next.push_back(std::move(n));
                }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end(), [](const Path& a, const Path& b) { return a.arrows < b.arrows; });
    return cur;
}

void check_relation(const Quiver& q, const Relation& r) {
    if (r.terms.empty()) throw InadmissibleRelation("empty relation");
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& t : r.terms) {
        if (t.arrows.size() < 2) throw InadmissibleRelation("relation term of length < 2");
        for (auto a : t.arrows)
            if (a >= q.arrows.size()) throw InadmissibleRelation("relation uses an unknown arrow");
        for (std::size_t i = 0; i + 1 < t.arrows.size(); ++i)
            if (q.arrows[t.arrows[i]].target != q.arrows[t.arrows[i + 1]].source)
                throw InadmissibleRelation("relation term is not a composable path");
        std::pair<std::size_t, std::size_t> e{q.arrows[t.arrows.front()].source, q.arrows[t.arrows.back()].target};
        if (ends && *ends != e) throw InadmissibleRelation("relation terms have different endpoints");
        ends = e;
    }
}

// Smallest L such that every path of length L lies in the ideal; homogeneous relations only.
std::size_t find_nilpotency_bound(Field f, const Quiver& q, const std::vector<Relation>& rels) {
    for (const auto& r : rels)
        for (const auto& t : r.terms)
            if (t.arrows.size() != r.terms.front().arrows.size())
                throw InfiniteDimensional("quiver has an oriented cycle and relations are not homogeneous; "
                                          "a nilpotency bound is required");
    constexpr std::size_t cap = 40;
    std::vector<Vec> prev;  // ideal component of the previous length, in that length's path basis
    std::vector<Path> prev_paths;
    for (std::size_t len = 1; len <= cap; ++len) {
        auto ps = paths_of_length(q, len);
        if (ps.empty()) return len;
        std::map<std::vector<std::size_t>, std::size_t> idx;
        for (std::size_t i = 0; i < ps.size(); ++i) idx[ps[i].arrows] = i;
        std::vector<Vec> rows;
        for (const auto& r : rels)
            if (r.terms.front().arrows.size() == len) {
                Vec v(ps.size());
                for (const auto& t : r.terms) v[idx.at(t.arrows)] = f.add(v[idx.at(t.arrows)], f.normalize(t.coefficient));
                rows.push_back(std::move(v));
            }
        for (const auto& g : prev)
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                Vec left(ps.size()), right(ps.size());
                bool lnz = false, rnz = false;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    if (g[i] == 0) continue;
                    const Path& p = prev_paths[i];
                    if (q.arrows[a].target == p.start) {
                        std::vector<std::size_t> w{a};
                        w.insert(w.end(), p.arrows.begin(), p.arrows.end());
                        left[idx.at(w)] = g[i];
                        lnz = true;
                    }
                    if (q.arrows[a].source == path_target(q, p)) {
                        auto w = p.arrows;
                        w.push_back(a);
                        right[idx.at(w)] = g[i];
                        rnz = true;
                    }
                }
                if (lnz) rows.push_back(std::move(left));
                if (rnz) rows.push_back(std::move(right));
            }
        Subspace s = Subspace::span(Matrix::from_rows(f, ps.size(), rows));
        if (s.dim() == ps.size()) return len;
        prev.clear();
        for (std::size_t i = 0; i < s.dim(); ++i) prev.push_back(s.basis().row_vec(i));
        prev_paths = std::move(ps);
    }
    throw InfiniteDimensional("no nilpotency bound found up to path length " + std::to_string(cap));
}

}  // namespace

AlgebraPtr build_path_algebra(Field f, const Quiver& q, const std::vector<Relation>& rels,
                              std::optional<std::size_t> nilpotency_bound) {
    for (const auto& a : q.arrows)
        if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
            throw ParseError("arrow " + a.name + " has an undeclared endpoint");
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < q.vertices.size(); ++j)
            if (q.vertices[i] == q.vertices[j]) throw ParseError("duplicate vertex " + q.vertices[i]);
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
            if (q.arrows[i].name == q.arrows[j].name) throw ParseError("duplicate arrow " + q.arrows[i].name);
    for (const auto& r : rels) check_relation(q, r);
    if (nilpotency_bound && *nilpotency_bound < 2)
        throw InadmissibleRelation("nilpotency bound must be at least 2");

    std::size_t bound;
    if (nilpotency_bound)
        bound = *nilpotency_bound;
    else if (!q.has_oriented_cycle())
        bound = q.vertices.size();
    else
        bound = find_nilpotency_bound(f, q, rels);
    if (!q.has_oriented_cycle()) bound = std::min(bound, q.vertices.size());
    bound = std::max<std::size_t>(bound, 1);

    // All paths of length < bound, ordered: trivial, then by length, then lexicographically.
    std::vector<Path> paths;
    for (std::size_t len = 0; len < bound; ++len) {
        auto ps = paths_of_length(q, len);
        if (len == 0) std::sort(ps.begin(), ps.end(), [](const Path& a, const Path& b) { return a.start < b.start; });
        paths.insert(paths.end(), ps.begin(), ps.end());
    }
    const std::size_t np = paths.size();
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    for (std::size_t i = 0; i < np; ++i) index[paths[i].key()] = i;

    auto concat = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
        const Path &p = paths[i], &r = paths[j];
        if (path_target(q, p) != r.start) return std::nullopt;
        if (p.arrows.size() + r.arrows.size() >= bound) return std::nullopt;
        Path c{p.start, p.arrows};
        c.arrows.insert(c.arrows.end(), r.arrows.begin(), r.arrows.end());
        return index.at(c.key());
    };

    // Two-sided ideal: saturate the relation span under multiplication by arrows.
    // Columns are stored reversed so echelon pivots land on the largest paths.
    auto col = [&](std::size_t path) { return np - 1 - path; };
    std::vector<Vec> gens;
    for (const auto& r : rels) {
        Vec v(np);
        for (const auto& t : r.terms) {
            if (t.arrows.size() >= bound) continue;
            Path p{q.arrows[t.arrows.front()].source, t.arrows};
            std::size_t c = col(index.at(p.key()));
            v[c] = f.add(v[c], f.normalize(t.coefficient));
        }
        if (!vec_is_zero(v)) gens.push_back(std::move(v));
    }
    std::vector<std::size_t> arrow_paths;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Path p{q.arrows[a].source, {a}};
        auto it = index.find(p.key());
        if (it != index.end()) arrow_paths.push_back(it->second);
    }
    Subspace ideal = Subspace::span(Matrix::from_rows(f, np, gens));
    while (true) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < ideal.dim(); ++i) rows.push_back(ideal.basis().row_vec(i));
        for (std::size_t i = 0; i < ideal.dim(); ++i)
            for (auto ap : arrow_paths) {
                Vec l(np), r(np);
                for (std::size_t c = 0; c < np; ++c) {
                    const Scalar& x = ideal.basis().at(i, c);
                    if (x == 0) continue;
                    std::size_t p = np - 1 - c;
                    if (auto lp = concat(ap, p)) l[col(*lp)] = f.add(l[col(*lp)], x);
                    if (auto rp = concat(p, ap)) r[col(*rp)] = f.add(r[col(*rp)], x);
                }
                rows.push_back(std::move(l));
                rows.push_back(std::move(r));
            }
        Subspace next = Subspace::span(Matrix::from_rows(f, np, rows));
        if (next.dim() == ideal.dim()) break;
        ideal = std::move(next);
    }

    std::vector<bool> pivot_path(np, false);
    for (auto c : ideal.pivots()) pivot_path[np - 1 - c] = true;
    std::vector<std::size_t> normal;
    for (std::size_t p = 0; p < np; ++p)
        if (!pivot_path[p]) normal.push_back(p);
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        if (pivot_path[v]) throw InadmissibleRelation("relations kill a trivial path");
    const std::size_t dim = normal.size();
    std::vector<std::size_t> pos(np, dim);
    for (std::size_t i = 0; i < dim; ++i) pos[normal[i]] = i;

    // Reduce a single path to normal-form coordinates.
    std::vector<std::size_t> pivot_row(np, np);
    for (std::size_t i = 0; i < ideal.dim(); ++i) pivot_row[np - 1 - ideal.pivots()[i]] = i;
    auto reduce_path = [&](std::size_t p) {
        Vec out(dim);
        if (!pivot_path[p]) {
            out[pos[p]] = 1;
            return out;
        }
        std::size_t row = pivot_row[p];
        for (std::size_t c = 0; c < np; ++c) {
            std::size_t other = np - 1 - c;
            if (other == p) continue;
            const Scalar& x = ideal.basis().at(row, c);
            if (x != 0) out[pos[other]] = f.neg(x);
        }
        return out;
    };

    Algebra::Data d;
    d.field = f;
    d.dim = dim;
    d.table.assign(dim * dim, Vec(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (auto c = concat(normal[i], normal[j])) d.table[i * dim + j] = reduce_path(*c);
    d.unit.assign(dim, Scalar(0));
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        d.unit[pos[v]] = 1;
        d.idempotents.push_back(pos[v]);
    }
    d.vertex_names = q.vertices;
    std::vector<Vec> rad;
    for (std::size_t i = 0; i < dim; ++i) {
        const Path& p = paths[normal[i]];
        d.left_vertex.push_back(p.start);
        d.right_vertex.push_back(path_target(q, p));
        if (p.arrows.empty()) {
            d.labels.push_back("e_" + q.vertices[p.start]);
        } else {
            std::string s;
            for (std::size_t k = 0; k < p.arrows.size(); ++k) s += (k ? "*" : "") + q.arrows[p.arrows[k]].name;
            d.labels.push_back(s);
            Vec e(dim);
            e[i] = 1;
            rad.push_back(std::move(e));
        }
    }
    d.radical = Matrix::from_rows(f, dim, rad);
    AlgebraPtr a = Algebra::create(std::move(d));
    const_cast<Algebra&>(*a).set_quiver(q);
    return a;
}

}  // namespace aralg

namespace aralg {
AlgebraPtr ground_algebra(Field f) {
    Quiver q;
    q.vertices = {"k"};
    return build_path_algebra(f, q, {});
}
}  // namespace aralg
