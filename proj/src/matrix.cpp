#include "aralg/matrix.hpp"

#include <sstream>

#include "aralg/errors.hpp"

namespace aralg {

namespace {

void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrices over different fields");
}

}  // namespace

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::row_vector(Field f, const Vec& v) { return from_rows(f, v.size(), {v}); }

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("product shape mismatch");
    check_field(*this, o);
    Matrix r(field_, rows_, o.cols_);
    const bool q = field_.is_rationals();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b == 0) continue;
                if (q)
                    r.at(i, j) += a * b;
                else
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, b));
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("sum shape mismatch");
    check_field(*this, o);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("difference shape mismatch");
    check_field(*this, o);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.neg(data_[i]);
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(data_[i], s);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::rows_slice(std::size_t b, std::size_t e) const { return block(b, 0, e - b, cols_); }
Matrix Matrix::cols_slice(std::size_t b, std::size_t e) const { return block(0, b, rows_, e - b); }

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
    return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
    return r;
}

Matrix Matrix::unflatten(Field f, std::size_t rows, std::size_t cols, std::span<const Scalar> v) {
    if (v.size() != rows * cols) throw ShapeError("unflatten size mismatch");
    Matrix m(f, rows, cols);
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& b) {
    if (r + b.rows_ > rows_ || c + b.cols_ > cols_) throw ShapeError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) at(r + i, c + j) = b.at(i, j);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const {
    if (r + nr > rows_ || c + nc > cols_) throw ShapeError("block out of range");
    Matrix m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r + i, c + j);
    return m;
}

std::vector<std::size_t> Matrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t i = row; i < rows_; ++i)
            if (at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        Scalar inv = field_.inv(at(row, col));
        for (std::size_t j = col; j < cols_; ++j) at(row, j) = field_.mul(at(row, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            Scalar f = at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                if (at(row, j) == 0) continue;
                at(i, j) = field_.sub(at(i, j), field_.mul(f, at(row, j)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix c = *this;
    return c.rref_in_place().size();
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Matrix vstack(Field f, std::size_t cols, const std::vector<Matrix>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw ShapeError("vstack column mismatch");
        n += p.rows();
    }
    Matrix r(f, n, cols);
    std::size_t at = 0;
    for (const auto& p : parts) {
        r.set_block(at, 0, p);
        at += p.rows();
    }
    return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

Vec vec_mul(const Field& f, std::span<const Scalar> v, const Matrix& m) {
    if (v.size() != m.rows()) throw ShapeError("vector/matrix shape mismatch");
    Vec r(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(k, j) != 0) r[j] = f.add(r[j], f.mul(v[k], m.at(k, j)));
    }
    return r;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& f, const Vec& a, const Scalar& s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], s);
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Subspace Subspace::span(const Matrix& m) {
    Matrix r = m;
    auto piv = r.rref_in_place();
    Subspace s;
    s.basis_ = r.rows_slice(0, piv.size());
    s.pivots_ = std::move(piv);
    return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_dim()) throw ShapeError("vector length differs from ambient dimension");
    Vec r(v.begin(), v.end());
    const Field& f = field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Scalar c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (basis_.at(i, j) != 0) r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
    }
    return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis().row(i))) return false;
    return true;
}

Vec Subspace::coordinates(std::span<const Scalar> v) const {
    Vec c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Matrix Subspace::complement() const {
    std::vector<bool> is_piv(ambient_dim(), false);
    for (auto p : pivots_) is_piv[p] = true;
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
        if (!is_piv[j]) {
            Vec e(ambient_dim());
            e[j] = 1;
            rows.push_back(std::move(e));
        }
    return Matrix::from_rows(field(), ambient_dim(), rows);
}

Matrix Subspace::complement_in(const Subspace& larger) const {
    std::vector<Vec> rows;
    Subspace cur = *this;
    for (std::size_t i = 0; i < larger.dim(); ++i) {
        auto r = larger.basis().row(i);
        if (cur.contains(r)) continue;
        rows.emplace_back(r.begin(), r.end());
        cur = cur.sum(span(Matrix::row_vector(field(), rows.back())));
    }
    return Matrix::from_rows(field(), ambient_dim(), rows);
}

Subspace Subspace::sum(const Subspace& o) const { return span(vstack(basis_, o.basis_)); }

Subspace Subspace::intersect(const Subspace& o) const {
    // u*A = v*B  <=>  (u, v) in left kernel of [A; -B]
    Matrix st = vstack(basis_, -o.basis_);
    Subspace k = kernel_basis(st);
    Matrix us = k.basis().cols_slice(0, dim());
    return span(us * basis_);
}

Subspace kernel_basis(const Matrix& m) {
    // Left kernel of m = right null space of m^T.
    const Field& f = m.field();
    Matrix t = m.transpose();
    auto piv = t.rref_in_place();
    std::vector<bool> is_piv(m.rows(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> rows;
    for (std::size_t free = 0; free < m.rows(); ++free) {
        if (is_piv[free]) continue;
        Vec v(m.rows());
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(t.at(i, free));
        rows.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_rows(f, m.rows(), rows));
}

Subspace row_space(const Matrix& m) { return Subspace::span(m); }
Subspace image(const Matrix& m) { return Subspace::span(m); }

std::optional<Matrix> solve_factorization(const Matrix& f, const Matrix& g) {
    if (f.cols() != g.cols()) throw ShapeError("solve_factorization: maps have different targets");
    const Field& fld = g.field();
    const std::size_t a = f.rows(), b = g.rows(), c = g.cols();
    // Solve g^T x = f^T column by column using one augmented elimination.
    Matrix aug(fld, c, b + a);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < b; ++j) aug.at(i, j) = g.at(j, i);
        for (std::size_t j = 0; j < a; ++j) aug.at(i, b + j) = f.at(j, i);
    }
    auto piv = aug.rref_in_place();
    Matrix h(fld, a, b);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] >= b) return std::nullopt;
        for (std::size_t j = 0; j < a; ++j) h.at(j, piv[i]) = aug.at(i, b + j);
    }
    return h;
}

std::tuple<Subspace, Matrix, Matrix> pullback_pair(const Matrix& f, const Matrix& g) {
    if (f.cols() != g.cols()) throw ShapeError("pullback_pair: maps have different targets");
    Subspace s = kernel_basis(vstack(f, -g));
    const Field& fld = f.field();
    const std::size_t a = f.rows(), b = g.rows();
    Matrix p1(fld, a + b, a), p2(fld, a + b, b);
    for (std::size_t i = 0; i < a; ++i) p1.at(i, i) = 1;
    for (std::size_t i = 0; i < b; ++i) p2.at(a + i, i) = 1;
    return {s, p1, p2};
}

Matrix left_inverse(const Matrix& m) {
    // r with m * r = I  (m has independent rows).
    auto r = solve_factorization(Matrix::identity(m.field(), m.rows()).transpose(), m.transpose());
    if (!r) throw ShapeError("left_inverse: rows are dependent");
    // r * m^T = I  =>  m * r^T = I
    return r->transpose();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    return solve_factorization(Matrix::identity(m.field(), m.rows()), m);
}

CoordinateMap::CoordinateMap(const Matrix& basis) : basis_(basis), n_(basis.rows()) {
    Matrix r = basis;
    auto piv = r.rref_in_place();
    if (piv.size() != n_) throw ShapeError("CoordinateMap: dependent basis");
    cols_ = piv;
    auto inv = inverse(basis.select_cols(cols_));
    inv_ = *inv;
}

Vec CoordinateMap::operator()(std::span<const Scalar> v) const {
    Vec sel(cols_.size());
    for (std::size_t i = 0; i < cols_.size(); ++i) sel[i] = v[cols_[i]];
    if (n_ == 0) return {};
    return vec_mul(basis_.field(), sel, inv_);
}

bool CoordinateMap::contains(std::span<const Scalar> v) const {
    Vec c = (*this)(v);
    Vec back = n_ ? vec_mul(basis_.field(), c, basis_) : Vec(v.size());
    return std::equal(back.begin(), back.end(), v.begin());
}

}  // namespace aralg
