#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "aralg/field.hpp"

namespace aralg {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over an exact field. Vectors are rows and maps act
// on the right: a map V -> W is a dim(V) x dim(W) matrix, and "f then g" is f*g.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix row_vector(Field f, const Vec& v);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
    const std::vector<Scalar>& data() const { return data_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix rows_slice(std::size_t begin, std::size_t end) const;
    Matrix cols_slice(std::size_t begin, std::size_t end) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    // Flattens to a 1 x (rows*cols) row vector.
    Vec flatten() const { return data_; }
    static Matrix unflatten(Field f, std::size_t rows, std::size_t cols, std::span<const Scalar> v);

    void set_block(std::size_t r, std::size_t c, const Matrix& b);
    Matrix block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const;

    std::size_t rank() const;
    // Reduced row echelon form; returns pivot column of each nonzero row.
    std::vector<std::size_t> rref_in_place();

    std::string str() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(Field f, std::size_t cols, const std::vector<Matrix>& parts);
Matrix block_diag(const Matrix& a, const Matrix& b);

Vec vec_mul(const Field& f, std::span<const Scalar> v, const Matrix& m);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Vec& a, const Scalar& s);
bool vec_is_zero(const Vec& v);

// A linear subspace of k^n, stored as a basis in reduced row echelon form.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}
    // Rows of m span the subspace; they need not be independent.
    static Subspace span(const Matrix& m);
    static Subspace full(Field f, std::size_t n) { return span(Matrix::identity(f, n)); }

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& o) const;
    // Coordinates of v (assumed to lie in the subspace) w.r.t. basis().
    Vec coordinates(std::span<const Scalar> v) const;
    // Echelon completion: rows extending this subspace to the whole space,
    // chosen among standard unit vectors.
    Matrix complement() const;
    // Unit-vector completion to the span of `larger`, chosen among larger's rows.
    Matrix complement_in(const Subspace& larger) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Rows spanning {v : v*m = 0}.
Subspace kernel_basis(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace image(const Matrix& m);

// h with h*g = f, if one exists. f: a x c, g: b x c.
std::optional<Matrix> solve_factorization(const Matrix& f, const Matrix& g);

// Pairs (u,v) in k^a + k^b with u*f = v*g, together with the two projections.
std::tuple<Subspace, Matrix, Matrix> pullback_pair(const Matrix& f, const Matrix& g);

// Right inverse restricted to the image: for an injective m (rows independent),
// returns r with m*r = id on rows.
Matrix left_inverse(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Coordinates with respect to a fixed family of vectors (rows of `basis`,
// assumed independent); precomputes pivot columns once.
class CoordinateMap {
public:
    CoordinateMap() = default;
    explicit CoordinateMap(const Matrix& basis);
    std::size_t size() const { return n_; }
    Vec operator()(std::span<const Scalar> v) const;
    // Exact membership test; coordinates are only meaningful when this holds.
    bool contains(std::span<const Scalar> v) const;

private:
    Matrix basis_;
    std::vector<std::size_t> cols_;
    Matrix inv_;
    std::size_t n_ = 0;
};

}  // namespace aralg
