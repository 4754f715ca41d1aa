#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aralg/algebra.hpp"

namespace aralg {

// Right module over an Algebra: one dim x dim matrix per basis element, acting
// on row vectors (m.a = m * action(a)). Cheap to copy.
class Module {
public:
    Module() = default;
    Module(AlgebraPtr a, std::size_t dim, std::vector<Matrix> action);
    // Quiver representation: vector spaces per vertex, one matrix per arrow
    // (source dim x target dim). Needs the algebra's quiver.
    static Module from_representation(AlgebraPtr a, const std::vector<std::size_t>& dims,
                                      const std::vector<Matrix>& arrows);
    static Module zero(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return d_->alg; }
    const Field& field() const { return d_->alg->field(); }
    std::size_t dim() const { return d_ ? d_->dim : 0; }
    const Matrix& action(std::size_t b) const { return d_->action[b]; }
    const std::vector<Matrix>& actions() const { return d_->action; }
    // Action of an arbitrary algebra element.
    Matrix act(const Vec& a) const;
    Vec act(const Vec& m, const Vec& a) const;

    // Adapted basis: rows of T are a basis of M with the M e_v blocks consecutive.
    const Matrix& adapted_basis() const { return d_->T; }
    const Matrix& adapted_inverse() const { return d_->Tinv; }
    std::size_t vertex_offset(std::size_t v) const { return d_->offset[v]; }
    std::size_t vertex_dim(std::size_t v) const { return d_->offset[v + 1] - d_->offset[v]; }
    // Action of generator g in adapted coordinates, as block M e_left -> M e_right.
    const Matrix& generator_block(std::size_t g) const { return d_->gen_blocks[g]; }
    std::vector<std::size_t> dimension_vector() const;

    std::optional<std::string> validate() const;
    bool is_zero() const { return dim() == 0; }

private:
    struct Data {
        AlgebraPtr alg;
        std::size_t dim = 0;
        std::vector<Matrix> action;
        Matrix T, Tinv;
        std::vector<std::size_t> offset;
        std::vector<Matrix> gen_blocks;
    };
    std::shared_ptr<const Data> d_;
};

struct ModuleHom {
    Module source;
    Module target;
    Matrix mat;  // dim(source) x dim(target)

    ModuleHom() = default;
    ModuleHom(Module s, Module t, Matrix m);
    static ModuleHom identity(const Module& m);
    static ModuleHom zero(const Module& s, const Module& t);

    // this first, then g.
    ModuleHom then(const ModuleHom& g) const;
    ModuleHom operator+(const ModuleHom& o) const;
    ModuleHom operator-(const ModuleHom& o) const;
    ModuleHom scaled(const Scalar& s) const;
    bool is_zero() const { return mat.is_zero(); }
    bool is_hom() const;
};

// Basis of Hom(M,N) together with coordinates.
class HomSpace {
public:
    HomSpace() = default;
    HomSpace(Module m, Module n, std::vector<Matrix> basis);
    const Module& source() const { return m_; }
    const Module& target() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }
    ModuleHom hom(std::size_t i) const { return {m_, n_, basis_[i]}; }
    ModuleHom combination(const Vec& c) const;
    Vec coordinates(const Matrix& f) const;
    bool contains(const Matrix& f) const;
    // Basis matrices flattened as rows.
    Matrix flat() const;

private:
    Module m_, n_;
    std::vector<Matrix> basis_;
    CoordinateMap coords_;
};

HomSpace hom_space(const Module& m, const Module& n);

struct SubResult {
    Module module;
    ModuleHom map;  // inclusion for submodules, projection for quotients
};

// Smallest submodule containing the given rows.
Subspace generated_submodule(const Module& m, const Matrix& rows);
SubResult submodule(const Module& m, const Subspace& s);
SubResult quotient_module(const Module& m, const Subspace& s);
SubResult kernel(const ModuleHom& f);
SubResult cokernel(const ModuleHom& f);
SubResult image(const ModuleHom& f);
// M.rad
Subspace radical_submodule(const Module& m);

struct DirectSum {
    Module module;
    std::vector<ModuleHom> inclusions;
    std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);
Module direct_sum(const Module& a, const Module& b);
// [f_1 ... f_n] from the direct sum of sources into a common target.
ModuleHom hom_from_sum(const DirectSum& s, const std::vector<ModuleHom>& maps);
ModuleHom hom_into_sum(const DirectSum& s, const std::vector<ModuleHom>& maps);

// D M over the opposite algebra; D f = transpose.
Module dual_module(const Module& m);
ModuleHom dual_hom(const ModuleHom& f);
Module regular_module(const AlgebraPtr& a);

// Sums of indecomposable projectives e_v A and injectives D(A e_v).
Module projective_module(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);
Module injective_module(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);

// Maps between such sums given by algebra elements c_{jk} in e_{w_k} A e_{v_j}:
// on projectives the j-th generator goes to sum_k g_k c_{jk}; on injectives the
// j-th summand maps by xi |-> c_{jk}.xi with (c.xi)(x) = xi(x c).
struct Grid {
    std::vector<std::size_t> from;  // v_j
    std::vector<std::size_t> to;    // w_k
    std::vector<Vec> entries;       // (j,k) at j*to.size()+k
    const Vec& at(std::size_t j, std::size_t k) const { return entries[j * to.size() + k]; }
    Vec& at(std::size_t j, std::size_t k) { return entries[j * to.size() + k]; }
};
Grid zero_grid(const Algebra& a, std::vector<std::size_t> from, std::vector<std::size_t> to);
// "c then d"
Grid compose(const Algebra& a, const Grid& c, const Grid& d);
Grid transpose(const Grid& c);
ModuleHom projective_grid_hom(const AlgebraPtr& a, const Grid& c);
ModuleHom injective_grid_hom(const AlgebraPtr& a, const Grid& c);
// Reads the grid of a map between projective sums built by projective_module.
Grid grid_of_projective_hom(const Algebra& a, const std::vector<std::size_t>& from,
                            const std::vector<std::size_t>& to, const Matrix& f);

// A-B bimodule; actions act on row vectors: a.x = x * left(a), x.b = x * right(b).
struct Bimodule {
    AlgebraPtr left_algebra;
    AlgebraPtr right_algebra;
    std::size_t dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    std::optional<std::string> validate() const;
};
Bimodule regular_bimodule(const AlgebraPtr& a);
// D A with (xi.a)(x) = xi(ax) and (a.xi)(x) = xi(xa).
Bimodule dual_bimodule(const AlgebraPtr& a);

struct Tensor {
    Module module;
    Matrix proj;     // M (x)_k X -> M (x)_A X, index i*dim(X)+j
    Matrix section;  // representatives
};
Tensor tensor_over_algebra(const Module& m, const Bimodule& x);
ModuleHom tensor_hom(const ModuleHom& f, const Tensor& src, const Tensor& dst, const Bimodule& x);

}  // namespace aralg
