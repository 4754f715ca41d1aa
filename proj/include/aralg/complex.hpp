#pragma once

#include <optional>
#include <vector>

#include "aralg/homological.hpp"

namespace aralg {

// Cochain complex of right modules, nonzero at most in degrees lo..hi.
class Complex {
public:
    Complex() = default;
    // d[i] : objects[i] -> objects[i+1], i.e. d^{lo+i}.
    Complex(AlgebraPtr a, int lo, std::vector<Module> objects, std::vector<Matrix> d);
    static Complex concentrated(const Module& m, int degree = 0);
    static Complex zero(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return alg_; }
    const Field& field() const { return alg_->field(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(obj_.size()) - 1; }
    bool empty() const { return obj_.empty(); }
    const Module& at(int n) const;
    std::size_t dim(int n) const { return at(n).dim(); }
    // d^n : X^n -> X^{n+1}, zero outside the stored range.
    Matrix d(int n) const;
    ModuleHom d_hom(int n) const { return {at(n), at(n + 1), d(n)}; }

    std::optional<std::string> validate() const;
    // X[k]^n = X^{n+k}, differential multiplied by (-1)^k.
    Complex shift(int k) const;
    // Brutal truncations: degrees >= L (a subcomplex) and <= U (a quotient).
    Complex truncate_below(int L) const;
    Complex truncate_above(int U) const;
    // Same complex with explicitly stored degrees lo..hi (zeros padded).
    Complex padded(int lo, int hi) const;

private:
    AlgebraPtr alg_;
    int lo_ = 0;
    std::vector<Module> obj_;
    std::vector<Matrix> d_;
    Module zero_;
};

struct ChainMap {
    Complex source;
    Complex target;
    int lo = 0;
    std::vector<Matrix> comps;  // degree lo + i

    Matrix at(int n) const;
    bool is_chain_map() const;
    ChainMap then(const ChainMap& g) const;
    static ChainMap identity(const Complex& x);
    static ChainMap zero(const Complex& x, const Complex& y);
};
ChainMap make_chain_map(const Complex& x, const Complex& y, int lo, std::vector<Matrix> comps);

// h^n : X^n -> Y^{n-1} witnessing phi = h d + d h (row convention:
// phi^n = h^n d_Y^{n-1} + d_X^n h^{n+1}).
struct Homotopy {
    ChainMap map;
    int lo = 0;
    std::vector<Matrix> comps;
    Matrix at(int n) const;
    bool verifies() const;
};
// A null-homotopy of phi, when one exists.
std::optional<Homotopy> find_null_homotopy(const ChainMap& phi);

// cone(phi)^n = X^{n+1} + Y^n, d(x, y) = (-x d_X, x phi + y d_Y).
struct Cone {
    Complex complex;
    ChainMap inclusion;   // Y -> cone
    ChainMap projection;  // cone -> X[1]
};
Cone cone(const ChainMap& phi);

SubResult cycles(const Complex& x, int n);
// (DX)^n = D(X^{-n}) over the opposite algebra.
Complex dual_complex(const Complex& x);
Module cohomology(const Complex& x, int n);

// Complexes of sums of indecomposable projectives or injectives given by grids.
struct GridComplex {
    AlgebraPtr algebra;
    bool injective = false;
    int lo = 0;
    std::vector<std::vector<std::size_t>> terms;  // degree lo + i
    std::vector<Grid> d;                          // d[i] : terms[i] -> terms[i+1]

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    Complex complex() const;
    // - (x) DA on projectives; the identity on grids.
    GridComplex nakayama() const;
    // Degreewise dual, over the opposite algebra (degrees negated).
    GridComplex dual() const;
    GridComplex truncate_below(int L) const;
};

struct Resolution {
    GridComplex res;
    ChainMap map;  // p -> x for projective, x -> i for injective
};
// p x -> x, computed in degrees >= L. Quasi-isomorphism in degrees > L.
Resolution projective_resolution_complex(const Complex& x, int L);
// x -> i x, computed in degrees <= U.
Resolution injective_resolution_complex(const Complex& x, int U);

// Finite complexes of vector spaces.
struct KComplex {
    Field field;
    int lo = 0;
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;  // d[i] : lo+i -> lo+i+1
    std::size_t dim(int n) const;
    Matrix diff(int n) const;
};
struct KCohomology {
    Subspace cycles;
    Subspace boundaries;
    Matrix representatives;  // rows spanning a complement of boundaries in cycles
    std::size_t dim() const { return representatives.rows(); }
};
KCohomology cohomology(const KComplex& c, int n);

// Total Hom, degrees nlo..nhi: degree n is the product over p of Hom(X^p, Y^{p+n}).
struct TotalHom {
    Complex x, y;
    int nlo = 0;
    struct Block {
        int p;
        HomSpace hom;
        std::size_t offset;
    };
    std::vector<std::vector<Block>> blocks;  // per degree
    KComplex complex;

    // Components of a degree-n element given by coordinates.
    std::vector<std::pair<int, Matrix>> components(int n, const Vec& coords) const;
    ChainMap chain_map(const Vec& coords) const;  // n = 0
    Vec coordinates(int n, const std::vector<std::pair<int, Matrix>>& comps) const;
};
TotalHom total_hom_complex(const Complex& x, const Complex& y, int nlo, int nhi);

struct HomK {
    std::size_t dim = 0;
    std::vector<ChainMap> basis;  // representatives
};
// H^0 of the total Hom, with representatives.
HomK homotopy_classes(const Complex& x, const Complex& y);
// Independent route: chain maps of k-linear module maps modulo null-homotopic ones.
std::size_t homotopy_hom_dim(const Complex& x, const Complex& y);

// Degreewise X^p (x)_A B^q with d(x (x) y) = dx (x) y + (-1)^p x (x) dy; B concentrated
// data is given as a complex over the right algebra.
Complex total_tensor_complex(const Complex& x, const Bimodule& b);

// Window of degrees with a guard band; quoted invariants hold on [lo+guard, hi-guard].
struct Window {
    int lo = -6;
    int hi = 6;
    int guard = 2;
    int inner_lo() const { return lo + guard; }
    int inner_hi() const { return hi - guard; }
};

// A compact object of K(Inj A), stored through a bounded complex of finitely
// generated modules (its image in D^b(mod A)); the object itself is i(model).
struct CompactObject {
    Complex model;
    static CompactObject of_module(const Module& m, int degree = 0) { return {Complex::concentrated(m, degree)}; }
};
struct CompactWitness {
    bool bounded_below = false;
    bool finitely_generated = true;
    bool bounded_cohomology = false;
    int lowest = 0;
    int highest = 0;
    bool ok() const { return bounded_below && finitely_generated && bounded_cohomology; }
};
CompactWitness check_compact(const CompactObject& x);

// i(model) restricted to degrees <= U.
Complex injective_model(const CompactObject& x, int U);
// t X = p(model) (x) DA in degrees >= L, as a complex of injectives.
GridComplex nakayama_translate(const CompactObject& x, int L);

// Hom_K(iX, iY), Hom_K(iY, tX), Hom_K(tX, tY); throw WindowTooSmall when the
// window does not contain the degrees these need.
HomK hom_k(const CompactObject& x, const CompactObject& y, const Window& w);
HomK hom_k_to_translate(const CompactObject& y, const CompactObject& x, const Window& w);
HomK hom_k_translates(const CompactObject& x, const CompactObject& y, const Window& w);

// tr : Hom(P, P (x) DA) -> k for a sum of projectives P, via the dual basis.
Scalar serre_trace(const Algebra& a, const std::vector<std::size_t>& p, const Matrix& h);

struct SerrePairing {
    HomK left;   // Hom_K(iX, iY), sources truncated p(model)
    HomK right;  // Hom_K(iY, tX)
    Matrix matrix;
    bool vanishes_on_boundaries = false;
    bool nondegenerate() const;
};
SerrePairing serre_pairing(const CompactObject& x, const CompactObject& y, const Window& w);

// Degreewise Hom_A(DA, Y^n) with the induced differential.
Complex hom_from_dual(const Complex& y);

// Cone of p M -> i M over a self-injective algebra, degrees in the window.
struct CompleteResolution {
    Complex complex;
    Resolution proj;
    Resolution inj;
};
CompleteResolution complete_resolution(const Module& m, const Window& w);
bool is_self_injective(const AlgebraPtr& a);

}  // namespace aralg
