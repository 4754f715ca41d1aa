#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "aralg/matrix.hpp"

namespace aralg {

// Finite-dimensional associative unital algebra given by structure constants:
// b_i * b_j = sum_k table[i*dim+j][k] b_k.
class AbstractAlgebra {
public:
    AbstractAlgebra() = default;
    AbstractAlgebra(Field f, std::size_t dim, std::vector<Vec> table, Vec unit);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    const std::vector<Vec>& table() const { return table_; }
    const Vec& unit() const { return unit_; }

    Vec multiply(const Vec& x, const Vec& y) const;
    // Matrix of y |-> x*y on row vectors (rows indexed by basis b_i: b_i |-> x*b_i... see .cpp).
    Matrix left_mult(const Vec& x) const;
    // Matrix of v |-> v*y, i.e. the right regular action of y.
    Matrix right_mult(const Vec& y) const;
    Vec basis_vector(std::size_t i) const;

    // Associativity and two-sided unit; returns a description of the first failure.
    std::optional<std::string> check_axioms() const;

    // Subalgebra-free quotient A/I for a two-sided ideal I (basis: echelon complement).
    AbstractAlgebra quotient(const Subspace& ideal) const;

    AbstractAlgebra opposite() const;

protected:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<Vec> table_;
    Vec unit_;
};

// Jacobson radical. Over Q (and over F_p when p exceeds the dimension) this is the
// radical of the trace form x,y |-> tr(L_{xy}); otherwise UnsupportedCharacteristic.
Subspace radical_of_endo_algebra(const AbstractAlgebra& e);

// True when the span of `ideal` is closed under left and right multiplication.
bool is_two_sided_ideal(const AbstractAlgebra& a, const Subspace& ideal);
// Smallest n with ideal^n = 0, or nullopt when the powers stabilise above zero.
std::optional<std::size_t> nilpotency_index(const AbstractAlgebra& a, const Subspace& ideal);

struct Quiver {
    struct Arrow {
        std::string name;
        std::size_t source = 0;
        std::size_t target = 0;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(const std::string& name) const;
    std::size_t arrow_index(const std::string& name) const;
    bool has_oriented_cycle() const;
    Quiver reversed() const;
};

// Paths are sequences of arrow indices; composition "p then q" concatenates.
struct Relation {
    struct Term {
        Scalar coefficient;
        std::vector<std::size_t> arrows;
    };
    std::vector<Term> terms;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Basic split algebra presented by a quiver with relations (or assembled directly,
// as for truncated repetitive algebras). Every basis element b satisfies
// e_{left(b)} * b * e_{right(b)} = b for primitive orthogonal idempotents e_v.
class Algebra : public AbstractAlgebra {
public:
    struct Generator {
        Vec element;
        std::size_t left = 0;
        std::size_t right = 0;
    };

    struct Data {
        Field field;
        std::size_t dim = 0;
        std::vector<Vec> table;
        Vec unit;
        std::vector<std::string> labels;
        std::vector<std::string> vertex_names;
        std::vector<std::size_t> idempotents;  // basis index per vertex
        std::vector<std::size_t> left_vertex;
        std::vector<std::size_t> right_vertex;
        Matrix radical;                        // rows spanning the radical
    };

    static AlgebraPtr create(Data d);

    std::size_t num_vertices() const { return idempotents_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    std::size_t idempotent(std::size_t v) const { return idempotents_[v]; }
    Vec idempotent_vector(std::size_t v) const { return basis_vector(idempotents_[v]); }
    std::size_t left_vertex(std::size_t b) const { return left_[b]; }
    std::size_t right_vertex(std::size_t b) const { return right_[b]; }
    const Subspace& radical() const { return radical_; }
    // Sandwiched elements whose classes span rad/rad^2; with the idempotents
    // they generate the algebra.
    const std::vector<Generator>& generators() const { return generators_; }
    bool is_opposite() const { return opposite_flag_; }

    // Basis indices b with left(b) == v (a basis of e_v A), resp. right(b) == v.
    const std::vector<std::size_t>& left_basis(std::size_t v) const { return left_basis_[v]; }
    const std::vector<std::size_t>& right_basis(std::size_t v) const { return right_basis_[v]; }

    // Opposite algebra: same basis, c_op[i][j] = c[j][i]. Cached; opposite(opposite(A)) is A.
    AlgebraPtr opposite() const;

    // Full validation of the presentation axioms.
    std::optional<std::string> validate() const;

    bool same_as(const Algebra& o) const;

    Data data() const;

    // Only for the original presentation of a path algebra.
    const std::optional<Quiver>& quiver() const { return quiver_; }
    void set_quiver(Quiver q) { quiver_ = std::move(q); }

private:
    Algebra() = default;
    void finish();

    std::vector<std::string> labels_;
    std::vector<std::string> vertex_names_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::size_t> left_;
    std::vector<std::size_t> right_;
    Subspace radical_;
    std::vector<Generator> generators_;
    std::vector<std::vector<std::size_t>> left_basis_;
    std::vector<std::vector<std::size_t>> right_basis_;
    bool opposite_flag_ = false;
    std::optional<Quiver> quiver_;

    mutable std::mutex op_mutex_;
    mutable std::shared_ptr<const Algebra> op_strong_;
    mutable std::weak_ptr<const Algebra> op_weak_;
    std::weak_ptr<const Algebra> self_;
};

AlgebraPtr build_path_algebra(Field f, const Quiver& q, const std::vector<Relation>& rels,
                              std::optional<std::size_t> nilpotency_bound = std::nullopt);

}  // namespace aralg

namespace aralg {
// The ground field as a one-vertex algebra.
AlgebraPtr ground_algebra(Field f);
}  // namespace aralg
