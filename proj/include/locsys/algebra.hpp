#pragma once

#include "locsys/linear.hpp"

#include <array>
#include <string>
#include <vector>

namespace locsys {

/// One structure constant: e_i * e_j contains value * e_k. Indices are 0-based.
struct StructureConstant {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar value;

    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional algebra given by structure constants. Associativity is
/// not assumed at construction; see check_associativity. The 0-dimensional
/// algebra is a legal value. No identity element is required.
class Algebra {
public:
    struct Term {
        std::size_t k;
        Scalar value;
    };

    Algebra() = default;
    /// Duplicate (i, j, k) entries are summed and zero entries dropped.
    Algebra(Field field, std::size_t dim, const std::vector<StructureConstant>& constants, std::string label = {},
            std::vector<std::string> basis_names = {});

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }

    /// Canonical list sorted by (i, j, k).
    std::vector<StructureConstant> structure_constants() const;
    std::size_t nonzero_constants() const;
    /// Terms of the basis product e_i * e_j.
    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
    /// Left multiplication by x as sparse columns: column j holds x * e_j.
    /// Cheaper than repeated multiply when x meets many right factors.
    std::vector<std::vector<Term>> left_multiplication(std::span<const Scalar> x) const;
    Vec basis_vector(std::size_t i) const { return unit_vector(dim_, i); }

    Subspace full() const { return Subspace::full(field_, dim_); }
    Subspace zero() const { return Subspace(field_, dim_); }

    Algebra with_label(std::string label) const;

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    Field field_;
    std::size_t dim_ = 0;
    std::string label_;
    std::vector<std::string> names_;
    std::vector<std::vector<Term>> table_;
};

/// Associativity verdict; on failure, the first violating (i, j, k, l) in
/// lexicographic order together with both sides' e_l-coefficients of
/// (e_i e_j) e_k and e_i (e_j e_k).
struct AssociativityReport {
    bool associative = true;
    std::array<std::size_t, 4> where{};
    Scalar lhs;
    Scalar rhs;
};

AssociativityReport check_associativity(const Algebra& a);

// Constructions.
Algebra matrix_algebra(std::size_t n, Field field);
/// Upper triangular n x n matrices; basis e_ij with i <= j in row-major order.
Algebra upper_triangular_algebra(std::size_t n, Field field);
/// Strictly upper triangular n x n matrices; basis e_ij with i < j in row-major order.
Algebra strictly_upper_algebra(std::size_t n, Field field);
/// d-dimensional algebra with zero multiplication.
Algebra null_algebra(std::size_t d, Field field);
/// Blocks multiply by their own tables, cross products vanish. Basis names are
/// prefixed "a." and "b." only if the two name lists collide.
Algebra direct_sum(const Algebra& a, const Algebra& b, std::string label = {});
/// Same algebra in the basis b_r = sum_c rows(r, c) e_c; rows must be invertible.
Algebra change_basis(const Algebra& a, const Mat& rows, std::string label = {});

// Subspace operations; all subspaces are in the algebra's coordinates.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);
/// A^1 = A, A^{i+1} = A A^i, up to the first index k with A^k = A^{k+1}.
std::vector<Subspace> power_chain(const Algebra& a);
Subspace subalgebra_generated(const Algebra& a, const std::vector<Vec>& generators);
Subspace ideal_generated(const Algebra& a, const Subspace& s);
bool is_ideal(const Algebra& a, const Subspace& u);
bool is_subalgebra(const Algebra& a, const Subspace& u);

/// A / I presented on the complement of the ideal's pivot columns.
struct Quotient {
    Algebra algebra;
    /// dim(A/I) x dim(A), surjective and multiplicative, kernel exactly I.
    Mat projection;
    /// Coordinates of A lifted as the quotient basis, increasing.
    std::vector<std::size_t> complement;

    Vec project(std::span<const Scalar> x) const { return projection.apply(x); }
    /// Linear section sending the i-th quotient basis vector to e_{complement[i]}.
    Vec lift(std::span<const Scalar> q, std::size_t ambient_dim) const;
};

/// Throws NotAnIdeal unless i is a two-sided ideal.
Quotient quotient(const Algebra& a, const Subspace& i);

/// The multiplication-closed subspace u as an algebra on its stored basis.
/// Throws InvalidArgument when u is not closed.
Algebra present_subalgebra(const Algebra& a, const Subspace& u, std::string label = {});

/// Human-readable form such as "e11 - 1/2*e12"; "0" for the zero vector.
std::string format_vector(const Algebra& a, std::span<const Scalar> v);
/// "[v1, v2, ...]".
std::string format_subspace(const Algebra& a, const Subspace& s);

} // namespace locsys
