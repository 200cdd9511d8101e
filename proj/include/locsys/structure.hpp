#pragma once

#include "locsys/algebra.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace locsys {

/// A = levi (+) radical as vector spaces; levi is a semisimple subalgebra.
struct LeviSplit {
    Subspace levi;
    Subspace radical;
};

/// A minimal ideal of a semisimple algebra. `rank` is set only when a full
/// system of rank x rank matrix units was constructed inside the component;
/// otherwise the component is non-split over the ground field.
struct SimpleComponent {
    Subspace space;
    Vec central_idempotent;
    std::optional<std::size_t> rank;
    /// e_ij stored at index i * rank + j.
    std::vector<Vec> matrix_units;
};

struct ComponentList {
    std::vector<SimpleComponent> components;

    bool split() const;
    std::vector<std::optional<std::size_t>> ranks() const;
};

/// Nonzero multiplicative functional on A.
struct Character {
    Vec functional;
};

/// A / rad A together with its simple components (coordinates of A/rad A).
struct SemisimplePart {
    Subspace radical;
    Quotient quotient;
    ComponentList components;
};

/// Throws CharacteristicTooSmall unless char = 0 or char > dim.
void require_trace_form_window(const Algebra& a);

/// Jacobson radical as the kernel of the trace form (x, y) -> Tr(L_{xy}).
/// Valid in characteristic 0 or p > dim(a).
Subspace radical(const Algebra& a);
bool is_nilpotent(const Algebra& a);
/// Powers of a subspace u, u^{k+1} = u u^k, until zero or stationary.
bool is_nilpotent_subspace(const Algebra& a, const Subspace& u);
/// Stable term of the power chain.
Subspace perfect_core(const Algebra& a);
bool is_perfect(const Algebra& a);
/// For finite-dimensional algebras this coincides with is_nilpotent.
bool is_residually_nilpotent(const Algebra& a);
Subspace center(const Algebra& a);

/// Levi complement by lifting a vector-space section of A -> A/rad A and
/// correcting it modulo rad^k, k = 1, 2, ..., by exact linear solves.
/// Throws NonSplit when A/rad A has a non-split component.
LeviSplit wedderburn_malcev(const Algebra& a);

/// Minimal ideals of a semisimple algebra ordered by their first pivot.
/// Throws NotSemisimple when rad(a) != 0.
ComponentList simple_components(const Algebra& a);
SemisimplePart semisimple_part(const Algebra& a);

/// Smallest rank of the simple components of A / rad A. Defined for perfect
/// algebras only; throws NotPerfect or NonSplit.
std::size_t algebra_rank(const Algebra& a);
bool is_simple(const Algebra& a);

/// One character per 1-dimensional component of A / rad A, in component order.
std::vector<Character> characters(const Algebra& a);

/// Candidate permutation used for every tie-break. Seed 0 is the identity;
/// other seeds shuffle with a fixed mt19937_64 stream.
std::vector<std::size_t> candidate_order(std::size_t n, std::uint64_t seed);

/// An ideal of codimension 1, or nullopt when a is 1-perfect.
std::optional<Subspace> find_codim1_ideal(const Algebra& a, std::uint64_t seed = 0);
/// A = A_0 > A_1 > ... > A_r with each step a codimension-1 ideal of the
/// previous, in a's coordinates; the last entry is the 1-perfect radical.
std::vector<Subspace> one_perfect_chain(const Algebra& a, std::uint64_t seed = 0);
Subspace one_perfect_radical(const Algebra& a, std::uint64_t seed = 0);
bool is_one_perfect(const Algebra& a);

/// For perfect a: the preimage in a of the sum of all but one simple
/// component of a / rad a, one ideal per component.
std::vector<Subspace> maximal_ideals(const Algebra& a);

} // namespace locsys
