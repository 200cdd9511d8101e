#include "support.hpp"

#include "locsys/structure.hpp"

#include <doctest.h>

using namespace locsys;
using namespace locsys::testing;

namespace {

Subspace span_of(const Algebra& a, std::vector<std::size_t> idx) {
    std::vector<Vec> vs;
    for (auto i : idx) vs.push_back(a.basis_vector(i));
    return Subspace::span(a.field(), a.dim(), vs);
}

// Q(i) as a 2-dimensional algebra: a simple algebra that is not split over Q.
Algebra gaussian_numbers() {
    Field q = Field::rationals();
    return Algebra(q, 2,
                   {{0, 0, 0, Scalar(1)}, {0, 1, 1, Scalar(1)}, {1, 0, 1, Scalar(1)}, {1, 1, 0, Scalar(-1)}}, "Q(i)",
                   {"one", "i"});
}

void check_levi(const Algebra& a) {
    LeviSplit s = wedderburn_malcev(a);
    CHECK(intersect(s.levi, s.radical).is_zero());
    CHECK(sum(s.levi, s.radical).is_full());
    CHECK(is_subalgebra(a, s.levi));
    CHECK(radical(present_subalgebra(a, s.levi)).is_zero());
}

} // namespace

TEST_CASE("radical of triangular and matrix algebras") {
    Field q = Field::rationals();
    for (std::size_t n = 2; n <= 5; ++n) CHECK(radical(upper_triangular_algebra(n, q)).dim() == n * (n - 1) / 2);
    Algebra t2 = upper_triangular_algebra(2, q);
    CHECK(radical(t2) == span_of(t2, {1}));
    CHECK(radical(matrix_algebra(3, q)).is_zero());
    CHECK(radical(strictly_upper_algebra(4, q)).is_full());
    CHECK(radical(null_algebra(2, q)).is_full());
    CHECK(radical(null_algebra(0, q)).is_zero());
}

TEST_CASE("radical needs characteristic zero or above the dimension") {
    CHECK_THROWS_AS(radical(matrix_algebra(2, Field::prime(3))), CharacteristicTooSmall);
    CHECK(radical(matrix_algebra(2, Field::prime(5))).is_zero());
}

TEST_CASE("radical of random pattern algebras in random bases") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        const std::size_t pick = static_cast<std::size_t>(t);
        Field f = t % 2 ? Field::rationals() : prime_field_above(30, pick);
        auto pa = random_pattern(rng, f, 24);
        auto rb = rebased(pa, random_invertible(rng, f, pa.algebra.dim()));
        CHECK(radical(rb.algebra) == rb.radical);
        CHECK(is_nilpotent_subspace(rb.algebra, rb.radical));
    }
}

TEST_CASE("nilpotency, perfect core and center") {
    Field q = Field::rationals();
    CHECK(is_nilpotent(strictly_upper_algebra(4, q)));
    CHECK_FALSE(is_nilpotent(upper_triangular_algebra(2, q)));
    CHECK(is_perfect(upper_triangular_algebra(3, q)));
    CHECK_FALSE(is_perfect(strictly_upper_algebra(3, q)));
    CHECK(is_residually_nilpotent(null_algebra(2, q)));
    Algebra fn = direct_sum(matrix_algebra(2, q), strictly_upper_algebra(3, q));
    CHECK(perfect_core(fn) == span_of(fn, {0, 1, 2, 3}));
    CHECK(center(matrix_algebra(3, q)).dim() == 1);
    CHECK(center(direct_sum(matrix_algebra(2, q), matrix_algebra(3, q))).dim() == 2);
    CHECK(center(upper_triangular_algebra(3, q)).dim() == 1);
}

TEST_CASE("simple components") {
    Field q = Field::rationals();
    Algebra f3(q, 3, {{0, 0, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}, {2, 2, 2, Scalar(1)}});
    auto c = simple_components(f3);
    CHECK(c.components.size() == 3);
    CHECK(c.ranks() == std::vector<std::optional<std::size_t>>{1, 1, 1});
    auto c23 = simple_components(direct_sum(matrix_algebra(2, q), matrix_algebra(3, q)));
    REQUIRE(c23.components.size() == 2);
    CHECK(c23.components[0].space.dim() == 4);
    CHECK(c23.components[1].space.dim() == 9);
    CHECK(*c23.components[1].rank == 3);
    CHECK(c23.components[1].matrix_units.size() == 9);
    CHECK(simple_components(null_algebra(0, q)).components.empty());
    CHECK_THROWS_AS(simple_components(upper_triangular_algebra(2, q)), NotSemisimple);
}

TEST_CASE("matrix units multiply like matrix units") {
    Field q = Field::rationals();
    Rng rng(32);
    Algebra a = direct_sum(matrix_algebra(3, q), matrix_algebra(2, q));
    Algebra b = change_basis(a, random_invertible(rng, q, a.dim()));
    for (const Algebra* x : {&a, &b}) {
        auto c = simple_components(*x);
        for (const auto& comp : c.components) {
            if (!comp.rank) continue;
            const std::size_t r = *comp.rank;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    for (std::size_t k = 0; k < r; ++k)
                        for (std::size_t l = 0; l < r; ++l) {
                            Vec prod = x->multiply(comp.matrix_units[i * r + j], comp.matrix_units[k * r + l]);
                            if (j == k) CHECK(prod == comp.matrix_units[i * r + l]);
                            else CHECK(is_zero_vector(prod));
                        }
        }
    }
}

TEST_CASE("non-split components are reported, not decomposed") {
    Algebra g = gaussian_numbers();
    auto c = simple_components(g);
    REQUIRE(c.components.size() == 1);
    CHECK_FALSE(c.components[0].rank.has_value());
    CHECK_FALSE(c.split());
    CHECK_THROWS_AS(algebra_rank(g), NonSplit);
    // Over GF(5), -1 is a square and the same table splits as F + F.
    Field f = Field::prime(5);
    Algebra g5(f, 2, {{0, 0, 0, Scalar(1)}, {0, 1, 1, Scalar(1)}, {1, 0, 1, Scalar(1)}, {1, 1, 0, f.from_int(-1)}});
    CHECK(simple_components(g5).ranks() == std::vector<std::optional<std::size_t>>{1, 1});
}

TEST_CASE("Wedderburn-Malcev postconditions") {
    Field q = Field::rationals();
    for (std::size_t n = 2; n <= 5; ++n) {
        Algebra t = upper_triangular_algebra(n, q);
        LeviSplit s = wedderburn_malcev(t);
        std::vector<std::size_t> diag;
        for (std::size_t i = 0, idx = 0; i < n; idx += n - i, ++i) diag.push_back(idx);
        CHECK(s.levi == span_of(t, diag));
        check_levi(t);
    }
    Rng rng(33);
    for (int k = 0; k < 25; ++k) {
        Field f = k % 2 ? Field::rationals() : prime_field_above(30, static_cast<std::size_t>(k));
        auto pa = random_pattern(rng, f, 24);
        check_levi(pa.algebra);
        if (!f.is_rationals()) check_levi(rebased(pa, random_invertible(rng, f, pa.algebra.dim())).algebra);
    }
    // Non-trivial lifting: conjugate T_3 by a unipotent change of basis.
    Algebra t3 = upper_triangular_algebra(3, q);
    Mat p = Mat::identity(q, 6);
    p.set(0, 1, Scalar(2));
    p.set(3, 4, Scalar(-1));
    p.set(5, 2, Scalar(1, 3));
    check_levi(change_basis(t3, p));
}

TEST_CASE("rank and simplicity") {
    Field q = Field::rationals();
    CHECK(algebra_rank(direct_sum(matrix_algebra(2, q), matrix_algebra(3, q))) == 2);
    CHECK(algebra_rank(matrix_algebra(1, q)) == 1);
    CHECK(algebra_rank(upper_triangular_algebra(2, q)) == 1);
    CHECK_THROWS_AS(algebra_rank(strictly_upper_algebra(3, q)), NotPerfect);
    CHECK_THROWS_AS(algebra_rank(null_algebra(0, q)), InvalidArgument);
    CHECK(is_simple(matrix_algebra(3, q)));
    CHECK_FALSE(is_simple(upper_triangular_algebra(2, q)));
    CHECK_FALSE(is_simple(null_algebra(1, q)));
    CHECK_FALSE(is_simple(direct_sum(matrix_algebra(2, q), matrix_algebra(2, q))));
    CHECK(is_simple(gaussian_numbers()));
}

TEST_CASE("characters") {
    Field q = Field::rationals();
    Algebra t2 = upper_triangular_algebra(2, q);
    auto chars = characters(t2);
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].functional == Vec{Scalar(1), Scalar(0), Scalar(0)});
    CHECK(chars[1].functional == Vec{Scalar(0), Scalar(0), Scalar(1)});
    CHECK(characters(matrix_algebra(2, q)).empty());
    CHECK(characters(null_algebra(2, q)).empty());
    CHECK(characters(direct_sum(matrix_algebra(1, q), matrix_algebra(2, q))).size() == 1);
}

TEST_CASE("characters count the 1x1 diagonal blocks") {
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        Field f = t % 2 ? prime_field_above(20, t) : Field::rationals();
        PatternAlgebra pa = random_pattern(rng, f, 20);
        Mat p = f.is_rationals() ? random_unimodular(rng, f, pa.algebra.dim()) : random_invertible(rng, f, pa.algebra.dim());
        Algebra a = rebased(pa, p).algebra;
        auto chars = characters(a);
        CHECK(chars.size() == static_cast<std::size_t>(std::count(pa.blocks.begin(), pa.blocks.end(), 1)));
        for (const auto& chi : chars) CHECK_FALSE(is_zero_vector(chi.functional));
    }
}

TEST_CASE("candidate order") {
    CHECK(candidate_order(4, 0) == std::vector<std::size_t>{0, 1, 2, 3});
    for (std::uint64_t seed = 1; seed < 6; ++seed) {
        auto p = candidate_order(6, seed);
        CHECK(p == candidate_order(6, seed));
        std::vector<std::size_t> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == candidate_order(6, 0));
    }
    CHECK(candidate_order(0, 3).empty());
}

TEST_CASE("codimension-1 ideals and the 1-perfect radical") {
    Field q = Field::rationals();
    CHECK_FALSE(find_codim1_ideal(matrix_algebra(2, q)).has_value());
    Algebra t2 = upper_triangular_algebra(2, q);
    auto h = find_codim1_ideal(t2);
    REQUIRE(h.has_value());
    CHECK(h->dim() == 2);
    CHECK(is_ideal(t2, *h));
    CHECK(one_perfect_radical(t2).is_zero());
    Algebra fm2 = direct_sum(matrix_algebra(1, q), matrix_algebra(2, q));
    CHECK(one_perfect_radical(fm2) == span_of(fm2, {1, 2, 3, 4}));
    CHECK(one_perfect_radical(null_algebra(3, q)).is_zero());
    CHECK(is_one_perfect(matrix_algebra(3, q)));
}

TEST_CASE("1-perfect radical properties on random algebras") {
    Rng rng(34);
    for (int k = 0; k < 20; ++k) {
        Field f = k % 2 ? Field::rationals() : Field::prime(101);
        auto pa = random_pattern(rng, f, 20);
        const Algebra& a = pa.algebra;
        auto chain = one_perfect_chain(a);
        for (std::size_t i = 1; i < chain.size(); ++i) {
            CHECK(chain[i].dim() + 1 == chain[i - 1].dim());
            CHECK(chain[i - 1].contains(chain[i]));
        }
        const Subspace& p = chain.back();
        CHECK(is_ideal(a, p));
        CHECK(subspace_product(a, p, p) == p);
        CHECK(is_one_perfect(present_subalgebra(a, p)));
        CHECK(one_perfect_radical(quotient(a, p).algebra).is_zero());
        for (std::uint64_t seed = 1; seed <= 5; ++seed) CHECK(one_perfect_radical(a, seed) == p);
    }
}

TEST_CASE("maximal ideals") {
    Field q = Field::rationals();
    Algebra a = direct_sum(matrix_algebra(2, q), matrix_algebra(3, q));
    auto ms = maximal_ideals(a);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == span_of(a, {4, 5, 6, 7, 8, 9, 10, 11, 12}));
    CHECK(ms[1] == span_of(a, {0, 1, 2, 3}));
    CHECK(maximal_ideals(matrix_algebra(2, q)) == std::vector<Subspace>{Subspace(q, 4)});
    Algebra t2 = upper_triangular_algebra(2, q);
    auto mt = maximal_ideals(t2);
    REQUIRE(mt.size() == 2);
    CHECK(mt[0] == span_of(t2, {1, 2}));
    CHECK_THROWS_AS(maximal_ideals(strictly_upper_algebra(3, q)), NotPerfect);
}
