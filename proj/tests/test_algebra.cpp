#include "support.hpp"

#include <doctest.h>

using namespace locsys;
using namespace locsys::testing;

TEST_CASE("matrix algebra structure constants") {
    Field q = Field::rationals();
    Algebra m3 = matrix_algebra(3, q);
    CHECK(m3.dim() == 9);
    CHECK(m3.nonzero_constants() == 27);
    CHECK(check_associativity(m3).associative);
    CHECK(m3.basis_names()[1] == "e12");
    CHECK(matrix_algebra(10, q).basis_names()[1] == "e1_2");
    CHECK(upper_triangular_algebra(4, q).dim() == 10);
    CHECK(strictly_upper_algebra(4, q).dim() == 6);
    CHECK(strictly_upper_algebra(1, q).dim() == 0);
    CHECK_THROWS_AS(matrix_algebra(0, q), InvalidArgument);
}

TEST_CASE("structure constants are merged and canonical") {
    Field q = Field::rationals();
    Algebra a(q, 2, {{0, 0, 1, Scalar(1)}, {0, 0, 1, Scalar(2)}, {1, 1, 0, Scalar(0)}});
    auto sc = a.structure_constants();
    REQUIRE(sc.size() == 1);
    CHECK(sc[0].value == 3);
    CHECK(a.basis_names() == std::vector<std::string>{"e1", "e2"});
    CHECK_THROWS(Algebra(q, 2, {}, "x", {"a", "a"}));
    CHECK_THROWS(Algebra(q, 2, {{0, 0, 2, Scalar(1)}}));
}

TEST_CASE("associativity violation is located") {
    Field q = Field::rationals();
    // e1 e1 = e2, e1 e2 = e1, everything else zero: (e1 e1) e1 = 0, e1 (e1 e1) = e1.
    Algebra a(q, 2, {{0, 0, 1, Scalar(1)}, {0, 1, 0, Scalar(1)}});
    auto rep = check_associativity(a);
    CHECK_FALSE(rep.associative);
    CHECK(rep.where == std::array<std::size_t, 4>{0, 0, 0, 0});
    CHECK(rep.lhs == 0);
    CHECK(rep.rhs == 1);
}

TEST_CASE("change of basis keeps associativity and products") {
    Rng rng(21);
    for (int t = 0; t < 15; ++t) {
        Field f = t % 2 ? Field::rationals() : Field::prime(101);
        auto pa = random_pattern(rng, f, 16);
        Mat p = random_invertible(rng, f, pa.algebra.dim());
        Algebra b = change_basis(pa.algebra, p);
        CHECK(check_associativity(b).associative);
        // b_r b_s expressed back in old coordinates equals the old product.
        for (int k = 0; k < 5; ++k) {
            std::size_t r = rng() % b.dim(), s = rng() % b.dim();
            Vec prod_new = b.multiply(b.basis_vector(r), b.basis_vector(s));
            Vec old = p.transpose().apply(prod_new);
            CHECK(old == pa.algebra.multiply(p.row(r), p.row(s)));
        }
    }
}

TEST_CASE("products, powers and generated subspaces") {
    Field q = Field::rationals();
    Algebra n4 = strictly_upper_algebra(4, q);
    auto chain = power_chain(n4);
    REQUIRE(chain.size() == 4);
    CHECK(chain[1].dim() == 3);
    CHECK(chain[2].dim() == 1);
    CHECK(chain[3].is_zero());
    Algebra t2 = upper_triangular_algebra(2, q);
    CHECK(power_chain(t2).size() == 1);
    Algebra m3 = matrix_algebra(3, q);
    Subspace line = Subspace::span(q, 9, {m3.basis_vector(1)});
    CHECK(ideal_generated(m3, line).is_full());
    CHECK(subalgebra_generated(m3, {m3.basis_vector(1)}).dim() == 1);
    CHECK(subalgebra_generated(m3, {m3.basis_vector(1), m3.basis_vector(3)}).dim() == 4);
    CHECK(is_ideal(t2, Subspace::span(q, 3, {t2.basis_vector(1)})));
    CHECK_FALSE(is_ideal(t2, Subspace::span(q, 3, {t2.basis_vector(0)})));
    CHECK(is_subalgebra(t2, Subspace::span(q, 3, {t2.basis_vector(0)})));
}

TEST_CASE("quotient is multiplicative with kernel the ideal") {
    Rng rng(22);
    for (int t = 0; t < 15; ++t) {
        Field f = t % 2 ? Field::rationals() : Field::prime(31);
        auto pa = random_pattern(rng, f, 20);
        const Algebra& a = pa.algebra;
        Quotient qt = quotient(a, pa.radical);
        CHECK(qt.algebra.dim() == a.dim() - pa.radical.dim());
        CHECK(kernel(qt.projection) == pa.radical);
        for (int k = 0; k < 5; ++k) {
            Vec x = random_vector(rng, f, a.dim()), y = random_vector(rng, f, a.dim());
            CHECK(qt.project(a.multiply(x, y)) == qt.algebra.multiply(qt.project(x), qt.project(y)));
        }
        Vec qv = random_vector(rng, f, qt.algebra.dim());
        CHECK(qt.project(qt.lift(qv, a.dim())) == qv);
    }
    Field q = Field::rationals();
    Algebra t2 = upper_triangular_algebra(2, q);
    CHECK_THROWS_AS(quotient(t2, Subspace::span(q, 3, {t2.basis_vector(0)})), NotAnIdeal);
}

TEST_CASE("presentations and names") {
    Field q = Field::rationals();
    Algebra t2 = upper_triangular_algebra(2, q);
    Algebra diag = present_subalgebra(t2, Subspace::span(q, 3, {t2.basis_vector(0), t2.basis_vector(2)}));
    CHECK(diag.basis_names() == std::vector<std::string>{"e11", "e22"});
    Vec mixed{Scalar(1), Scalar(1), Scalar(0)};
    Algebra line = present_subalgebra(t2, Subspace::span(q, 3, {mixed}));
    CHECK(line.basis_names() == std::vector<std::string>{"u1"});
    CHECK_THROWS(present_subalgebra(matrix_algebra(2, q), Subspace::span(q, 4, {unit_vector(4, 1), unit_vector(4, 2)})));
    Vec v{Scalar(1), Scalar(-1, 2), Scalar(0)};
    CHECK(format_vector(t2, v) == "e11 - 1/2*e12");
    CHECK(format_vector(t2, Vec(3)) == "0");
    Algebra s = direct_sum(matrix_algebra(1, q), matrix_algebra(2, q));
    CHECK(s.basis_names()[0] == "a.e11");
    CHECK(s.basis_names()[1] == "b.e11");
    Algebra s2 = direct_sum(null_algebra(1, q), matrix_algebra(1, q));
    CHECK(s2.basis_names() == std::vector<std::string>{"e1", "e11"});
}
