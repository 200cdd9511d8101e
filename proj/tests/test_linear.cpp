#include "support.hpp"

#include "locsys/poly.hpp"

#include <doctest.h>

using namespace locsys;
using namespace locsys::testing;

namespace {

std::vector<Field> fields() {
    return {Field::rationals(), Field::prime(7), Field::prime(65521), Field::prime(2147483647)};
}

} // namespace

TEST_CASE("field arithmetic and text form") {
    Field q = Field::rationals();
    CHECK(q.format(q.parse("6/4")) == "3/2");
    CHECK(q.format(q.parse("-2")) == "-2");
    CHECK(q.format(q.div(Scalar(1), Scalar(-3))) == "-1/3");
    Field f = Field::prime(7);
    CHECK(f.format(f.parse("-1")) == "6");
    CHECK(f.format(f.parse("1/2")) == "4");
    CHECK(f.mul(f.inv(Scalar(3)), Scalar(3)) == 1);
    CHECK(Field::from_name("GF(13)").characteristic() == 13);
    CHECK(Field::from_name("Q").is_rationals());
    CHECK_THROWS_AS(Field::prime(15), InvalidArgument);
    CHECK_THROWS_AS(Field::prime(4294967311ULL), InvalidArgument);
    CHECK_THROWS(q.parse("1/0"));
    CHECK_THROWS(q.parse("abc"));
    CHECK_THROWS(q.inv(Scalar(0)));
    CHECK_THROWS(Field::from_name("R"));
}

TEST_CASE("field inverse property") {
    Rng rng(11);
    for (const Field& f : fields())
        for (int i = 0; i < 50; ++i) {
            Scalar x = random_scalar(rng, f);
            if (Field::is_zero(x)) continue;
            CHECK(f.mul(x, f.inv(x)) == 1);
            CHECK(f.parse(f.format(x)) == x);
        }
}

TEST_CASE("rank plus nullity equals column count") {
    Rng rng(1);
    for (const Field& f : fields())
        for (int t = 0; t < 30; ++t) {
            std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
            Mat m = random_matrix(rng, f, r, c, 50);
            Subspace k = kernel(m);
            CHECK(rank(m) + k.dim() == c);
            for (const Vec& v : k.basis()) CHECK(is_zero_vector(m.apply(v)));
        }
}

TEST_CASE("rref is idempotent and preserves the row space") {
    Rng rng(2);
    for (const Field& f : fields())
        for (int t = 0; t < 30; ++t) {
            Mat m = random_matrix(rng, f, 1 + rng() % 6, 1 + rng() % 6);
            Mat r = rref(m);
            CHECK(rref(r) == r);
            CHECK(row_space(r) == row_space(m));
        }
}

TEST_CASE("sparse and dense elimination agree") {
    Rng rng(3);
    for (const Field& f : fields())
        for (int t = 0; t < 40; ++t) {
            std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 20;
            Mat m = random_matrix(rng, f, rows, cols, 92);
            auto dense = detail::rref_dense(f, cols, m.row_vectors());
            auto sparse = detail::rref_sparse(f, cols, m.row_vectors());
            CHECK(dense.pivots == sparse.pivots);
            CHECK(dense.rows == sparse.rows);
        }
}

TEST_CASE("dimension formula and modular law") {
    Rng rng(4);
    for (const Field& f : fields())
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 2 + rng() % 6;
            Subspace u = random_subspace(rng, f, n, rng() % (n + 1));
            Subspace v = random_subspace(rng, f, n, rng() % (n + 1));
            CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
            CHECK(sum(u, v).contains(u));
            CHECK(u.contains(intersect(u, v)));
            // W inside U: U n (V + W) = (U n V) + W.
            Subspace w = intersect(u, random_subspace(rng, f, n, n - 1));
            CHECK(intersect(u, sum(v, w)) == sum(intersect(u, v), w));
        }
}

TEST_CASE("subspace coordinates and reduction") {
    Rng rng(5);
    Field f = Field::rationals();
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng() % 6;
        Subspace u = random_subspace(rng, f, n, rng() % (n + 1));
        Vec coeffs = random_vector(rng, f, u.dim());
        Vec v = u.combine(coeffs);
        CHECK(u.contains(v));
        CHECK(*u.coordinates(v) == coeffs);
        Vec w = random_vector(rng, f, n);
        Vec r = u.reduce(w);
        for (std::size_t p : u.pivots()) CHECK(Field::is_zero(r[p]));
        Vec diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = w[i] - r[i];
        CHECK(u.contains(diff));
    }
}

TEST_CASE("solve and inverse") {
    Rng rng(6);
    for (const Field& f : fields())
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 1 + rng() % 6;
            Mat a = random_invertible(rng, f, n);
            Mat inv = *inverse(a);
            CHECK(a * inv == Mat::identity(f, n));
            Vec b = random_vector(rng, f, n);
            Vec x = *solve(a, b);
            CHECK(a.apply(x) == b);
        }
    Field q = Field::rationals();
    Mat singular = Mat::from_rows(q, 2, {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
    CHECK_FALSE(inverse(singular).has_value());
    CHECK_FALSE(solve(singular, Vec{Scalar(1), Scalar(0)}).has_value());
}

TEST_CASE("echelon expresses vectors in inserted terms") {
    Rng rng(7);
    Field f = Field::prime(101);
    Echelon e(f, 5);
    std::vector<Vec> inserted;
    for (int i = 0; i < 8; ++i) {
        Vec v = random_vector(rng, f, 5);
        if (e.insert(v)) inserted.push_back(v);
    }
    CHECK(e.size() == inserted.size());
    Vec target = random_vector(rng, f, 5);
    auto c = e.express(target);
    REQUIRE(c.has_value());
    Vec back(5);
    for (std::size_t s = 0; s < inserted.size(); ++s)
        for (std::size_t i = 0; i < 5; ++i) f.fma(back[i], (*c)[s], inserted[s][i]);
    CHECK(back == target);
}

TEST_CASE("span builder agrees with span") {
    Rng rng(19);
    for (const Field& f : fields())
        for (int t = 0; t < 25; ++t) {
            const std::size_t n = 1 + rng() % 9, count = rng() % 12;
            // Low-rank families exercise the rejection path.
            Mat mix = random_matrix(rng, f, count, 1 + rng() % n, 30);
            Mat gens = mix * random_matrix(rng, f, mix.cols(), n, 30);
            SpanBuilder b(f, n);
            std::size_t accepted = 0;
            for (const Vec& v : gens.row_vectors()) accepted += b.insert(v) ? 1 : 0;
            Subspace expected = row_space(gens);
            CHECK(b.size() == accepted);
            CHECK(b.size() == expected.dim());
            CHECK(b.subspace() == expected);
            CHECK(b.is_full() == expected.is_full());
        }
}

TEST_CASE("fused multiply-subtract matches sub and mul") {
    Rng rng(23);
    for (const Field& f : fields())
        for (int t = 0; t < 50; ++t) {
            Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
            Scalar acc = c;
            f.fms(acc, a, b);
            CHECK(acc == f.sub(c, f.mul(a, b)));
            f.fma(acc, a, b);
            CHECK(acc == c);
        }
}

TEST_CASE("polynomial division and Bezout identities") {
    Rng rng(8);
    for (const Field& f : fields())
        for (int t = 0; t < 20; ++t) {
            Poly a = random_vector(rng, f, 1 + rng() % 6), b = random_vector(rng, f, 1 + rng() % 4);
            poly::trim(a);
            poly::trim(b);
            if (b.empty()) continue;
            auto [q, r] = poly::divmod(f, a, b);
            CHECK(poly::add(f, poly::mul(f, q, b), r) == a);
            CHECK(poly::degree(r) < poly::degree(b));
            auto bz = poly::extended_gcd(f, a, b);
            CHECK(poly::add(f, poly::mul(f, bz.s, a), poly::mul(f, bz.t, b)) == bz.g);
        }
}

TEST_CASE("roots of products of linear factors") {
    Rng rng(9);
    for (const Field& f : fields())
        for (int t = 0; t < 15; ++t) {
            std::vector<Scalar> expected;
            Poly p{Scalar(1)};
            const int count = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < count; ++i) {
                Scalar r = random_scalar(rng, f);
                expected.push_back(r);
                p = poly::mul(f, p, Poly{f.neg(r), Scalar(1)});
            }
            // An irreducible-looking extra factor must not add roots over Q.
            if (f.is_rationals()) p = poly::mul(f, p, Poly{Scalar(2), Scalar(0), Scalar(1)});
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            CHECK(poly::roots(f, p) == expected);
        }
    Field q = Field::rationals();
    CHECK(poly::roots(q, Poly{Scalar(1), Scalar(0), Scalar(1)}).empty());
    // (3x - 7)(x + 1/5) with large coefficients scaled in.
    Poly big = poly::mul(q, Poly{Scalar(-7), Scalar(3)}, Poly{Scalar(1, 5), Scalar(1)});
    big = poly::mul(q, big, Poly{Scalar(mpz_class("1000000000000000000000"))});
    CHECK(poly::roots(q, big) == std::vector<Scalar>{Scalar(-1, 5), Scalar(7, 3)});
}
