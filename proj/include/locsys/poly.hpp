#pragma once

#include "locsys/field.hpp"

#include <vector>

namespace locsys {

/// Univariate polynomial, coefficients from the constant term up; the zero
/// polynomial is empty. All routines keep results trimmed.
using Poly = std::vector<Scalar>;

namespace poly {

void trim(Poly& p);
int degree(const Poly& p);
Poly monic(const Field& f, Poly p);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly gcd(const Field& f, Poly a, Poly b);

struct Bezout {
    Poly g;
    Poly s;
    Poly t;
};
/// s*a + t*b = g with g monic.
Bezout extended_gcd(const Field& f, const Poly& a, const Poly& b);

Scalar evaluate(const Field& f, const Poly& p, const Scalar& x);

/// Distinct roots in the field, increasing. Over Q uses the rational root
/// test; over GF(p) brute force for small p, otherwise gcd with x^p - x and
/// deterministic equal-degree splitting.
std::vector<Scalar> roots(const Field& f, const Poly& p);

} // namespace poly
} // namespace locsys
