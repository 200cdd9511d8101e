#include "locsys/poly.hpp"

#include "locsys/errors.hpp"

#include <algorithm>
#include <optional>

namespace locsys::poly {

void trim(Poly& p) {
    while (!p.empty() && Field::is_zero(p.back())) p.pop_back();
}

int degree(const Poly& p) {
    return static_cast<int>(p.size()) - 1;
}

Poly monic(const Field& f, Poly p) {
    trim(p);
    if (p.empty()) return p;
    Scalar lead = f.inv(p.back());
    for (Scalar& c : p) c = f.mul(c, lead);
    return p;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Scalar x = i < a.size() ? a[i] : Scalar(0);
        Scalar y = i < b.size() ? b[i] : Scalar(0);
        out[i] = f.add(x, y);
    }
    trim(out);
    return out;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Scalar x = i < a.size() ? a[i] : Scalar(0);
        Scalar y = i < b.size() ? b[i] : Scalar(0);
        out[i] = f.sub(x, y);
    }
    trim(out);
    return out;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) f.fma(out[i + j], a[i], b[j]);
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
    Poly divisor = b;
    trim(divisor);
    if (divisor.empty()) throw InvalidArgument("polynomial division by zero");
    Poly rem = a;
    trim(rem);
    if (rem.size() < divisor.size()) return {Poly{}, rem};
    Poly quot(rem.size() - divisor.size() + 1);
    Scalar lead_inv = f.inv(divisor.back());
    while (!rem.empty() && rem.size() >= divisor.size()) {
        std::size_t shift = rem.size() - divisor.size();
        Scalar factor = f.mul(rem.back(), lead_inv);
        quot[shift] = factor;
        for (std::size_t i = 0; i < divisor.size(); ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, divisor[i]));
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Poly gcd(const Field& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

Bezout extended_gcd(const Field& f, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0{Scalar(1)}, s1{}, t0{}, t1{Scalar(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(f, r0, r1);
        Poly s2 = sub(f, s0, mul(f, q, s1));
        Poly t2 = sub(f, t0, mul(f, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {{}, {}, {}};
    Scalar lead = f.inv(r0.back());
    Poly scale{lead};
    return {mul(f, r0, scale), mul(f, s0, scale), mul(f, t0, scale)};
}

Scalar evaluate(const Field& f, const Poly& p, const Scalar& x) {
    Scalar acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

namespace {

constexpr unsigned long kBruteForceBound = 2000;

std::vector<Scalar> prime_field_roots(const Field& f, Poly p);

Poly derivative_of(const Field& f, const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(f.mul(p[i], f.from_int(static_cast<long long>(i))));
    trim(d);
    return d;
}

// Integer polynomial arithmetic modulo m, coefficients low to high.
mpz_class eval_mod(const std::vector<mpz_class>& p, const mpz_class& x, const mpz_class& m) {
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = (acc * x + *it) % m;
        if (acc < 0) acc += m;
    }
    return acc;
}

std::vector<mpz_class> derivative(const std::vector<mpz_class>& p) {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    return d;
}

// a/b with a = b*r (mod m) and |a|, b below sqrt(m/2), if one exists.
std::optional<Scalar> reconstruct(const mpz_class& r, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
    Scalar out(r1, t1);
    out.canonicalize();
    return out;
}

// True when the integer polynomial vanishes at a/b.
bool vanishes(const std::vector<mpz_class>& p, const Scalar& x) {
    const mpz_class a = x.get_num(), b = x.get_den();
    std::vector<mpz_class> bpow(p.size(), 1);
    for (std::size_t i = 1; i < p.size(); ++i) bpow[i] = bpow[i - 1] * b;
    mpz_class acc = 0, apow = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i] * apow * bpow[p.size() - 1 - i];
        apow *= a;
    }
    return sgn(acc) == 0;
}

// Rational roots of a squarefree primitive integer polynomial with nonzero
// constant term: roots modulo a prime of good reduction, lifted p-adically
// and recovered by rational reconstruction, each confirmed exactly.
std::vector<Scalar> integer_roots(const std::vector<mpz_class>& p) {
    const mpz_class lead = abs(p.back()), tail = abs(p.front());
    const mpz_class size = std::max(lead, tail);
    const mpz_class target = 2 * size * size + 1;
    const auto dp = derivative(p);
    mpz_class prime = 2147483647;
    for (int attempt = 0; attempt < 64; ++attempt, mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t())) {
        if (lead % prime == 0) continue;
        const Field fp = Field::prime(prime.get_ui());
        Poly reduced, dreduced;
        for (const auto& c : p) reduced.push_back(fp.normalize(Scalar(c)));
        for (const auto& c : dp) dreduced.push_back(fp.normalize(Scalar(c)));
        trim(reduced);
        trim(dreduced);
        if (degree(gcd(fp, reduced, dreduced)) != 0) continue;
        std::vector<Scalar> out;
        for (const Scalar& root : prime_field_roots(fp, reduced)) {
            mpz_class r = root.get_num(), m = prime;
            while (m < target) {
                mpz_class m2 = m * m;
                mpz_class num = eval_mod(p, r, m2), den = eval_mod(dp, r, m2), inv;
                if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m2.get_mpz_t()) == 0)
                    throw Error("internal: Hensel lifting met a multiple root");
                r = (r - num * inv) % m2;
                if (r < 0) r += m2;
                m = m2;
            }
            auto cand = reconstruct(r, m);
            if (cand && vanishes(p, *cand)) out.push_back(*cand);
        }
        return out;
    }
    throw NonSplit("no prime of good reduction found for the rational root search");
}

std::vector<Scalar> rational_roots(const Field& f, Poly p) {
    trim(p);
    std::vector<Scalar> out;
    if (p.size() <= 1) return out;
    // Strip the x^k factor first.
    std::size_t low = 0;
    while (Field::is_zero(p[low])) ++low;
    if (low > 0) {
        out.push_back(0);
        p.erase(p.begin(), p.begin() + static_cast<long>(low));
    }
    if (p.size() > 1) {
        Poly sq = divmod(f, p, gcd(f, p, derivative_of(f, p))).first;
        mpz_class lcm = 1;
        for (const Scalar& c : sq) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<mpz_class> ints;
        for (const Scalar& c : sq) ints.push_back(c.get_num() * (lcm / c.get_den()));
        mpz_class content = 0;
        for (const auto& c : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        for (auto& c : ints) c /= content;
        if (ints.size() > 1) {
            auto found = integer_roots(ints);
            out.insert(out.end(), found.begin(), found.end());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly shifted_power_mod(const Field& f, const Scalar& shift, mpz_class e, const Poly& m) {
    Poly result{Scalar(1)};
    Poly base{shift, Scalar(1)};
    base = divmod(f, base, m).second;
    result = divmod(f, result, m).second;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = divmod(f, mul(f, result, base), m).second;
        base = divmod(f, mul(f, base, base), m).second;
        e >>= 1;
    }
    return result;
}

// g is monic, squarefree and splits into distinct linear factors.
void split_linear(const Field& f, const Poly& g, std::vector<Scalar>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(f.neg(g[0]));
        return;
    }
    mpz_class half = (mpz_class(static_cast<unsigned long>(f.characteristic())) - 1) / 2;
    for (unsigned long a = 0; a < f.characteristic(); ++a) {
        Poly h = sub(f, shifted_power_mod(f, Scalar(a), half, g), Poly{Scalar(1)});
        Poly factor = gcd(f, g, h);
        int fd = degree(factor);
        if (fd > 0 && fd < d) {
            split_linear(f, factor, out);
            split_linear(f, divmod(f, g, factor).first, out);
            return;
        }
    }
}

std::vector<Scalar> prime_field_roots(const Field& f, Poly p) {
    trim(p);
    std::vector<Scalar> out;
    if (p.size() <= 1) return out;
    unsigned long q = f.characteristic();
    if (q <= kBruteForceBound) {
        for (unsigned long x = 0; x < q; ++x)
            if (Field::is_zero(evaluate(f, p, Scalar(x)))) out.push_back(Scalar(x));
        return out;
    }
    Poly m = monic(f, p);
    Poly xp = shifted_power_mod(f, Scalar(0), mpz_class(q), m);
    Poly g = gcd(f, m, sub(f, xp, Poly{Scalar(0), Scalar(1)}));
    split_linear(f, g, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Scalar> roots(const Field& f, const Poly& p) {
    return f.is_rationals() ? rational_roots(f, p) : prime_field_roots(f, p);
}

} // namespace locsys::poly
