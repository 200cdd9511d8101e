#include "locsys/field.hpp"

#include "locsys/errors.hpp"

#include <charconv>

namespace locsys {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long residue(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
    if (sgn(r) < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

unsigned long pow_mod(unsigned long base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1, b = base % p;
    while (exp > 0) {
        if (exp & 1U) result = result * b % p;
        b = b * b % p;
        exp >>= 1U;
    }
    return static_cast<unsigned long>(result);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32U) || !is_prime(p))
        throw InvalidArgument("GF(p) requires a prime p < 2^32, got " + std::to_string(p));
    return Field{p};
}

Field Field::from_name(std::string_view name) {
    if (name == "Q") return rationals();
    if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
        auto digits = name.substr(3, name.size() - 4);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime(p);
    }
    throw ParseError("unknown field \"" + std::string(name) + "\" (expected Q or GF(p))");
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::normalize(const Scalar& a) const {
    if (p_ == 0) return a;
    unsigned long num = residue(a.get_num(), p_);
    unsigned long den = residue(a.get_den(), p_);
    if (den == 0) throw InvalidArgument("denominator vanishes in " + name());
    if (den != 1) num = static_cast<unsigned long>(std::uint64_t{num} * pow_mod(den, p_ - 2, p_) % p_);
    return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a + b;
    std::uint64_t s = a.get_num().get_ui() + b.get_num().get_ui();
    return Scalar(static_cast<unsigned long>(s % p_));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a - b;
    std::uint64_t s = a.get_num().get_ui() + (p_ - b.get_num().get_ui());
    return Scalar(static_cast<unsigned long>(s % p_));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a * b;
    std::uint64_t s = std::uint64_t{a.get_num().get_ui()} * b.get_num().get_ui();
    return Scalar(static_cast<unsigned long>(s % p_));
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ == 0) return -a;
    unsigned long v = a.get_num().get_ui();
    return Scalar(v == 0 ? 0UL : static_cast<unsigned long>(p_ - v));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw InvalidArgument("division by zero");
    if (p_ == 0) return 1 / a;
    return Scalar(pow_mod(a.get_num().get_ui(), p_ - 2, p_));
}

void Field::fma(Scalar& acc, const Scalar& a, const Scalar& b) const {
    if (p_ == 0) {
        // A reused temporary avoids one allocation per call in inner loops.
        thread_local Scalar product;
        mpq_mul(product.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        acc += product;
        return;
    }
    std::uint64_t s = std::uint64_t{a.get_num().get_ui()} * b.get_num().get_ui() % p_;
    s = (s + acc.get_num().get_ui()) % p_;
    acc = static_cast<unsigned long>(s);
}

void Field::fms(Scalar& acc, const Scalar& a, const Scalar& b) const {
    if (p_ == 0) {
        thread_local Scalar product;
        mpq_mul(product.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        acc -= product;
        return;
    }
    std::uint64_t s = std::uint64_t{a.get_num().get_ui()} * b.get_num().get_ui() % p_;
    s = (acc.get_num().get_ui() + p_ - s) % p_;
    acc = static_cast<unsigned long>(s);
}

std::string Field::format(const Scalar& a) const {
    return a.get_str();
}

Scalar Field::parse(std::string_view text) const {
    std::string s(text);
    auto valid = !s.empty();
    for (std::size_t i = 0; i < s.size() && valid; ++i) {
        char c = s[i];
        valid = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    }
    Scalar v;
    if (!valid || v.set_str(s, 10) != 0 || sgn(v.get_den()) == 0)
        throw ParseError("malformed scalar \"" + s + "\"");
    v.canonicalize();
    return normalize(v);
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw FieldMismatch();
}

} // namespace locsys
