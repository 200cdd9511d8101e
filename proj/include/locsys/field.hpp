#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace locsys {

/// Exact scalar. Over GF(p) only integers in [0, p) are stored.
using Scalar = mpq_class;

/// The ground field: the rationals (characteristic 0) or a prime field GF(p).
///
/// Scalars carry no field tag of their own; every container (Mat, Subspace,
/// Algebra) holds a Field and all arithmetic goes through it.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws InvalidArgument unless p is a prime below 2^32.
    static Field prime(std::uint64_t p);
    /// Parses "Q" or "GF(p)".
    static Field from_name(std::string_view name);

    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_rationals() const noexcept { return p_ == 0; }
    std::string name() const;

    Scalar normalize(const Scalar& a) const;
    Scalar from_int(long long v) const { return normalize(Scalar(static_cast<long>(v))); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Throws InvalidArgument on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    /// acc += a * b
    void fma(Scalar& acc, const Scalar& a, const Scalar& b) const;
    /// acc -= a * b
    void fms(Scalar& acc, const Scalar& a, const Scalar& b) const;

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    /// Rationals as "a/b" (b > 0, reduced, "a" when b = 1); GF(p) as the
    /// decimal representative.
    std::string format(const Scalar& a) const;
    /// Accepts "a", "-a", "a/b"; over GF(p) the value is reduced mod p.
    Scalar parse(std::string_view text) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// Throws FieldMismatch when the two fields differ.
void require_same_field(const Field& a, const Field& b);

} // namespace locsys
