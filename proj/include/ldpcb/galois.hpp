#pragma once

#include <cstdint>
#include <vector>

namespace ldpcb {

/// True for prime powers q >= 2 (any size representable in 64 bits).
bool is_prime_power(std::uint64_t q);

/// Field orders with arithmetic tables: primes up to 64 and 2^m for m <= 6.
bool is_supported_field(std::uint64_t q);

/// Primitive polynomial (bit mask, including the leading x^m term) used for
/// GF(2^m); 0 for m outside 1..6.
std::uint32_t primitive_polynomial(unsigned m);

/// Addition / multiplication tables for GF(q). Elements are 0..q-1; for
/// GF(2^m) an element's bits are its coefficients in the polynomial basis.
class FieldTable {
public:
    explicit FieldTable(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
    /// Multiplicative inverse; a must be nonzero.
    std::uint8_t inv(std::uint8_t a) const;

private:
    std::uint32_t q_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

/// A value tied to its field; arithmetic stays in [0, q).
class FieldElement {
public:
    FieldElement(const FieldTable& field, std::uint32_t value);

    std::uint8_t value() const noexcept { return value_; }
    const FieldTable& field() const noexcept { return *field_; }

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator-(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend FieldElement operator/(FieldElement a, FieldElement b);
    FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
    friend bool operator==(FieldElement a, FieldElement b) { return a.value_ == b.value_; }

private:
    const FieldTable* field_;
    std::uint8_t value_;
};

}  // namespace ldpcb
