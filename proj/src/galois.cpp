#include "ldpcb/galois.hpp"

#include <string>

#include "ldpcb/error.hpp"

namespace ldpcb {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) return true;  // q itself is prime
    }
    while (q % p == 0) q /= p;
    return q == 1;
}

bool is_supported_field(std::uint64_t q) {
    if (q < 2 || q > 64) return false;
    if (is_prime(q)) return true;
    return (q & (q - 1)) == 0;
}

std::uint32_t primitive_polynomial(unsigned m) {
    // x+1 (degenerate m=1), x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1
    static constexpr std::uint32_t polys[] = {0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43};
    return m >= 1 && m <= 6 ? polys[m] : 0;
}

FieldTable::FieldTable(std::uint32_t q) : q_(q) {
    if (!is_supported_field(q))
        fail(ErrorKind::Unsupported, "unsupported field order " + std::to_string(q));
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    if (is_prime(q)) {
        for (std::uint32_t a = 0; a < q; ++a) {
            neg_[a] = static_cast<std::uint8_t>((q - a) % q);
            for (std::uint32_t b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
                mul_[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
            }
        }
    } else {
        unsigned m = 0;
        while ((1u << m) < q) ++m;
        const std::uint32_t poly = primitive_polynomial(m);
        for (std::uint32_t a = 0; a < q; ++a) {
            neg_[a] = static_cast<std::uint8_t>(a);
            for (std::uint32_t b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<std::uint8_t>(a ^ b);
                // carry-less multiply then reduce modulo the primitive polynomial
                std::uint32_t acc = 0;
                for (unsigned bit = 0; bit < m; ++bit)
                    if (b & (1u << bit)) acc ^= a << bit;
                for (int bit = 2 * static_cast<int>(m) - 2; bit >= static_cast<int>(m); --bit)
                    if (acc & (1u << bit)) acc ^= poly << (bit - static_cast<int>(m));
                mul_[a * q + b] = static_cast<std::uint8_t>(acc);
            }
        }
    }
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
}

std::uint8_t FieldTable::inv(std::uint8_t a) const {
    require(a != 0 && a < q_, "inverse of zero or out-of-range element");
    return inv_[a];
}

FieldElement::FieldElement(const FieldTable& field, std::uint32_t value)
    : field_(&field), value_(static_cast<std::uint8_t>(value)) {
    require(value < field.order(), "field element out of range");
}

FieldElement operator+(FieldElement a, FieldElement b) { return {*a.field_, a.field_->add(a.value_, b.value_)}; }
FieldElement operator-(FieldElement a, FieldElement b) { return {*a.field_, a.field_->sub(a.value_, b.value_)}; }
FieldElement operator*(FieldElement a, FieldElement b) { return {*a.field_, a.field_->mul(a.value_, b.value_)}; }
FieldElement operator/(FieldElement a, FieldElement b) {
    return {*a.field_, a.field_->mul(a.value_, a.field_->inv(b.value_))};
}

}  // namespace ldpcb
