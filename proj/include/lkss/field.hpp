#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lkss/errors.hpp"

namespace lkss {

// Modular helpers on raw uint64 residues. Hot paths (matrix elimination,
// block reconstruction) use these directly instead of FieldElement.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t q);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t q);
uint64_t inv_mod(uint64_t a, uint64_t q);  // throws DivisionByZeroError on a == 0
inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t q) {
    uint64_t s = a + b;  // a, b < q <= 2^63 so no wrap
    return s >= q ? s - q : s;
}
inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t q) {
    return a >= b ? a - b : a + q - b;
}

/// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime_u64(uint64_t n);

class PrimeField;

/// Element of GF(q). Carries its modulus; mixing moduli in one expression
/// throws FieldMismatchError. Construct through PrimeField::element.
class FieldElement {
public:
    uint64_t value() const { return value_; }
    uint64_t modulus() const { return q_; }

    FieldElement& operator+=(const FieldElement& o) {
        check_same(o);
        value_ = add_mod(value_, o.value_, q_);
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        check_same(o);
        value_ = sub_mod(value_, o.value_, q_);
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        check_same(o);
        value_ = mul_mod(value_, o.value_, q_);
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) {
        check_same(o);
        value_ = mul_mod(value_, inv_mod(o.value_, q_), q_);
        return *this;
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator-(const FieldElement& a) {
        return FieldElement(a.value_ == 0 ? 0 : a.q_ - a.value_, a.q_);
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    bool is_zero() const { return value_ == 0; }

private:
    friend class PrimeField;
    friend FieldElement inv(const FieldElement&);
    friend FieldElement eval_poly(std::span<const FieldElement>, const FieldElement&);

    FieldElement(uint64_t v, uint64_t q) : value_(v), q_(q) {}

    void check_same(const FieldElement& o) const {
        if (q_ != o.q_)
            throw FieldMismatchError("elements of GF(" + std::to_string(q_) + ") and GF(" +
                                     std::to_string(o.q_) + ") mixed in one expression");
    }

    uint64_t value_;
    uint64_t q_;
};

/// GF(q) for prime q. The constructor proves primality; copies are free.
class PrimeField {
public:
    explicit PrimeField(uint64_t q);

    uint64_t modulus() const { return q_; }

    FieldElement element(uint64_t v) const { return FieldElement(v % q_, q_); }
    FieldElement zero() const { return FieldElement(0, q_); }
    FieldElement one() const { return FieldElement(1 % q_, q_); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.q_ != b.q_; }

private:
    uint64_t q_;
};

inline FieldElement inv(const FieldElement& a) {
    return FieldElement(inv_mod(a.value(), a.modulus()), a.modulus());
}

/// Horner evaluation of coeffs[0] + coeffs[1] x + ... at x. Empty -> 0.
inline FieldElement eval_poly(std::span<const FieldElement> coeffs, const FieldElement& x) {
    FieldElement acc(0, x.modulus());
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i];
    }
    return acc;
}

}  // namespace lkss
