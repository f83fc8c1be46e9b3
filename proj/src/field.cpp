#include "lkss/field.hpp"

namespace lkss {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % q);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t q) {
    uint64_t r = 1 % q;
    a %= q;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, q);
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t q) {
    a %= q;
    if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(q) + ")");
    // Fermat: a^(q-2). q is prime by construction.
    return pow_mod(a, q - 2, q);
}

namespace {

bool miller_rabin(uint64_t n, uint64_t a, uint64_t d, int r) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // This witness set decides primality for all n < 3.3e24, which covers uint64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a, d, r)) return false;
    }
    return true;
}

PrimeField::PrimeField(uint64_t q) : q_(q) {
    if (!is_prime_u64(q))
        throw InvalidParamsError("modulus " + std::to_string(q) + " is not prime");
    if (q > (1ull << 63))
        throw InvalidParamsError("modulus must fit in 63 bits");
}

}  // namespace lkss
