#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlie/errors.hpp"

namespace modlie {

/// Field elements are stored as canonical representatives in [0, p).
using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// The prime field F_p. Cheap to copy; all operations are exact.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p) : p_(static_cast<Scalar>(p)) {
        if (!is_prime(p) || p > (std::int64_t{1} << 31))
            throw InvalidArgument("modulus " + std::to_string(p) + " is not a supported prime");
    }

    Scalar p() const { return p_; }

    Scalar from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Scalar>(r);
    }

    /// Symmetric lift into (-p/2, p/2], used only for display.
    std::int64_t to_signed(Scalar a) const {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Scalar pow(Scalar a, std::uint64_t e) const {
        Scalar r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Scalar inv(Scalar a) const {
        if (a == 0) throw InvalidArgument("division by zero in F_p");
        return pow(a, p_ - 2);
    }

    /// Sign (-1)^k as a field element.
    Scalar sign(std::int64_t k) const { return (k % 2 == 0) ? 1 % p_ : p_ - 1; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    Scalar p_;
};

/// C(n, k) mod p by Lucas' theorem. Zero whenever k < 0 or k > n.
inline Scalar lucas_binomial(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (!is_prime(p)) throw InvalidArgument("lucas_binomial: modulus " + std::to_string(p) + " is not prime");
    if (n < 0) throw InvalidArgument("lucas_binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    const PrimeField F(p);
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        std::int64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // C(nd, kd) mod p with nd < p: multiplicative formula with modular inverse.
        std::uint64_t num = 1, den = 1;
        for (std::int64_t i = 0; i < kd; ++i) {
            num = num * static_cast<std::uint64_t>(nd - i) % static_cast<std::uint64_t>(p);
            den = den * static_cast<std::uint64_t>(i + 1) % static_cast<std::uint64_t>(p);
        }
        result = result * F.mul(static_cast<Scalar>(num), F.inv(static_cast<Scalar>(den))) % static_cast<std::uint64_t>(p);
        n /= p;
        k /= p;
    }
    return static_cast<Scalar>(result);
}

/// n! mod p, computed by direct product.
inline Scalar factorial_mod(std::int64_t n, const PrimeField& F) {
    Scalar r = 1 % F.p();
    for (std::int64_t i = 2; i <= n; ++i) r = F.mul(r, F.from_int(i));
    return r;
}

/// Integer power for small exponents; throws on overflow.
inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (std::int64_t{1} << 62) / (base == 0 ? 1 : base)) throw InvalidArgument("ipow overflow");
        r *= base;
    }
    return r;
}

/// Exact integer binomial for dimension bookkeeping (not reduced mod p).
inline std::int64_t binom_int(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace modlie
