#pragma once

#include <cstdint>
#include <string>

#include "qalg/common.hpp"
#include "qalg/rational.hpp"

namespace qalg {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Default modulus: the Mersenne prime 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;

/// The field of exact rationals. Stateless; ops delegate to the
/// multiprecision backend.
struct RationalField {
    using Elem = Rational;
    static constexpr bool fraction_free_det = true;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw ConfigError("division by zero in rational field");
        return Rational(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_rational(const Rational& r) const { return r; }
    Elem from_int(long long v) const { return Rational(v); }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r *= a;
            a *= a;
            e >>= 1;
        }
        return r;
    }
    std::string to_string(const Elem& a) const { return format_rational(a); }
    std::string describe() const { return "rational"; }
};

/// The prime field F_p for a runtime modulus p. Elements are canonical
/// residues in [0, p). Products go through 128-bit intermediates, so any
/// prime below 2^62 is safe.
struct PrimeField {
    using Elem = std::uint64_t;
    static constexpr bool fraction_free_det = false;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t modulus = kDefaultPrime) : p(modulus) {
        if (p >= (1ull << 62)) throw ConfigError("prime modulus must be below 2^62");
        if (!is_prime_u64(p)) throw ConfigError("modulus " + std::to_string(p) + " is not prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a % p == 0) throw ConfigError("division by zero in F_p");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return static_cast<Elem>(m);
    }
    /// Reduces num/den mod p; a denominator divisible by p has no image.
    Elem from_rational(const Rational& r) const {
        Integer num = numerator(r), den = denominator(r);
        Integer pm(p);
        Integer nm = num % pm;
        if (nm < 0) nm += pm;
        Integer dm = den % pm;
        if (dm == 0) throw ConfigError("rational " + format_rational(r) + " has no image mod " + std::to_string(p));
        Elem n64 = static_cast<std::uint64_t>(nm);
        Elem d64 = static_cast<std::uint64_t>(dm);
        return mul(n64, inv(d64));
    }
    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string describe() const { return "F_" + std::to_string(p); }
};

}  // namespace qalg
