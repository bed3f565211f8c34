#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP) and prime
// fields with machine-word elements.  Every computation in the library is
// exact; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacring {

enum class FieldKind { rational, prime };

// Runtime descriptor used by the CLI and report metadata.
struct FieldMode {
    FieldKind kind = FieldKind::rational;
    std::uint64_t modulus = 0;  // set iff kind == prime
};

inline constexpr std::uint64_t default_prime = 2147483647ULL;  // 2^31 - 1

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; this base set is exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Field of rational numbers.  Stateless; every element is canonicalized by
// gmpxx (reduced fraction, positive denominator).
struct RationalField {
    using Elem = mpq_class;
    static constexpr bool is_rational_field = true;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem from_long(long v) const { return Elem(v); }
    Elem from_fraction(long long num, long long den) const {
        if (den == 0) throw std::domain_error("zero denominator");
        Elem q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
        q.canonicalize();
        return q;
    }
    Elem from_mpq(const mpq_class& q) const { return q; }
    std::string str(const Elem& a) const { return a.get_str(); }
    FieldMode mode() const { return {FieldKind::rational, 0}; }
};

// Prime field Z/p with p in (2^20, 2^31).  The lower bound makes accidental
// characteristic collisions with desk-scale binomial coefficients implausible;
// the upper bound keeps products inside 64 bits.
struct PrimeField {
    using Elem = std::uint64_t;
    static constexpr bool is_rational_field = false;
    std::uint64_t p;

    explicit PrimeField(std::uint64_t modulus = default_prime) : p(modulus) {
        if (p <= (1ULL << 20) || p > (1ULL << 31) - 1 || !is_prime_u64(p))
            throw std::invalid_argument("field modulus must be a prime in (2^20, 2^31)");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }  // a,b < 2^31
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return detail::powmod_u64(a, p - 2, p);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem from_long(long v) const {
        long long r = static_cast<long long>(v) % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }
    Elem from_fraction(long long num, long long den) const {
        if (den == 0) throw std::domain_error("zero denominator");
        Elem d = from_long(static_cast<long>(den));
        if (d == 0) throw std::domain_error("denominator divisible by field characteristic");
        return mul(from_long(static_cast<long>(num)), inv(d));
    }
    Elem from_mpq(const mpq_class& q) const {
        Elem num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
        Elem den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
        if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
        return mul(num, inv(den));
    }
    std::string str(const Elem& a) const { return std::to_string(a); }
    FieldMode mode() const { return {FieldKind::prime, p}; }
};

}  // namespace jacring
