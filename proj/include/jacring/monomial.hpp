#pragma once

// Monomials as exponent vectors, graded-lexicographic order with x0 > x1 > ...,
// and enumeration of the degree-mu monomials of a polynomial ring.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jacring {

// One entry per variable; degree is always recomputed from the entries.
using Expo = std::vector<std::uint16_t>;

inline long mono_degree(const Expo& e) {
    long s = 0;
    for (auto x : e) s += x;
    return s;
}

// True when a comes before b in descending graded-lex order (larger degree
// first, ties broken lexicographically with x0 dominant).
inline bool glex_desc(const Expo& a, const Expo& b) {
    long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponents, x0 first
}

struct GlexDesc {
    bool operator()(const Expo& a, const Expo& b) const { return glex_desc(a, b); }
};

struct ExpoHash {
    std::size_t operator()(const Expo& e) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : e) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

inline Expo mono_mul(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent vectors of different lengths");
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

// All monomials of degree mu in nvars variables, in descending graded-lex
// order (x0^mu first, x_{nvars-1}^mu last).  Empty for mu < 0.
inline std::vector<Expo> monomials_of_degree(int nvars, long mu) {
    std::vector<Expo> out;
    if (mu < 0 || nvars <= 0) return out;
    Expo cur(static_cast<std::size_t>(nvars), 0);
    // Depth-first over positions, taking the largest exponent first.
    auto rec = [&](auto&& self, int pos, long rem) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(rem);
            out.push_back(cur);
            return;
        }
        for (long e = rem; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(e);
            self(self, pos + 1, rem - e);
        }
    };
    rec(rec, 0, mu);
    return out;
}

// Exact binomial coefficient in 64 bits; throws on overflow instead of
// wrapping (desk-scale inputs never get close).
inline long long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (long i = 1; i <= k; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(r) * static_cast<unsigned long long>(n - k + i);
        t /= static_cast<unsigned long long>(i);
        if (t > static_cast<unsigned __int128>(0x7fffffffffffffffULL))
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
        r = static_cast<unsigned long long>(t);
    }
    return static_cast<long long>(r);
}

inline long long mono_count(int nvars, long mu) {
    if (mu < 0) return 0;
    return binom(mu + nvars - 1, nvars - 1);
}

}  // namespace jacring
