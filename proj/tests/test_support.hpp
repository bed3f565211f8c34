#pragma once

// Shared helpers for the test suite: independent oracles that recompute
// library answers by a different method, and a tiny subprocess runner for
// CLI round-trips.  The oracles deliberately avoid the library's code paths
// (polynomial convolution, sparse rref) so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <gmpxx.h>

namespace testsupport {

// Number of exponent vectors e in [0, d-2]^nvars with sum mu.  For a Fermat
// form this counts the standard monomials of R_mu directly, term by term,
// without any linear algebra or series manipulation.
inline long long capped_count(long mu, long d, int nvars) {
    if (mu < 0) return 0;
    if (nvars == 0) return mu == 0 ? 1 : 0;
    long long total = 0;
    const long cap = d - 2;
    for (long e = 0; e <= cap && e <= mu; ++e) total += capped_count(mu - e, d, nvars - 1);
    return total;
}

inline long long binom_ll(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficient of t^mu in ((1 - t^{d-1}) / (1 - t))^nvars via inclusion:
// expand (1 - t^{d-1})^nvars binomially against the stars-and-bars series of
// (1 - t)^{-nvars}.  Exact for every mu >= 0, zero beyond the socle.
inline long long hilbert_dim_binomial(long mu, long d, int nvars) {
    long long total = 0;
    for (int j = 0; j <= nvars; ++j) {
        long long shifted = static_cast<long long>(mu) - static_cast<long long>(j) * (d - 1);
        long long c = binom_ll(nvars, j) * binom_ll(shifted + nvars - 1, nvars - 1);
        total += (j % 2 == 0) ? c : -c;
    }
    return total;
}

// Textbook dense Gauss-Jordan over the rationals; no pivoting strategy, no
// sparsity, no fraction clearing.  Cross-checks the sparse integer engine.
inline long dense_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    long rk = 0;
    for (std::size_t c = 0; c < cols && rk < static_cast<long>(rows); ++c) {
        std::size_t piv = rows;
        for (std::size_t r = static_cast<std::size_t>(rk); r < rows; ++r)
            if (sgn(m[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[static_cast<std::size_t>(rk)], m[piv]);
        mpq_class lead = m[static_cast<std::size_t>(rk)][c];
        for (auto& v : m[static_cast<std::size_t>(rk)]) v /= lead;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rk) || sgn(m[r][c]) == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[static_cast<std::size_t>(rk)][k];
        }
        ++rk;
    }
    return rk;
}

// Small deterministic generator for test matrices (not the library's one).
struct TestRng {
    std::uint64_t s;
    explicit TestRng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) {  // inclusive range
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI built by this same build tree; stderr is discarded so JSON
// parsing sees stdout only.
inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(JACRING_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace testsupport
