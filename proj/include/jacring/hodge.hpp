#pragma once

// Hodge-number vectors derived from graded dimensions: primitive middle
// cohomology of a smooth hypersurface, eigenspace vectors of d-th root
// covers, full diamonds, and the dimension-level consistency identity for
// second iterated covers.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graded_ring.hpp"

namespace jacring {

// Position p holds h^{m-p,p}; vectors arising from graded dimensions of a
// smooth ring are palindromic.
struct HodgeVector {
    long m = 0;
    std::vector<long long> h;
    bool primitive = false;
};

struct HodgeDiamond {
    long m = 0;
    std::vector<long long> middle;  // full middle row: primitive + ambient center class
};

// h^p of the primitive middle cohomology: dim R_{(p+1)d - (n+1)} for
// p = 0..n-1, where n is the ambient dimension; weight m = n-1.
template <class K>
HodgeVector primitive_hodge(const GradedRing<K>& ring) {
    if (!ring.is_smooth())
        throw smoothness_error("primitive Hodge numbers require a smooth form");
    const long d = ring.form_degree();
    const int n = ring.ambient_dim();
    HodgeVector out;
    out.m = n - 1;
    out.primitive = true;
    for (int p = 0; p < n; ++p)
        out.h.push_back(ring.dim((p + 1) * d - (n + 1)));
    return out;
}

// Primitive numbers plus the class of the ambient hyperplane section power
// at the center when the fibre dimension is even.
template <class K>
HodgeDiamond hodge_diamond(const GradedRing<K>& ring) {
    HodgeVector prim = primitive_hodge(ring);
    HodgeDiamond out;
    out.m = prim.m;
    out.middle = prim.h;
    if (out.m % 2 == 0) out.middle[static_cast<std::size_t>(out.m / 2)] += 1;
    return out;
}

// All rows h^{p,k-p} of the diamond for k = 0..2m; off-middle rows are those
// of projective space.
inline std::vector<std::vector<long long>> hodge_diamond_rows(const HodgeDiamond& dia) {
    std::vector<std::vector<long long>> rows;
    for (long k = 0; k <= 2 * dia.m; ++k) {
        const long lo = std::max(0L, k - dia.m);
        const long hi = std::min(k, dia.m);
        std::vector<long long> row(static_cast<std::size_t>(hi - lo + 1), 0);
        if (k == dia.m) {
            row = dia.middle;
        } else if (k % 2 == 0) {
            row[static_cast<std::size_t>(k / 2 - lo)] = 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Eigenspace vector of the d-th root cover of the base: position p holds
// dim R_{(p+1)d - i - (N+1)} for p = 0..N, where N is the base ambient
// dimension and 1 <= i <= d-1 indexes the group character.
template <class K>
HodgeVector eigen_hodge(const GradedRing<K>& base, int i) {
    const long d = base.form_degree();
    if (i < 1 || i > d - 1) throw std::out_of_range("eigen index must lie in [1, d-1]");
    if (!base.is_smooth())
        throw smoothness_error("eigenspace Hodge numbers require a smooth base form");
    const int N = base.ambient_dim();
    HodgeVector out;
    out.m = N;
    out.primitive = true;
    for (int p = 0; p <= N; ++p)
        out.h.push_back(base.dim((p + 1) * d - i - (N + 1)));
    return out;
}

// Consistency of the eigenspace decomposition: the i-eigenspaces for
// i = 1..d-1 must sum to the primitive vector of the cover's own ring.
template <class K>
bool eigen_sum_check(const GradedRing<K>& base) {
    const long d = base.form_degree();
    GradedRing<K> cover = base.root_extension();
    HodgeVector prim = primitive_hodge(cover);
    std::vector<long long> sums(prim.h.size(), 0);
    for (int i = 1; i <= d - 1; ++i) {
        HodgeVector ev = eigen_hodge(base, i);
        for (std::size_t p = 0; p < sums.size(); ++p)
            sums[p] += ev.h[p];
    }
    return sums == prim.h;
}

// Dimension bookkeeping for the second iterated cover Z_2 of X in P^n:
// the weight-(n+1) middle cohomology of Z_2, together with two constant
// center summands W and W', matches the eigenspace products of the first
// cover with the degree-d cyclic curve plus d-1 Tate twists of the middle
// cohomology of X.  Computed on Fermat fibres; the identity is
// Hilbert-series driven, hence form-independent.
struct CoverDecomposition {
    std::vector<long long> lhs;  // full middle of Z_2, weight n+1
    std::vector<long long> rhs;  // eigen convolutions + (d-1) shifted copies of X's middle
    long center = -1;            // position of the (possibly) constant summand; -1 when n even
    bool off_center_equal = false;
    long long residual_W = 0;       // minimal center excess of LHS
    long long residual_Wprime = 0;  // minimal center excess of RHS
};

template <class K>
CoverDecomposition cover_decomposition_check(long d, int n, K field = K()) {
    if (n < 1 || d < n + 1)
        throw std::invalid_argument("decomposition check requires d >= n+1 >= 2");
    auto z2 = GradedRing<K>::fermat(d, n + 3, field);   // fibre in P^{n+2}
    auto x = GradedRing<K>::fermat(d, n + 1, field);    // fibre in P^n
    auto curve = GradedRing<K>::fermat(d, 2, field);    // degree-d cyclic curve base
    CoverDecomposition out;
    out.lhs = hodge_diamond(z2).middle;
    out.rhs.assign(out.lhs.size(), 0);
    for (int i = 1; i <= d - 1; ++i) {
        HodgeVector a = eigen_hodge(x, i);
        HodgeVector b = eigen_hodge(curve, static_cast<int>(d) - i);
        for (std::size_t p = 0; p < a.h.size(); ++p)
            for (std::size_t q = 0; q < b.h.size(); ++q)
                out.rhs[p + q] += a.h[p] * b.h[q];
    }
    std::vector<long long> xmid = hodge_diamond(x).middle;  // weight n-1
    for (std::size_t p = 0; p < xmid.size(); ++p)
        out.rhs[p + 1] += (d - 1) * xmid[p];  // Tate twist: bidegree shift by (1,1)
    out.center = (n % 2 == 1) ? (n + 1) / 2 : -1;
    out.off_center_equal = true;
    for (std::size_t p = 0; p < out.lhs.size(); ++p) {
        if (static_cast<long>(p) == out.center) continue;
        if (out.lhs[p] != out.rhs[p]) out.off_center_equal = false;
    }
    if (out.center >= 0) {
        const long long diff = out.lhs[static_cast<std::size_t>(out.center)] -
                               out.rhs[static_cast<std::size_t>(out.center)];
        out.residual_W = std::max(diff, 0LL);
        out.residual_Wprime = std::max(-diff, 0LL);
    }
    return out;
}

}  // namespace jacring
