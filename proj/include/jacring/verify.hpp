#pragma once

// Bundled property suites: each returns a flat list of named checks with
// expected/actual values, ready for report serialization.  Suite contents
// mirror the documented invariants of the ring, hodge and coupling layers.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "coupling.hpp"
#include "graded_ring.hpp"
#include "hodge.hpp"
#include "linalg.hpp"

namespace jacring {

struct Check {
    std::string name;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json actual;
    bool pass = false;
};

inline Check make_check(std::string name, nlohmann::ordered_json expected,
                        nlohmann::ordered_json actual) {
    Check c;
    c.name = std::move(name);
    c.pass = expected == actual;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    return c;
}

inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace detail {

template <class K>
inline Check certificate_check(const GradedRing<K>& ring) {
    return make_check("smoothness_certificate", true, ring.is_smooth());
}

// Deterministic degree sample spanning the bottom, middle and top of [0, sigma].
inline std::vector<long> sample_degrees(long d, long sigma) {
    std::vector<long> out;
    for (long mu : {d - 1, d, sigma / 2, sigma}) {
        if (mu < 0 || mu > sigma) continue;
        if (std::find(out.begin(), out.end(), mu) == out.end()) out.push_back(mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Hilbert-series law, Gorenstein symmetry, strict growth on [1, d-1], the
// smoothness certificate, and normal_form's kernel/image behaviour.
template <class K>
std::vector<Check> verify_hilbert(const GradedRing<K>& ring) {
    std::vector<Check> checks;
    checks.push_back(detail::certificate_check(ring));
    if (!checks.back().pass) return checks;
    const long d = ring.form_degree();
    const long sigma = ring.socle_degree();

    auto series = smooth_hilbert_coeffs(d, ring.nvars());
    std::vector<long long> expected_dims(series.begin(), series.end());
    expected_dims.push_back(0);
    std::vector<long long> dims;
    for (long mu = 0; mu <= sigma + 1; ++mu) dims.push_back(ring.dim(mu));
    checks.push_back(make_check("hilbert_series", expected_dims, dims));

    std::vector<long long> reversed(dims.begin(), dims.end() - 1);
    std::reverse(reversed.begin(), reversed.end());
    std::vector<long long> forward(dims.begin(), dims.end() - 1);
    checks.push_back(make_check("gorenstein_symmetry", forward, reversed));

    for (long mu = 2; mu <= d - 1; ++mu)
        checks.push_back(make_check("strict_growth_deg_" + std::to_string(mu), true,
                                    ring.dim(mu - 1) < ring.dim(mu)));

    for (long mu : detail::sample_degrees(d, sigma)) {
        // Products (partial derivative) x (monomial) span J_mu; their normal
        // forms must vanish.
        long nonzero = 0;
        const long md = mu - (d - 1);
        if (md >= 0) {
            auto mults = monomials_of_degree(ring.nvars(), md);
            std::vector<Expo> sample(mults.begin(),
                                     mults.begin() + std::min<std::size_t>(mults.size(), 6));
            if (mults.size() > 6) sample.push_back(mults.back());
            for (const auto& p : ring.partials()) {
                if (p.is_zero()) continue;
                for (const auto& m : sample) {
                    Form<K> poly;
                    poly.nvars = ring.nvars();
                    poly.degree = mu;
                    poly.field = ring.field();
                    for (const auto& [te, tc] : p.terms) poly.terms.emplace(mono_mul(te, m), tc);
                    nonzero += static_cast<long>(ring.normal_form(poly).coords.size());
                }
            }
        }
        checks.push_back(
            make_check("normal_form_kills_jacobian_deg_" + std::to_string(mu), 0, nonzero));

        std::vector<SparseVec<K>> rows;
        for (const auto& m : monomials_of_degree(ring.nvars(), mu))
            rows.push_back(ring.monomial_class(m).coords);
        const long image_dim = static_cast<long>(
            span_reduce_sparse(std::move(rows), ring.dim(mu), ring.field()).size());
        checks.push_back(make_check("normal_form_image_dim_deg_" + std::to_string(mu),
                                    ring.dim(mu), image_dim));
    }
    return checks;
}

// Pairing perfection at every degree and surjectivity of multiplication for
// every degree pair inside the socle range.
template <class K>
std::vector<Check> verify_macaulay(const GradedRing<K>& ring) {
    std::vector<Check> checks;
    checks.push_back(detail::certificate_check(ring));
    if (!checks.back().pass) return checks;
    const long sigma = ring.socle_degree();
    for (long mu = 0; mu <= sigma; ++mu)
        checks.push_back(make_check("pairing_rank_deg_" + std::to_string(mu), ring.dim(mu),
                                    ring.pairing_rank(mu)));
    for (long mu = 0; mu <= sigma; ++mu) {
        for (long nu = mu; mu + nu <= sigma; ++nu) {
            const auto& a = ring.degree_basis(mu);
            const auto& b = ring.degree_basis(nu);
            std::vector<Expo> products;
            for (const auto& am : a)
                for (const auto& bm : b) products.push_back(mono_mul(am, bm));
            std::sort(products.begin(), products.end(), GlexDesc{});
            products.erase(std::unique(products.begin(), products.end()), products.end());
            std::vector<SparseVec<K>> rows;
            for (const auto& p : products) rows.push_back(ring.monomial_class(p).coords);
            const long rank_val = static_cast<long>(
                span_reduce_sparse(std::move(rows), ring.dim(mu + nu), ring.field()).size());
            checks.push_back(make_check(
                "surjectivity_deg_" + std::to_string(mu) + "_" + std::to_string(nu),
                ring.dim(mu + nu), rank_val));
        }
    }
    return checks;
}

// Full-complex acyclicity at three deterministic degrees: all spots r >= 1
// vanish (the partials of a smooth form are a regular sequence) and spot 0
// recovers dim R_mu through an independent construction.
template <class K>
std::vector<Check> verify_koszul(const GradedRing<K>& ring) {
    std::vector<Check> checks;
    checks.push_back(detail::certificate_check(ring));
    if (!checks.back().pass) return checks;
    const long d = ring.form_degree();
    const int p = ring.nvars();
    for (long mu : {d - 1, 2 * (d - 1), 3 * (d - 1)}) {
        auto kd = ring.koszul_cohomology(mu, p);
        std::vector<long> high(kd.dims.begin(), kd.dims.end() - 1);  // spots p..1
        checks.push_back(make_check("koszul_exact_deg_" + std::to_string(mu),
                                    std::vector<long>(high.size(), 0), high));
        checks.push_back(make_check("koszul_end_deg_" + std::to_string(mu), ring.dim(mu),
                                    kd.dims.back()));
    }
    return checks;
}

// Root-extension bookkeeping: the dimension sum rule, the eigenspace sum
// against the extension's own primitive vector, eigenspace reversal under
// i -> d-i, and (on small or monomial bases) the grading decomposition of
// coupling lengths along the new variable.
template <class K>
std::vector<Check> verify_tower(const GradedRing<K>& base) {
    std::vector<Check> checks;
    checks.push_back(detail::certificate_check(base));
    if (!checks.back().pass) return checks;
    const long d = base.form_degree();
    GradedRing<K> ext = base.root_extension();
    const long sigma_ext = ext.socle_degree();

    std::vector<long long> expected_dims, actual_dims;
    for (long mu = 0; mu <= sigma_ext + 1; ++mu) {
        long long sum = 0;
        for (long e = 0; e <= d - 2; ++e) sum += base.dim(mu - e);
        expected_dims.push_back(sum);
        actual_dims.push_back(ext.dim(mu));
    }
    checks.push_back(make_check("tower_dimension_rule", expected_dims, actual_dims));

    HodgeVector prim = primitive_hodge(ext);
    for (std::size_t p = 0; p < prim.h.size(); ++p) {
        long long sum = 0;
        for (int i = 1; i <= d - 1; ++i) sum += eigen_hodge(base, i).h[p];
        checks.push_back(
            make_check("eigen_sum_p" + std::to_string(p), prim.h[p], sum));
    }

    for (int i = 1; i <= d - 1; ++i) {
        auto fwd = eigen_hodge(base, i).h;
        auto rev = eigen_hodge(base, static_cast<int>(d) - i).h;
        std::reverse(rev.begin(), rev.end());
        checks.push_back(make_check("eigen_reversal_i" + std::to_string(i), rev, fwd));
    }

    if (base.socle_degree() <= 9 || base.monomial_jacobian()) {
        DegreeSubspace<K> vbase = tangent_subspace_full(base);
        DegreeSubspace<K> vext = lifted_tangent(base, ext);
        for (long mu = 0; mu <= sigma_ext; ++mu) {
            long expected = 0;
            for (long e = 0; e <= d - 2; ++e)
                expected = std::max(expected, coupling_length(base, vbase, mu - e));
            checks.push_back(make_check("y_grading_length_deg_" + std::to_string(mu), expected,
                                        coupling_length(ext, vext, mu)));
        }
    }
    return checks;
}

// Profile laws for V = full R_d: terminal zero, weak monotonicity, the step
// bound, the upper bound by the ambient dimension, the exact window where
// the (n-1)-st power survives, and the constancy plateau.
template <class K>
std::vector<Check> verify_lemma18(const GradedRing<K>& ring) {
    std::vector<Check> checks;
    checks.push_back(detail::certificate_check(ring));
    if (!checks.back().pass) return checks;
    const long d = ring.form_degree();
    const int n = ring.ambient_dim();
    const long sigma = ring.socle_degree();
    CouplingProfile prof = coupling_profile(ring, tangent_subspace_full(ring));

    checks.push_back(make_check("profile_socle_zero", 0, prof.lengths.back()));

    bool nonincreasing = true;
    for (std::size_t mu = 1; mu < prof.lengths.size(); ++mu)
        if (prof.lengths[mu] > prof.lengths[mu - 1]) nonincreasing = false;
    checks.push_back(make_check("profile_nonincreasing", true, nonincreasing));

    bool step_ok = true;
    for (long mu = 0; mu + d <= sigma; ++mu)
        if (prof.lengths[static_cast<std::size_t>(mu)] - 1 >
            prof.lengths[static_cast<std::size_t>(mu + d)])
            step_ok = false;
    checks.push_back(make_check("profile_step_bound", true, step_ok));

    bool bounded = true;
    for (long v : prof.lengths)
        if (v > n) bounded = false;
    checks.push_back(make_check("profile_bounded_by_n", true, bounded));

    if (d >= n + 1 && d < 2 * (n + 1)) {
        // The (n-1)-st multiplication power survives exactly on [0, 2d-2(n+1)].
        std::vector<long> expected_window, actual_window;
        for (long mu = 0; mu <= 2 * d - 2 * (n + 1); ++mu) expected_window.push_back(mu);
        for (long mu = 0; mu <= sigma; ++mu)
            if (prof.lengths[static_cast<std::size_t>(mu)] >= n - 1) actual_window.push_back(mu);
        checks.push_back(make_check("power_n_minus_1_window", expected_window, actual_window));
    }
    if (d < 2 * (n + 1)) {
        long max_len = 0;
        for (long v : prof.lengths) max_len = std::max(max_len, v);
        checks.push_back(make_check("no_power_n", true, max_len <= n - 1));
    }
    if (d >= n + 1 && prof.lengths[static_cast<std::size_t>(d - n - 1)] < n - 1) {
        bool constant = true;
        for (long mu = 1; mu <= 2 * (d - n - 1); ++mu)
            if (prof.lengths[static_cast<std::size_t>(mu)] != prof.lengths[0]) constant = false;
        checks.push_back(make_check("plateau_constant", true, constant));
    }
    return checks;
}

// Dimension-level decomposition identity for second iterated covers.
template <class K>
std::vector<Check> verify_prop64(long d, int n, K field = K()) {
    CoverDecomposition res = cover_decomposition_check<K>(d, n, field);
    std::vector<Check> checks;
    checks.push_back(make_check("off_center_equal", true, res.off_center_equal));
    checks.push_back(make_check("residual_W_nonnegative", true, res.residual_W >= 0));
    checks.push_back(make_check("residual_Wprime_nonnegative", true, res.residual_Wprime >= 0));
    if (n % 2 == 0) {
        checks.push_back(make_check("residuals_zero_for_even_n",
                                    std::vector<long long>{0, 0},
                                    std::vector<long long>{res.residual_W, res.residual_Wprime}));
    }
    return checks;
}

// Length table against the closed form.
template <class K>
std::vector<Check> verify_theorem65(long d, int n, BaseKind kind, std::uint64_t seed,
                                    K field = K()) {
    TowerTable table = tower_length_table<K>(d, n, kind, seed, field);
    std::vector<Check> checks;
    for (const auto& row : table.rows)
        checks.push_back(make_check("length_level_" + std::to_string(row.level),
                                    row.closed_form, row.computed));
    return checks;
}

}  // namespace jacring
