#pragma once

// Graded quotient R = S/J of a polynomial ring by the ideal J generated by
// the partial derivatives of a homogeneous form F of degree d.  Exposes
// per-degree dimensions, standard-monomial bases, normal forms,
// multiplication, the socle pairing, a smoothness certificate, d-th root
// extensions (cyclic covers at ring level) and truncated Koszul complexes.
//
// Internally the variables are split into the connected components of the
// term/variable incidence graph of F.  When F = F_1 + F_2 with disjoint
// variable sets, J = J_1 + J_2 and a Groebner basis of J is the union of
// Groebner bases of the J_i (S-pairs of coprime lead terms reduce to zero),
// so lead-term ideals, standard monomials and normal forms all factor
// through the blocks.  A Fermat form splits into one variable per block and
// every computation on it is purely combinatorial; a root extension adds one
// singleton block.  Each block is handled by generic exact linear algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"
#include "form.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

namespace jacring {

// Coefficient sequence of ((1 - t^{d-1})/(1 - t))^{nvars}, the Hilbert
// series shared by every smooth form of degree d in nvars variables.
inline std::vector<long long> smooth_hilbert_coeffs(long d, int nvars) {
    std::vector<long long> acc{1};
    std::vector<long long> factor(static_cast<std::size_t>(d - 1), 1);  // 1 + t + ... + t^{d-2}
    for (int i = 0; i < nvars; ++i) {
        std::vector<long long> next(acc.size() + factor.size() - 1, 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < factor.size(); ++b) next[a + b] += acc[a] * factor[b];
        acc = std::move(next);
    }
    return acc;
}

namespace detail {

template <class K>
struct BlockDeg {
    std::vector<Expo> monos;  // block-local monomials of this degree, descending graded-lex
    std::unordered_map<Expo, std::int32_t, ExpoHash> index;
    std::vector<std::int32_t> std_cols;  // non-pivot columns, ascending
    std::vector<std::int32_t> col_to_std;  // column -> standard position, -1 for pivots
    std::unordered_map<std::int32_t, SparseVec<K>> reduce;  // pivot column -> coords over std positions
    long dim = 0;
};

template <class K>
struct Block {
    std::vector<int> vars;  // global variable indices, ascending
    Form<K> form;           // in block-local variables; zero when no term touches the block
    std::vector<Form<K>> partials;
    long d = 0;
    long socle = 0;  // vars.size() * (d - 2)

    mutable std::shared_mutex mx;
    mutable std::map<long, std::shared_ptr<const BlockDeg<K>>> cache;
    mutable std::optional<bool> artinian;
};

template <class K>
struct RingDeg {
    std::vector<Expo> std_monos;  // global standard monomials, descending graded-lex
    std::unordered_map<Expo, std::int32_t, ExpoHash> index;
};

template <class K>
struct RingImpl {
    Form<K> form;
    std::vector<Form<K>> partials;
    long d = 0;
    int nvars = 0;
    long socle = 0;
    K field{};
    std::vector<std::unique_ptr<Block<K>>> blocks;
    std::vector<int> var_block;  // global var -> block index
    std::vector<int> var_local;  // global var -> position inside its block

    mutable std::shared_mutex smooth_mx;
    mutable std::optional<bool> smooth;

    mutable std::shared_mutex dim_mx;
    mutable std::map<long, long> dim_cache;

    mutable std::shared_mutex deg_mx;
    mutable std::map<long, std::shared_ptr<const RingDeg<K>>> deg_cache;
};

}  // namespace detail

// A homogeneous element of R_mu in coordinates over the standard-monomial
// basis of its degree.  Classes remember their ring for mismatch detection.
template <class K>
struct GradedClass {
    long mu = 0;
    SparseVec<K> coords;
    std::shared_ptr<const detail::RingImpl<K>> ring;

    bool is_zero() const { return coords.empty(); }
};

template <class K>
struct KoszulDims {
    std::vector<long> dims;          // cohomology dimensions at spots p, p-1, ..., 0
    bool identification_range = false;  // mu >= p(d-1) - n
};

template <class K>
class GradedRing {
  public:
    explicit GradedRing(Form<K> f) : impl_(build(std::move(f))) {}

    static GradedRing fermat(long d, int nvars, K field = K()) {
        check_params(d, nvars);
        return GradedRing(fermat_form(d, nvars, field));
    }

    // Deterministic search: draws a candidate form from (seed, attempt) until
    // the smoothness certificate holds.
    static GradedRing random_smooth(long d, int nvars, K field, std::uint64_t seed,
                                    int max_tries = 64) {
        check_params(d, nvars);
        for (int attempt = 0; attempt < max_tries; ++attempt) {
            Form<K> f = random_form(d, nvars, field, seed, static_cast<std::uint64_t>(attempt));
            if (f.is_zero()) continue;
            GradedRing ring(std::move(f));
            if (ring.is_smooth()) return ring;
        }
        throw smoothness_error("no smooth form of degree " + std::to_string(d) + " in " +
                               std::to_string(nvars) + " variables found in " +
                               std::to_string(max_tries) + " attempts from the given seed");
    }

    const Form<K>& form() const { return impl_->form; }
    const std::vector<Form<K>>& partials() const { return impl_->partials; }
    long form_degree() const { return impl_->d; }
    int nvars() const { return impl_->nvars; }
    int ambient_dim() const { return impl_->nvars - 1; }  // n, with the fibre in P^n
    long socle_degree() const { return impl_->socle; }
    const K& field() const { return impl_->field; }

    bool same_ring(const GradedRing& other) const { return impl_ == other.impl_; }

    // True when every partial derivative is a single monomial (Fermat-like
    // forms); all answers are then exact combinatorics in any field mode.
    bool monomial_jacobian() const {
        for (const auto& p : impl_->partials)
            if (p.terms.size() > 1) return false;
        return true;
    }

    long dim(long mu) const { return dim_impl(*impl_, mu); }

    // Standard monomials of degree mu (complement of the lead monomials of
    // the rref of J_mu), descending graded-lex.  Cached per degree.
    const std::vector<Expo>& degree_basis(long mu) const {
        if (mu < 0) throw std::invalid_argument("degree_basis: negative degree");
        return ring_deg(*impl_, mu)->std_monos;
    }

    // Class of 1 in R_0.
    GradedClass<K> one() const { return unit_class(0, 0); }

    // The class of the i-th standard monomial of degree mu.
    GradedClass<K> unit_class(long mu, std::int32_t i) const {
        if (i < 0 || i >= dim(mu)) throw std::out_of_range("unit_class: index out of range");
        GradedClass<K> c;
        c.mu = mu;
        c.coords.emplace_back(i, impl_->field.one());
        c.ring = impl_;
        return c;
    }

    // Normal form (class in R_mu) of a single monomial of degree mu.
    GradedClass<K> monomial_class(const Expo& e) const {
        if (static_cast<int>(e.size()) != impl_->nvars)
            throw std::invalid_argument("monomial_class: wrong variable count");
        GradedClass<K> c;
        c.mu = mono_degree(e);
        c.coords = nf_monomial(*impl_, e);
        c.ring = impl_;
        return c;
    }

    // Normal form of a homogeneous polynomial; linear, vanishes exactly on J.
    GradedClass<K> normal_form(const Form<K>& poly) const {
        if (poly.nvars != impl_->nvars)
            throw std::invalid_argument("normal_form: wrong variable count");
        for (const auto& [e, c] : poly.terms)
            if (mono_degree(e) != poly.degree)
                throw std::invalid_argument("normal_form: inhomogeneous input");
        GradedClass<K> out;
        out.mu = poly.degree;
        out.ring = impl_;
        std::map<std::int32_t, typename K::Elem> acc;
        for (const auto& [e, c] : poly.terms)
            for (const auto& [i, v] : nf_monomial(*impl_, e)) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, impl_->field.mul(c, v));
                else
                    it->second = impl_->field.add(it->second, impl_->field.mul(c, v));
            }
        for (auto& [i, v] : acc)
            if (!impl_->field.is_zero(v)) out.coords.emplace_back(i, std::move(v));
        return out;
    }

    GradedClass<K> multiply(const GradedClass<K>& a, const GradedClass<K>& b) const {
        if (a.ring != impl_ || b.ring != impl_)
            throw std::invalid_argument("multiply: classes belong to a different ring");
        const auto& field = impl_->field;
        const auto& basis_a = degree_basis(a.mu);
        const auto& basis_b = degree_basis(b.mu);
        // Accumulate coefficients per product monomial first, then reduce each
        // distinct monomial once.
        std::map<Expo, typename K::Elem, GlexDesc> prod;
        for (const auto& [ia, ca] : a.coords)
            for (const auto& [ib, cb] : b.coords) {
                Expo m = mono_mul(basis_a[static_cast<std::size_t>(ia)],
                                  basis_b[static_cast<std::size_t>(ib)]);
                auto c = field.mul(ca, cb);
                auto it = prod.find(m);
                if (it == prod.end())
                    prod.emplace(std::move(m), std::move(c));
                else
                    it->second = field.add(it->second, c);
            }
        GradedClass<K> out;
        out.mu = a.mu + b.mu;
        out.ring = impl_;
        std::map<std::int32_t, typename K::Elem> acc;
        for (const auto& [m, c] : prod) {
            if (field.is_zero(c)) continue;
            for (const auto& [i, v] : nf_monomial(*impl_, m)) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, field.mul(c, v));
                else
                    it->second = field.add(it->second, field.mul(c, v));
            }
        }
        for (auto& [i, v] : acc)
            if (!field.is_zero(v)) out.coords.emplace_back(i, std::move(v));
        return out;
    }

    // Coefficient of a class of degree sigma on the one-dimensional socle.
    typename K::Elem socle_coordinate(const GradedClass<K>& a) const {
        if (a.ring != impl_) throw std::invalid_argument("socle_coordinate: wrong ring");
        if (a.mu != impl_->socle)
            throw std::invalid_argument("socle_coordinate: class not in the socle degree");
        if (!is_smooth())
            throw smoothness_error("socle_coordinate requires a smooth form (1-dimensional socle)");
        return a.coords.empty() ? impl_->field.zero() : a.coords.front().second;
    }

    // Rank of the multiplication pairing R_mu x R_{sigma-mu} -> R_sigma in
    // socle coordinates; equals dim R_mu for smooth forms (perfect pairing).
    long pairing_rank(long mu) const {
        if (mu < 0 || mu > impl_->socle)
            throw std::out_of_range("pairing_rank: degree outside [0, sigma]");
        if (!is_smooth())
            throw smoothness_error("pairing_rank requires a smooth form (1-dimensional socle)");
        const auto& field = impl_->field;
        const auto& A = degree_basis(mu);
        const auto& B = degree_basis(impl_->socle - mu);
        std::unordered_map<Expo, typename K::Elem, ExpoHash> socle_coeff;
        ExactMatrix<K> m(static_cast<std::int64_t>(B.size()), field);
        for (const auto& a : A) {
            SparseVec<K> row;
            for (std::size_t j = 0; j < B.size(); ++j) {
                Expo p = mono_mul(a, B[j]);
                auto it = socle_coeff.find(p);
                if (it == socle_coeff.end()) {
                    auto nf = nf_monomial(*impl_, p);
                    it = socle_coeff.emplace(std::move(p),
                                             nf.empty() ? field.zero() : nf.front().second).first;
                }
                if (!field.is_zero(it->second))
                    row.emplace_back(static_cast<std::int32_t>(j), it->second);
            }
            m.rows.push_back(std::move(row));
        }
        return rank(m);
    }

    // Certificate: dim R_{sigma+1} = 0.  J is generated in degree d-1 >= 1
    // and R is generated in degree 1, so R_{sigma+1} = 0 forces R_mu = 0 for
    // all mu > sigma; an Artinian Jacobian ring means the partials have no
    // common projective zero, i.e. the form is smooth (and conversely the
    // partials of a smooth form are a regular sequence, so R vanishes above
    // sigma).  Evaluated blockwise: R is the tensor product of its variable
    // blocks, so R_{sigma+1} = 0 iff every block vanishes above its own socle.
    bool is_smooth() const {
        {
            std::shared_lock lk(impl_->smooth_mx);
            if (impl_->smooth) return *impl_->smooth;
        }
        bool ok = true;
        for (const auto& b : impl_->blocks)
            if (!block_artinian(*b)) ok = false;
        std::unique_lock lk(impl_->smooth_mx);
        if (!impl_->smooth) impl_->smooth = ok;
        return *impl_->smooth;
    }

    // Ring of y^d + F in nvars+1 variables (the d-th root cover); its
    // Jacobian ideal is J + (y^{d-1}).
    GradedRing root_extension() const {
        if (!is_smooth()) throw smoothness_error("root_extension requires a smooth base form");
        Form<K> f;
        f.nvars = impl_->nvars + 1;
        f.degree = impl_->d;
        f.field = impl_->field;
        for (const auto& [e, c] : impl_->form.terms) {
            Expo lifted = e;
            lifted.push_back(0);
            f.terms.emplace(std::move(lifted), c);
        }
        Expo y(static_cast<std::size_t>(f.nvars), 0);
        y.back() = static_cast<std::uint16_t>(impl_->d);
        f.terms.emplace(std::move(y), impl_->field.one());
        return GradedRing(std::move(f));
    }

    // Truncated Koszul complex on all nvars partials, spots r = p, ..., 0;
    // term r is binom(nvars, r) copies of the full polynomial space in degree
    // mu - r(d-1), with differential e_{i1<...<ir} x m -> sum_j (-1)^j
    // e_{i1<...<ir, i_j omitted} x (dF/dx_{i_j} * m).  Spot 0 equals dim R_mu
    // for p >= 1.
    KoszulDims<K> koszul_cohomology(long mu, int p) const {
        if (p < 0) throw std::invalid_argument("koszul_cohomology: p must be >= 0");
        const int N = impl_->nvars;
        const long d1 = impl_->d - 1;
        // Term sizes and monomial tables.
        std::vector<std::vector<Expo>> monos(static_cast<std::size_t>(p) + 1);
        std::vector<std::unordered_map<Expo, std::int32_t, ExpoHash>> mono_idx(
            static_cast<std::size_t>(p) + 1);
        std::vector<long> tdim(static_cast<std::size_t>(p) + 1, 0);
        std::vector<std::vector<std::vector<int>>> subs(static_cast<std::size_t>(p) + 1);
        std::vector<std::unordered_map<std::uint64_t, std::int32_t>> sub_idx(
            static_cast<std::size_t>(p) + 1);
        for (int r = 0; r <= p; ++r) {
            if (r > N) continue;
            monos[static_cast<std::size_t>(r)] = monomials_of_degree(N, mu - static_cast<long>(r) * d1);
            auto& mi = mono_idx[static_cast<std::size_t>(r)];
            for (std::size_t k = 0; k < monos[static_cast<std::size_t>(r)].size(); ++k)
                mi.emplace(monos[static_cast<std::size_t>(r)][k], static_cast<std::int32_t>(k));
            subs[static_cast<std::size_t>(r)] = subsets_of(N, r);
            auto& si = sub_idx[static_cast<std::size_t>(r)];
            for (std::size_t k = 0; k < subs[static_cast<std::size_t>(r)].size(); ++k)
                si.emplace(subset_key(subs[static_cast<std::size_t>(r)][k]),
                           static_cast<std::int32_t>(k));
            tdim[static_cast<std::size_t>(r)] =
                static_cast<long>(subs[static_cast<std::size_t>(r)].size()) *
                static_cast<long>(monos[static_cast<std::size_t>(r)].size());
        }
        // Ranks of the differentials d_r : T_r -> T_{r-1}.
        std::vector<long> rk(static_cast<std::size_t>(p) + 2, 0);
        for (int r = 1; r <= p && r <= N; ++r) {
            if (tdim[static_cast<std::size_t>(r)] == 0 || tdim[static_cast<std::size_t>(r - 1)] == 0)
                continue;
            const auto& dom_subs = subs[static_cast<std::size_t>(r)];
            const auto& dom_monos = monos[static_cast<std::size_t>(r)];
            const auto& cod_monos_idx = mono_idx[static_cast<std::size_t>(r - 1)];
            const auto& cod_sub_idx = sub_idx[static_cast<std::size_t>(r - 1)];
            const long cod_mono_count = static_cast<long>(monos[static_cast<std::size_t>(r - 1)].size());
            ExactMatrix<K> mat(tdim[static_cast<std::size_t>(r - 1)], impl_->field);
            for (const auto& S : dom_subs) {
                for (const auto& m : dom_monos) {
                    std::vector<std::pair<std::int32_t, typename K::Elem>> row;
                    for (std::size_t j = 0; j < S.size(); ++j) {
                        std::vector<int> Sm;
                        for (std::size_t t = 0; t < S.size(); ++t)
                            if (t != j) Sm.push_back(S[t]);
                        const std::int32_t sidx = cod_sub_idx.at(subset_key(Sm));
                        const bool negate = (j % 2) == 1;
                        for (const auto& [te, tc] : impl_->partials[static_cast<std::size_t>(S[j])].terms) {
                            const std::int32_t midx = cod_monos_idx.at(mono_mul(te, m));
                            auto v = negate ? impl_->field.neg(tc) : tc;
                            row.emplace_back(sidx * cod_mono_count + midx, std::move(v));
                        }
                    }
                    std::sort(row.begin(), row.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    mat.rows.push_back(std::move(row));
                }
            }
            rk[static_cast<std::size_t>(r)] = rank(mat);
        }
        KoszulDims<K> out;
        out.identification_range = mu >= static_cast<long>(p) * d1 - (N - 1);
        out.dims.resize(static_cast<std::size_t>(p) + 1, 0);
        for (int r = p; r >= 0; --r) {
            long h;
            if (r == p)
                h = tdim[static_cast<std::size_t>(r)] - rk[static_cast<std::size_t>(r)];
            else
                h = tdim[static_cast<std::size_t>(r)] - rk[static_cast<std::size_t>(r)] -
                    rk[static_cast<std::size_t>(r + 1)];
            out.dims[static_cast<std::size_t>(p - r)] = h;
        }
        return out;
    }

    std::shared_ptr<const detail::RingImpl<K>> impl() const { return impl_; }

  private:
    std::shared_ptr<detail::RingImpl<K>> impl_;

    static void check_params(long d, int nvars) {
        if (d < 2) throw std::invalid_argument("form degree must be at least 2");
        if (nvars < 2) throw std::invalid_argument("at least 2 variables required");
    }

    static std::vector<std::vector<int>> subsets_of(int n, int r) {
        std::vector<std::vector<int>> out;
        if (r < 0 || r > n) return out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == r) {
                out.push_back(cur);
                return;
            }
            for (int v = start; v <= n - (r - static_cast<int>(cur.size())); ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

    static std::uint64_t subset_key(const std::vector<int>& s) {
        std::uint64_t k = 0;
        for (int v : s) k |= (1ULL << v);
        return k;
    }

    static std::shared_ptr<detail::RingImpl<K>> build(Form<K> f) {
        if (f.is_zero()) throw std::invalid_argument("the zero form does not define a hypersurface");
        check_params(f.degree, f.nvars);
        for (const auto& [e, c] : f.terms) {
            if (static_cast<int>(e.size()) != f.nvars)
                throw std::invalid_argument("malformed form: wrong exponent vector length");
            if (mono_degree(e) != f.degree)
                throw std::invalid_argument("malformed form: inhomogeneous terms");
        }
        auto impl = std::make_shared<detail::RingImpl<K>>();
        impl->d = f.degree;
        impl->nvars = f.nvars;
        impl->socle = static_cast<long>(f.nvars) * (f.degree - 2);
        impl->field = f.field;
        impl->form = std::move(f);
        for (int v = 0; v < impl->nvars; ++v)
            impl->partials.push_back(derivative(impl->form, v));

        // Union-find on variables; terms connect every pair of their support.
        std::vector<int> parent(static_cast<std::size_t>(impl->nvars));
        for (int v = 0; v < impl->nvars; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        for (const auto& [e, c] : impl->form.terms) {
            int first = -1;
            for (int v = 0; v < impl->nvars; ++v) {
                if (e[static_cast<std::size_t>(v)] == 0) continue;
                if (first < 0)
                    first = v;
                else
                    parent[static_cast<std::size_t>(find(v))] = find(first);
            }
        }
        std::map<int, std::vector<int>> groups;  // root -> vars (ascending)
        for (int v = 0; v < impl->nvars; ++v) groups[find(v)].push_back(v);
        impl->var_block.assign(static_cast<std::size_t>(impl->nvars), -1);
        impl->var_local.assign(static_cast<std::size_t>(impl->nvars), -1);
        std::map<int, int> order;  // smallest var -> block position, ascending
        for (const auto& [root, vars] : groups) order.emplace(vars.front(), root);
        for (const auto& [lead, root] : order) {
            auto& vars = groups[root];
            auto blk = std::make_unique<detail::Block<K>>();
            blk->vars = vars;
            blk->d = impl->d;
            blk->socle = static_cast<long>(vars.size()) * (impl->d - 2);
            blk->form.nvars = static_cast<int>(vars.size());
            blk->form.degree = impl->d;
            blk->form.field = impl->field;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                impl->var_block[static_cast<std::size_t>(vars[i])] =
                    static_cast<int>(impl->blocks.size());
                impl->var_local[static_cast<std::size_t>(vars[i])] = static_cast<int>(i);
            }
            for (const auto& [e, c] : impl->form.terms) {
                int v0 = -1;
                for (int v = 0; v < impl->nvars; ++v)
                    if (e[static_cast<std::size_t>(v)] != 0) {
                        v0 = v;
                        break;
                    }
                if (v0 < 0 || impl->var_block[static_cast<std::size_t>(v0)] !=
                                  static_cast<int>(impl->blocks.size()))
                    continue;
                Expo le(vars.size(), 0);
                for (std::size_t i = 0; i < vars.size(); ++i)
                    le[i] = e[static_cast<std::size_t>(vars[i])];
                blk->form.terms.emplace(std::move(le), c);
            }
            for (int i = 0; i < blk->form.nvars; ++i)
                blk->partials.push_back(derivative(blk->form, i));
            impl->blocks.push_back(std::move(blk));
        }
        return impl;
    }

    // ---- per-block degree data ----

    static std::shared_ptr<const detail::BlockDeg<K>> block_deg(const detail::Block<K>& b, long e) {
        {
            std::shared_lock lk(b.mx);
            auto it = b.cache.find(e);
            if (it != b.cache.end()) return it->second;
        }
        auto data = std::make_shared<detail::BlockDeg<K>>();
        if (e >= 0) {
            data->monos = monomials_of_degree(b.form.nvars, e);
            for (std::size_t k = 0; k < data->monos.size(); ++k)
                data->index.emplace(data->monos[k], static_cast<std::int32_t>(k));
            ExactMatrix<K> m(static_cast<std::int64_t>(data->monos.size()), b.form.field);
            const long md = e - (b.d - 1);
            if (md >= 0) {
                for (const auto& p : b.partials) {
                    if (p.is_zero()) continue;
                    for (const auto& mult : monomials_of_degree(b.form.nvars, md)) {
                        SparseVec<K> row;
                        row.reserve(p.terms.size());
                        for (const auto& [te, tc] : p.terms)
                            row.emplace_back(data->index.at(mono_mul(te, mult)), tc);
                        // Terms iterate in descending glex, so their columns
                        // (positions in the descending list) ascend already.
                        m.rows.push_back(std::move(row));
                    }
                }
            }
            auto rr = rref(m, true);
            std::vector<char> is_pivot(data->monos.size(), 0);
            for (auto c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
            data->col_to_std.assign(data->monos.size(), -1);
            for (std::size_t c = 0; c < data->monos.size(); ++c)
                if (!is_pivot[c]) {
                    data->col_to_std[c] = static_cast<std::int32_t>(data->std_cols.size());
                    data->std_cols.push_back(static_cast<std::int32_t>(c));
                }
            data->dim = static_cast<long>(data->std_cols.size());
            for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
                SparseVec<K> nf;
                const auto& row = rr.mat.rows[i];
                for (std::size_t k = 1; k < row.size(); ++k)
                    nf.emplace_back(data->col_to_std[static_cast<std::size_t>(row[k].first)],
                                    b.form.field.neg(row[k].second));
                data->reduce.emplace(rr.pivots[i], std::move(nf));
            }
        }
        std::unique_lock lk(b.mx);
        auto [it, inserted] = b.cache.emplace(e, std::move(data));
        return it->second;
    }

    static long block_dim(const detail::Block<K>& b, long e) {
        if (e < 0) return 0;
        // Above the block socle, certify once and short-circuit instead of
        // materializing a degree that an Artinian block cannot populate.
        if (e > b.socle && block_artinian(b)) return 0;
        return block_deg(b, e)->dim;
    }

    static bool block_artinian(const detail::Block<K>& b) {
        {
            std::shared_lock lk(b.mx);
            if (b.artinian) return *b.artinian;
        }
        bool ok = block_deg(b, b.socle + 1)->dim == 0;
        std::unique_lock lk(b.mx);
        if (!b.artinian) b.artinian = ok;
        return *b.artinian;
    }

    // ---- ring-level degree data ----

    static long dim_impl(const detail::RingImpl<K>& impl, long mu) {
        if (mu < 0) return 0;
        {
            std::shared_lock lk(impl.smooth_mx);
            if (impl.smooth && *impl.smooth && mu > impl.socle) return 0;
        }
        {
            std::shared_lock lk(impl.dim_mx);
            auto it = impl.dim_cache.find(mu);
            if (it != impl.dim_cache.end()) return it->second;
        }
        long value;
        if (impl.blocks.size() == 1) {
            value = block_dim(*impl.blocks.front(), mu);
        } else {
            std::vector<long> acc{1};  // acc[e] = dim of partial tensor product in degree e
            for (const auto& b : impl.blocks) {
                std::vector<long> next(static_cast<std::size_t>(mu) + 1, 0);
                for (long e1 = 0; e1 < static_cast<long>(acc.size()); ++e1) {
                    if (acc[static_cast<std::size_t>(e1)] == 0) continue;
                    for (long e2 = 0; e1 + e2 <= mu; ++e2) {
                        long bd = block_dim(*b, e2);
                        if (bd != 0)
                            next[static_cast<std::size_t>(e1 + e2)] +=
                                acc[static_cast<std::size_t>(e1)] * bd;
                    }
                }
                acc = std::move(next);
            }
            value = acc[static_cast<std::size_t>(mu)];
        }
        std::unique_lock lk(impl.dim_mx);
        impl.dim_cache.emplace(mu, value);
        return value;
    }

    static std::shared_ptr<const detail::RingDeg<K>> ring_deg(const detail::RingImpl<K>& impl,
                                                              long mu) {
        {
            std::shared_lock lk(impl.deg_mx);
            auto it = impl.deg_cache.find(mu);
            if (it != impl.deg_cache.end()) return it->second;
        }
        auto data = std::make_shared<detail::RingDeg<K>>();
        if (mu >= 0) {
            // Cartesian product of block standard bases over all degree splits.
            std::vector<const detail::Block<K>*> blocks;
            for (const auto& b : impl.blocks) blocks.push_back(b.get());
            Expo cur(static_cast<std::size_t>(impl.nvars), 0);
            auto rec = [&](auto&& self, std::size_t bi, long rem) -> void {
                if (bi + 1 == blocks.size()) {
                    const auto bd = block_deg(*blocks[bi], rem);
                    if (bd->dim == 0) return;
                    for (auto col : bd->std_cols) {
                        const Expo& le = bd->monos[static_cast<std::size_t>(col)];
                        for (std::size_t i = 0; i < blocks[bi]->vars.size(); ++i)
                            cur[static_cast<std::size_t>(blocks[bi]->vars[i])] = le[i];
                        data->std_monos.push_back(cur);
                    }
                    for (std::size_t i = 0; i < blocks[bi]->vars.size(); ++i)
                        cur[static_cast<std::size_t>(blocks[bi]->vars[i])] = 0;
                    return;
                }
                for (long e = 0; e <= rem; ++e) {
                    if (block_dim(*blocks[bi], e) == 0) continue;
                    const auto bd = block_deg(*blocks[bi], e);
                    for (auto col : bd->std_cols) {
                        const Expo& le = bd->monos[static_cast<std::size_t>(col)];
                        for (std::size_t i = 0; i < blocks[bi]->vars.size(); ++i)
                            cur[static_cast<std::size_t>(blocks[bi]->vars[i])] = le[i];
                        self(self, bi + 1, rem - e);
                    }
                    for (std::size_t i = 0; i < blocks[bi]->vars.size(); ++i)
                        cur[static_cast<std::size_t>(blocks[bi]->vars[i])] = 0;
                }
            };
            if (!blocks.empty()) rec(rec, 0, mu);
            std::sort(data->std_monos.begin(), data->std_monos.end(), GlexDesc{});
            for (std::size_t k = 0; k < data->std_monos.size(); ++k)
                data->index.emplace(data->std_monos[k], static_cast<std::int32_t>(k));
        }
        std::unique_lock lk(impl.deg_mx);
        auto [it, inserted] = impl.deg_cache.emplace(mu, std::move(data));
        return it->second;
    }

    // Normal form of one global monomial: tensor product of block normal forms.
    static SparseVec<K> nf_monomial(const detail::RingImpl<K>& impl, const Expo& e) {
        const long mu = mono_degree(e);
        // Per-block sparse normal forms over block standard positions.
        struct Part {
            const detail::BlockDeg<K>* bd;
            const detail::Block<K>* blk;
            SparseVec<K> vec;  // (std position, coefficient)
            std::shared_ptr<const detail::BlockDeg<K>> hold;
        };
        std::vector<Part> parts;
        parts.reserve(impl.blocks.size());
        for (const auto& b : impl.blocks) {
            Expo le(b->vars.size(), 0);
            long ldeg = 0;
            for (std::size_t i = 0; i < b->vars.size(); ++i) {
                le[i] = e[static_cast<std::size_t>(b->vars[i])];
                ldeg += le[i];
            }
            // An Artinian block vanishes above its socle; certify instead of
            // materializing such degrees.
            if (ldeg > b->socle && block_artinian(*b)) return {};
            Part part;
            part.hold = block_deg(*b, ldeg);
            part.bd = part.hold.get();
            part.blk = b.get();
            auto col = part.bd->index.at(le);
            auto c2s = part.bd->col_to_std[static_cast<std::size_t>(col)];
            if (c2s >= 0) {
                part.vec.emplace_back(c2s, impl.field.one());
            } else {
                part.vec = part.bd->reduce.at(col);
                if (part.vec.empty()) return {};  // the block part reduces to zero
            }
            parts.push_back(std::move(part));
        }
        const auto rd = ring_deg(impl, mu);
        SparseVec<K> out;
        Expo cur(static_cast<std::size_t>(impl.nvars), 0);
        typename K::Elem coeff = impl.field.one();
        auto rec = [&](auto&& self, std::size_t pi, const typename K::Elem& c) -> void {
            if (pi == parts.size()) {
                out.emplace_back(rd->index.at(cur), c);
                return;
            }
            const auto& part = parts[pi];
            for (const auto& [s, v] : part.vec) {
                const Expo& le =
                    part.bd->monos[static_cast<std::size_t>(part.bd->std_cols[static_cast<std::size_t>(s)])];
                for (std::size_t i = 0; i < part.blk->vars.size(); ++i)
                    cur[static_cast<std::size_t>(part.blk->vars[i])] = le[i];
                self(self, pi + 1, impl.field.mul(c, v));
            }
            for (std::size_t i = 0; i < part.blk->vars.size(); ++i)
                cur[static_cast<std::size_t>(part.blk->vars[i])] = 0;
        };
        rec(rec, 0, coeff);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
};

}  // namespace jacring
