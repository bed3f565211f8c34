#pragma once

// Coupling lengths: the longest nonzero chain of multiplications by a
// tangent subspace V of R_d starting from a chosen degree, the derived
// family and cover lengths, per-eigenspace lengths, and the iterated-cover
// length table with its closed form.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graded_ring.hpp"
#include "hodge.hpp"
#include "linalg.hpp"

namespace jacring {

// A subspace of R_mu in canonical form: basis rows are the rref of the
// spanning vectors over the standard-monomial basis of R_mu.
template <class K>
struct DegreeSubspace {
    std::shared_ptr<const detail::RingImpl<K>> ring;
    long mu = 0;
    std::vector<SparseVec<K>> basis;

    long dimension() const { return static_cast<long>(basis.size()); }
};

template <class K>
DegreeSubspace<K> make_subspace(const GradedRing<K>& ring, long mu,
                                std::vector<SparseVec<K>> vectors) {
    DegreeSubspace<K> out;
    out.ring = ring.impl();
    out.mu = mu;
    out.basis = span_reduce_sparse(std::move(vectors), ring.dim(mu), ring.field());
    return out;
}

// R_d as a subspace of itself; the tangent space of the family of all
// degree-d hypersurfaces at this fibre.
template <class K>
DegreeSubspace<K> tangent_subspace_full(const GradedRing<K>& ring) {
    const long d = ring.form_degree();
    DegreeSubspace<K> out;
    out.ring = ring.impl();
    out.mu = d;
    const long dim = ring.dim(d);
    for (long i = 0; i < dim; ++i)
        out.basis.push_back({{static_cast<std::int32_t>(i), ring.field().one()}});
    return out;
}

enum class BaseKind { fermat, random_smooth, explicit_form };

template <class K>
struct TowerSpec {
    long d = 0;
    int base_nvars = 0;
    int levels = 0;
    BaseKind kind = BaseKind::fermat;
    std::uint64_t seed = 0;
    std::optional<Form<K>> form;  // for explicit bases
    K field{};
};

template <class K>
struct Tower {
    GradedRing<K> base;
    GradedRing<K> top;
    DegreeSubspace<K> tangent;  // image of the base's R_d in the top ring
};

// Lift the base's degree-d standard monomials into the extended ring
// (levels extra trailing variables), reduce them there, and span.  For a
// smooth base the images stay independent, so dim V = dim R_d(base).
template <class K>
DegreeSubspace<K> lifted_tangent(const GradedRing<K>& base, const GradedRing<K>& top) {
    const int extra = top.nvars() - base.nvars();
    std::vector<SparseVec<K>> rows;
    for (const Expo& e : base.degree_basis(base.form_degree())) {
        Expo lifted = e;
        lifted.resize(e.size() + static_cast<std::size_t>(extra), 0);
        rows.push_back(top.monomial_class(lifted).coords);
    }
    return make_subspace(top, base.form_degree(), std::move(rows));
}

template <class K>
Tower<K> build_tower(const TowerSpec<K>& spec) {
    if (spec.d < 2 || spec.base_nvars < 2)
        throw std::invalid_argument("tower requires d >= 2 and base_nvars >= 2");
    if (spec.levels < 0) throw std::invalid_argument("tower levels must be >= 0");
    auto make_base = [&]() -> GradedRing<K> {
        switch (spec.kind) {
            case BaseKind::fermat:
                return GradedRing<K>::fermat(spec.d, spec.base_nvars, spec.field);
            case BaseKind::random_smooth:
                return GradedRing<K>::random_smooth(spec.d, spec.base_nvars, spec.field,
                                                    spec.seed);
            case BaseKind::explicit_form:
                if (!spec.form) throw std::invalid_argument("explicit tower base needs a form");
                return GradedRing<K>(*spec.form);
        }
        throw std::invalid_argument("unknown tower base kind");
    };
    GradedRing<K> base = make_base();
    GradedRing<K> top = base;
    for (int l = 0; l < spec.levels; ++l) top = top.root_extension();
    DegreeSubspace<K> v = spec.levels == 0 ? tangent_subspace_full(base)
                                           : lifted_tangent(base, top);
    return Tower<K>{std::move(base), std::move(top), std::move(v)};
}

// Largest k with W_k != 0, where W_0 = R_mu and W_{k+1} = span(V * W_k)
// inside R_{mu+(k+1)d}.  In characteristic 0 this equals the largest k with
// R_mu (x) S^k(V) -> R_{mu+kd} nonzero; prime mode inherits the modular
// caveat.  Requires a smooth (Artinian) ring so the chain terminates.
template <class K>
long coupling_length(const GradedRing<K>& ring, const DegreeSubspace<K>& v, long mu) {
    if (v.ring != ring.impl())
        throw std::invalid_argument("coupling_length: subspace belongs to a different ring");
    if (v.mu != ring.form_degree())
        throw std::invalid_argument("coupling_length: subspace must live in degree d");
    if (!ring.is_smooth())
        throw smoothness_error("coupling_length requires a smooth form (Artinian ring)");
    const long d = ring.form_degree();
    const long sigma = ring.socle_degree();
    if (mu < 0 || mu > sigma || ring.dim(mu) == 0) return 0;
    std::vector<SparseVec<K>> w;
    for (long i = 0; i < ring.dim(mu); ++i)
        w.push_back({{static_cast<std::int32_t>(i), ring.field().one()}});
    long k = 0;
    long cur = mu;
    while (cur + d <= sigma && !v.basis.empty()) {
        std::vector<SparseVec<K>> products;
        for (const auto& vb : v.basis) {
            GradedClass<K> vc{v.mu, vb, ring.impl()};
            for (const auto& wb : w) {
                GradedClass<K> wc{cur, wb, ring.impl()};
                auto prod = ring.multiply(vc, wc);
                if (!prod.coords.empty()) products.push_back(std::move(prod.coords));
            }
        }
        cur += d;
        w = span_reduce_sparse(std::move(products), ring.dim(cur), ring.field());
        if (w.empty()) break;
        ++k;
    }
    return k;
}

struct LengthResult {
    long length = 0;
    bool hypothesis_ok = true;  // d >= n+1 on the relevant ring
};

// Length of the universal family of degree-d hypersurfaces with this fibre:
// coupling length of the full tangent space at mu = d-n-1; equals n-1 for
// every smooth form with d >= n+1.
template <class K>
LengthResult family_length(const GradedRing<K>& ring) {
    if (!ring.is_smooth()) throw smoothness_error("family_length requires a smooth form");
    const int n = ring.ambient_dim();
    LengthResult out;
    out.hypothesis_ok = ring.form_degree() >= n + 1;
    out.length = coupling_length(ring, tangent_subspace_full(ring),
                                 ring.form_degree() - n - 1);
    return out;
}

// Length of the family of d-th root covers as the base hypersurface moves:
// the cover lives one ambient dimension up, the moving directions are still
// the base's R_d, and the starting degree uses the cover's ambient dimension.
template <class K>
LengthResult cover_family_length(const GradedRing<K>& base) {
    if (!base.is_smooth()) throw smoothness_error("cover_family_length requires a smooth base");
    const int base_n = base.ambient_dim();
    GradedRing<K> top = base.root_extension();
    DegreeSubspace<K> v = lifted_tangent(base, top);
    LengthResult out;
    out.hypothesis_ok = base.form_degree() >= base_n + 1;
    out.length = coupling_length(top, v, base.form_degree() - (base_n + 1) - 1);
    return out;
}

// Length of the i-eigenspace variation over the base family: the chain of
// degrees congruent to d-i-n-1 mod d, started at its smallest non-negative
// member; 0 when the whole chain vanishes.
template <class K>
long eigenspace_coupling_length(const GradedRing<K>& base, int i) {
    const long d = base.form_degree();
    if (i < 1 || i > d - 1) throw std::out_of_range("eigen index must lie in [1, d-1]");
    if (!base.is_smooth())
        throw smoothness_error("eigenspace_coupling_length requires a smooth base");
    const int n = base.ambient_dim();
    long r = (d - i - n - 1) % d;
    if (r < 0) r += d;
    bool any = false;
    for (long mu = r; mu <= base.socle_degree(); mu += d)
        if (base.dim(mu) != 0) any = true;
    if (!any) return 0;
    return coupling_length(base, tangent_subspace_full(base), r);
}

struct CouplingProfile {
    long sigma = 0;
    std::vector<long> lengths;  // position mu holds the length started at mu
};

template <class K>
CouplingProfile coupling_profile(const GradedRing<K>& ring, const DegreeSubspace<K>& v) {
    CouplingProfile out;
    out.sigma = ring.socle_degree();
    for (long mu = 0; mu <= out.sigma; ++mu)
        out.lengths.push_back(coupling_length(ring, v, mu));
    return out;
}

struct TowerTableRow {
    int level = 0;
    long computed = 0;
    long closed_form = 0;
    bool match = false;
    std::string base_desc;
};

struct TowerTable {
    long d = 0;
    int n = 0;
    std::vector<TowerTableRow> rows;
    bool all_match = true;
};

// For each number of cover iterations l in [1, n-1], the sub-family of
// l-times iterated covers with moving part in n-l+1 variables has coupling
// length n-l when l >= n-floor(d/2)+1 and n-l-1 below that threshold.
template <class K>
TowerTable tower_length_table(long d, int n, BaseKind kind, std::uint64_t seed, K field = K()) {
    if (n < 3 || d < n + 1)
        throw std::invalid_argument("length table requires n >= 3 and d >= n+1");
    TowerTable out;
    out.d = d;
    out.n = n;
    for (int l = 1; l <= n - 1; ++l) {
        TowerSpec<K> spec;
        spec.d = d;
        spec.base_nvars = n - l + 1;
        spec.levels = l;
        spec.kind = kind;
        spec.seed = seed;
        spec.field = field;
        Tower<K> tower = build_tower(spec);
        TowerTableRow row;
        row.level = l;
        row.computed = coupling_length(tower.top, tower.tangent, d - n - 1);
        row.closed_form = (l >= n - d / 2 + 1) ? (n - l) : (n - l - 1);
        row.match = row.computed == row.closed_form;
        row.base_desc = (kind == BaseKind::fermat ? std::string("fermat")
                                                  : "random seed=" + std::to_string(seed)) +
                        " d=" + std::to_string(d) + " nvars=" + std::to_string(spec.base_nvars);
        if (!row.match) out.all_match = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace jacring
