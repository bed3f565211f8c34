#pragma once

// Sparse exact linear algebra over the rationals or a prime field: rank,
// reduced row echelon form, span bases and kernel bases.  Over Q the
// elimination runs on primitive integer rows (cross-multiplication followed
// by content removal), which bounds coefficient growth by minor size; the
// published rref is normalized to pivot 1 and is the unique RREF of the input.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace jacring {

// Sorted by column index; stored entries are nonzero.
template <class K>
using SparseVec = std::vector<std::pair<std::int32_t, typename K::Elem>>;

template <class K>
struct ExactMatrix {
    std::int64_t cols = 0;
    std::vector<SparseVec<K>> rows;
    K field{};

    ExactMatrix() = default;
    ExactMatrix(std::int64_t ncols, K f) : cols(ncols), field(std::move(f)) {}

    std::int64_t row_count() const { return static_cast<std::int64_t>(rows.size()); }

    void add_row(SparseVec<K> r) {
        for (auto& [c, v] : r) {
            if (c < 0 || c >= cols) throw std::out_of_range("column index out of range");
            (void)v;
        }
        rows.push_back(std::move(r));
    }

    // Convenience accessors for dense-style construction in tests and small call sites.
    void set(std::size_t r, std::int32_t c, typename K::Elem v) {
        while (rows.size() <= r) rows.emplace_back();
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, std::int32_t col) { return p.first < col; });
        if (it != row.end() && it->first == c) {
            if (field.is_zero(v))
                row.erase(it);
            else
                it->second = std::move(v);
        } else if (!field.is_zero(v)) {
            row.insert(it, {c, std::move(v)});
        }
    }

    typename K::Elem at(std::size_t r, std::int32_t c) const {
        if (r >= rows.size()) return field.zero();
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, std::int32_t col) { return p.first < col; });
        if (it != row.end() && it->first == c) return it->second;
        return field.zero();
    }
};

template <class K>
ExactMatrix<K> transpose(const ExactMatrix<K>& m) {
    ExactMatrix<K> t(m.row_count(), m.field);
    t.rows.resize(static_cast<std::size_t>(m.cols));
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (const auto& [c, v] : m.rows[r])
            t.rows[static_cast<std::size_t>(c)].emplace_back(static_cast<std::int32_t>(r), v);
    return t;
}

template <class K>
struct RrefResult {
    ExactMatrix<K> mat;                // canonical rows, sorted by pivot column
    std::vector<std::int32_t> pivots;  // increasing
};

namespace detail {

// ---------- rational engine: primitive integer rows ----------

using IntRow = std::vector<std::pair<std::int32_t, mpz_class>>;

inline void make_primitive(IntRow& r) {
    r.erase(std::remove_if(r.begin(), r.end(), [](const auto& p) { return sgn(p.second) == 0; }),
            r.end());
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    bool flip = sgn(r.front().second) < 0;
    if (g == 1 && !flip) return;
    if (flip) g = -g;
    for (auto& [c, v] : r) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

// out = a*x - b*y, skipping column `drop` (used for the cancelled column).
inline IntRow int_row_combine(const mpz_class& a, const IntRow& x, const mpz_class& b,
                              const IntRow& y, std::int32_t drop) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    mpz_class t, u;
    while (i < x.size() || j < y.size()) {
        std::int32_t cx = i < x.size() ? x[i].first : INT32_MAX;
        std::int32_t cy = j < y.size() ? y[j].first : INT32_MAX;
        if (cx < cy) {
            if (cx != drop) {
                t = a * x[i].second;
                if (sgn(t) != 0) out.emplace_back(cx, t);
            }
            ++i;
        } else if (cy < cx) {
            if (cy != drop) {
                t = b * y[j].second;
                if (sgn(t) != 0) out.emplace_back(cy, -t);
            }
            ++j;
        } else {
            if (cx != drop) {
                t = a * x[i].second;
                u = b * y[j].second;
                t -= u;
                if (sgn(t) != 0) out.emplace_back(cx, t);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

struct IntRrefResult {
    std::vector<IntRow> rows;          // primitive, sorted by pivot column
    std::vector<std::int32_t> pivots;  // increasing
};

inline IntRrefResult rref_int(std::vector<IntRow> input, std::int64_t ncols, bool full) {
    std::vector<std::vector<IntRow>> bucket(static_cast<std::size_t>(ncols));
    for (auto& r : input) {
        make_primitive(r);
        if (!r.empty()) bucket[static_cast<std::size_t>(r.front().first)].push_back(std::move(r));
    }
    IntRrefResult res;
    for (std::int64_t col = 0; col < ncols; ++col) {
        auto& here = bucket[static_cast<std::size_t>(col)];
        if (here.empty()) continue;
        std::size_t best = 0;
        for (std::size_t k = 1; k < here.size(); ++k)
            if (here[k].size() < here[best].size()) best = k;
        IntRow piv = std::move(here[best]);
        here.erase(here.begin() + static_cast<std::ptrdiff_t>(best));
        for (auto& r : here) {
            IntRow next = int_row_combine(piv.front().second, r, r.front().second, piv,
                                          static_cast<std::int32_t>(col));
            make_primitive(next);
            if (!next.empty())
                bucket[static_cast<std::size_t>(next.front().first)].push_back(std::move(next));
        }
        here.clear();
        here.shrink_to_fit();
        res.rows.push_back(std::move(piv));
        res.pivots.push_back(static_cast<std::int32_t>(col));
    }
    if (full && !res.rows.empty()) {
        std::vector<char> is_pivot(static_cast<std::size_t>(ncols), 0);
        std::vector<std::int32_t> row_of_col(static_cast<std::size_t>(ncols), -1);
        for (std::size_t i = 0; i < res.pivots.size(); ++i) {
            is_pivot[static_cast<std::size_t>(res.pivots[i])] = 1;
            row_of_col[static_cast<std::size_t>(res.pivots[i])] = static_cast<std::int32_t>(i);
        }
        for (std::size_t ii = res.rows.size(); ii-- > 0;) {
            auto& r = res.rows[ii];
            // Later pivot rows are already fully reduced, so eliminating their
            // pivot columns introduces only free columns.
            std::vector<std::int32_t> todo;
            for (std::size_t k = 1; k < r.size(); ++k)
                if (is_pivot[static_cast<std::size_t>(r[k].first)]) todo.push_back(r[k].first);
            for (std::int32_t c : todo) {
                const auto it = std::lower_bound(
                    r.begin(), r.end(), c,
                    [](const auto& p, std::int32_t col) { return p.first < col; });
                if (it == r.end() || it->first != c) continue;  // cancelled meanwhile
                const IntRow& prow = res.rows[static_cast<std::size_t>(row_of_col[static_cast<std::size_t>(c)])];
                r = int_row_combine(prow.front().second, r, it->second, prow, c);
                make_primitive(r);
            }
        }
    }
    return res;
}

inline IntRow clear_denominators(const SparseVec<RationalField>& row) {
    mpz_class l = 1;
    for (const auto& [c, v] : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    IntRow out;
    out.reserve(row.size());
    mpz_class t;
    for (const auto& [c, v] : row) {
        mpz_divexact(t.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        t *= v.get_num();
        if (sgn(t) != 0) out.emplace_back(c, t);
    }
    return out;
}

// ---------- prime engine ----------

inline void mod_normalize(SparseVec<PrimeField>& r, const PrimeField& f) {
    if (r.empty()) return;
    if (r.front().second != 1) {
        auto s = f.inv(r.front().second);
        for (auto& [c, v] : r) v = f.mul(v, s);
    }
}

// out = x - b*y (y has leading coefficient 1 at column `drop`).
inline SparseVec<PrimeField> mod_row_combine(const SparseVec<PrimeField>& x, std::uint64_t b,
                                             const SparseVec<PrimeField>& y, std::int32_t drop,
                                             const PrimeField& f) {
    SparseVec<PrimeField> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        std::int32_t cx = i < x.size() ? x[i].first : INT32_MAX;
        std::int32_t cy = j < y.size() ? y[j].first : INT32_MAX;
        if (cx < cy) {
            if (cx != drop) out.emplace_back(cx, x[i].second);
            ++i;
        } else if (cy < cx) {
            if (cy != drop) {
                auto t = f.neg(f.mul(b, y[j].second));
                if (t != 0) out.emplace_back(cy, t);
            }
            ++j;
        } else {
            if (cx != drop) {
                auto t = f.sub(x[i].second, f.mul(b, y[j].second));
                if (t != 0) out.emplace_back(cx, t);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

inline RrefResult<PrimeField> rref_mod(std::vector<SparseVec<PrimeField>> input, std::int64_t ncols,
                                       const PrimeField& f, bool full) {
    std::vector<std::vector<SparseVec<PrimeField>>> bucket(static_cast<std::size_t>(ncols));
    for (auto& r : input)
        if (!r.empty()) bucket[static_cast<std::size_t>(r.front().first)].push_back(std::move(r));
    RrefResult<PrimeField> res;
    res.mat = ExactMatrix<PrimeField>(ncols, f);
    for (std::int64_t col = 0; col < ncols; ++col) {
        auto& here = bucket[static_cast<std::size_t>(col)];
        if (here.empty()) continue;
        std::size_t best = 0;
        for (std::size_t k = 1; k < here.size(); ++k)
            if (here[k].size() < here[best].size()) best = k;
        SparseVec<PrimeField> piv = std::move(here[best]);
        here.erase(here.begin() + static_cast<std::ptrdiff_t>(best));
        mod_normalize(piv, f);
        for (auto& r : here) {
            auto next = mod_row_combine(r, r.front().second, piv, static_cast<std::int32_t>(col), f);
            if (!next.empty())
                bucket[static_cast<std::size_t>(next.front().first)].push_back(std::move(next));
        }
        here.clear();
        here.shrink_to_fit();
        res.mat.rows.push_back(std::move(piv));
        res.pivots.push_back(static_cast<std::int32_t>(col));
    }
    if (full && !res.mat.rows.empty()) {
        std::vector<char> is_pivot(static_cast<std::size_t>(ncols), 0);
        std::vector<std::int32_t> row_of_col(static_cast<std::size_t>(ncols), -1);
        for (std::size_t i = 0; i < res.pivots.size(); ++i) {
            is_pivot[static_cast<std::size_t>(res.pivots[i])] = 1;
            row_of_col[static_cast<std::size_t>(res.pivots[i])] = static_cast<std::int32_t>(i);
        }
        for (std::size_t ii = res.mat.rows.size(); ii-- > 0;) {
            auto& r = res.mat.rows[ii];
            std::vector<std::int32_t> todo;
            for (std::size_t k = 1; k < r.size(); ++k)
                if (is_pivot[static_cast<std::size_t>(r[k].first)]) todo.push_back(r[k].first);
            for (std::int32_t c : todo) {
                auto it = std::lower_bound(r.begin(), r.end(), c,
                                           [](const auto& p, std::int32_t col) { return p.first < col; });
                if (it == r.end() || it->first != c) continue;
                const auto& prow = res.mat.rows[static_cast<std::size_t>(row_of_col[static_cast<std::size_t>(c)])];
                r = mod_row_combine(r, it->second, prow, c, f);
            }
        }
    }
    return res;
}

}  // namespace detail

// Unique reduced row-echelon form and pivot columns (increasing).  With
// full = false the backward pass and pivot normalization are skipped; the
// pivot list (hence the rank) is still exact.
template <class K>
RrefResult<K> rref(const ExactMatrix<K>& m, bool full = true) {
    if constexpr (K::is_rational_field) {
        std::vector<detail::IntRow> rows;
        rows.reserve(m.rows.size());
        for (const auto& r : m.rows) rows.push_back(detail::clear_denominators(r));
        auto ir = detail::rref_int(std::move(rows), m.cols, full);
        RrefResult<K> res;
        res.mat = ExactMatrix<K>(m.cols, m.field);
        res.pivots = std::move(ir.pivots);
        res.mat.rows.reserve(ir.rows.size());
        for (auto& r : ir.rows) {
            SparseVec<K> out;
            out.reserve(r.size());
            if (full) {
                const mpz_class lead = r.front().second;
                for (auto& [c, v] : r) {
                    mpq_class q(v, lead);
                    q.canonicalize();
                    out.emplace_back(c, std::move(q));
                }
            } else {
                for (auto& [c, v] : r) out.emplace_back(c, mpq_class(v));
            }
            res.mat.rows.push_back(std::move(out));
        }
        return res;
    } else {
        return detail::rref_mod(m.rows, m.cols, m.field, full);
    }
}

template <class K>
long rank(const ExactMatrix<K>& m) {
    return static_cast<long>(rref(m, false).pivots.size());
}

// Canonical basis (rref rows) of the span of sparse vectors.
template <class K>
std::vector<SparseVec<K>> span_reduce_sparse(std::vector<SparseVec<K>> vectors, std::int64_t cols,
                                             const K& field) {
    ExactMatrix<K> m(cols, field);
    m.rows = std::move(vectors);
    return rref(m, true).mat.rows;
}

// Dense-vector front end; all vectors must share one length.
template <class K>
std::vector<std::vector<typename K::Elem>> span_reduce(
    const std::vector<std::vector<typename K::Elem>>& vectors, const K& field) {
    std::size_t len = vectors.empty() ? 0 : vectors.front().size();
    ExactMatrix<K> m(static_cast<std::int64_t>(len), field);
    for (const auto& v : vectors) {
        if (v.size() != len) throw std::invalid_argument("span_reduce: vectors of different lengths");
        SparseVec<K> row;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!field.is_zero(v[c])) row.emplace_back(static_cast<std::int32_t>(c), v[c]);
        m.rows.push_back(std::move(row));
    }
    auto basis = rref(m, true).mat.rows;
    std::vector<std::vector<typename K::Elem>> out;
    out.reserve(basis.size());
    for (const auto& r : basis) {
        std::vector<typename K::Elem> dense(len, field.zero());
        for (const auto& [c, v] : r) dense[static_cast<std::size_t>(c)] = v;
        out.push_back(std::move(dense));
    }
    return out;
}

// Canonical kernel basis: one row per free column (ascending), with a unit
// coordinate at that column.  rows(m) * transpose(kernel) = 0.
template <class K>
std::vector<SparseVec<K>> kernel_basis(const ExactMatrix<K>& m) {
    auto rr = rref(m, true);
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
    for (auto c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<SparseVec<K>> out;
    for (std::int64_t fcol = 0; fcol < m.cols; ++fcol) {
        if (is_pivot[static_cast<std::size_t>(fcol)]) continue;
        SparseVec<K> v;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            const auto& row = rr.mat.rows[i];
            auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::int32_t>(fcol),
                                       [](const auto& p, std::int32_t col) { return p.first < col; });
            if (it != row.end() && it->first == fcol)
                v.emplace_back(rr.pivots[i], m.field.neg(it->second));
        }
        v.emplace_back(static_cast<std::int32_t>(fcol), m.field.one());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace jacring
