#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include <jacring/fields.hpp>
#include <jacring/linalg.hpp>

#include "test_support.hpp"

using jacring::ExactMatrix;
using jacring::PrimeField;
using jacring::RationalField;
using jacring::SparseVec;

namespace {

ExactMatrix<RationalField> from_dense(const std::vector<std::vector<long>>& rows,
                                      std::int64_t cols) {
    ExactMatrix<RationalField> m(cols, RationalField{});
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0) m.set(r, static_cast<std::int32_t>(c), mpq_class(rows[r][c]));
    while (m.rows.size() < rows.size()) m.rows.emplace_back();
    return m;
}

}  // namespace

TEST_CASE("rank of degenerate and hand-checked matrices", "[linalg]") {
    ExactMatrix<RationalField> zero(3, RationalField{});
    zero.rows.resize(3);
    CHECK(jacring::rank(zero) == 0);

    auto ident = from_dense({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4);
    CHECK(jacring::rank(ident) == 4);

    auto prop = from_dense({{1, 2, 3}, {2, 4, 6}}, 3);
    CHECK(jacring::rank(prop) == 1);
}

TEST_CASE("rref canonical form, pivots and degenerate input", "[linalg]") {
    auto swapped = from_dense({{0, 1}, {1, 0}}, 2);
    auto r = jacring::rref(swapped);
    REQUIRE(r.pivots == std::vector<std::int32_t>{0, 1});
    CHECK(r.mat.at(0, 0) == 1);
    CHECK(r.mat.at(0, 1) == 0);
    CHECK(r.mat.at(1, 0) == 0);
    CHECK(r.mat.at(1, 1) == 1);

    auto scaled = jacring::rref(from_dense({{2, 4}}, 2));
    REQUIRE(scaled.pivots == std::vector<std::int32_t>{0});
    CHECK(scaled.mat.at(0, 0) == 1);
    CHECK(scaled.mat.at(0, 1) == 2);

    ExactMatrix<RationalField> empty(5, RationalField{});
    auto er = jacring::rref(empty);
    CHECK(er.pivots.empty());
    CHECK(er.mat.rows.empty());
}

TEST_CASE("rref is idempotent", "[linalg]") {
    testsupport::TestRng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        ExactMatrix<RationalField> m(6, RationalField{});
        for (std::size_t r = 0; r < 5; ++r)
            for (std::int32_t c = 0; c < 6; ++c) m.set(r, c, mpq_class(rng.small(-4, 4)));
        auto once = jacring::rref(m);
        auto twice = jacring::rref(once.mat);
        REQUIRE(once.pivots == twice.pivots);
        REQUIRE(once.mat.rows.size() == twice.mat.rows.size());
        for (std::size_t r = 0; r < once.mat.rows.size(); ++r)
            CHECK(once.mat.rows[r] == twice.mat.rows[r]);
    }
}

TEST_CASE("rank equals rank of the transpose", "[linalg]") {
    testsupport::TestRng rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        ExactMatrix<RationalField> m(7, RationalField{});
        for (std::size_t r = 0; r < 4; ++r)
            for (std::int32_t c = 0; c < 7; ++c)
                if (rng.small(0, 2) == 0) m.set(r, c, mpq_class(rng.small(-9, 9)));
        while (m.rows.size() < 4) m.rows.emplace_back();
        CHECK(jacring::rank(m) == jacring::rank(jacring::transpose(m)));
    }
}

TEST_CASE("span_reduce collapses dependent vectors", "[linalg]") {
    RationalField F;
    std::vector<std::vector<mpq_class>> vecs{{1, 1}, {2, 2}};
    auto basis = jacring::span_reduce(vecs, F);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == 1);
    CHECK(basis[0][1] == 1);

    CHECK(jacring::span_reduce(std::vector<std::vector<mpq_class>>{}, F).empty());

    std::vector<std::vector<mpq_class>> three{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
    CHECK(jacring::span_reduce(three, F).size() == 2);
}

TEST_CASE("kernel vectors are annihilated by the matrix", "[linalg]") {
    auto m = from_dense({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
    auto ker = jacring::kernel_basis(m);
    REQUIRE(static_cast<long>(ker.size()) == 3 - jacring::rank(m));
    RationalField F;
    for (const auto& v : ker) {
        for (const auto& row : m.rows) {
            mpq_class dot = 0;
            for (const auto& [c, coef] : row) {
                for (const auto& [kc, kv] : v)
                    if (kc == c) dot += coef * kv;
            }
            CHECK(sgn(dot) == 0);
        }
    }
}

TEST_CASE("sparse rank agrees with dense elimination on random matrices", "[linalg]") {
    testsupport::TestRng rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t rows = 3 + static_cast<std::size_t>(rng.small(0, 4));
        const std::size_t cols = 3 + static_cast<std::size_t>(rng.small(0, 4));
        std::vector<std::vector<mpq_class>> dense(rows, std::vector<mpq_class>(cols, 0));
        ExactMatrix<RationalField> sparse(static_cast<std::int64_t>(cols), RationalField{});
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.small(0, 1) == 0) {
                    long v = rng.small(-6, 6);
                    dense[r][c] = v;
                    if (v != 0) sparse.set(r, static_cast<std::int32_t>(c), mpq_class(v));
                }
        while (sparse.rows.size() < rows) sparse.rows.emplace_back();
        CHECK(jacring::rank(sparse) == testsupport::dense_rank(dense));
    }
}

TEST_CASE("rational and prime-field ranks agree on integer matrices", "[linalg]") {
    testsupport::TestRng rng(91);
    PrimeField Fp(jacring::default_prime);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t rows = 4 + static_cast<std::size_t>(rng.small(0, 3));
        const std::size_t cols = 4 + static_cast<std::size_t>(rng.small(0, 3));
        ExactMatrix<RationalField> mq(static_cast<std::int64_t>(cols), RationalField{});
        ExactMatrix<PrimeField> mp(static_cast<std::int64_t>(cols), Fp);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.small(0, 2) != 0) {
                    long v = rng.small(-9, 9);
                    if (v == 0) continue;
                    mq.set(r, static_cast<std::int32_t>(c), mpq_class(v));
                    mp.set(r, static_cast<std::int32_t>(c), Fp.from_long(v));
                }
        while (mq.rows.size() < rows) mq.rows.emplace_back();
        while (mp.rows.size() < rows) mp.rows.emplace_back();
        long rq = jacring::rank(mq);
        long rp = jacring::rank(mp);
        CHECK(rp <= rq);
        CHECK(rp == rq);  // entries are tiny relative to the modulus
    }
}
