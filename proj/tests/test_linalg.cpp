#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdegen/linalg.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace ncdegen;
using linalg::Exec;
using linalg::IntMatrix;
using linalg::RatMatrix;

namespace {

RatMatrix from_ints(const std::vector<std::vector<int>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

IntMatrix int_from(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("rank of identity and zero matrices") {
    CHECK(linalg::rank_q(RatMatrix::identity(3)) == 3);
    CHECK(linalg::rank_q(RatMatrix(4, 7)) == 0);
    CHECK(linalg::rank_q(RatMatrix(0, 0)) == 0);
}

TEST_CASE("kernel basis") {
    CHECK(linalg::kernel_basis_q(RatMatrix::identity(2)).empty());

    const auto k = linalg::kernel_basis_q(from_ints({{1, -1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][0] != 0);
}

TEST_CASE("kernel vectors satisfy m v = 0 exactly") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = oracles::random_rat_matrix(rng, 6, 9);
        for (const auto& v : linalg::kernel_basis_q(m)) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Rat s = 0;
                for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[c];
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("smith normal form basics") {
    const auto s1 = linalg::smith_normal_form(int_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(s1.invariant_factors == std::vector<Int>{1, 1, 1});
    CHECK(s1.rank == 3);

    const auto s2 = linalg::smith_normal_form(int_from({{2, 0}, {0, 0}}));
    CHECK(s2.invariant_factors == std::vector<Int>{2});

    // cokernel Z/2 + Z/6: diag(2,6) hidden behind row operations
    const auto s3 = linalg::smith_normal_form(int_from({{2, 4}, {4, 2}}));
    CHECK(s3.invariant_factors == std::vector<Int>{2, 6});
}

TEST_CASE("smith factors divide in order on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = oracles::random_int_matrix(rng, 5 + trial % 4, 4 + trial % 5);
        const auto s = linalg::smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
    }
}

TEST_CASE("smith factors invariant under row and column permutations") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const auto m = oracles::random_int_matrix(rng, 6, 7);
        std::vector<std::size_t> rp(6), cp(7);
        for (std::size_t i = 0; i < 6; ++i) rp[i] = i;
        for (std::size_t i = 0; i < 7; ++i) cp[i] = i;
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        IntMatrix p(6, 7);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 7; ++c) p.at(r, c) = m.at(rp[r], cp[c]);
        CHECK(linalg::smith_normal_form(m).invariant_factors ==
              linalg::smith_normal_form(p).invariant_factors);
    }
}

TEST_CASE("rank over Q equals number of invariant factors") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = oracles::random_int_matrix(rng, 4 + trial % 5, 4 + (trial * 3) % 6);
        CHECK(linalg::rank_q(m.to_rational()) == linalg::smith_normal_form(m).rank);
    }
}

TEST_CASE("rank agrees with the minor-expansion oracle") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 12; ++trial) {
        auto m = oracles::random_int_matrix(rng, 4, 6, -3, 3);
        if (trial % 3 == 0) {
            // force rank deficiency: duplicate a row
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(3, c) = m.at(1, c);
        }
        CHECK(linalg::rank_q(m.to_rational()) == oracles::rank_by_minors(m));
    }
}

TEST_CASE("rank-nullity on random rational matrices") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 3 + trial % 6, cols = 3 + (trial * 5) % 8;
        const auto m = oracles::random_rat_matrix(rng, rows, cols);
        CHECK(linalg::kernel_basis_q(m).size() + linalg::rank_q(m) == cols);
    }
}

TEST_CASE("serial and parallel kernels produce identical results") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t rows = 10 + (trial * 7) % 40, cols = 8 + (trial * 11) % 45;
        const auto rm = oracles::random_rat_matrix(rng, rows, cols);
        CHECK(linalg::rref(rm, Exec::serial) == linalg::rref(rm, Exec::parallel));
        CHECK(linalg::rank_q(rm, Exec::serial) == linalg::rank_q(rm, Exec::parallel));
        CHECK(linalg::kernel_basis_q(rm, Exec::serial) == linalg::kernel_basis_q(rm, Exec::parallel));

        const auto im = oracles::random_int_matrix(rng, rows, cols);
        CHECK(linalg::smith_normal_form(im, Exec::serial).invariant_factors ==
              linalg::smith_normal_form(im, Exec::parallel).invariant_factors);
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const auto a = oracles::random_rat_matrix(rng, 5, 4);
        const auto x = oracles::random_rat_matrix(rng, 4, 2);
        const auto b = a * x;
        const auto got = linalg::solve(a, b);
        REQUIRE(got.has_value());
        CHECK(a * *got == b);
    }
    // [1;1] x = (1,2) has no solution
    const auto bad = linalg::solve(from_ints({{1}, {1}}), from_ints({{1}, {2}}));
    CHECK(!bad.has_value());
}

TEST_CASE("cokernel representatives complete the column space") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        const auto m = oracles::random_rat_matrix(rng, 7, 4);
        const auto reps = linalg::cokernel_representatives(m);
        CHECK(reps.size() == 7 - linalg::rank_q(m));
        RatMatrix extended(7, m.cols() + reps.size());
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) extended.at(r, c) = m.at(r, c);
        for (std::size_t j = 0; j < reps.size(); ++j) extended.at(reps[j], m.cols() + j) = 1;
        CHECK(linalg::rank_q(extended) == 7);
    }
}

TEST_CASE("csv rendering uses num/den entries") {
    RatMatrix m(1, 3);
    m.at(0, 0) = Rat(3);
    m.at(0, 1) = Rat(-3, 4);
    m.at(0, 2) = 0;
    CHECK(m.to_csv() == "3,-3/4,0\n");
    CHECK(int_from({{1, -2}}).to_csv() == "1,-2\n");
}
