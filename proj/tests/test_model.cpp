#include <doctest.h>

#include <random>

#include "egth/corpus.hpp"
#include "egth/gth.hpp"
#include "egth/model.hpp"
#include "support.hpp"

using namespace egth;
using namespace egth::test;

TEST_CASE("validate accepts exact two-state matrix") {
    const auto p = StochasticMatrix<double>::validate(make_matrix({{0.5, 0.5}, {0.25, 0.75}}), 1e-12);
    CHECK(p.size() == 2);
    CHECK(p(0, 0) == 0.5);
    CHECK(p(1, 0) == 0.25);
}

TEST_CASE("validate accepts single absorbing state") {
    const auto p = StochasticMatrix<double>::validate(make_matrix({{1.0}}), 1e-12);
    CHECK(p.size() == 1);
    CHECK(p(0, 0) == 1.0);
}

TEST_CASE("corpus TP2 validates at 1e-12") {
    const auto tp = corpus::load("TP2");
    CHECK(tp.p.size() == 8);
    CHECK(check_irreducible(tp.p));
}

TEST_CASE("validate rejections") {
    CHECK_THROWS_AS(StochasticMatrix<double>::validate(DenseMatrix<double>::Zero(2, 3)), NotSquare);
    CHECK_THROWS_AS(StochasticMatrix<double>::validate(DenseMatrix<double>(0, 0)), NotSquare);

    try {
        StochasticMatrix<double>::validate(make_matrix({{0.5, 0.5}, {-0.1, 1.1}}));
        FAIL("expected NegativeEntry");
    } catch (const NegativeEntry& e) {
        CHECK(e.row == 2);
        CHECK(e.col == 1);
    }

    try {
        StochasticMatrix<double>::validate(make_matrix({{0.5, 0.5}, {0.3, 0.8}}));
        FAIL("expected RowSumOutOfTolerance");
    } catch (const RowSumOutOfTolerance& e) {
        CHECK(e.row == 2);
        CHECK(e.sum == doctest::Approx(1.1).epsilon(1e-12));
    }
}

TEST_CASE("validation stores entries bit-identically") {
    std::mt19937_64 rng(11);
    const DenseMatrix<double> raw = random_stochastic(rng, 7, 0.6);
    const auto p = StochasticMatrix<double>::validate(raw);
    for (Index i = 0; i < 7; ++i)
        for (Index j = 0; j < 7; ++j) CHECK(p(i, j) == raw(i, j));
}

TEST_CASE("check_irreducible") {
    CHECK(check_irreducible(StochasticMatrix<double>::validate(make_matrix({{0, 1}, {1, 0}}))));
    CHECK_FALSE(
        check_irreducible(StochasticMatrix<double>::validate(make_matrix({{1, 0}, {0.5, 0.5}}))));
    CHECK_FALSE(check_irreducible(corpus::load("TP1_original").p));
    CHECK(check_irreducible(StochasticMatrix<double>::validate(make_matrix({{1.0}}))));
}

TEST_CASE("recurrent_class of the reducible 10-state chain is TP1") {
    const auto original = corpus::load("TP1_original");
    const auto rc = recurrent_class(original.p);
    CHECK(rc.original_states == std::vector<Index>{2, 5, 6, 7, 9, 10});
    const auto tp1 = corpus::load("TP1");
    REQUIRE(rc.p.size() == 6);
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j) CHECK(rc.p(i, j) == tp1.p(i, j));
    CHECK(check_irreducible(rc.p));
}

TEST_CASE("recurrent_class of an irreducible chain is the identity restriction") {
    std::mt19937_64 rng(5);
    const auto p = StochasticMatrix<double>::validate(random_stochastic(rng, 5, 0.5));
    const auto rc = recurrent_class(p);
    CHECK(rc.original_states == std::vector<Index>{1, 2, 3, 4, 5});
    for (Index i = 0; i < 5; ++i)
        for (Index j = 0; j < 5; ++j) CHECK(rc.p(i, j) == p(i, j));
}

TEST_CASE("recurrent_class drops a transient state") {
    const auto p = StochasticMatrix<double>::validate(make_matrix({{1, 0}, {0.5, 0.5}}));
    const auto rc = recurrent_class(p);
    CHECK(rc.original_states == std::vector<Index>{1});
    CHECK(rc.p.size() == 1);
    CHECK(rc.p(0, 0) == 1.0);
}

TEST_CASE("recurrent_class rejects two closed classes") {
    const auto p = StochasticMatrix<double>::validate(make_matrix({{1, 0}, {0, 1}}));
    CHECK_THROWS_AS(recurrent_class(p), MultipleClosedClasses);
}

TEST_CASE("recurrent_class output always passes check_irreducible") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        // an irreducible core plus transient feeder states
        const Index core = 2 + static_cast<Index>(rng() % 5);
        const Index extra = 1 + static_cast<Index>(rng() % 3);
        const Index n = core + extra;
        DenseMatrix<double> p = DenseMatrix<double>::Zero(n, n);
        p.topLeftCorner(core, core) = random_stochastic(rng, core, 0.7);
        for (Index i = core; i < n; ++i) {
            p(i, static_cast<Index>(rng() % static_cast<unsigned long>(n))) = 0.5;
            p(i, static_cast<Index>(rng() % static_cast<unsigned long>(core))) += 0.5;
            const double sum = p.row(i).sum();
            for (Index k = 0; k < n; ++k) p(i, k) /= sum;
        }
        const auto rc = recurrent_class(StochasticMatrix<double>::validate(p));
        CHECK(check_irreducible(rc.p));
    }
}

TEST_CASE("mean_asymptotic_increment") {
    SUBCASE("chain case is 1 up to the rounding of the pi sum") {
        std::mt19937_64 rng(23);
        for (int rep = 0; rep < 20; ++rep) {
            const auto p = StochasticMatrix<double>::validate(random_stochastic(rng, 8, 0.7));
            const auto mc = MarkovRenewalProcess<double>::chain(p);
            const auto pi = stationary_gth(p);
            const double lambda = mean_asymptotic_increment(pi, mc);
            double sum = 0.0;
            for (Index i = 0; i < pi.size(); ++i) sum += pi(i);
            CHECK(lambda == sum);
            CHECK(std::abs(lambda - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
        }
    }
    SUBCASE("weighted average") {
        const auto mrp = mrp_of(make_matrix({{0, 1}, {1, 0}}), make_vector({2, 3}));
        const auto pi = StationaryDistribution<double>::from(make_vector({0.5, 0.5}));
        CHECK(mean_asymptotic_increment(pi, mrp) == 2.5);
    }
    SUBCASE("single state") {
        const auto mrp = mrp_of(make_matrix({{1.0}}), make_vector({7.0}));
        const auto pi = StationaryDistribution<double>::from(make_vector({1.0}));
        CHECK(mean_asymptotic_increment(pi, mrp) == 7.0);
    }
    SUBCASE("dimension mismatch") {
        const auto mrp = mrp_of(make_matrix({{0, 1}, {1, 0}}), make_vector({2, 3}));
        const auto pi = StationaryDistribution<double>::from(make_vector({1.0}));
        CHECK_THROWS_AS(mean_asymptotic_increment(pi, mrp), DimensionMismatch);
    }
}

TEST_CASE("holding time validation") {
    const auto p = StochasticMatrix<double>::validate(make_matrix({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(
        MarkovRenewalProcess<double>::with_holding_times(p, make_vector({1.0, 2.0, 3.0})),
        DimensionMismatch);
    CHECK_THROWS_AS(MarkovRenewalProcess<double>::with_holding_times(p, make_vector({1.0, 0.0})),
                    ValidationError);
    CHECK_THROWS_AS(MarkovRenewalProcess<double>::with_holding_times(p, make_vector({1.0, -2.0})),
                    ValidationError);
    CHECK(MarkovRenewalProcess<double>::chain(p).is_chain());
    CHECK_FALSE(
        MarkovRenewalProcess<double>::with_holding_times(p, make_vector({1.0, 2.0})).is_chain());
}
