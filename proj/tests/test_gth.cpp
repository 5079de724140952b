#include <doctest.h>

#include <random>

#include "egth/corpus.hpp"
#include "egth/counted.hpp"
#include "egth/gth.hpp"
#include "support.hpp"

using namespace egth;
using namespace egth::test;

TEST_CASE("censor_step two-state flip") {
    const auto r = censor_step<double>(make_matrix({{0, 1}, {1, 0}}), make_vector({1, 1}));
    CHECK(r.p.rows() == 1);
    CHECK(r.p(0, 0) == 1.0);
    CHECK(r.mu(0) == 2.0);
    CHECK(r.boundary.s == 1.0);
}

TEST_CASE("censor_step three-cycle") {
    const auto r = censor_step<double>(make_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
                                       make_vector({1, 1, 1}));
    CHECK(r.p(0, 0) == 0.0);
    CHECK(r.p(0, 1) == 1.0);
    CHECK(r.p(1, 0) == 1.0);
    CHECK(r.p(1, 1) == 0.0);
    CHECK(r.mu(0) == 1.0);
    CHECK(r.mu(1) == 2.0);
}

TEST_CASE("censor_step first elimination of TP3") {
    const auto tp3 = corpus::load("TP3");
    const auto r = censor_step<double>(tp3.p.matrix(),
                                       DenseVector<double>::Constant(5, 1.0));
    const double s5 = 2.0e-7 + 3.0e-7 + 1.0e-7 + 4.0e-7;
    CHECK(r.boundary.s == s5);
    CHECK(r.p(0, 0) == 0.999999 + (4.0e-7 * 2.0e-7) / s5);
}

TEST_CASE("censor_step rejects an absorbing last state") {
    CHECK_THROWS_AS(censor_step<double>(make_matrix({{1, 0}, {0, 1}}), make_vector({1, 1})),
                    AbsorbingLastState);
    CHECK_THROWS_AS(censor_step<double>(make_matrix({{1.0}}), make_vector({1.0})),
                    DimensionMismatch);
}

TEST_CASE("reduce_fully boundary data") {
    SUBCASE("two states: S(2) is p21 verbatim") {
        const auto t = reduce_fully(chain_of(make_matrix({{0.5, 0.5}, {0.25, 0.75}})));
        CHECK(t.size() == 2);
        CHECK(t.s(2) == 0.25);
        CHECK(t.boundary_col(2)(0) == 0.5);
        CHECK(t.level2()(1, 1) == 0.75);
    }
    SUBCASE("three-cycle: both normalizers are 1") {
        const auto t = reduce_fully(chain_of(make_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
        CHECK(t.s(3) == 1.0);
        CHECK(t.s(2) == 1.0);
        CHECK(t.mu(2)(1) == 2.0);
        CHECK(t.mu(1)(0) == 3.0);  // recurrence time of state 1
    }
    SUBCASE("reducible input surfaces the failing level") {
        try {
            reduce_fully(chain_of(make_matrix({{0.5, 0.5, 0}, {0.5, 0.5, 0}, {0.5, 0, 0.5}})));
            FAIL("expected AbsorbingLastState");
        } catch (const AbsorbingLastState& e) {
            CHECK(e.level == 3);
        }
    }
}

TEST_CASE("stationary_gth small exact chain") {
    const auto pi = stationary_gth(StochasticMatrix<double>::validate(
        make_matrix({{0.5, 0.5}, {0.25, 0.75}})));
    CHECK(pi(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pi(1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("stationary_gth reproduces the reference vectors") {
    for (const char* id : {"TP1", "TP3"}) {
        const auto tp = corpus::load(id);
        const auto pi = stationary_gth(tp.p);
        REQUIRE(tp.golden_pi.has_value());
        CHECK(max_abs_diff(pi.vector(), tp.golden_pi->vector()) <= corpus::golden_pi_abs_tol(id));
    }
}

TEST_CASE("reduced_stationary") {
    const auto tp1 = corpus::load("TP1");
    const auto trace = reduce_fully(MarkovRenewalProcess<double>::chain(tp1.p));
    SUBCASE("level N equals the full distribution") {
        const auto full = stationary_gth(tp1.p);
        const auto red = reduced_stationary(trace, 6);
        for (Index i = 0; i < 6; ++i) CHECK(red(i) == full(i));
    }
    SUBCASE("level 1 is the point mass") {
        const auto red = reduced_stationary(trace, 1);
        CHECK(red.size() == 1);
        CHECK(red(0) == 1.0);
    }
    SUBCASE("level 2 matches the renormalized dense solve") {
        const DenseVector<double> pi = oracle_stationary(tp1.p.matrix());
        const double head = pi(0) + pi(1);
        const auto red = reduced_stationary(trace, 2);
        CHECK(red(0) == doctest::Approx(pi(0) / head).epsilon(1e-12));
        CHECK(red(1) == doctest::Approx(pi(1) / head).epsilon(1e-12));
    }
    SUBCASE("out of range") {
        CHECK_THROWS_AS(reduced_stationary(trace, 0), DimensionMismatch);
        CHECK_THROWS_AS(reduced_stationary(trace, 7), DimensionMismatch);
    }
}

TEST_CASE("stationary_gth agrees with the dense solve oracle") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 120; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 19);
        const DenseMatrix<double> p = random_stochastic(rng, n, 0.3 + 0.7 * (rep % 3) / 2.0);
        const auto pi = stationary_gth(StochasticMatrix<double>::validate(p));
        const DenseVector<double> ref = oracle_stationary(p);
        CHECK(max_rel_diff(pi.vector(), ref) <= 1e-10);
    }
}

TEST_CASE("censoring consistency across levels") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 60; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 19);
        const DenseMatrix<double> p = random_stochastic(rng, n, 0.6);
        const auto sp = StochasticMatrix<double>::validate(p);
        const auto trace = reduce_fully(MarkovRenewalProcess<double>::chain(sp));
        const auto full = stationary_gth(sp);
        const Index lvl = 1 + static_cast<Index>(rng() % static_cast<unsigned long>(n));
        const auto red = reduced_stationary(trace, lvl);
        double head = 0.0;
        for (Index i = 0; i < lvl; ++i) head += full(i);
        for (Index i = 0; i < lvl; ++i)
            CHECK(red(i) == doctest::Approx(full(i) / head).epsilon(1e-12));
    }
}

TEST_CASE("censored chains stay stochastic to 4 ulp") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 40; ++rep) {
        const Index n = 3 + static_cast<Index>(rng() % 10);
        DenseMatrix<double> p = random_stochastic(rng, n, 0.5);
        DenseVector<double> mu = random_mu(rng, n);
        for (Index lvl = n; lvl >= 2; --lvl) {
            const auto r = censor_step(p, mu);
            for (Index i = 0; i < r.p.rows(); ++i) {
                double sum = 0.0;
                for (Index j = 0; j < r.p.cols(); ++j) sum += r.p(i, j);
                CHECK(std::abs(sum - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
            }
            p = r.p;
            mu = r.mu;
        }
    }
}

TEST_CASE("holding times grow monotonically under reduction") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 40; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 12);
        const auto mrp = mrp_of(random_stochastic(rng, n, 0.5), random_mu(rng, n));
        const auto trace = reduce_fully(mrp);
        for (Index lvl = n; lvl >= 2; --lvl)
            for (Index i = 0; i < lvl - 1; ++i) CHECK(trace.mu(lvl - 1)(i) >= trace.mu(lvl)(i));
    }
}

TEST_CASE("the reduction path performs no subtraction") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 10; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 11);
        const auto p = StochasticMatrix<double>::validate(random_stochastic(rng, n, 0.5));
        const auto counted = p.cast<Counted>();
        Counted::reset_counts();
        const auto pi = stationary_gth(counted);
        CHECK(Counted::counts().sub == 0);
        CHECK(Counted::counts().neg == 0);
        CHECK(Counted::counts().add > 0);
        CHECK(Counted::counts().div > 0);
        // instrumented and plain runs agree bit for bit
        const auto plain = stationary_gth(p);
        for (Index i = 0; i < n; ++i) CHECK(pi(i).value() == plain(i));
    }
}
