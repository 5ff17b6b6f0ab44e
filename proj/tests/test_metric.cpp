#include <cmath>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "wormhole/metric.hpp"

using namespace wormhole;

TEST_CASE("metric_at reference values") {
    auto focal = metric::metric_at(ChartPoint(0, 0, 2.0));
    CHECK(focal(0, 0) == 0.0);
    CHECK(focal(1, 1) == 0.0);
    CHECK(focal(2, 2) == doctest::Approx(1.0));

    auto g = metric::metric_at(ChartPoint(1, 0.5, 0.3));
    CHECK(g(0, 0) == AbsApprox(1.6109466926077459, 1e-12));
    CHECK(g(1, 1) == AbsApprox(1.6109466926077459, 1e-12));
    CHECK(g(2, 2) == AbsApprox(1.8338052509928592, 1e-12));
    CHECK(g(0, 1) == 0.0);

    auto axis = metric::metric_at(ChartPoint(0, kPi / 2, 0));
    CHECK(axis(0, 0) == doctest::Approx(1.0));
    CHECK(axis(1, 1) == doctest::Approx(1.0));
    CHECK(std::fabs(axis(2, 2)) < 1e-30);
}

TEST_CASE("metric_det zeros and reference value") {
    CHECK(metric::metric_det(ChartPoint(0, 0, 0)) == 0.0);
    CHECK(metric::metric_det(ChartPoint(1, 0.5, 0)) ==
          AbsApprox(4.758998315202191, 1e-11));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-2, 2);
    for (int i = 0; i < 100; ++i) {
        double u = dist(rng), v = dist(rng) / 2;
        CHECK(metric::metric_det(ChartPoint(u, v, 0)) ==
              doctest::Approx(metric::metric_det(ChartPoint(-u, -v, 0))));
    }
}

TEST_CASE("F and G positivity and zero sets") {
    CHECK(metric::F(0, 0) == 0.0);
    CHECK(metric::G(1.3, kPi / 2) < 1e-30);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> du(-3, 3), dv(-kPi / 2, kPi / 2);
    for (int i = 0; i < 500; ++i) {
        double u = du(rng), v = dv(rng);
        CHECK(metric::F(u, v) >= 0.0);
        CHECK(metric::G(u, v) >= 0.0);
        // algebraic backbone of the hyperboloid limit
        double sh = std::sinh(u), sn = std::sin(v);
        CHECK(std::fabs(metric::F(u, v) - (sh * sh + sn * sn)) < 1e-12);
    }
}

TEST_CASE("meridian metric equals the upper-left block") {
    for (double u : {-2.0, -0.3, 0.5, 1.7})
        for (double v : {-1.2, 0.0, 0.9}) {
            auto m = metric::meridian_at(u, v);
            auto g = metric::metric_at(ChartPoint(u, v, 0));
            CHECK(m[0] == g(0, 0));
            CHECK(m[1] == g(1, 1));
        }
}

TEST_CASE("hyperboloid metric: limit form and domain errors") {
    const HyperboloidMetric limit{1.0, 0.0, 0.0};
    const double u = 0.575449232696570266; // sinh^2 0.7
    const double w = -0.087332192545160851; // -sin^2 0.3
    auto g = hyperboloid_metric_at(limit, u, w);
    CHECK(g[0] == doctest::Approx((u - w) / (4 * u * (1 + u))).epsilon(1e-14));
    CHECK(g[0] > 0);
    CHECK(g[1] > 0);

    const HyperboloidMetric m{1.0, 0.5, -0.1};
    CHECK_THROWS_AS(hyperboloid_metric_at(m, 1.0, -0.25), DomainError); // w = -b^2 boundary
    CHECK_THROWS_AS(hyperboloid_metric_at(m, 1.0, -1.0), DomainError);  // w = -a^2 boundary
    CHECK_THROWS_AS(hyperboloid_metric_at(m, 0.0, -0.5), DomainError);  // u = 0 boundary
    auto inside = hyperboloid_metric_at(m, 0.7, -0.5);
    CHECK(inside[0] > 0);
    CHECK(inside[1] > 0);

    CHECK_THROWS_AS(HyperboloidMetric(1.0, 0.5, 0.3), DomainError);
    CHECK_THROWS_AS(HyperboloidMetric(1.0, 2.0, -0.1), DomainError);
}

TEST_CASE("hyperboloid limit residual reference points") {
    CHECK(hyperboloid_limit_residual(1.0, 0.7, 0.3) < 1e-9);
    CHECK(hyperboloid_limit_residual(2.0, 1.1, 1.2) < 4e-9);
    CHECK(hyperboloid_limit_residual(1.0, 1e-4, 0.5) < 1e-9);
    CHECK_THROWS_AS(hyperboloid_limit_residual(1.0, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(hyperboloid_limit_residual(1.0, 0.7, 0.0), DomainError);
    CHECK_THROWS_AS(hyperboloid_limit_residual(-1.0, 0.7, 0.3), DomainError);
}

TEST_CASE("hyperboloid limit residual on a grid") {
    for (double a : {1.0, 2.0}) {
        double worst = 0;
        for (int i = 0; i < 25; ++i)
            for (int j = 0; j < 25; ++j) {
                const double zeta = 0.02 + 1.8 * i / 24;
                const double eta = 0.02 + (kPi / 2 - 0.04) * j / 24;
                worst = std::max(worst, hyperboloid_limit_residual(a, zeta, eta));
            }
        CHECK(worst < 1e-9 * a * a);
    }
}
