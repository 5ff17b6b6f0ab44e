#include <cmath>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "wormhole/chart.hpp"
#include "wormhole/metric.hpp"

using namespace wormhole;

namespace {

ChartPoint random_chart_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u_mag(0.01, 3.0);
    std::uniform_real_distribution<double> v_dist(-kPi / 2 + 0.01, kPi / 2 - 0.01);
    std::uniform_real_distribution<double> phi_dist(0.0, 2 * kPi - 1e-6);
    double u = u_mag(rng) * (rng() % 2 ? 1 : -1);
    return ChartPoint(u, v_dist(rng), phi_dist(rng));
}

} // namespace

TEST_CASE("to_cartesian reference points") {
    auto q = to_cartesian(ChartPoint(0, 0, 0));
    CHECK(q.sheet == Sheet::Disk);
    CHECK(q.x == doctest::Approx(1.0));
    CHECK(q.y == doctest::Approx(0.0));
    CHECK(q.z == doctest::Approx(0.0));

    auto c = to_cartesian(ChartPoint(0, kPi / 2, 1.7));
    CHECK(c.sheet == Sheet::Disk);
    CHECK(std::fabs(c.x) < 1e-15);
    CHECK(std::fabs(c.y) < 1e-15);
    CHECK(std::fabs(c.z) < 1e-15);

    auto a = to_cartesian(ChartPoint(1, 0.3, kPi / 2));
    CHECK(a.sheet == Sheet::A);
    CHECK(std::fabs(a.x) < 1e-15);
    CHECK(a.y == AbsApprox(1.4741612361021064, 1e-12));
    CHECK(a.z == AbsApprox(0.3472956996142692, 1e-12));
}

TEST_CASE("from_cartesian reference points") {
    auto p = from_cartesian({Sheet::A, 2, 0, 0});
    CHECK(p.u == AbsApprox(1.3169578969248166, 1e-9)); // arccosh 2
    CHECK(std::fabs(p.v) < 1e-9);
    CHECK(p.phi == doctest::Approx(0.0));

    auto ax = from_cartesian({Sheet::A, 0, 0, 1});
    CHECK(ax.u == AbsApprox(0.8813735870195430, 1e-9)); // arcsinh 1
    CHECK(ax.v == doctest::Approx(kPi / 2));
    CHECK(ax.phi == 0.0); // axis convention

    auto bx = from_cartesian({Sheet::B, 0, 0, 1});
    CHECK(bx.u == AbsApprox(-0.8813735870195430, 1e-9));
    CHECK(bx.v == doctest::Approx(-kPi / 2));
}

TEST_CASE("round-trip property on 1000 random chart points") {
    std::mt19937_64 rng(42);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const ChartPoint p = random_chart_point(rng);
        const ChartPoint back = from_cartesian(to_cartesian(p));
        worst = std::max(worst, std::fabs(back.u - p.u));
        worst = std::max(worst, std::fabs(back.v - p.v));
        double dphi = std::fabs(back.phi - p.phi);
        dphi = std::min(dphi, 2 * kPi - dphi);
        worst = std::max(worst, dphi);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("classify singular sets") {
    CHECK(classify(ChartPoint(0, 0, 1.0)).tag == RegionTag::FocalCircle);
    CHECK(classify(ChartPoint(0, 0.7, 0)).tag == RegionTag::DiskInterior);
    CHECK(classify(ChartPoint(2, -kPi / 2, 0)).tag == RegionTag::Axis);
    CHECK(classify(ChartPoint(1, 0.5, 0.2)).tag == RegionTag::Regular);
    // near-singular but Regular is allowed
    CHECK(classify(ChartPoint(1e-6, 1e-6, 0)).tag == RegionTag::Regular);
}

TEST_CASE("jacobian is rank-deficient at the focal circle") {
    auto J = jacobian(ChartPoint(0, 0, 0));
    CHECK(std::fabs(det3(J)) < 1e-15);
    // the z-row has no u,v response there
    CHECK(J[2][0] == 0.0);
    CHECK(J[2][1] == 0.0);
}

TEST_CASE("pullback matches the metric and its determinant") {
    const ChartPoint p(1, 0.5, 0.2);
    const auto JtJ = pullback(p);
    const auto g = metric::metric_at(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::fabs(JtJ(i, j) - g(i, j)) < 1e-10);

    const ChartPoint q(1, 0.3, 0);
    const double expect = (std::cosh(1.0) * std::cosh(1.0) - std::cos(0.3) * std::cos(0.3)) *
                          std::cosh(1.0) * std::cos(0.3);
    CHECK(std::fabs(std::fabs(det3(jacobian(q))) - expect) < 1e-10);
    CHECK(std::fabs(std::fabs(det3(jacobian(q))) - std::sqrt(metric::metric_det(q))) < 1e-10);
}

TEST_CASE("pullback isometry on a Regular grid") {
    double worst = 0;
    for (int iu = 0; iu < 12; ++iu)
        for (int iv = 0; iv < 12; ++iv)
            for (int ip = 0; ip < 4; ++ip) {
                const ChartPoint p(-3 + 6.0 * iu / 11, -1.4 + 2.8 * iv / 11, 2 * kPi * ip / 4);
                if (classify(p).tag != RegionTag::Regular) continue;
                const auto JtJ = pullback(p);
                const auto g = metric::metric_at(p);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        worst = std::max(worst, std::fabs(JtJ(i, j) - g(i, j)));
            }
    CHECK(worst < 1e-9);
}

TEST_CASE("two-to-one identification: (u,v) and (-u,-v) share the Cartesian image") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const ChartPoint p = random_chart_point(rng);
        const ChartPoint m(-p.u, -p.v, p.phi);
        const auto a = to_cartesian(p);
        const auto b = to_cartesian(m);
        CHECK(a.x == AbsApprox(b.x, 1e-14));
        CHECK(a.y == AbsApprox(b.y, 1e-14));
        CHECK(a.z == AbsApprox(b.z, 1e-14));
        CHECK(a.sheet != b.sheet);
    }
}

TEST_CASE("Disk points reject bad Cartesian input") {
    CHECK_THROWS_AS(from_cartesian({Sheet::Disk, 0.5, 0, 0.3}), DomainError);
    CHECK_THROWS_AS(from_cartesian({Sheet::Disk, 1.5, 0, 0}), DomainError);
    auto p = from_cartesian({Sheet::Disk, 0.5, 0, 0});
    CHECK(std::fabs(p.u) < 1e-9);
    CHECK(std::cos(p.v) == doctest::Approx(0.5));
}
