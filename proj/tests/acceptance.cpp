// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned here, not configurable.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "wormhole/chart.hpp"
#include "wormhole/curvature.hpp"
#include "wormhole/geodesic.hpp"
#include "wormhole/metric.hpp"

using namespace wormhole;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!ok) ++failures;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// 1. pullback isometry on a 20x20x8 Regular grid
void criterion_pullback() {
    double worst = 0;
    int count = 0;
    for (int iu = 0; iu < 20; ++iu)
        for (int iv = 0; iv < 20; ++iv)
            for (int ip = 0; ip < 8; ++ip) {
                const ChartPoint p(-3 + 6.0 * iu / 19, -1.4 + 2.8 * iv / 19, 2 * kPi * ip / 8);
                if (classify(p).tag != RegionTag::Regular) continue;
                ++count;
                const auto JtJ = pullback(p);
                const auto g = metric::metric_at(p);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        worst = std::max(worst, std::fabs(JtJ(i, j) - g(i, j)));
            }
    report(1, "pullback isometry", worst < 1e-9,
           "max |J^T J - g| = " + num(worst) + " over " + std::to_string(count) + " points");
}

// 2. pointwise flatness on both sheets
void criterion_flatness() {
    double worst = 0;
    int count = 0;
    bool both_signs[2] = {false, false};
    for (int iu = 0; iu < 20; ++iu)
        for (int iv = 0; iv < 20; ++iv) {
            const ChartPoint p(-3 + 6.0 * iu / 19, -1.4 + 2.8 * iv / 19, 0.0);
            if (classify(p).tag != RegionTag::Regular) continue;
            if (metric::F(p.u, p.v) <= 0.1 || std::fabs(std::cos(p.v)) <= 0.05) continue;
            both_signs[p.u > 0] = true;
            ++count;
            worst = std::max(worst, riemann_at(p).max_abs());
        }
    report(2, "flatness (side A: Riemann scan)",
           worst < 1e-6 && both_signs[0] && both_signs[1] && count > 200,
           "max |Riemann| = " + num(worst) + " over " + std::to_string(count) +
               " points on both sheets");
}

// 3. concentrated curvature via the loop deficit
void criterion_deficit() {
    bool ok = true;
    std::string detail;
    for (double r : {0.05, 0.1, 0.2}) {
        const double d = gauss_bonnet_deficit(r);
        ok = ok && std::fabs(d + 2 * kPi) < 1e-2;
        detail += "d(" + num(r) + ")=" + num(d) + " ";
    }
    const double far = gauss_bonnet_deficit(circle_loop({1.0, 0.0}, 0.1));
    ok = ok && std::fabs(far) < 1e-6;
    detail += "non-enclosing=" + num(far);
    report(3, "flatness (side B: -2pi deficit)", ok, detail);
}

// 4. 4pi cone angle with quadratic convergence
void criterion_cone() {
    const double e1 = std::fabs(circle_probe(0.1).ratio() / (4 * kPi) - 1);
    const double e2 = std::fabs(circle_probe(0.05).ratio() / (4 * kPi) - 1);
    const bool ok = e1 < 0.01 && e2 < 0.0025 && e2 < e1 / 3;
    report(4, "cone angle 4pi", ok,
           "rel err " + num(e1) + " at r=0.1, " + num(e2) + " at r=0.05");
}

// 5. wormhole topology: chart geodesics vs straight-line oracle
void criterion_topology() {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> d(-1, 1);
    int done = 0, crossing = 0, mismatches = 0;
    double worst_dev = 0;
    bool swap_rule_ok = true;
    while (done < 100) {
        SheetPoint start{d(rng) < 0 ? Sheet::B : Sheet::A, 2.5 * d(rng), 2.5 * d(rng),
                         -1.5 + 0.5 * d(rng)};
        if (start.sheet == Sheet::B) start.z = -start.z;
        std::array<double, 3> dir{0.5 * d(rng), 0.5 * d(rng),
                                  start.sheet == Sheet::A ? 1.0 : -1.0};
        CurveTrace oracle;
        try {
            oracle = straight_line_oracle(start, dir, 4.0);
        } catch (const FocalHit&) {
            continue;
        }
        bool near_axis = false;
        for (const auto& smp : oracle.samples)
            if (std::hypot(smp.cartesian.x, smp.cartesian.y) < 0.05) near_axis = true;
        if (near_axis) continue;

        // independent geometric rule: swap iff the line meets the open disk
        const double n = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
        const double tc = -start.z / (dir[2] / n);
        bool through_disk = false;
        if (tc > 0 && tc < 4.0) {
            const double rho = std::hypot(start.x + dir[0] / n * tc, start.y + dir[1] / n * tc);
            through_disk = rho < 1.0;
        }
        if (through_disk != (oracle.sheet_swaps.size() == 1) ||
            (!through_disk && !oracle.sheet_swaps.empty()))
            swap_rule_ok = false;

        GeodesicState s;
        s.point = from_cartesian(start);
        s.velocity = chart_velocity(s.point, dir);
        const auto trace = integrate_geodesic(s, 4.0, 1e-11);
        if (trace.sheet_swaps.size() != oracle.sheet_swaps.size()) ++mismatches;
        for (const auto& smp : trace.samples) {
            const auto q = straight_line_at(start, dir, smp.arclength);
            worst_dev = std::max({worst_dev, std::fabs(q.x - smp.cartesian.x),
                                  std::fabs(q.y - smp.cartesian.y),
                                  std::fabs(q.z - smp.cartesian.z)});
        }
        if (through_disk) ++crossing;
        ++done;
    }
    const bool ok = worst_dev < 1e-6 && mismatches == 0 && swap_rule_ok && crossing > 10 &&
                    crossing < 90;
    report(5, "wormhole topology (oracle equivalence)", ok,
           "max dev = " + num(worst_dev) + ", swap mismatches = " + std::to_string(mismatches) +
               ", " + std::to_string(crossing) + "/100 disk crossings");
}

// 6. meridian metric is the b -> 0 hyperboloid limit
void criterion_hyperboloid() {
    bool ok = true;
    std::string detail;
    for (double a : {1.0, 2.0}) {
        double worst = 0;
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j) {
                const double zeta = 0.02 + 1.8 * i / 49;
                const double eta = 0.02 + (kPi / 2 - 0.04) * j / 49;
                worst = std::max(worst, hyperboloid_limit_residual(a, zeta, eta));
            }
        ok = ok && worst < 1e-9 * a * a;
        detail += "a=" + num(a) + ": " + num(worst) + " ";
    }
    report(6, "hyperboloid limit identity", ok, detail);
}

// 7. conserved quantities along long geodesics, disk crossings included
void criterion_conservation() {
    double worst = 0;
    int crossings = 0;
    const std::vector<std::pair<SheetPoint, std::array<double, 3>>> launches{
        {{Sheet::A, 0.5, 0, -1}, {0, 0, 1}},          // through the disk
        {{Sheet::A, 0.3, 0.2, -2}, {0.1, -0.05, 1}},  // through the disk, skew
        {{Sheet::A, 2, 0, -1}, {0, 0, 1}},            // misses the disk
        {{Sheet::A, 1.5, 0.3, -1.2}, {0.2, 0.1, 1}},  // generic
    };
    for (const auto& [start, dir] : launches) {
        GeodesicState s;
        s.point = from_cartesian(start);
        s.velocity = chart_velocity(s.point, dir);
        const auto trace = integrate_geodesic(s, 10.0, 1e-10);
        crossings += static_cast<int>(trace.sheet_swaps.size());
        for (const auto& smp : trace.samples)
            worst = std::max({worst, smp.speed_error, smp.killing_error});
    }
    report(7, "conservation along geodesics", worst < 1e-8 && crossings >= 2,
           "max relative drift = " + num(worst) + ", " + std::to_string(crossings) +
               " disk crossings");
}

// 8. holonomy: trivial vector return, distinguished by the unwrapped angle
void criterion_holonomy() {
    TransportFrame f;
    f.base = ChartPoint(1.1, 0, 0);
    f.vector = {0.6, 0.8, 0};

    const auto contractible = parallel_transport(f, circle_loop({1.0, 0.0}, 0.1), 1e-10);
    const auto once = parallel_transport(f, circle_loop({0.0, 0.0}, 0.1), 1e-10);
    const auto twice = parallel_transport(f, circle_loop({0.0, 0.0}, 0.1, 2), 1e-10);

    auto vec_err = [&](const TransportFrame& out) {
        return std::max(std::fabs(out.vector[0] - f.vector[0]),
                        std::fabs(out.vector[1] - f.vector[1]));
    };
    const bool ok = vec_err(contractible) < 1e-6 && vec_err(once) < 1e-6 &&
                    std::fabs(contractible.unwrapped_angle) < 1e-2 &&
                    std::fabs(once.unwrapped_angle + 2 * kPi) < 1e-2 &&
                    std::fabs(twice.unwrapped_angle + 4 * kPi) < 2e-2;
    report(8, "holonomy unwrapping", ok,
           "angles: contractible " + num(contractible.unwrapped_angle) + ", enclosing " +
               num(once.unwrapped_angle) + ", doubly wound " + num(twice.unwrapped_angle));
}

} // namespace

int main() {
    criterion_pullback();
    criterion_flatness();
    criterion_deficit();
    criterion_cone();
    criterion_topology();
    criterion_hyperboloid();
    criterion_conservation();
    criterion_holonomy();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
