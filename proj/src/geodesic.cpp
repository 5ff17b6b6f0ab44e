#include "wormhole/geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "wormhole/ode.hpp"

namespace wormhole {

namespace {

// accelerations of the geodesic equation for diag(F, F, G);
// phid == 0 selects the reduced meridian system (valid on the axis)
std::array<double, 3> accelerations(double u, double v, double ud, double vd, double phid) {
    const double F = metric::F(u, v);
    const double Fu = metric::F_u(u, v), Fv = metric::F_v(u, v);
    const double au = -((Fu / (2 * F)) * (ud * ud - vd * vd) + (Fv / F) * ud * vd);
    const double av = -((Fv / (2 * F)) * (vd * vd - ud * ud) + (Fu / F) * ud * vd);
    if (phid == 0.0) return {au, av, 0.0};

    const double G = metric::G(u, v);
    if (G < 1e-12) throw SingularPoint("geodesic: rotating state on the axis");
    const double Gu = metric::G_u(u, v), Gv = metric::G_v(u, v);
    return {au + (Gu / (2 * F)) * phid * phid, av + (Gv / (2 * F)) * phid * phid,
            -((Gu / G) * ud + (Gv / G) * vd) * phid};
}

double wrap_pi(double a) {
    while (a > kPi) a -= 2 * kPi;
    while (a <= -kPi) a += 2 * kPi;
    return a;
}

} // namespace

std::array<double, 2> conserved_quantities(const GeodesicState& s) {
    const auto& p = s.point;
    const auto& w = s.velocity;
    const double F = metric::F(p.u, p.v), G = metric::G(p.u, p.v);
    return {F * (w[0] * w[0] + w[1] * w[1]) + G * w[2] * w[2], G * w[2]};
}

std::array<double, 6> geodesic_rhs(const GeodesicState& s) {
    const auto& p = s.point;
    if (metric::F(p.u, p.v) < 1e-10)
        throw SingularPoint("geodesic_rhs: F below 1e-10 near the focal circle");
    const auto acc = accelerations(p.u, p.v, s.velocity[0], s.velocity[1], s.velocity[2]);
    return {s.velocity[0], s.velocity[1], s.velocity[2], acc[0], acc[1], acc[2]};
}

std::array<double, 3> chart_velocity(const ChartPoint& p, std::array<double, 3> d) {
    const auto J = jacobian(p);
    const double det = det3(J);
    if (std::fabs(det) < 1e-12)
        throw DomainError("chart_velocity: Jacobian is singular at this point");
    // Cramer's rule
    std::array<double, 3> out;
    for (int col = 0; col < 3; ++col) {
        auto M = J;
        for (int row = 0; row < 3; ++row) M[row][col] = d[row];
        out[col] = det3(M) / det;
    }
    return out;
}

CurveTrace integrate_geodesic(const GeodesicState& start, double length, double tol) {
    if (tol < 1e-12 || tol > 1e-4)
        throw DomainError("integrate_geodesic: tol outside [1e-12, 1e-4]");
    if (!(length > 0)) throw DomainError("integrate_geodesic: length must be positive");

    const RegionTag tag = classify(start.point).tag;
    const bool meridian = start.velocity[2] == 0.0;
    if (tag != RegionTag::Regular && !(tag == RegionTag::Axis && meridian))
        throw SingularPoint("integrate_geodesic: start must be Regular (or on-axis meridian)");

    // unit-speed launch
    GeodesicState s = start;
    const double sp2 = conserved_quantities(s)[0];
    if (!(sp2 > 0)) throw DomainError("integrate_geodesic: zero launch velocity");
    for (auto& w : s.velocity) w /= std::sqrt(sp2);
    const double J0 = conserved_quantities(s)[1];

    using State = std::array<double, 6>;
    auto rhs = [&](double, const State& y) -> State {
        if (metric::F(y[0], y[1]) < 1e-8)
            throw SingularApproach("integrate_geodesic: trajectory aimed at the focal circle");
        const auto acc = accelerations(y[0], y[1], y[3], y[4], y[5]);
        return {y[3], y[4], y[5], acc[0], acc[1], acc[2]};
    };

    CurveTrace trace;
    auto push_sample = [&](double arc, const State& y) {
        TraceSample smp;
        smp.arclength = arc;
        smp.point = ChartPoint(y[0], y[1], y[2]);
        smp.cartesian = to_cartesian(smp.point);
        const double F = metric::F(y[0], y[1]), G = metric::G(y[0], y[1]);
        const double sp = F * (y[3] * y[3] + y[4] * y[4]) + G * y[5] * y[5];
        smp.speed_error = std::fabs(sp - 1.0);
        smp.killing_error = std::fabs(G * y[5] - J0) / std::max(1.0, std::fabs(J0));
        trace.samples.push_back(smp);
    };

    State y{s.point.u, s.point.v, s.point.phi, s.velocity[0], s.velocity[1], s.velocity[2]};
    push_sample(start.arclength, y);

    auto observer = [&](double t0, const State& y0, double t1, const State& y1, const State& d0,
                        const State& d1) {
        if (y0[0] * y1[0] < 0) {
            const double h = t1 - t0;
            const double frac = hermite_root<6>(h, y0, y1, d0, d1, 0);
            const auto yx = hermite_eval<6>(h, y0, y1, d0, d1, frac);
            // focal-circle passages are refused upstream; any other u sign
            // change crosses the disk (|v| = pi/2 is the disk center)
            const double av = std::fabs(yx[1]);
            if (av > kClassifyEps)
                trace.sheet_swaps.push_back({t0 + frac * h, std::cos(yx[1])});
        }
        push_sample(t1, y1);
    };

    Dopri5<6> stepper(tol, tol);
    stepper.set_max_step(0.25);
    stepper.integrate(rhs, start.arclength, start.arclength + length, y, observer);
    trace.final_state.point = ChartPoint(y[0], y[1], y[2]);
    trace.final_state.velocity = {y[3], y[4], y[5]};
    trace.final_state.arclength = start.arclength + length;
    return trace;
}

SheetPoint straight_line_at(const SheetPoint& start, std::array<double, 3> d, double s) {
    const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    SheetPoint q = start;
    q.x += d[0] / n * s;
    q.y += d[1] / n * s;
    q.z += d[2] / n * s;
    // sheet flips at transversal crossings of the open unit disk
    if (d[2] != 0.0) {
        const double tc = -start.z / (d[2] / n);
        if (tc > 0 && tc < s) {
            const double rho = std::hypot(start.x + d[0] / n * tc, start.y + d[1] / n * tc);
            if (rho < 1.0 && q.sheet != Sheet::Disk)
                q.sheet = (q.sheet == Sheet::A) ? Sheet::B : Sheet::A;
        }
    }
    return q;
}

CurveTrace straight_line_oracle(const SheetPoint& start, std::array<double, 3> direction,
                                double length, double sample_spacing) {
    if (!(length > 0)) throw DomainError("straight_line_oracle: length must be positive");
    const double n =
        std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                  direction[2] * direction[2]);
    if (!(n > 0)) throw DomainError("straight_line_oracle: zero direction");
    const std::array<double, 3> d{direction[0] / n, direction[1] / n, direction[2] / n};

    if (std::fabs(std::hypot(start.x, start.y) - 1) < 1e-9 && std::fabs(start.z) < 1e-9)
        throw DomainError("straight_line_oracle: start lies on the focal circle");

    auto pos = [&](double t) -> std::array<double, 3> {
        return {start.x + d[0] * t, start.y + d[1] * t, start.z + d[2] * t};
    };
    auto focal_dist = [&](double t) {
        const auto p = pos(t);
        return std::hypot(std::hypot(p[0], p[1]) - 1.0, p[2]);
    };

    // grazing check: minimum distance of the segment to the focal circle
    {
        const int nscan = 2000;
        double best_t = 0, best = focal_dist(0);
        for (int i = 1; i <= nscan; ++i) {
            const double t = length * i / nscan;
            const double f = focal_dist(t);
            if (f < best) { best = f; best_t = t; }
        }
        double lo = std::max(0.0, best_t - length / nscan);
        double hi = std::min(length, best_t + length / nscan);
        for (int i = 0; i < 80; ++i) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (focal_dist(m1) < focal_dist(m2)) hi = m2; else lo = m1;
        }
        if (focal_dist((lo + hi) / 2) < 1e-9)
            throw FocalHit("straight_line_oracle: line grazes the focal circle");
    }

    CurveTrace trace;
    if (d[2] != 0.0) {
        const double tc = -start.z / d[2];
        if (tc > 0 && tc < length) {
            const auto p = pos(tc);
            const double rho = std::hypot(p[0], p[1]);
            if (rho < 1.0) trace.sheet_swaps.push_back({tc, rho});
        }
    }

    auto sheet_at = [&](double t) {
        Sheet s = start.sheet;
        for (const auto& sw : trace.sheet_swaps)
            if (sw.arclength < t) s = (s == Sheet::A) ? Sheet::B : Sheet::A;
        return s;
    };

    const int nsamp = std::max(2, static_cast<int>(std::ceil(length / sample_spacing)) + 1);
    double J0 = 0.0;
    bool have_J0 = false;
    for (int i = 0; i < nsamp; ++i) {
        const double t = length * i / (nsamp - 1);
        const auto p = pos(t);
        TraceSample smp;
        smp.arclength = t;
        smp.cartesian = {sheet_at(t), p[0], p[1], p[2]};
        smp.point = from_cartesian(smp.cartesian);
        if (classify(smp.point).tag == RegionTag::Regular) {
            const auto w = chart_velocity(smp.point, d);
            const double F = metric::F(smp.point.u, smp.point.v);
            const double G = metric::G(smp.point.u, smp.point.v);
            const double sp = F * (w[0] * w[0] + w[1] * w[1]) + G * w[2] * w[2];
            const double J = G * w[2];
            if (!have_J0) { J0 = J; have_J0 = true; }
            smp.speed_error = std::fabs(sp - 1.0);
            smp.killing_error = std::fabs(J - J0) / std::max(1.0, std::fabs(J0));
        }
        trace.samples.push_back(smp);
    }
    return trace;
}

TransportFrame parallel_transport(const TransportFrame& frame, const Loop& loop, double tol) {
    if (tol < 1e-12 || tol > 1e-4)
        throw DomainError("parallel_transport: tol outside [1e-12, 1e-4]");
    if (frame.vector[0] == 0.0 && frame.vector[1] == 0.0)
        throw DomainError("parallel_transport: zero vector");

    using State = std::array<double, 2>;
    auto rhs = [&](double t, const State& w) -> State {
        const auto x = loop.pos(t);
        if (std::hypot(x[0], x[1]) < 1e-3)
            throw SingularApproach("parallel_transport: loop approaches the focal point");
        const auto xd = loop.vel(t);
        const double F = metric::F(x[0], x[1]);
        const double pu = metric::F_u(x[0], x[1]) / (2 * F);
        const double pv = metric::F_v(x[0], x[1]) / (2 * F);
        const double c = pu * xd[0] + pv * xd[1];
        const double omega = pv * xd[0] - pu * xd[1];
        return {-c * w[0] - omega * w[1], omega * w[0] - c * w[1]};
    };

    State w{frame.vector[0], frame.vector[1]};
    double angle_acc = 0.0;
    double prev_angle = std::atan2(w[1], w[0]);
    auto observer = [&](double, const State&, double, const State& w1, const State&,
                        const State&) {
        const double a = std::atan2(w1[1], w1[0]);
        angle_acc += wrap_pi(a - prev_angle);
        prev_angle = a;
    };

    Dopri5<2> stepper(tol, tol);
    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), loop.breaks.begin(), loop.breaks.end());
    cuts.push_back(loop.t_end);
    stepper.set_max_step(loop.t_end / 512);
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        stepper.integrate(rhs, cuts[i], cuts[i + 1], w, observer);

    TransportFrame out = frame;
    out.vector = {w[0], w[1], 0.0};
    out.unwrapped_angle = frame.unwrapped_angle + angle_acc;
    return out;
}

} // namespace wormhole
