#include "wormhole/curvature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wormhole {

namespace {

using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr double kQuadTol = 1e-9;
constexpr std::array<double, 2> kOrigin{0.0, 0.0};

struct ConformalFactor {
    std::function<double(double, double)> f;
    std::function<double(double, double)> fu;
    std::function<double(double, double)> fv;
};

ConformalFactor meridian_factor() {
    return {[](double u, double v) { return metric::F(u, v); },
            [](double u, double v) { return metric::F_u(u, v); },
            [](double u, double v) { return metric::F_v(u, v); }};
}

/// k_g at loop parameter t for the conformal metric f (du^2 + dv^2).
double geodesic_curvature_in(const ConformalFactor& cf, const Loop& loop, double t) {
    const auto x = loop.pos(t);
    const auto xd = loop.vel(t);
    const auto xdd = loop.acc(t);

    const double f = cf.f(x[0], x[1]);
    if (f < 1e-10) throw SingularApproach("geodesic_curvature: loop touches the focal point");
    const double fu = cf.fu(x[0], x[1]);
    const double fv = cf.fv(x[0], x[1]);

    const double speede = std::hypot(xd[0], xd[1]);
    const double sigma = std::sqrt(f) * speede; // metric speed ds/dt
    const double df_dt = fu * xd[0] + fv * xd[1];
    const double dspeede_dt = (xd[0] * xdd[0] + xd[1] * xdd[1]) / speede;
    const double dsigma_dt = df_dt / (2 * std::sqrt(f)) * speede + std::sqrt(f) * dspeede_dt;

    const std::array<double, 2> T{xd[0] / sigma, xd[1] / sigma};
    const std::array<double, 2> dT_dt{xdd[0] / sigma - xd[0] * dsigma_dt / (sigma * sigma),
                                      xdd[1] / sigma - xd[1] * dsigma_dt / (sigma * sigma)};

    // 2-D connection of a conformal factor: phi = (1/2) ln f
    const double pu = fu / (2 * f), pv = fv / (2 * f);
    const std::array<double, 2> gamma{
        pu * T[0] * T[0] + 2 * pv * T[0] * T[1] - pu * T[1] * T[1],
        -pv * T[0] * T[0] + 2 * pu * T[0] * T[1] + pv * T[1] * T[1]};

    const std::array<double, 2> covT{dT_dt[0] / sigma + gamma[0], dT_dt[1] / sigma + gamma[1]};
    const std::array<double, 2> N{-T[1], T[0]}; // leftward unit normal (conformal components)
    return f * (covT[0] * N[0] + covT[1] * N[1]);
}

double loop_total_turning_in(const ConformalFactor& cf, const Loop& loop) {
    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), loop.breaks.begin(), loop.breaks.end());
    cuts.push_back(loop.t_end);

    double turning = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto integrand = [&](double t) {
            const auto x = loop.pos(t);
            const auto xd = loop.vel(t);
            const double sigma = std::sqrt(cf.f(x[0], x[1])) * std::hypot(xd[0], xd[1]);
            return geodesic_curvature_in(cf, loop, t) * sigma;
        };
        turning += Quad::integrate(integrand, cuts[i], cuts[i + 1], 12, kQuadTol);
    }

    // exterior corner angles (angle-preserving metric: Euclidean values)
    auto corner = [&](double tin, double tout) {
        const auto a = loop.vel(tin);
        const auto b = loop.vel(tout);
        return std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
    };
    // incoming velocity is the left limit: piecewise parametrizations switch
    // segments exactly at the break, so step one ulp back
    for (double tb : loop.breaks) turning += corner(std::nextafter(tb, 0.0), tb);
    const auto v0 = loop.vel(0.0);
    const auto v1 = loop.vel(std::nextafter(loop.t_end, 0.0));
    if (std::fabs(v0[0] - v1[0]) + std::fabs(v0[1] - v1[1]) > 1e-12)
        turning += corner(std::nextafter(loop.t_end, 0.0), 0.0);
    return turning;
}

ConePointProbe circle_probe_in(double r, const ConformalFactor& cf) {
    if (!(r > 0) || r > 0.3) throw DomainError("circle_probe: need 0 < r <= 0.3");
    ConePointProbe probe;
    probe.radius = r;
    probe.circumference = Quad::integrate(
        [&](double t) { return std::sqrt(cf.f(r * std::cos(t), r * std::sin(t))) * r; }, 0.0,
        2 * kPi, 12, kQuadTol);
    probe.geodesic_radius =
        Quad::integrate([&](double s) { return std::sqrt(cf.f(s, 0.0)); }, 0.0, r, 12, kQuadTol);
    probe.total_turning = loop_total_turning_in(cf, circle_loop(kOrigin, r));
    return probe;
}

} // namespace

Christoffel3 christoffels_raw(double u, double v) {
    const double F = metric::F(u, v);
    if (F < 1e-10) throw SingularPoint("christoffels: F below 1e-10 (focal circle)");
    const double G = metric::G(u, v);
    const double Fu = metric::F_u(u, v), Fv = metric::F_v(u, v);
    const double Gu = metric::G_u(u, v), Gv = metric::G_v(u, v);

    Christoffel3 c;
    c.set(0, 0, 0, Fu / (2 * F));
    c.set(0, 0, 1, Fv / (2 * F));
    c.set(0, 1, 1, -Fu / (2 * F));
    c.set(0, 2, 2, -Gu / (2 * F));
    c.set(1, 0, 0, -Fv / (2 * F));
    c.set(1, 0, 1, Fu / (2 * F));
    c.set(1, 1, 1, Fv / (2 * F));
    c.set(1, 2, 2, -Gv / (2 * F));
    if (G > 0) {
        c.set(2, 0, 2, Gu / (2 * G));
        c.set(2, 1, 2, Gv / (2 * G));
    } else {
        throw SingularPoint("christoffels: G vanishes (axis)");
    }
    return c;
}

Christoffel3 christoffels_at(const ChartPoint& p) {
    if (classify(p).tag != RegionTag::Regular)
        throw SingularPoint("christoffels_at: point is not Regular");
    return christoffels_raw(p.u, p.v);
}

Christoffel3 christoffels_fd(const ChartPoint& p, double h) {
    if (classify(p).tag != RegionTag::Regular)
        throw SingularPoint("christoffels_fd: point is not Regular");
    // dg[c][a][b] = d g_ab / d x^c, with the phi-derivative zero
    std::array<Mat3Sym, 3> dg{};
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b <= a; ++b)
                dg[c].at(a, b) = fd_derivative(
                    [&, a, b](double u, double v) {
                        return metric::metric_at(ChartPoint(u, v, p.phi))(a, b);
                    },
                    {p.u, p.v}, c, h);

    const Mat3Sym ginv = mat3_inverse(metric::metric_at(p));
    Christoffel3 c;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int d = b; d < 3; ++d) {
                double s = 0.0;
                for (int e = 0; e < 3; ++e)
                    s += ginv(a, e) * (dg[b].e[Mat3Sym::index(e, d)] +
                                       dg[d].e[Mat3Sym::index(e, b)] -
                                       dg[e].e[Mat3Sym::index(b, d)]);
                c.set(a, b, d, s / 2);
            }
    return c;
}

Riemann3 riemann_at(const ChartPoint& p) {
    if (classify(p).tag != RegionTag::Regular)
        throw SingularPoint("riemann_at: point is not Regular");

    const Christoffel3 gamma = christoffels_raw(p.u, p.v);
    // dgamma[c] = d Gamma / d x^c; the metric is phi-independent
    std::array<Christoffel3, 3> dgamma{};
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int d = b; d < 3; ++d)
                    dgamma[c].set(a, b, d,
                                  fd_derivative(
                                      [a, b, d](double u, double v) {
                                          return christoffels_raw(u, v)(a, b, d);
                                      },
                                      {p.u, p.v}, c));

    Riemann3 R;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = c + 1; d < 3; ++d) {
                    double val = dgamma[c](a, d, b) - dgamma[d](a, c, b);
                    for (int e = 0; e < 3; ++e)
                        val += gamma(a, c, e) * gamma(e, d, b) - gamma(a, d, e) * gamma(e, c, b);
                    R.set_antisym(a, b, c, d, val);
                }
    return R;
}

CurvatureReport curvature_report(const ChartPoint& p) {
    CurvatureReport rep;
    rep.point = p;
    rep.classified = classify(p);
    if (rep.classified.tag != RegionTag::Regular)
        throw SingularPoint("curvature_report: point is not Regular");
    rep.riemann_max_abs = riemann_at(p).max_abs();

    const Christoffel3 an = christoffels_at(p);
    const Christoffel3 fd = christoffels_fd(p);
    double disc = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = b; c < 3; ++c)
                disc = std::max(disc, std::fabs(an(a, b, c) - fd(a, b, c)));
    rep.christoffel_fd_discrepancy = disc;
    return rep;
}

double gauss_curvature_meridian(double u, double v) {
    const double rho = std::hypot(u, v);
    if (rho <= kClassifyEps)
        throw SingularPoint("gauss_curvature_meridian: focal point");
    const double h = std::min(kFdDefaultStep, rho / 600);
    auto half_log_F = [](double uu, double vv) { return 0.5 * std::log(metric::F(uu, vv)); };
    const double lap = fd_second_derivative(half_log_F, {u, v}, 0, h) +
                       fd_second_derivative(half_log_F, {u, v}, 1, h);
    return -lap / metric::F(u, v);
}

Loop circle_loop(std::array<double, 2> center, double radius, int winding) {
    Loop loop;
    loop.t_end = 2 * kPi * winding;
    loop.winding = winding;
    loop.pos = [=](double t) -> std::array<double, 2> {
        return {center[0] + radius * std::cos(t), center[1] + radius * std::sin(t)};
    };
    loop.vel = [=](double t) -> std::array<double, 2> {
        return {-radius * std::sin(t), radius * std::cos(t)};
    };
    loop.acc = [=](double t) -> std::array<double, 2> {
        return {-radius * std::cos(t), -radius * std::sin(t)};
    };
    return loop;
}

Loop square_loop(std::array<double, 2> center, double half_side) {
    // CCW, side length 2*half_side, corners at t = 0, 1, 2, 3
    Loop loop;
    loop.t_end = 4.0;
    loop.breaks = {1.0, 2.0, 3.0};
    const double s = 2 * half_side;
    const std::array<std::array<double, 2>, 4> corner{{{center[0] - half_side, center[1] - half_side},
                                                       {center[0] + half_side, center[1] - half_side},
                                                       {center[0] + half_side, center[1] + half_side},
                                                       {center[0] - half_side, center[1] + half_side}}};
    const std::array<std::array<double, 2>, 4> dir{{{s, 0}, {0, s}, {-s, 0}, {0, -s}}};
    loop.pos = [=](double t) -> std::array<double, 2> {
        int k = std::min(3, static_cast<int>(std::floor(t)));
        double frac = t - k;
        return {corner[k][0] + frac * dir[k][0], corner[k][1] + frac * dir[k][1]};
    };
    loop.vel = [=](double t) -> std::array<double, 2> {
        int k = std::min(3, static_cast<int>(std::floor(t)));
        return dir[k];
    };
    loop.acc = [](double) -> std::array<double, 2> { return {0, 0}; };
    return loop;
}

double geodesic_curvature(const Loop& loop, double t) {
    return geodesic_curvature_in(meridian_factor(), loop, t);
}

double loop_total_turning(const Loop& loop) {
    return loop_total_turning_in(meridian_factor(), loop);
}

double gauss_bonnet_deficit(const Loop& loop) { return 2 * kPi - loop_total_turning(loop); }

double gauss_bonnet_deficit(double r) {
    if (!(r > 0) || r > 0.3) throw DomainError("gauss_bonnet_deficit: need 0 < r <= 0.3");
    return gauss_bonnet_deficit(circle_loop(kOrigin, r));
}

ConePointProbe circle_probe(double r) { return circle_probe_in(r, meridian_factor()); }

ConePointProbe circle_probe_conformal(double r, const std::function<double(double, double)>& F) {
    ConformalFactor cf;
    cf.f = F;
    cf.fu = [F](double u, double v) { return fd_derivative(F, {u, v}, 0); };
    cf.fv = [F](double u, double v) { return fd_derivative(F, {u, v}, 1); };
    return circle_probe_in(r, cf);
}

} // namespace wormhole
