#include "wormhole/metric.hpp"

namespace wormhole {

namespace metric {

Mat3Sym metric_at(const ChartPoint& p) {
    const double f = F(p.u, p.v);
    return Mat3Sym::diag(f, f, G(p.u, p.v));
}

double metric_det(const ChartPoint& p) {
    const double f = F(p.u, p.v);
    return f * f * G(p.u, p.v);
}

} // namespace metric

HyperboloidMetric::HyperboloidMetric(double a_, double b_, double lambda_)
    : a(a_), b(b_), lambda(lambda_) {
    if (!(a > 0) || b < 0 || b >= a) throw DomainError("HyperboloidMetric: need 0 <= b < a");
    const bool degenerate_ok = (b == 0.0 && lambda == 0.0); // the b -> 0 limit form
    if (!degenerate_ok && !(lambda <= 0 && lambda > -b * b))
        throw DomainError("HyperboloidMetric: need lambda in (-b^2, 0]");
}

std::array<double, 2> hyperboloid_metric_at(const HyperboloidMetric& m, double u, double w) {
    const double a2 = m.a * m.a, b2 = m.b * m.b;
    if (!(u > 0) || !(w > -a2) || !(w < -b2))
        throw DomainError("hyperboloid_metric_at: need u > 0 and -a^2 < w < -b^2");
    const double guu = (u - m.lambda) * (u - w) / (4 * u * (a2 + u) * (b2 + u));
    const double gww = (w - m.lambda) * (w - u) / (4 * w * (a2 + w) * (b2 + w));
    return {guu, gww};
}

double hyperboloid_limit_residual(double a, double zeta, double eta) {
    if (!(a > 0)) throw DomainError("hyperboloid_limit_residual: need a > 0");
    if (zeta == 0) throw DomainError("hyperboloid_limit_residual: need zeta != 0");
    if (!(eta > 0) || !(eta < kPi / 2))
        throw DomainError("hyperboloid_limit_residual: need eta in (0, pi/2)");

    const HyperboloidMetric limit{a, 0.0, 0.0};
    const double a2 = a * a;
    const double sh = std::sinh(zeta), sn = std::sin(eta);
    const double u = a2 * sh * sh;
    const double w = -a2 * sn * sn;

    const double guu = hyperboloid_metric_at(limit, u, w)[0];
    const double du_dzeta =
        fd_derivative([a2](double z, double) { double s = std::sinh(z); return a2 * s * s; },
                      {zeta, 0.0}, 0);
    const double pulled = guu * du_dzeta * du_dzeta;
    return std::fabs(pulled - a2 * (sh * sh + sn * sn));
}

} // namespace wormhole
