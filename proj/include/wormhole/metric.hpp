#ifndef WORMHOLE_METRIC_HPP
#define WORMHOLE_METRIC_HPP

#include <array>
#include <cmath>

#include "wormhole/chart.hpp"
#include "wormhole/tensor.hpp"

namespace wormhole {

/// ds^2 = F (du^2 + dv^2) + G dphi^2 with
///   F = cosh^2 u - cos^2 v,  G = cosh^2 u cos^2 v
/// at unit focal radius.  F vanishes only on the focal circle, G only on
/// the axis.
namespace metric {

inline double F(double u, double v) {
    const double cu = std::cosh(u), cv = std::cos(v);
    return cu * cu - cv * cv;
}

inline double G(double u, double v) {
    const double cu = std::cosh(u), cv = std::cos(v);
    return cu * cu * cv * cv;
}

// analytic partials
inline double F_u(double u, double /*v*/) { return std::sinh(2 * u); }
inline double F_v(double /*u*/, double v) { return std::sin(2 * v); }
inline double G_u(double u, double v) {
    const double cv = std::cos(v);
    return std::sinh(2 * u) * cv * cv;
}
inline double G_v(double u, double v) {
    const double cu = std::cosh(u);
    return -cu * cu * std::sin(2 * v);
}

Mat3Sym metric_at(const ChartPoint& p);
double metric_det(const ChartPoint& p);

/// Upper-left 2x2 block of the 3-metric: the conformal metric F (du^2 + dv^2)
/// on the meridian strip.
inline std::array<double, 2> meridian_at(double u, double v) {
    const double f = F(u, v);
    return {f, f};
}

} // namespace metric

/// Metric of the one-sheet elliptical hyperboloid
///   x^2/(a^2+lambda) + y^2/(b^2+lambda) + z^2/lambda = 1
/// in confocal parameters (u, w), u > 0, -a^2 < w < -b^2.
struct HyperboloidMetric {
    double a = 1.0;
    double b = 0.0;
    double lambda = 0.0;

    HyperboloidMetric(double a_, double b_, double lambda_);
};

/// diag(g_uu, g_ww) per the quadric-surface metric; DomainError outside the
/// open parameter ranges.
std::array<double, 2> hyperboloid_metric_at(const HyperboloidMetric& m, double u, double w);

/// |g_zz - a^2 (sinh^2 zeta + sin^2 eta)| where g_zz is the zeta-zeta
/// component of the b = 0, lambda = 0 hyperboloid metric pulled back through
/// u = a^2 sinh^2 zeta, w = -a^2 sin^2 eta (du/dzeta taken numerically).
double hyperboloid_limit_residual(double a, double zeta, double eta);

} // namespace wormhole

#endif
