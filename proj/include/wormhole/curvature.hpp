#ifndef WORMHOLE_CURVATURE_HPP
#define WORMHOLE_CURVATURE_HPP

#include <array>
#include <functional>
#include <vector>

#include "wormhole/chart.hpp"
#include "wormhole/metric.hpp"
#include "wormhole/tensor.hpp"

namespace wormhole {

struct CurvatureReport {
    ChartPoint point;
    double riemann_max_abs = 0.0;
    double christoffel_fd_discrepancy = 0.0;
    RegionClass classified;
};

struct ConePointProbe {
    double radius = 0.0;          // coordinate radius in the (u, v) plane
    double circumference = 0.0;
    double geodesic_radius = 0.0;
    double total_turning = 0.0;   // radians, includes corner angles

    double ratio() const { return circumference / geodesic_radius; }
};

/// Connection of the diagonal metric diag(F, F, G), analytic closed forms.
/// No classification; F below 1e-10 throws SingularPoint.
Christoffel3 christoffels_raw(double u, double v);

/// Same, but restricted to Regular chart points.
Christoffel3 christoffels_at(const ChartPoint& p);

/// Independent cross-check: Levi-Civita formula on finite-difference metric
/// derivatives (central FD engine + mat3_inverse, no analytic partials).
Christoffel3 christoffels_fd(const ChartPoint& p, double h = kFdDefaultStep);

/// Mixed Riemann tensor R^a_{bcd} from FD derivatives of the analytic
/// Christoffels.  The cd-antisymmetry is exact by construction.
Riemann3 riemann_at(const ChartPoint& p);

CurvatureReport curvature_report(const ChartPoint& p);

/// Gauss curvature of the meridian surface F (du^2 + dv^2) via the 4th-order
/// FD Laplacian of (1/2) ln F.  The step shrinks with the distance to the
/// focal point so the scheme stays in its asymptotic regime.
double gauss_curvature_meridian(double u, double v);

/// Piecewise-smooth closed loop in the meridian (u, v) plane.
struct Loop {
    std::function<std::array<double, 2>(double)> pos;
    std::function<std::array<double, 2>(double)> vel;
    std::function<std::array<double, 2>(double)> acc;
    double t_end = 0.0;
    std::vector<double> breaks; // interior corner parameters, strictly increasing
    int winding = 1;
};

Loop circle_loop(std::array<double, 2> center, double radius, int winding = 1);
Loop square_loop(std::array<double, 2> center, double half_side);

/// Geodesic curvature at loop parameter t, from the covariant derivative of
/// the unit tangent projected on the leftward unit normal.
double geodesic_curvature(const Loop& loop, double t);

/// Total turning of the loop: integral of k_g ds over the smooth segments
/// plus exterior corner angles (the metric is conformal, so corner angles
/// are the Euclidean ones).
double loop_total_turning(const Loop& loop);

/// 2 pi minus the total turning; equals the enclosed curvature by
/// Gauss-Bonnet.
double gauss_bonnet_deficit(const Loop& loop);

/// Deficit of the coordinate circle of radius r about the focal point,
/// 0 < r <= 0.3.
double gauss_bonnet_deficit(double r);

/// Circumference / geodesic-radius probe of the coordinate circle of radius
/// r about the focal point; the ratio tends to 4 pi as r -> 0.
ConePointProbe circle_probe(double r);

/// Probe of a circle in a caller-supplied conformal factor (the flat-plane
/// control uses F identically 1).
ConePointProbe circle_probe_conformal(double r, const std::function<double(double, double)>& F);

} // namespace wormhole

#endif
