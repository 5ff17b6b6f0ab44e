#ifndef WORMHOLE_GEODESIC_HPP
#define WORMHOLE_GEODESIC_HPP

#include <array>
#include <vector>

#include "wormhole/chart.hpp"
#include "wormhole/curvature.hpp"
#include "wormhole/metric.hpp"

namespace wormhole {

struct GeodesicState {
    ChartPoint point;
    std::array<double, 3> velocity{}; // du/ds, dv/ds, dphi/ds
    double arclength = 0.0;
};

struct TraceSample {
    double arclength = 0.0;
    ChartPoint point;
    SheetPoint cartesian;
    double speed_error = 0.0;   // |g(xdot, xdot) - 1|
    double killing_error = 0.0; // |J - J0| / max(1, |J0|), J = g_phiphi dphi/ds
};

struct SheetSwap {
    double arclength = 0.0;
    double disk_radius = 0.0; // cylindrical radius of the crossing point
};

struct CurveTrace {
    std::vector<TraceSample> samples;
    std::vector<SheetSwap> sheet_swaps;
    GeodesicState final_state; // filled by integrate_geodesic
};

struct TransportFrame {
    ChartPoint base;
    std::array<double, 3> vector{};
    double unwrapped_angle = 0.0;
};

/// Derivative of (position, velocity) under the geodesic equation.
/// States with dphi/ds = 0 use the reduced meridian system, which stays
/// valid on the axis.
std::array<double, 6> geodesic_rhs(const GeodesicState& s);

/// Unit-speed adaptive integration to total arclength.  Sheet swaps are
/// logged whenever u changes sign with the crossing inside the open disk.
CurveTrace integrate_geodesic(const GeodesicState& start, double length, double tol);

/// Exact straight-line propagation on the glued Euclidean sheets: each
/// transversal crossing of the open unit disk in the z = 0 plane flips the
/// sheet label.  Refuses lines grazing the focal circle.
CurveTrace straight_line_oracle(const SheetPoint& start, std::array<double, 3> direction,
                                double length, double sample_spacing = 0.05);

/// Position of the straight line at a given arclength (sheet included).
SheetPoint straight_line_at(const SheetPoint& start, std::array<double, 3> direction, double s);

/// Parallel transport around a closed loop in the meridian plane, with the
/// continuously unwrapped rotation angle of the transported vector.
TransportFrame parallel_transport(const TransportFrame& frame, const Loop& loop, double tol);

/// (g(xdot, xdot), g_phiphi dphi/ds)
std::array<double, 2> conserved_quantities(const GeodesicState& s);

/// Chart velocity realizing a Cartesian direction at a point (J^{-1} d).
std::array<double, 3> chart_velocity(const ChartPoint& p, std::array<double, 3> cartesian_dir);

} // namespace wormhole

#endif
