#ifndef WORMHOLE_CHART_HPP
#define WORMHOLE_CHART_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wormhole/errors.hpp"
#include "wormhole/tensor.hpp"

namespace wormhole {

inline constexpr double kPi = std::numbers::pi;

/// Classification tolerance on |u| and on the distance of |v| from {0, pi/2}.
inline constexpr double kClassifyEps = 1e-9;

/// Global chart coordinates.  u is unbounded and its sign selects the sheet;
/// v lies in [-pi/2, pi/2]; phi is normalized to [0, 2pi).
struct ChartPoint {
    double u = 0.0;
    double v = 0.0;
    double phi = 0.0;

    ChartPoint() = default;
    ChartPoint(double u_, double v_, double phi_);
};

enum class Sheet { A, B, Disk };

/// A point of one of the two Euclidean copies.  Lengths are in units of the
/// focal-circle radius.
struct SheetPoint {
    Sheet sheet = Sheet::A;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

enum class RegionTag { Regular, FocalCircle, Axis, DiskInterior };

struct RegionClass {
    RegionTag tag = RegionTag::Regular;
};

const char* to_string(Sheet s);
const char* to_string(RegionTag t);

/// Standard oblate-spheroidal map (unit focal radius):
///   x = cosh u cos v cos phi, y = cosh u cos v sin phi, z = sinh u sin v.
/// Sheet is A for u > 0, B for u < 0, Disk for u = 0.
SheetPoint to_cartesian(const ChartPoint& p);

/// Inverse of to_cartesian; closed-form seed polished by damped Newton on
/// (u, v).  Sign of u follows the sheet label.  Axis points get phi = 0.
ChartPoint from_cartesian(const SheetPoint& q);

RegionClass classify(const ChartPoint& p);

/// Columns are d(x,y,z)/d(u,v,phi), analytic.
std::array<std::array<double, 3>, 3> jacobian(const ChartPoint& p);

double det3(const std::array<std::array<double, 3>, 3>& m);

/// J^T J as a symmetric matrix; equals the metric at Regular points.
Mat3Sym pullback(const ChartPoint& p);

} // namespace wormhole

#endif
