#include "wormhole/chart.hpp"

#include <algorithm>

namespace wormhole {

namespace {

double wrap_phi(double phi) {
    double w = std::fmod(phi, 2 * kPi);
    if (w < 0) w += 2 * kPi;
    if (w >= 2 * kPi) w = 0.0; // fmod can land exactly on 2pi after the shift
    return w;
}

} // namespace

ChartPoint::ChartPoint(double u_, double v_, double phi_) : u(u_), v(v_), phi(wrap_phi(phi_)) {
    if (!std::isfinite(u) || !std::isfinite(v) || !std::isfinite(phi))
        throw DomainError("ChartPoint: non-finite coordinate");
    if (v < -kPi / 2 - 1e-12 || v > kPi / 2 + 1e-12)
        throw DomainError("ChartPoint: v outside [-pi/2, pi/2]");
    v = std::clamp(v, -kPi / 2, kPi / 2);
}

const char* to_string(Sheet s) {
    switch (s) {
        case Sheet::A: return "A";
        case Sheet::B: return "B";
        case Sheet::Disk: return "Disk";
    }
    return "?";
}

const char* to_string(RegionTag t) {
    switch (t) {
        case RegionTag::Regular: return "Regular";
        case RegionTag::FocalCircle: return "FocalCircle";
        case RegionTag::Axis: return "Axis";
        case RegionTag::DiskInterior: return "DiskInterior";
    }
    return "?";
}

SheetPoint to_cartesian(const ChartPoint& p) {
    SheetPoint q;
    q.sheet = p.u > 0 ? Sheet::A : (p.u < 0 ? Sheet::B : Sheet::Disk);
    const double cu = std::cosh(p.u), su = std::sinh(p.u);
    const double cv = std::cos(p.v), sv = std::sin(p.v);
    q.x = cu * cv * std::cos(p.phi);
    q.y = cu * cv * std::sin(p.phi);
    q.z = su * sv;
    return q;
}

RegionClass classify(const ChartPoint& p) {
    const double au = std::fabs(p.u), av = std::fabs(p.v);
    if (au <= kClassifyEps && av <= kClassifyEps) return {RegionTag::FocalCircle};
    if (std::fabs(av - kPi / 2) <= kClassifyEps) return {RegionTag::Axis};
    if (au <= kClassifyEps) return {RegionTag::DiskInterior};
    return {RegionTag::Regular};
}

std::array<std::array<double, 3>, 3> jacobian(const ChartPoint& p) {
    const double cu = std::cosh(p.u), su = std::sinh(p.u);
    const double cv = std::cos(p.v), sv = std::sin(p.v);
    const double cp = std::cos(p.phi), sp = std::sin(p.phi);
    // rows x,y,z; columns d/du, d/dv, d/dphi
    return {{{su * cv * cp, -cu * sv * cp, -cu * cv * sp},
             {su * cv * sp, -cu * sv * sp, cu * cv * cp},
             {cu * sv, su * cv, 0.0}}};
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3Sym pullback(const ChartPoint& p) {
    auto J = jacobian(p);
    Mat3Sym g;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b <= a; ++b) {
            double s = 0.0;
            for (int r = 0; r < 3; ++r) s += J[r][a] * J[r][b];
            g.at(a, b) = s;
        }
    return g;
}

ChartPoint from_cartesian(const SheetPoint& q) {
    if (!std::isfinite(q.x) || !std::isfinite(q.y) || !std::isfinite(q.z))
        throw DomainError("from_cartesian: non-finite input");
    const double rho = std::hypot(q.x, q.y);
    if (q.sheet == Sheet::Disk && (std::fabs(q.z) > 1e-12 || rho > 1 + 1e-12))
        throw DomainError("from_cartesian: Disk point must have z = 0, x^2+y^2 <= 1");

    double phi = (rho > 1e-14) ? std::atan2(q.y, q.x) : 0.0;
    if (phi < 0) phi += 2 * kPi;

    // closed-form seed: sinh^2 u = (p + sqrt(p^2 + 4 z^2)) / 2
    const double pval = rho * rho + q.z * q.z - 1.0;
    const double s2 = std::max(0.0, (pval + std::hypot(pval, 2 * q.z)) / 2);
    double au = std::asinh(std::sqrt(s2));
    double u = (q.sheet == Sheet::B) ? -au : au;

    double v;
    if (rho <= 1e-14) {
        // axis: cos v = 0, sign of v from z = sinh u sin v
        const double sh = std::sinh(u);
        v = (q.z != 0.0 && sh != 0.0) ? std::copysign(kPi / 2, q.z / sh) : kPi / 2;
    } else if (au < 1e-14) {
        v = std::acos(std::clamp(rho, 0.0, 1.0)); // disk convention: v >= 0
    } else {
        v = std::asin(std::clamp(q.z / std::sinh(u), -1.0, 1.0));
    }

    // damped Newton polish on (u, v) against (rho, z)
    for (int it = 0; it < 25; ++it) {
        const double cu = std::cosh(u), su = std::sinh(u);
        const double cv = std::cos(v), sv = std::sin(v);
        const double r_rho = cu * cv - rho;
        const double r_z = su * sv - q.z;
        if (std::fabs(r_rho) < 1e-13 && std::fabs(r_z) < 1e-13) break;
        const double det = su * su + sv * sv; // Jacobian determinant of (rho, z) in (u, v)
        if (det < 1e-14) break;               // focal point: the seed is already exact there
        double du = -(su * cv * r_rho + cu * sv * r_z) / det;
        double dv = -(-cu * sv * r_rho + su * cv * r_z) / det;
        double damp = 1.0;
        const double step = std::max(std::fabs(du), std::fabs(dv));
        if (step > 0.5) damp = 0.5 / step;
        u += damp * du;
        v = std::clamp(v + damp * dv, -kPi / 2, kPi / 2);
        if (it == 24) throw NoConvergence("from_cartesian: Newton did not converge");
    }

    ChartPoint p(u, v, phi);
    // verify the contract: 1e-9 per coordinate
    SheetPoint back = to_cartesian(p);
    if (std::fabs(back.x - q.x) > 1e-9 || std::fabs(back.y - q.y) > 1e-9 ||
        std::fabs(back.z - q.z) > 1e-9)
        throw NoConvergence("from_cartesian: round-trip residual above 1e-9");
    return p;
}

} // namespace wormhole
