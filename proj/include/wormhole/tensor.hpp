#ifndef WORMHOLE_TENSOR_HPP
#define WORMHOLE_TENSOR_HPP

#include <array>
#include <cmath>
#include <concepts>

#include "wormhole/errors.hpp"

namespace wormhole {

/// Symmetric 3x3 matrix stored as the lower triangle
/// (order: 00, 10, 11, 20, 21, 22).
struct Mat3Sym {
    std::array<double, 6> e{};

    static constexpr int index(int i, int j) {
        if (i < j) std::swap(i, j);
        return i * (i + 1) / 2 + j;
    }

    double operator()(int i, int j) const { return e[index(i, j)]; }
    double& at(int i, int j) { return e[index(i, j)]; }

    static Mat3Sym diag(double a, double b, double c) {
        Mat3Sym m;
        m.at(0, 0) = a;
        m.at(1, 1) = b;
        m.at(2, 2) = c;
        return m;
    }

    static Mat3Sym identity() { return diag(1.0, 1.0, 1.0); }

    double det() const;
};

/// Connection coefficients gamma[a][bc] with the lower pair stored once
/// per unordered pair, so the bc-symmetry holds under any set/get order.
struct Christoffel3 {
    // pair order: 00, 01, 02, 11, 12, 22
    std::array<std::array<double, 6>, 3> g{};

    static constexpr int pair(int b, int c) {
        if (b > c) std::swap(b, c);
        constexpr int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
        return table[b][c];
    }

    double operator()(int a, int b, int c) const { return g[a][pair(b, c)]; }
    void set(int a, int b, int c, double value) { g[a][pair(b, c)] = value; }
};

/// Mixed-form curvature components r[a][b][c][d] = R^a_{bcd}.
struct Riemann3 {
    std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3> r{};

    double operator()(int a, int b, int c, int d) const { return r[a][b][c][d]; }

    // writes the cd-antisymmetric pair in one go
    void set_antisym(int a, int b, int c, int d, double value) {
        r[a][b][c][d] = value;
        r[a][b][d][c] = -value;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : r)
            for (const auto& y : x)
                for (const auto& z : y)
                    for (double w : z) m = std::max(m, std::fabs(w));
        return m;
    }

    /// Largest |R^a_{bcd} + R^a_{cdb} + R^a_{dbc}| over all index choices.
    double bianchi_residual() const;
};

inline constexpr double kDegeneracyThreshold = 1e-12;
inline constexpr double kFdDefaultStep = 1e-3;

/// 4th-order central difference along one axis of a scalar field on R^2.
template <typename F>
    requires std::invocable<F, double, double>
double fd_derivative(F&& f, std::array<double, 2> p, int axis, double h = kFdDefaultStep) {
    std::array<double, 2> q = p;
    auto eval = [&](double offset) {
        q = p;
        q[axis] += offset;
        return f(q[0], q[1]);
    };
    double d = (-eval(2 * h) + 8 * eval(h) - 8 * eval(-h) + eval(-2 * h)) / (12 * h);
    if (!std::isfinite(d)) throw DomainError("fd_derivative: non-finite sample");
    return d;
}

struct FdChecked {
    double value;
    double discrepancy; // |value(h) - value(h/2)|
    bool flagged;       // discrepancy above 1e-6
};

/// Same derivative with a Richardson consistency check at h/2.
template <typename F>
    requires std::invocable<F, double, double>
FdChecked fd_derivative_checked(F&& f, std::array<double, 2> p, int axis,
                                double h = kFdDefaultStep) {
    double coarse = fd_derivative(f, p, axis, h);
    double fine = fd_derivative(f, p, axis, h / 2);
    double disc = std::fabs(coarse - fine);
    return {fine, disc, disc > 1e-6};
}

/// 4th-order second derivative along one axis.
template <typename F>
    requires std::invocable<F, double, double>
double fd_second_derivative(F&& f, std::array<double, 2> p, int axis,
                            double h = kFdDefaultStep) {
    std::array<double, 2> q = p;
    auto eval = [&](double offset) {
        q = p;
        q[axis] += offset;
        return f(q[0], q[1]);
    };
    double d = (-eval(2 * h) + 16 * eval(h) - 30 * eval(0.0) + 16 * eval(-h) - eval(-2 * h)) /
               (12 * h * h);
    if (!std::isfinite(d)) throw DomainError("fd_second_derivative: non-finite sample");
    return d;
}

/// Inverse of a symmetric 3x3 matrix.  Throws DegenerateMetric when
/// |det| < 1e-12; the focal circle and the axis are genuine zeros of the
/// determinant and must not be inverted silently.
Mat3Sym mat3_inverse(const Mat3Sym& g);

} // namespace wormhole

#endif
