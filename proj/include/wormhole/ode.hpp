#ifndef WORMHOLE_ODE_HPP
#define WORMHOLE_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "wormhole/errors.hpp"

namespace wormhole {

/// Dormand-Prince 5(4) embedded pair with a PI step controller.
/// The observer sees every accepted step: (t0, y0, t1, y1, dy0, dy1) where
/// dy are the derivatives at the endpoints (FSAL), enough for cubic Hermite
/// interpolation inside the step.
template <std::size_t N>
class Dopri5 {
  public:
    using State = std::array<double, N>;
    using Rhs = std::function<State(double, const State&)>;
    using Observer =
        std::function<void(double, const State&, double, const State&, const State&, const State&)>;

    Dopri5(double atol, double rtol) : atol_(atol), rtol_(rtol) {}

    void set_max_step(double h) { hmax_ = h; }

    /// Advances y from t0 to t1 (t1 > t0).
    void integrate(const Rhs& f, double t0, double t1, State& y, const Observer& obs = {}) {
        double t = t0;
        double h = std::min(hmax_, (t1 - t0) / 10);
        double err_prev = 1.0;
        State k1 = f(t, y);
        int rejects_in_a_row = 0;

        while (t < t1) {
            h = std::min(h, t1 - t);
            if (h < 1e-14 * std::max(1.0, std::fabs(t)))
                throw StepFailure("ode: step size underflow");

            State y1, k_last;
            const double err = step(f, t, y, k1, h, y1, k_last);

            if (err <= 1.0) {
                if (obs) obs(t, y, t + h, y1, k1, k_last);
                t += h;
                y = y1;
                k1 = k_last; // FSAL
                err_prev = std::max(err, 1e-4);
                rejects_in_a_row = 0;
                double fac = kSafety * std::pow(err, -kAlpha) * std::pow(err_prev, kBeta);
                h = std::min(hmax_, h * std::clamp(fac, 0.2, 5.0));
            } else {
                h *= std::clamp(kSafety * std::pow(err, -0.2), 0.1, 0.9);
                if (++rejects_in_a_row > 60) throw StepFailure("ode: controller stalled");
            }
        }
    }

  private:
    static constexpr double kSafety = 0.9;
    static constexpr double kAlpha = 0.7 / 5.0;
    static constexpr double kBeta = 0.4 / 5.0;

    double atol_, rtol_;
    double hmax_ = 1e100;

    double step(const Rhs& f, double t, const State& y, const State& k1, double h, State& y5,
                State& k7) const {
        // Dormand-Prince coefficients
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                                a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        auto axpy = [&](const std::array<double, 6>& w, const std::array<const State*, 6>& ks,
                        int n) {
            State r = y;
            for (int j = 0; j < n; ++j)
                for (std::size_t i = 0; i < N; ++i) r[i] += h * w[j] * (*ks[j])[i];
            return r;
        };

        State k2, k3, k4, k5, k6;
        std::array<const State*, 6> ks{&k1, &k2, &k3, &k4, &k5, &k6};
        k2 = f(t + c2 * h, axpy({a21}, ks, 1));
        k3 = f(t + c3 * h, axpy({a31, a32}, ks, 2));
        k4 = f(t + c4 * h, axpy({a41, a42, a43}, ks, 3));
        k5 = f(t + c5 * h, axpy({a51, a52, a53, a54}, ks, 4));
        k6 = f(t + h, axpy({a61, a62, a63, a64, a65}, ks, 5));

        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        k7 = f(t + h, y5);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                  e7 * k7[i]);
            const double scale = atol_ + rtol_ * std::max(std::fabs(y[i]), std::fabs(y5[i]));
            err += (e / scale) * (e / scale);
        }
        return std::sqrt(err / N);
    }
};

/// Root of the cubic Hermite interpolant of component `idx` inside an
/// accepted step, by bisection on the step fraction.  Caller guarantees a
/// sign change of that component across the step.
template <std::size_t N>
double hermite_root(double h, const std::array<double, N>& y0, const std::array<double, N>& y1,
                    const std::array<double, N>& d0, const std::array<double, N>& d1,
                    std::size_t idx) {
    auto value = [&](double s) {
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        const double h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s);
        const double h11 = s * s * (s - 1);
        return h00 * y0[idx] + h10 * h * d0[idx] + h01 * y1[idx] + h11 * h * d1[idx];
    };
    double lo = 0.0, hi = 1.0;
    double flo = value(lo);
    for (int i = 0; i < 60; ++i) {
        const double mid = (lo + hi) / 2;
        const double fm = value(mid);
        if ((flo <= 0) == (fm <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

/// Cubic Hermite evaluation of the whole state at step fraction s.
template <std::size_t N>
std::array<double, N> hermite_eval(double h, const std::array<double, N>& y0,
                                   const std::array<double, N>& y1,
                                   const std::array<double, N>& d0,
                                   const std::array<double, N>& d1, double s) {
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = h00 * y0[i] + h10 * h * d0[i] + h01 * y1[i] + h11 * h * d1[i];
    return out;
}

} // namespace wormhole

#endif
