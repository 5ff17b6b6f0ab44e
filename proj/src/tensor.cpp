#include "wormhole/tensor.hpp"

namespace wormhole {

double Mat3Sym::det() const {
    const Mat3Sym& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3Sym mat3_inverse(const Mat3Sym& g) {
    double d = g.det();
    if (std::fabs(d) < kDegeneracyThreshold) throw DegenerateMetric(d);
    Mat3Sym inv;
    // adjugate of a symmetric matrix is symmetric
    inv.at(0, 0) = (g(1, 1) * g(2, 2) - g(1, 2) * g(1, 2)) / d;
    inv.at(1, 0) = (g(0, 2) * g(1, 2) - g(0, 1) * g(2, 2)) / d;
    inv.at(1, 1) = (g(0, 0) * g(2, 2) - g(0, 2) * g(0, 2)) / d;
    inv.at(2, 0) = (g(0, 1) * g(1, 2) - g(0, 2) * g(1, 1)) / d;
    inv.at(2, 1) = (g(0, 1) * g(0, 2) - g(0, 0) * g(1, 2)) / d;
    inv.at(2, 2) = (g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1)) / d;
    return inv;
}

double Riemann3::bianchi_residual() const {
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    double s = r[a][b][c][d] + r[a][c][d][b] + r[a][d][b][c];
                    worst = std::max(worst, std::fabs(s));
                }
    return worst;
}

} // namespace wormhole
