#ifndef WORMHOLE_TEST_UTIL_HPP
#define WORMHOLE_TEST_UTIL_HPP

#include <cmath>
#include <ostream>

// absolute-tolerance comparison for doctest CHECKs
struct AbsApprox {
    double value;
    double tol;
    AbsApprox(double v, double t) : value(v), tol(t) {}

    friend bool operator==(double lhs, const AbsApprox& a) {
        return std::fabs(lhs - a.value) <= a.tol;
    }
    friend bool operator==(const AbsApprox& a, double rhs) { return rhs == a; }
    friend bool operator!=(double lhs, const AbsApprox& a) { return !(lhs == a); }
    friend std::ostream& operator<<(std::ostream& os, const AbsApprox& a) {
        return os << a.value << " (+/- " << a.tol << ")";
    }
};

#endif
