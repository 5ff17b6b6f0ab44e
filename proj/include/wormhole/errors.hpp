#ifndef WORMHOLE_ERRORS_HPP
#define WORMHOLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wormhole {

struct DegenerateMetric : std::runtime_error {
    double det;
    explicit DegenerateMetric(double d)
        : std::runtime_error("metric determinant below degeneracy threshold: det = " +
                             std::to_string(d)),
          det(d) {}
};

struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct FocalHit : std::runtime_error {
    explicit FocalHit(const std::string& what) : std::runtime_error(what) {}
};

struct SingularApproach : std::runtime_error {
    explicit SingularApproach(const std::string& what) : std::runtime_error(what) {}
};

struct StepFailure : std::runtime_error {
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wormhole

#endif
