#ifndef GKLS_ERRORS_HPP
#define GKLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkls {

/// LU pivot fell below tolerance.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Pseudo-inverse input is not of full column rank.
class RankDeficiencyError : public std::runtime_error {
public:
    RankDeficiencyError(const std::string& what, double sigma_min, double sigma_max)
        : std::runtime_error(what), sigma_min(sigma_min), sigma_max(sigma_max) {}
    double sigma_min;
    double sigma_max;
};

/// Generator basis failed its orthonormality check.
class InconsistentBasisError : public std::runtime_error {
public:
    explicit InconsistentBasisError(const std::string& what) : std::runtime_error(what) {}
};

/// Supermatrix is not trace-annihilating and Hermiticity-preserving to tolerance.
class InvalidDissipatorError : public std::runtime_error {
public:
    InvalidDissipatorError(const std::string& what, double trace_residual,
                           double hermiticity_residual)
        : std::runtime_error(what),
          trace_residual(trace_residual),
          hermiticity_residual(hermiticity_residual) {}
    double trace_residual;
    double hermiticity_residual;
};

/// The augmented linear system T a = r is inconsistent: the input Liouvillian
/// is not a GKLS dissipator over the chosen basis.
class NotGklsRepresentableError : public std::runtime_error {
public:
    NotGklsRepresentableError(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

/// Transformation tensor violated its rank invariants.
class TensorConstructionError : public std::runtime_error {
public:
    explicit TensorConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gkls

#endif
