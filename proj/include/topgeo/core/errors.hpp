#ifndef TOPGEO_CORE_ERRORS_HPP
#define TOPGEO_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace topgeo {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Euler chart degenerated: xi^a_alpha not invertible at this point.
struct SingularChart : DomainError {
  double det_xi;
  explicit SingularChart(double det)
      : DomainError("singular Euler chart, det xi = " + std::to_string(det)), det_xi(det) {}
};

struct SingularMetric : DomainError {
  using DomainError::DomainError;
};

struct NonpositiveWeylFactor : DomainError {
  using DomainError::DomainError;
};

struct NonpositiveGauge : DomainError {
  using DomainError::DomainError;
};

struct NonpositiveMass : DomainError {
  using DomainError::DomainError;
};

struct UnsupportedRep : DomainError {
  using DomainError::DomainError;
};

struct OffShellMomentum : DomainError {
  using DomainError::DomainError;
};

struct ZeroAmplitude : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ImaginaryRadicand : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace topgeo

#endif
