#pragma once

/// \file
/// One-qubit density matrices in the rotating frame.

#include <Eigen/Core>
#include <complex>

namespace spindeph {

/// Absolute tolerance for every 2x2 matrix invariant.
inline constexpr double kMatrixTolerance = 1e-12;

struct BlochState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm_squared() const { return x * x + y * y + z * z; }
  double transverse_squared() const { return x * x + y * y; }
};

/// Hermitian, unit-trace, positive semidefinite 2x2 matrix. The constructor
/// checks all three to kMatrixTolerance and throws std::domain_error.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Eigen::Matrix2cd& m);

  const Eigen::Matrix2cd& matrix() const { return m_; }
  std::complex<double> operator()(int row, int col) const { return m_(row, col); }

  /// Bloch components recovered from the entries.
  BlochState bloch() const;
  /// tr(rho^2); 1 for a pure state.
  double purity() const;

 private:
  Eigen::Matrix2cd m_;
};

struct Spectrum {
  double high;
  double low;
};

/// rho = 1/2 [[1+Pz, P- e^{i phase}], [P+ e^{-i phase}, 1-Pz]], P+- = Px +- i Py.
DensityMatrix density_from_bloch(const BlochState& s, double phase = 0.0);

/// Phase-averaged state: off-diagonals scaled by e^{-gamma}.
DensityMatrix apply_dephasing(const BlochState& s, double gamma);
DensityMatrix apply_dephasing(const DensityMatrix& rho, double gamma);

/// Closed-form eigenvalues of the dephased state. Valid only for a pure
/// initial state; anything with |P| != 1 is rejected and should go through
/// eigenvalues(DensityMatrix) instead.
Spectrum dephased_eigenvalues(const BlochState& s, double gamma);

/// Eigenvalues of an arbitrary 2x2 Hermitian matrix.
Spectrum eigenvalues(const DensityMatrix& rho);

/// Populations (1 +- Pz)/2 reached once the coherences have fully decayed.
Spectrum limiting_populations(const BlochState& s);

/// tr(rho_a rho_b).
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace spindeph
