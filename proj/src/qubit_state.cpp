#include "spindeph/qubit_state.hpp"

#include <cmath>
#include <stdexcept>

namespace spindeph {

namespace {

using cd = std::complex<double>;

void check_bloch(const BlochState& s) {
  if (!std::isfinite(s.norm_squared()) || s.norm_squared() > 1.0 + kMatrixTolerance)
    throw std::domain_error("Bloch vector longer than 1");
}

void check_gamma(double gamma) {
  if (!(gamma >= 0.0)) throw std::domain_error("dephasing exponent must be nonnegative");
}

Spectrum hermitian_eigenvalues(const Eigen::Matrix2cd& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  const double mid = 0.5 * (a + d);
  return {mid + half_gap, mid - half_gap};
}

}  // namespace

DensityMatrix::DensityMatrix(const Eigen::Matrix2cd& m) : m_(m) {
  if (!m_.allFinite()) throw std::domain_error("density matrix has non-finite entries");
  if (std::abs(m_(1, 0) - std::conj(m_(0, 1))) > kMatrixTolerance ||
      std::abs(m_(0, 0).imag()) > kMatrixTolerance || std::abs(m_(1, 1).imag()) > kMatrixTolerance)
    throw std::domain_error("density matrix is not Hermitian");
  if (std::abs(m_.trace() - 1.0) > kMatrixTolerance)
    throw std::domain_error("density matrix trace differs from 1");
  if (hermitian_eigenvalues(m_).low < -kMatrixTolerance)
    throw std::domain_error("density matrix has a negative eigenvalue");
}

BlochState DensityMatrix::bloch() const {
  const cd p_plus = 2.0 * m_(1, 0);
  return {p_plus.real(), p_plus.imag(), (m_(0, 0) - m_(1, 1)).real()};
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix density_from_bloch(const BlochState& s, double phase) {
  check_bloch(s);
  const cd p_minus{s.x, -s.y};
  const cd p_plus{s.x, s.y};
  const cd rot = std::polar(1.0, phase);
  Eigen::Matrix2cd m;
  m << 0.5 * (1.0 + s.z), 0.5 * p_minus * rot,
       0.5 * p_plus * std::conj(rot), 0.5 * (1.0 - s.z);
  return DensityMatrix{m};
}

DensityMatrix apply_dephasing(const BlochState& s, double gamma) {
  check_gamma(gamma);
  return apply_dephasing(density_from_bloch(s), gamma);
}

DensityMatrix apply_dephasing(const DensityMatrix& rho, double gamma) {
  check_gamma(gamma);
  const double damp = std::exp(-gamma);
  Eigen::Matrix2cd m = rho.matrix();
  m(0, 1) *= damp;
  m(1, 0) *= damp;
  return DensityMatrix{m};
}

Spectrum dephased_eigenvalues(const BlochState& s, double gamma) {
  check_gamma(gamma);
  if (std::abs(s.norm_squared() - 1.0) > kMatrixTolerance)
    throw std::domain_error(
        "dephased_eigenvalues needs a pure state (|P| = 1); use eigenvalues(DensityMatrix)");
  // 1 - e^{-2 gamma} via expm1 so small gamma keeps full precision.
  const double lost = -std::expm1(-2.0 * gamma);
  const double root = std::sqrt(std::max(0.0, 1.0 - s.transverse_squared() * lost));
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

Spectrum eigenvalues(const DensityMatrix& rho) { return hermitian_eigenvalues(rho.matrix()); }

Spectrum limiting_populations(const BlochState& s) {
  check_bloch(s);
  return {0.5 * (1.0 + s.z), 0.5 * (1.0 - s.z)};
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  const cd f = (a.matrix() * b.matrix()).trace();
  if (std::abs(f.imag()) > kMatrixTolerance) throw std::domain_error("fidelity is not real");
  return f.real();
}

}  // namespace spindeph
