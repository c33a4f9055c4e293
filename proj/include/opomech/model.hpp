#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace opomech {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

/// Dimensionless parameters of the linearized cavity + mechanics model.
/// All rates and detunings are measured in units of the mechanical
/// frequency omega_b, which is kept explicit only so physical-unit
/// conversions have somewhere to hang; internally it is 1.
struct EffectiveParams {
  double delta_a = 0.0;     ///< cavity detuning
  double omega_b = 1.0;     ///< mechanical frequency (the scale)
  double kappa = 0.5;       ///< cavity decay rate
  double gamma = 0.01;      ///< mechanical damping rate
  double coupling_G = 0.0;  ///< effective optomechanical coupling, >= 0
  double chi_mag = 0.0;     ///< parametric nonlinearity magnitude, >= 0
  double phi = 0.0;         ///< nonlinearity phase [rad]
  double n_b = 0.0;         ///< mechanical bath thermal occupation
  double n_a = 0.0;         ///< cavity bath thermal occupation

  /// Throws std::invalid_argument on kappa/gamma/omega_b <= 0 or negative
  /// chi_mag, coupling_G, n_b, n_a.
  void validate() const;
};

/// Drift matrix of the quadrature fluctuations, ordering (x_a, p_a, x_b, p_b):
///
///   [ -kappa + chi cos(phi)    delta_a + chi sin(phi)   0        0      ]
///   [ -delta_a + chi sin(phi)  -kappa - chi cos(phi)    G        0      ]
///   [ 0                        0                        -gamma   omega_b]
///   [ G                        0                        -omega_b -gamma ]
Mat4 build_drift(const EffectiveParams& p);

/// Diffusion matrix diag(kappa(2n_a+1), kappa(2n_a+1),
/// gamma(2n_b+1), gamma(2n_b+1)). Throws on non-positive rates or
/// negative occupations.
Mat4 build_diffusion(double kappa, double gamma, double n_b, double n_a = 0.0);
Mat4 build_diffusion(const EffectiveParams& p);

/// Block-diagonal symplectic form, per-mode blocks [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n_modes);

/// Steady-state second moments V_ij = <{du_i, du_j}>/2 with vacuum
/// variance 1/2. Construction symmetrizes and rejects input whose
/// asymmetry exceeds machine-level tolerance.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(const Mat4& v);

  const Mat4& mat() const { return v_; }
  double operator()(int i, int j) const { return v_(i, j); }

  Mat2 mode_a() const { return v_.topLeftCorner<2, 2>(); }
  Mat2 mode_b() const { return v_.bottomRightCorner<2, 2>(); }
  Mat2 cross() const { return v_.topRightCorner<2, 2>(); }

 private:
  Mat4 v_;
};

/// Symplectic eigenvalues (|eigenvalues of i Omega V|, one per mode),
/// ascending. Rejects non-symmetric or non-positive-definite input.
std::pair<double, double> symplectic_eigenvalues(const CovarianceMatrix& v);

/// Dimension-generic version for a 2n x 2n covariance matrix.
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& v);

/// Uncertainty check: min symplectic eigenvalue >= 1/2 - tol.
bool check_physical(const CovarianceMatrix& v, double tol = 1e-9);

}  // namespace opomech
