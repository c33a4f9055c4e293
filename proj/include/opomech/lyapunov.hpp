#pragma once

#include <Eigen/Dense>

#include "opomech/model.hpp"

namespace opomech {

/// Largest real part of the spectrum of A.
double spectral_abscissa(const Eigen::MatrixXd& a);

/// Hurwitz test: every eigenvalue of A has real part < -tol.
/// tol < 0 selects the default 1e-10 * ||A||_F, keeping sweeps scale-free.
bool is_stable(const Eigen::MatrixXd& a, double tol = -1.0);

/// Solves A V + V A^T = -D by the dense vectorized route
/// (I (x) A + A (x) I) vec(V) = -vec(D), then symmetrizes.
/// No stability guard; throws SingularSystem on rank deficiency or when
/// the residual certificate ||AV + VA^T + D||_F <= 1e-10 ||D||_F fails.
Eigen::MatrixXd steady_covariance_generic(const Eigen::MatrixXd& a,
                                          const Eigen::MatrixXd& d);

/// 4x4 front end with the stability precondition enforced
/// (throws UnstableSystem).
CovarianceMatrix solve_steady_covariance(const Mat4& a, const Mat4& d);

/// Convenience: drift + diffusion from params, then solve.
CovarianceMatrix steady_state(const EffectiveParams& p);

}  // namespace opomech
