#pragma once

#include <map>

#include <Eigen/Dense>

#include "cvtele/gauss_poly_cf.hpp"
#include "cvtele/polynomial.hpp"

namespace cvtele {

/// Raw moments E[v^k] of a Gaussian with covariance C and (possibly
/// complex) mean mu. Moments are produced by the Isserlis recursion
///
///   E[v_i f(v)] = mu_i E[f] + sum_j C_ij E[d_j f],
///
/// memoized over exponent tuples. A complex mean is the analytic
/// continuation that arises from completing the square against a complex
/// linear term.
class GaussianMoments {
 public:
  GaussianMoments(Eigen::MatrixXd covariance, Eigen::VectorXcd mean);

  cplx moment(const Polynomial::Exponent& k);
  /// sum_k coef_k E[v^k] for a polynomial over the real coordinates.
  cplx expectation(const Polynomial& real_poly);
  /// sum_k |coef_k E[v^k]|, used as a cancellation scale.
  double absolute_expectation(const Polynomial& real_poly);

 private:
  Eigen::MatrixXd cov_;
  Eigen::VectorXcd mean_;
  int dim_;
  std::map<Polynomial::Exponent, cplx> memo_;
};

struct GaussianIntegral {
  cplx value;
  /// Roundoff scale: eps times the sum of absolute term contributions.
  double roundoff;
};

/// Exact integral of a GaussPolyCF over all of R^{2n} (Lebesgue measure on
/// the real coordinates, d^2 a = dRe a dIm a per mode).
/// Throws DomainError if the quadratic form is not positive definite.
GaussianIntegral integrate(const GaussPolyCF& cf);

/// Value, gradient and Hessian of cf at the origin with respect to the real
/// coordinates v.
struct OriginJet {
  cplx value;
  Eigen::VectorXcd gradient;
  Eigen::MatrixXcd hessian;
};
OriginJet jet_at_origin(const GaussPolyCF& cf);

}  // namespace cvtele
