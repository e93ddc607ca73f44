#pragma once

#include <span>

#include <Eigen/Dense>

#include "cvtele/polynomial.hpp"
#include "cvtele/types.hpp"

namespace cvtele {

/// A characteristic function of the form
///
///   chi(a) = P(a, a*) * exp(-1/2 v^T Q v + l^T v),
///
/// where v = (Re a_1, Im a_1, Re a_2, Im a_2, ...) is the real coordinate
/// vector of the mode variables, Q is real symmetric with positive-definite
/// part, l is complex, and P is a polynomial over (a_1, a_1*, a_2, a_2*, ...).
///
/// The class is closed under products and real-linear changes of variable,
/// which is all the teleportation map needs.
struct GaussPolyCF {
  int num_modes = 0;
  Eigen::MatrixXd quad;
  Eigen::VectorXcd linear;
  Polynomial poly;

  /// exp(-1/2 |v|^2 * 0) * 1, i.e. the constant function 1 with Q = 0.
  static GaussPolyCF unit(int num_modes);
  /// exp(-1/2 sum |a_k|^2) with polynomial 1.
  static GaussPolyCF vacuum(int num_modes);

  int real_dim() const { return 2 * num_modes; }
  /// Throws DomainError if Q is not positive definite.
  void check_integrable() const;
};

cplx evaluate(const GaussPolyCF& cf, std::span<const cplx> point);

GaussPolyCF operator*(const GaussPolyCF& a, const GaussPolyCF& b);

/// Change of variables v_old = A v_new, with A real of shape
/// (2 * cf.num_modes) x (2 * new_modes).
GaussPolyCF pullback(const GaussPolyCF& cf, const Eigen::MatrixXd& real_map);

/// Real matrix of the map xi_k = sum_j (a(k,j) alpha_j + b(k,j) alpha_j*)
/// acting on real coordinates.
Eigen::MatrixXd complex_linear_to_real(const Eigen::MatrixXcd& a,
                                       const Eigen::MatrixXcd& b);

/// Rewrites a polynomial over (a_k, a_k*) as a polynomial over (x_k, y_k).
Polynomial to_real_coordinates(const Polynomial& p);

/// Variable index helpers for the (a_1, a_1*, a_2, a_2*, ...) ordering.
constexpr int var_alpha(int mode) { return 2 * mode; }
constexpr int var_conj(int mode) { return 2 * mode + 1; }

}  // namespace cvtele
