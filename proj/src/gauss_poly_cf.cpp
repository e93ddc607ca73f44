#include "cvtele/gauss_poly_cf.hpp"

#include <vector>

namespace cvtele {

GaussPolyCF GaussPolyCF::unit(int num_modes) {
  GaussPolyCF cf;
  cf.num_modes = num_modes;
  cf.quad = Eigen::MatrixXd::Zero(2 * num_modes, 2 * num_modes);
  cf.linear = Eigen::VectorXcd::Zero(2 * num_modes);
  cf.poly = Polynomial::constant(2 * num_modes, 1.0);
  return cf;
}

GaussPolyCF GaussPolyCF::vacuum(int num_modes) {
  GaussPolyCF cf = unit(num_modes);
  cf.quad.setIdentity();
  return cf;
}

void GaussPolyCF::check_integrable() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(quad, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0.0)
    throw DomainError("Gaussian exponent is not integrable (quadratic form not positive definite)");
}

cplx evaluate(const GaussPolyCF& cf, std::span<const cplx> point) {
  if (static_cast<int>(point.size()) != cf.num_modes)
    throw DomainError("characteristic function evaluated with the wrong number of modes");
  const int d = cf.real_dim();
  Eigen::VectorXd v(d);
  std::vector<cplx> vars(d);
  for (int k = 0; k < cf.num_modes; ++k) {
    v(2 * k) = point[k].real();
    v(2 * k + 1) = point[k].imag();
    vars[var_alpha(k)] = point[k];
    vars[var_conj(k)] = std::conj(point[k]);
  }
  const cplx exponent = -0.5 * v.dot(cf.quad * v) +
                        (cf.linear.transpose() * v.cast<cplx>())(0);
  return cf.poly.evaluate(vars) * std::exp(exponent);
}

GaussPolyCF operator*(const GaussPolyCF& a, const GaussPolyCF& b) {
  if (a.num_modes != b.num_modes)
    throw DomainError("product of characteristic functions over different modes");
  GaussPolyCF out;
  out.num_modes = a.num_modes;
  out.quad = a.quad + b.quad;
  out.linear = a.linear + b.linear;
  out.poly = a.poly * b.poly;
  return out;
}

namespace {

// Complex-variable substitution induced by v_old = A v_new. Each old pair
// (a_k, a_k*) becomes a linear form in the new (b_m, b_m*).
Eigen::MatrixXcd induced_substitution(const Eigen::MatrixXd& A) {
  const int old_modes = static_cast<int>(A.rows()) / 2;
  const int new_modes = static_cast<int>(A.cols()) / 2;
  const cplx I(0.0, 1.0);
  Eigen::MatrixXcd map = Eigen::MatrixXcd::Zero(2 * old_modes, 2 * new_modes);
  for (int k = 0; k < old_modes; ++k) {
    for (int m = 0; m < new_modes; ++m) {
      // a_k = sum_j (A(2k, j) + i A(2k+1, j)) w_j, with
      // w_{2m} = (b + b*)/2 and w_{2m+1} = (b - b*)/(2i).
      const cplx cx = cplx(A(2 * k, 2 * m), A(2 * k + 1, 2 * m));
      const cplx cy = cplx(A(2 * k, 2 * m + 1), A(2 * k + 1, 2 * m + 1));
      const cplx coef_b = 0.5 * cx + cy / (2.0 * I);
      const cplx coef_bc = 0.5 * cx - cy / (2.0 * I);
      map(var_alpha(k), var_alpha(m)) = coef_b;
      map(var_alpha(k), var_conj(m)) = coef_bc;
      map(var_conj(k), var_alpha(m)) = std::conj(coef_bc);
      map(var_conj(k), var_conj(m)) = std::conj(coef_b);
    }
  }
  return map;
}

}  // namespace

GaussPolyCF pullback(const GaussPolyCF& cf, const Eigen::MatrixXd& real_map) {
  if (real_map.rows() != cf.real_dim() || real_map.cols() % 2 != 0)
    throw DomainError("pullback map has the wrong shape");
  GaussPolyCF out;
  out.num_modes = static_cast<int>(real_map.cols()) / 2;
  out.quad = real_map.transpose() * cf.quad * real_map;
  out.quad = 0.5 * (out.quad + out.quad.transpose()).eval();
  out.linear = real_map.transpose().cast<cplx>() * cf.linear;
  out.poly = cf.poly.substitute(induced_substitution(real_map));
  return out;
}

Eigen::MatrixXd complex_linear_to_real(const Eigen::MatrixXcd& a,
                                       const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("complex-linear map blocks differ in shape");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * a.rows(), 2 * a.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      // a z + b z* with z = x + i y: (a + b) x + i (a - b) y
      const cplx cx = a(k, j) + b(k, j);
      const cplx cy = cplx(0.0, 1.0) * (a(k, j) - b(k, j));
      A(2 * k, 2 * j) = cx.real();
      A(2 * k + 1, 2 * j) = cx.imag();
      A(2 * k, 2 * j + 1) = cy.real();
      A(2 * k + 1, 2 * j + 1) = cy.imag();
    }
  }
  return A;
}

Polynomial to_real_coordinates(const Polynomial& p) {
  const int n = p.num_vars();
  Eigen::MatrixXcd map = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n / 2; ++k) {
    map(var_alpha(k), 2 * k) = 1.0;
    map(var_alpha(k), 2 * k + 1) = cplx(0.0, 1.0);
    map(var_conj(k), 2 * k) = 1.0;
    map(var_conj(k), 2 * k + 1) = cplx(0.0, -1.0);
  }
  return p.substitute(map);
}

}  // namespace cvtele
