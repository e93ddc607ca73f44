#include "cvtele/moment_engine.hpp"

#include <cmath>
#include <limits>

namespace cvtele {

GaussianMoments::GaussianMoments(Eigen::MatrixXd covariance,
                                 Eigen::VectorXcd mean)
    : cov_(std::move(covariance)),
      mean_(std::move(mean)),
      dim_(static_cast<int>(cov_.rows())) {
  if (cov_.cols() != dim_ || mean_.size() != dim_)
    throw DomainError("moment engine: covariance and mean sizes differ");
  if (dim_ > Polynomial::kMaxVars)
    throw DomainError("moment engine: too many variables");
}

cplx GaussianMoments::moment(const Polynomial::Exponent& k) {
  int first = -1;
  for (int i = 0; i < dim_; ++i) {
    if (k[i] > 0) {
      first = i;
      break;
    }
  }
  if (first < 0) return 1.0;
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  Polynomial::Exponent rest = k;
  --rest[first];
  cplx value = mean_(first) * moment(rest);
  for (int j = 0; j < dim_; ++j) {
    if (rest[j] == 0 || cov_(first, j) == 0.0) continue;
    Polynomial::Exponent lowered = rest;
    --lowered[j];
    value += cov_(first, j) * static_cast<double>(rest[j]) * moment(lowered);
  }
  memo_.emplace(k, value);
  return value;
}

cplx GaussianMoments::expectation(const Polynomial& real_poly) {
  cplx sum = 0.0;
  for (const auto& [e, c] : real_poly.terms()) sum += c * moment(e);
  return sum;
}

double GaussianMoments::absolute_expectation(const Polynomial& real_poly) {
  double sum = 0.0;
  for (const auto& [e, c] : real_poly.terms()) sum += std::abs(c * moment(e));
  return sum;
}

GaussianIntegral integrate(const GaussPolyCF& cf) {
  const int d = cf.real_dim();
  Eigen::LLT<Eigen::MatrixXd> llt(cf.quad);
  if (llt.info() != Eigen::Success)
    throw DomainError("Gaussian exponent is not integrable (quadratic form not positive definite)");
  const Eigen::MatrixXd cov = llt.solve(Eigen::MatrixXd::Identity(d, d));
  const Eigen::VectorXcd mean = cov.cast<cplx>() * cf.linear;

  double log_det = 0.0;
  const Eigen::MatrixXd L = llt.matrixL();
  for (int i = 0; i < d; ++i) log_det += 2.0 * std::log(L(i, i));

  // int exp(-1/2 v^T Q v + l^T v) dv = (2 pi)^{d/2} det(Q)^{-1/2} exp(1/2 l^T Q^{-1} l)
  const cplx shift = 0.5 * (cf.linear.transpose() * mean)(0);
  const cplx prefactor =
      std::exp(0.5 * d * std::log(2.0 * kPi) - 0.5 * log_det + shift);

  GaussianMoments moments(cov, mean);
  const Polynomial real_poly = to_real_coordinates(cf.poly);
  const cplx value = prefactor * moments.expectation(real_poly);
  const double scale =
      std::abs(prefactor) * moments.absolute_expectation(real_poly);
  return {value, scale * std::numeric_limits<double>::epsilon() * 16.0};
}

OriginJet jet_at_origin(const GaussPolyCF& cf) {
  const int d = cf.real_dim();
  const Polynomial p = to_real_coordinates(cf.poly);

  cplx p0 = 0.0;
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(d);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (int i = 0; i < d; ++i) deg += e[i];
    if (deg == 0) {
      p0 += c;
    } else if (deg == 1) {
      for (int i = 0; i < d; ++i)
        if (e[i] == 1) g(i) += c;
    } else if (deg == 2) {
      for (int i = 0; i < d; ++i) {
        if (e[i] == 2) h(i, i) += 2.0 * c;
        for (int j = i + 1; j < d; ++j) {
          if (e[i] == 1 && e[j] == 1) {
            h(i, j) += c;
            h(j, i) += c;
          }
        }
      }
    }
  }

  // chi = P * G with G = exp(-1/2 v^T Q v + l^T v); G(0) = 1, dG = l,
  // d^2 G = l l^T - Q.
  const Eigen::VectorXcd& l = cf.linear;
  OriginJet jet;
  jet.value = p0;
  jet.gradient = g + p0 * l;
  jet.hessian = h + g * l.transpose() + l * g.transpose() +
                p0 * (l * l.transpose() - cf.quad.cast<cplx>());
  return jet;
}

}  // namespace cvtele
