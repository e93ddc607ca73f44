#include "cvtele/teleport.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cvtele/charfunc.hpp"
#include "cvtele/moment_engine.hpp"

namespace cvtele {

std::string_view to_string(FidelityMethod method) {
  return method == FidelityMethod::GaussianMoment ? "gaussian_moment" : "quadrature";
}

GaussPolyCF output_cf(const GaussPolyCF& input, const GaussPolyCF& resource) {
  if (input.num_modes != 1 || resource.num_modes != 2)
    throw DomainError("output_cf needs a single-mode input and a two-mode resource");
  // (x, y) -> (a1, a2) = (a*, a) in real coordinates.
  Eigen::MatrixXd A(4, 2);
  A << 1, 0,
       0, -1,
       1, 0,
       0, 1;
  return input * pullback(resource, A);
}

FidelityResult fidelity(const GaussPolyCF& input_cf, const GaussPolyCF& resource_cf) {
  const GaussPolyCF out = output_cf(input_cf, resource_cf);
  const GaussPolyCF reflected = pullback(out, -Eigen::MatrixXd::Identity(2, 2));
  const GaussianIntegral integral = integrate(input_cf * reflected);
  FidelityResult res;
  res.value = integral.value.real() / kPi;
  res.method = FidelityMethod::GaussianMoment;
  res.est_error = std::max(integral.roundoff, std::abs(integral.value.imag())) / kPi;
  return res;
}

FidelityResult fidelity(const InputSpec& input, const ResourceSpec& resource) {
  return fidelity(cf_input(input), cf_resource(resource));
}

FidelityResult fidelity_quadrature(const InputSpec& input,
                                   const ResourceSpec& resource, double tol) {
  if (!(tol >= 1e-10)) throw DomainError("quadrature tolerance must be at least 1e-10");
  const GaussPolyCF in = cf_input(input);
  const GaussPolyCF res = cf_resource(resource);

  // Width of the combined Gaussian, from the quadratic forms only.
  Eigen::MatrixXd A(4, 2);
  A << 1, 0, 0, -1, 1, 0, 0, 1;
  const Eigen::MatrixXd q = 2.0 * in.quad + A.transpose() * res.quad * A;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(q, Eigen::EigenvaluesOnly);
  const double lmin = eig.eigenvalues().minCoeff();
  if (!(lmin > 0.0))
    throw DomainError("combined Gaussian exponent is not integrable");
  const double sigma = 1.0 / std::sqrt(lmin);

  // Truncate where a degree-d polynomial tail under the Gaussian is
  // negligible next to the tolerance.
  const int degree = 2 * in.poly.degree() + res.poly.degree();
  double c = 6.0;
  while (std::pow(c, degree + 1) * std::exp(-0.5 * c * c) > 1e-3 * tol) c += 0.5;
  const double L = c * sigma;

  auto integrand = [&](double x, double y) {
    const std::array<cplx, 1> p{cplx(x, y)};
    const std::array<cplx, 1> m{cplx(-x, -y)};
    const std::array<cplx, 2> r{cplx(-x, y), cplx(-x, -y)};
    return (evaluate(in, p) * evaluate(in, m) * evaluate(res, r)).real();
  };

  auto trapezoid = [&](int n) {
    const double h = 2.0 * L / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double wx = (i == 0 || i == n) ? 0.5 : 1.0;
      const double x = -L + i * h;
      for (int j = 0; j <= n; ++j) {
        const double wy = (j == 0 || j == n) ? 0.5 : 1.0;
        sum += wx * wy * integrand(x, -L + j * h);
      }
    }
    return sum * h * h / kPi;
  };

  constexpr int kMaxPanels = 2048;
  int n = 32;
  double prev = trapezoid(n);
  double change = 0.0;
  while (true) {
    n *= 2;
    const double cur = trapezoid(n);
    change = std::abs(cur - prev);
    prev = cur;
    if (change <= tol * std::max(1.0, std::abs(cur))) break;
    if (n >= kMaxPanels)
      throw ConvergenceError("fidelity quadrature did not converge", cur);
  }

  FidelityResult out;
  out.value = prev;
  out.method = FidelityMethod::Quadrature;
  out.est_error = change;
  if (lmin < 0.02) out.est_error = std::max(out.est_error * 1e3, 1e-6);
  return out;
}

}  // namespace cvtele
