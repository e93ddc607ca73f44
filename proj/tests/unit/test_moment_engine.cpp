#include "doctest.h"

#include <cmath>

#include "cvtele/moment_engine.hpp"

using namespace cvtele;

TEST_CASE("Isserlis moments of a standard normal") {
  GaussianMoments m(Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXcd::Zero(1));
  Polynomial::Exponent e{};
  const double expect[] = {1, 0, 1, 0, 3, 0, 15, 0, 105};
  for (int k = 0; k <= 8; ++k) {
    e[0] = static_cast<std::uint8_t>(k);
    CHECK(std::abs(m.moment(e) - expect[k]) < 1e-12);
  }
}

TEST_CASE("correlated moments with a mean") {
  Eigen::MatrixXd c(2, 2);
  c << 2.0, 0.5, 0.5, 1.0;
  Eigen::VectorXcd mu(2);
  mu << 0.3, cplx(0.0, -0.4);
  GaussianMoments m(c, mu);
  Polynomial::Exponent e{};
  e[0] = 1;
  e[1] = 1;
  // E[x y] = C_xy + mu_x mu_y
  CHECK(std::abs(m.moment(e) - (0.5 + mu(0) * mu(1))) < 1e-14);
  e[0] = 2;
  e[1] = 0;
  CHECK(std::abs(m.moment(e) - (2.0 + mu(0) * mu(0))) < 1e-14);
}

TEST_CASE("Gaussian integral with polynomial and complex linear term") {
  // int (1 + x^2) exp(-x^2/2 - y^2/2 + i k x) dx dy = 2 pi e^{-k^2/2} (2 - k^2)
  GaussPolyCF cf = GaussPolyCF::vacuum(1);
  const double k = 0.7;
  cf.linear << cplx(0.0, k), 0.0;
  Polynomial re = Polynomial::variable(2, var_alpha(0), 0.5) + Polynomial::variable(2, var_conj(0), 0.5);
  cf.poly = Polynomial::constant(2, 1.0) + re * re;
  const GaussianIntegral g = integrate(cf);
  const double expect = 2.0 * kPi * std::exp(-0.5 * k * k) * (2.0 - k * k);
  CHECK(std::abs(g.value - expect) < 1e-12);
}

TEST_CASE("non-integrable exponent is a domain error") {
  GaussPolyCF cf = GaussPolyCF::unit(1);
  CHECK_THROWS_AS(integrate(cf), DomainError);
}
