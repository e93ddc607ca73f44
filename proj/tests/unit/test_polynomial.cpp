#include "doctest.h"

#include <array>

#include "cvtele/gauss_poly_cf.hpp"
#include "cvtele/polynomial.hpp"

using namespace cvtele;

TEST_CASE("polynomial product adds exponents") {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1, 2.0);
  const Polynomial p = (x + y) * (x - y);  // x^2 - 4 y^2
  const std::array<cplx, 2> at{cplx(1.5, 0.5), cplx(-0.25, 2.0)};
  const cplx expect = at[0] * at[0] - 4.0 * at[1] * at[1];
  CHECK(std::abs(p.evaluate(at) - expect) < 1e-14);
  CHECK(p.degree() == 2);
  CHECK(p.terms().size() == 2);
}

TEST_CASE("substitution composes linear maps") {
  // p(u, v) = u v with u = 2a + b, v = a - b
  const Polynomial p = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  Eigen::MatrixXcd map(2, 2);
  map << 2.0, 1.0, 1.0, -1.0;
  const Polynomial q = p.substitute(map);
  const std::array<cplx, 2> ab{cplx(0.3, -0.2), cplx(1.1, 0.4)};
  const cplx u = 2.0 * ab[0] + ab[1];
  const cplx v = ab[0] - ab[1];
  CHECK(std::abs(q.evaluate(ab) - u * v) < 1e-14);
}

TEST_CASE("pullback agrees with pointwise change of variables") {
  GaussPolyCF cf = GaussPolyCF::vacuum(1);
  cf.poly = Polynomial::constant(2, 1.0) -
            Polynomial::variable(2, var_alpha(0)) * Polynomial::variable(2, var_conj(0));
  cf.linear << cplx(0.0, 0.3), cplx(0.0, -0.7);

  Eigen::MatrixXcd a(1, 1), b(1, 1);
  a << cplx(1.2, 0.1);
  b << cplx(0.4, -0.6);
  const GaussPolyCF pulled = pullback(cf, complex_linear_to_real(a, b));
  for (const cplx z : {cplx(0.3, 0.2), cplx(-1.0, 0.5), cplx(0.0, -0.8)}) {
    const std::array<cplx, 1> p{z};
    const std::array<cplx, 1> mapped{a(0, 0) * z + b(0, 0) * std::conj(z)};
    CHECK(std::abs(evaluate(pulled, p) - evaluate(cf, mapped)) < 1e-13);
  }
}
