#include "doctest.h"

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "cvtele/charfunc.hpp"

using namespace cvtele;

namespace {

std::vector<std::array<cplx, 2>> random_points(int n, double scale, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> d(0.0, scale);
  std::vector<std::array<cplx, 2>> pts;
  for (int i = 0; i < n; ++i) pts.push_back({cplx(d(gen), d(gen)), cplx(d(gen), d(gen))});
  return pts;
}

std::vector<ResourceSpec> all_families(double r, double phi) {
  return {ResourceSpec::twin_beam(r, phi), ResourceSpec::squeezed_number(r, phi),
          ResourceSpec::photon_added(r, phi), ResourceSpec::photon_subtracted(r, phi),
          ResourceSpec::squeezed_bell(r, phi, 0.7, 1.9)};
}

std::vector<InputSpec> all_inputs() {
  return {InputSpec::coherent(cplx(0.3, -0.2)), InputSpec::squeezed_vacuum(0.5, 0.8),
          InputSpec::fock1(), InputSpec::photon_added_coherent(cplx(0.4, 0.25)),
          InputSpec::squeezed_fock1(0.6, 2.0)};
}

}  // namespace

TEST_CASE("characteristic functions are one at the origin") {
  const std::array<cplx, 2> zero2{};
  const std::array<cplx, 1> zero1{};
  for (const auto& spec : all_families(0.8, 1.2)) CHECK(std::abs(evaluate(cf_resource(spec), zero2) - 1.0) < 1e-14);
  for (const auto& in : all_inputs()) CHECK(std::abs(evaluate(cf_input(in), zero1) - 1.0) < 1e-14);
}

TEST_CASE("squeezed Bell with delta = 0 is the twin beam") {
  const GaussPolyCF sb = cf_resource(ResourceSpec::squeezed_bell(0.9, 0.4, 0.0, 1.3));
  const GaussPolyCF tb = cf_resource(ResourceSpec::twin_beam(0.9, 0.4));
  for (const auto& p : random_points(50, 0.8, 1)) CHECK(std::abs(evaluate(sb, p) - evaluate(tb, p)) < 1e-13);
}

TEST_CASE("photon-subtracted state is a squeezed Bell state") {
  for (double r : {0.2, 0.7, 1.4}) {
    for (double phi : {0.0, 1.1, kPi}) {
      const double delta = kPi - std::atan(std::tanh(r));
      const GaussPolyCF sb = cf_resource(ResourceSpec::squeezed_bell(r, phi, delta, phi));
      const GaussPolyCF pss = cf_resource(ResourceSpec::photon_subtracted(r, phi));
      double err = 0.0;
      for (const auto& p : random_points(100, 0.9, 7)) err = std::max(err, std::abs(evaluate(sb, p) - evaluate(pss, p)));
      CHECK(err < 1e-12);
    }
  }
  const double r = 0.8;
  const GaussPolyCF a = cf_resource(ResourceSpec::squeezed_bell(r, kPi, photon_subtracted_bell_angle(r), 0.0));
  const GaussPolyCF b = cf_resource(ResourceSpec::photon_subtracted(r, kPi));
  for (const auto& p : random_points(30, 0.9, 3)) CHECK(std::abs(evaluate(a, p) - evaluate(b, p)) < 1e-12);
}

TEST_CASE("closed-form resource CFs agree with the Fock-space sum") {
  const auto pts = random_points(6, 0.7, 11);
  for (double r : {0.0, 0.25, 0.5, 1.0}) {
    for (double phi : {0.0, kPi}) {
      for (const auto& spec : all_families(r, phi)) {
        const GaussPolyCF cf = cf_resource(spec);
        const FockState st = build_resource(spec, 30, {1e-13, 480});
        for (const auto& p : pts) CHECK(std::abs(evaluate(cf, p) - cf_from_fock(st, p)) < 1e-6);
      }
    }
  }
}

TEST_CASE("closed-form input CFs agree with the Fock-space sum") {
  std::mt19937 gen(5);
  std::normal_distribution<double> d(0.0, 0.8);
  for (const auto& in : all_inputs()) {
    const GaussPolyCF cf = cf_input(in);
    const FockState st = build_input(in, 30, {1e-13, 480});
    for (int i = 0; i < 8; ++i) {
      const std::array<cplx, 1> p{cplx(d(gen), d(gen))};
      CHECK(std::abs(evaluate(cf, p) - cf_from_fock(st, p)) < 1e-8);
    }
  }
}

TEST_CASE("Hermiticity and boundedness") {
  for (const auto& spec : all_families(0.6, 2.2)) {
    const GaussPolyCF cf = cf_resource(spec);
    for (const auto& p : random_points(40, 1.2, 9)) {
      const std::array<cplx, 2> minus{-p[0], -p[1]};
      const cplx v = evaluate(cf, p);
      CHECK(std::abs(v - std::conj(evaluate(cf, minus))) < 1e-13);
      CHECK(std::abs(v) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("displacement matrix against associated Laguerre polynomials") {
  const cplx a(0.7, -0.4);
  const int cut = 12;
  const Eigen::MatrixXcd d = displacement_matrix(a, cut);
  const double x = std::norm(a);
  double err = 0.0;
  for (int m = 0; m <= cut; ++m) {
    for (int n = 0; n <= cut; ++n) {
      cplx expect;
      if (m >= n) {
        const double pre = std::sqrt(std::tgamma(n + 1.0) / std::tgamma(m + 1.0));
        expect = pre * std::pow(a, m - n) * std::exp(-x / 2) * std::assoc_laguerre(n, m - n, x);
      } else {
        const double pre = std::sqrt(std::tgamma(m + 1.0) / std::tgamma(n + 1.0));
        expect = pre * std::pow(-std::conj(a), n - m) * std::exp(-x / 2) * std::assoc_laguerre(m, n - m, x);
      }
      err = std::max(err, std::abs(d(m, n) - expect));
    }
  }
  CHECK(err < 1e-12);
}

TEST_CASE("moments from the CF match Fock-space expectation values") {
  for (const auto& spec : all_families(0.7, 0.9)) {
    const QuadratureMoments a = moments_from_cf(cf_resource(spec));
    const QuadratureMoments b = covariance_matrix(build_resource(spec, 30, {1e-14, 480}));
    CHECK((a.covariance - b.covariance).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((a.mean - b.mean).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("the twin beam CF is the Gaussian built from its moments") {
  const ResourceSpec tb = ResourceSpec::twin_beam(1.1, 0.5);
  const GaussPolyCF direct = cf_resource(tb);
  const GaussPolyCF rebuilt = gaussian_cf(moments_from_cf(direct));
  for (const auto& p : random_points(30, 0.8, 21)) CHECK(std::abs(evaluate(direct, p) - evaluate(rebuilt, p)) < 1e-12);
}

TEST_CASE("the vacuum Gaussian factor carries the non-Gaussian resources") {
  // At large |a| every family decays like the twin beam times a polynomial.
  const double r = 0.5;
  const GaussPolyCF tb = cf_resource(ResourceSpec::twin_beam(r, kPi));
  for (const auto& spec : all_families(r, kPi)) {
    const GaussPolyCF cf = cf_resource(spec);
    CHECK((cf.quad - tb.quad).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(cf.poly.degree() <= 4);
  }
}
