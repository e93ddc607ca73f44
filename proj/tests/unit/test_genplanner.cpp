#include "doctest.h"

#include <cmath>

#include "cvtele/fock_oracle.hpp"
#include "cvtele/genplanner.hpp"

using namespace cvtele;

TEST_CASE("pump system determinant") {
  for (double phi : {0.0, 1.3, kPi}) {
    const Eigen::Matrix2cd m = pump_system_matrix(SqueezeParam::make(1.0, phi));
    CHECK(std::abs(m.determinant() - std::polar(1.0, phi) / std::pow(std::cosh(1.0), 2)) < 1e-14);
  }
  CHECK(std::abs(1.0 / std::pow(std::cosh(1.0), 2) - 0.41997) < 1e-5);
}

TEST_CASE("pump system conditioning grows like e^{2r}") {
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(pump_system_matrix(SqueezeParam::make(r, 0.7)));
    const double cond = svd.singularValues()(0) / svd.singularValues()(1);
    CHECK(cond <= std::exp(2.0 * r) * (1.0 + 1e-12));
  }
}

TEST_CASE("photon-subtracted target needs only the subtracting pump") {
  const double r = 0.8, phi = 1.1, t = std::tanh(r);
  const PumpPlan p = solve_pump_amplitudes(ResourceSpec::squeezed_bell(r, phi, kPi - std::atan(t), phi));
  CHECK(std::abs(p.kappa_a) < 1e-14);
  CHECK(std::abs(std::abs(p.kappa_b) - 0.01) < 1e-15);
}

TEST_CASE("photon-added target needs only the adding pump") {
  const double r = 0.8, phi = 1.1, t = std::tanh(r);
  const PumpPlan p = solve_pump_amplitudes(ResourceSpec::squeezed_bell(r, phi, kPi - std::atan(1.0 / t), phi));
  CHECK(std::abs(p.kappa_b) < 1e-14);
  CHECK(std::abs(std::abs(p.kappa_a) - 0.01) < 1e-15);
}

TEST_CASE("gain only rescales the plan") {
  const ResourceSpec target = ResourceSpec::squeezed_bell(0.6, kPi, 0.9, 0.3);
  const PumpPlan a = solve_pump_amplitudes(target, 0.01);
  const PumpPlan b = solve_pump_amplitudes(target, 0.05);
  CHECK(std::abs(b.kappa_a - 5.0 * a.kappa_a) < 1e-15);
  CHECK(std::abs(b.kappa_b - 5.0 * a.kappa_b) < 1e-15);
  CHECK(std::abs(b.predicted_success_weight / a.predicted_success_weight - 25.0) < 1e-10);
  CHECK_FALSE(a.large_gain);
  CHECK(solve_pump_amplitudes(target, 0.2).large_gain);
}

TEST_CASE("simulated cascade reproduces the target") {
  for (const ResourceSpec& target :
       {ResourceSpec::squeezed_bell(0.5, kPi, 0.4, 0.0), ResourceSpec::squeezed_bell(1.2, 0.3, 2.0, 1.0),
        ResourceSpec::squeezed_bell(0.0, kPi, kPi / 2, 0.5)}) {
    const PumpPlan plan = solve_pump_amplitudes(target);
    const CascadeResult res = simulate_cascade(plan);
    const double ov = std::norm(overlap(res.state, build_resource(target)));
    CHECK(ov > 1.0 - 1e-10);
    CHECK(std::abs(res.weight / plan.predicted_success_weight - 1.0) < 1e-9);
  }
}

TEST_CASE("planner errors") {
  CHECK_THROWS_AS(solve_pump_amplitudes(ResourceSpec::squeezed_bell(0.0, kPi, 0.3, 0.0)), DomainError);
  CHECK_THROWS_AS(solve_pump_amplitudes(ResourceSpec::twin_beam(0.5, kPi)), DomainError);
  CHECK_THROWS_AS(solve_pump_amplitudes(ResourceSpec::squeezed_bell(0.5, kPi, 0.3, 0.0), 0.0), DomainError);
  PumpPlan empty;
  empty.target = ResourceSpec::squeezed_bell(0.5, kPi, 0.3, 0.0);
  CHECK_THROWS_AS(simulate_cascade(empty), DomainError);
}
