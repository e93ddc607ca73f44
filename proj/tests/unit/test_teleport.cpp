#include "doctest.h"

#include <array>
#include <cmath>

#include "cvtele/charfunc.hpp"
#include "cvtele/teleport.hpp"

using namespace cvtele;

TEST_CASE("output CF is normalized") {
  const GaussPolyCF out = output_cf(cf_input(InputSpec::fock1()),
                                    cf_resource(ResourceSpec::squeezed_bell(0.7, kPi, 0.4, 0.2)));
  const std::array<cplx, 1> zero{};
  CHECK(std::abs(evaluate(out, zero) - 1.0) < 1e-14);
}

TEST_CASE("vacuum resource adds two units of vacuum noise") {
  const GaussPolyCF in = cf_input(InputSpec::squeezed_vacuum(0.4, 0.3));
  const GaussPolyCF out = output_cf(in, cf_resource(ResourceSpec::twin_beam(0.0, kPi)));
  for (const cplx a : {cplx(0.2, 0.1), cplx(-0.7, 0.5), cplx(1.1, -0.9)}) {
    const std::array<cplx, 1> p{a};
    CHECK(std::abs(evaluate(out, p) - evaluate(in, p) * std::exp(-std::norm(a))) < 1e-14);
  }
}

TEST_CASE("coherent input through a twin beam") {
  for (double r : {0.0, 0.3, 1.0, 2.0}) {
    const double expect = 1.0 / (1.0 + std::exp(-2.0 * r));
    CHECK(std::abs(fidelity(InputSpec::coherent(0.5), ResourceSpec::twin_beam(r, kPi)).value - expect) < 1e-13);
  }
  CHECK(fidelity(InputSpec::coherent(0.5), ResourceSpec::twin_beam(5.0, kPi)).value > 0.9999);
}

TEST_CASE("coherent fidelity does not depend on the amplitude") {
  const ResourceSpec res = ResourceSpec::squeezed_bell(0.6, kPi, 0.5, 0.0);
  const double a = fidelity(InputSpec::coherent(0.0), res).value;
  for (const cplx b : {cplx(0.3, 0.0), cplx(1.2, -0.8)}) CHECK(std::abs(fidelity(InputSpec::coherent(b), res).value - a) < 1e-12);
}

TEST_CASE("single photon through the vacuum resource") {
  // (1/pi) int (1 - |l|^2)^2 e^{-2|l|^2} d^2 l = 1/4
  const FidelityResult m = fidelity(InputSpec::fock1(), ResourceSpec::twin_beam(0.0, kPi));
  const FidelityResult q = fidelity_quadrature(InputSpec::fock1(), ResourceSpec::twin_beam(0.0, kPi));
  CHECK(std::abs(m.value - 0.25) < 1e-14);
  CHECK(std::abs(q.value - 0.25) < 1e-9);
  CHECK(q.method == FidelityMethod::Quadrature);
}

TEST_CASE("moment engine agrees with quadrature") {
  const InputSpec inputs[] = {InputSpec::coherent(0.3), InputSpec::squeezed_vacuum(0.8, 0.0),
                              InputSpec::fock1(), InputSpec::photon_added_coherent(0.3),
                              InputSpec::squeezed_fock1(0.8, 0.0)};
  const ResourceSpec resources[] = {ResourceSpec::squeezed_number(0.9, kPi),
                                    ResourceSpec::photon_added(0.4, kPi),
                                    ResourceSpec::squeezed_bell(0.7, 2.0, 1.0, 0.5)};
  for (const auto& in : inputs) {
    for (const auto& res : resources) {
      const double m = fidelity(in, res).value;
      const FidelityResult q = fidelity_quadrature(in, res);
      CHECK(std::abs(m - q.value) < 1e-8);
      CHECK(q.est_error < 1e-6);
    }
  }
}

TEST_CASE("fidelities stay in [0, 1]") {
  for (double r : {0.0, 0.5, 1.5, 3.0}) {
    for (const auto& res : {ResourceSpec::squeezed_number(r, kPi), ResourceSpec::photon_subtracted(r, kPi),
                            ResourceSpec::squeezed_bell(r, kPi, 2.3, 1.0)}) {
      const double f = fidelity(InputSpec::squeezed_fock1(0.8, 0.0), res).value;
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
    }
  }
}

TEST_CASE("photon subtraction beats photon addition for a single photon") {
  for (double r = 0.1; r <= 1.0001; r += 0.1) {
    const double pss = fidelity(InputSpec::fock1(), ResourceSpec::photon_subtracted(r, kPi)).value;
    const double pas = fidelity(InputSpec::fock1(), ResourceSpec::photon_added(r, kPi)).value;
    const double tb = fidelity(InputSpec::fock1(), ResourceSpec::twin_beam(r, kPi)).value;
    CHECK(pss > tb);
    CHECK(pss > pas);
  }
}

TEST_CASE("non-integrable combinations are domain errors") {
  GaussPolyCF bad = GaussPolyCF::unit(1);
  CHECK_THROWS_AS(fidelity(bad, GaussPolyCF::unit(2)), DomainError);
}

TEST_CASE("method names") {
  CHECK(to_string(FidelityMethod::GaussianMoment) == "gaussian_moment");
  CHECK(to_string(FidelityMethod::Quadrature) == "quadrature");
}
