#include "doctest.h"

#include <cmath>

#include "cvtele/metrics.hpp"

using namespace cvtele;

namespace {

double twin_beam_entropy(double r) {
  const double c2 = std::cosh(r) * std::cosh(r);
  const double s2 = std::sinh(r) * std::sinh(r);
  return c2 * std::log(c2) - s2 * std::log(s2);
}

}  // namespace

TEST_CASE("twin beam entropy in closed form") {
  for (double r : {0.5, 1.0, 2.0}) CHECK(std::abs(entanglement_entropy(ResourceSpec::twin_beam(r, kPi)) - twin_beam_entropy(r)) < 1e-8);
  CHECK(std::abs(entanglement_entropy(ResourceSpec::twin_beam(0.0, kPi))) < 1e-14);
  CHECK(std::abs(entanglement_entropy(ResourceSpec::squeezed_number(0.0, kPi))) < 1e-14);
}

TEST_CASE("Gaussian states carry no non-Gaussianity") {
  CHECK(non_gaussianity(ResourceSpec::twin_beam(0.8, 1.0)) < 1e-12);
  CHECK(non_gaussianity(ResourceSpec::photon_subtracted(0.0, kPi)) < 1e-12);
  CHECK(tb_relative_non_gaussianity(ResourceSpec::twin_beam(1.2, kPi)) < 1e-10);
}

TEST_CASE("two-photon Fock state") {
  // Gaussian reference: two thermal modes with mean number 1.
  // mu_G = 1/9, Tr[rho rho_G] = (1/4)^2.
  const double expect = (1.0 + 1.0 / 9.0 - 2.0 / 16.0) / 2.0;
  CHECK(std::abs(non_gaussianity(ResourceSpec::squeezed_number(0.0, kPi)) - expect) < 1e-12);
  CHECK(std::abs(non_gaussianity(ResourceSpec::photon_added(0.0, kPi)) - expect) < 1e-12);
  // max over s of tanh^2 s / cosh^2 s is 1/4
  CHECK(std::abs(tb_relative_non_gaussianity(ResourceSpec::squeezed_number(0.0, kPi)) - 0.75) < 1e-8);
  const Affinity a = vacuum_affinity(ResourceSpec::squeezed_number(0.0, kPi));
  CHECK(std::abs(a.value - 0.25) < 1e-8);
  CHECK(std::abs(std::tanh(a.s) - std::sqrt(0.5)) < 1e-4);
}

TEST_CASE("squeezed Bell non-Gaussianity does not depend on squeezing") {
  const double ref = non_gaussianity(ResourceSpec::squeezed_bell(0.0, kPi, 0.5, 0.0));
  for (double r : {0.4, 1.0, 2.0}) CHECK(std::abs(non_gaussianity(ResourceSpec::squeezed_bell(r, kPi, 0.5, 0.0)) - ref) < 1e-9);
}

TEST_CASE("metric ranges") {
  for (const auto& spec : {ResourceSpec::squeezed_number(0.7, kPi), ResourceSpec::photon_added(0.7, kPi),
                           ResourceSpec::squeezed_bell(0.7, kPi, 1.2, 0.4)}) {
    const MetricReport m = compute_metrics(spec);
    CHECK(m.entropy >= 0.0);
    CHECK(m.non_gaussianity >= 0.0);
    CHECK(m.non_gaussianity <= 1.0);
    CHECK(m.tb_relative_nG >= 0.0);
    CHECK(m.tb_relative_nG <= 1.0);
    CHECK(m.affinity > 0.0);
    CHECK(m.affinity <= 1.0 + 1e-12);
    CHECK(m.affinity_argmax_s >= 0.0);
    CHECK(m.affinity_argmax_s <= 5.0);
  }
}

TEST_CASE("twin beam fit recovers the twin beam") {
  const TwinBeamFit fit = tb_relative_fit(ResourceSpec::twin_beam(0.6, 1.4));
  CHECK(fit.value < 1e-10);
  CHECK(std::abs(fit.r_prime - 0.6) < 1e-4);
}
