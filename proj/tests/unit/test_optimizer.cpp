#include "doctest.h"

#include <cmath>

#include "cvtele/optimizer.hpp"
#include "cvtele/teleport.hpp"

using namespace cvtele;

namespace {

double brute_force_delta(const InputSpec& in, double r) {
  double best = -1.0, arg = 0.0;
  for (int i = 0; i < 4000; ++i) {
    const double d = kPi * i / 4000.0;
    const double f = fidelity(in, squeezed_bell_at(r, d)).value;
    if (f > best) best = f, arg = d;
  }
  return arg;
}

}  // namespace

TEST_CASE("grid search, harmonic fit and brute force agree") {
  for (const InputSpec& in : {InputSpec::coherent(0.3), InputSpec::fock1(), InputSpec::squeezed_fock1(0.8, 0.0)}) {
    for (double r : {0.3, 1.0}) {
      const OptimizationResult g = optimize_delta(in, r);
      const OptimizationResult h = optimize_delta_harmonic(in, r);
      CHECK(std::abs(g.delta_star - h.delta_star) < 1e-6);
      CHECK(std::abs(g.fidelity_star - h.fidelity_star) < 1e-10);
      CHECK(std::abs(g.delta_star - brute_force_delta(in, r)) < 1e-3);
      CHECK(g.delta_star >= 0.0);
      CHECK(g.delta_star < kPi);
    }
  }
}

TEST_CASE("closed-form optimal angles") {
  for (double r = 0.1; r <= 3.0001; r += 0.1) {
    CHECK(std::abs(optimize_delta(InputSpec::coherent(0.3), r).delta_star - delta_closed_form(ClosedFormKind::Coherent, r)) < 1e-5);
    CHECK(std::abs(optimize_delta(InputSpec::fock1(), r).delta_star - delta_closed_form(ClosedFormKind::Fock1, r)) < 1e-5);
  }
  CHECK(std::abs(delta_closed_form(ClosedFormKind::Coherent, 1.0) - 0.424346) < 1e-6);
  CHECK_THROWS_AS(delta_closed_form(ClosedFormKind::Fock1, 0.0), DomainError);
  CHECK(std::abs(delta_closed_form(ClosedFormKind::Fock1, 0.0, true) - kPi / 4) < 1e-15);
  CHECK(std::abs(delta_closed_form(ClosedFormKind::Fock1, 1e-9) - kPi / 4) < 1e-6);
}

TEST_CASE("optimized squeezed Bell never loses to the twin beam") {
  for (double r : {0.0, 0.2, 0.9, 2.0}) CHECK(relative_fidelity(InputSpec::fock1(), r, ResourceSpec::twin_beam(0.0, kPi)) > -1e-12);
}

TEST_CASE("coincidence with the photon-subtracted resource") {
  for (const InputSpec& in : {InputSpec::coherent(0.3), InputSpec::fock1()}) {
    const auto hits = find_coincidences(in);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].r_bar > 0.5);
    CHECK(hits[0].r_bar < 0.9);
    CHECK(std::abs(hits[0].state_overlap - 1.0) < 1e-9);
    CHECK(std::abs(hits[0].relative_fidelity) < 1e-9);
  }
  // atan(1 + e^{-2r}) / 2 = atan(tanh r) reduces to e^{4r} - 2e^{2r} - 3 = 0
  const auto c = find_coincidences(InputSpec::coherent(0.3));
  CHECK(std::abs(c[0].r_bar - std::atanh(0.5)) < 1e-6);
}

TEST_CASE("sweep layout") {
  const auto rows = sweep({InputSpec::coherent(0.3), InputSpec::fock1()},
                          {ResourceSpec::twin_beam(0.0, kPi), squeezed_bell_at(0.0, 0.4)}, {0.0, 0.5, 1.0});
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].input.family == InputFamily::Coherent);
  CHECK(rows[3].resource.family == ResourceFamily::SqueezedBell);
  CHECK(rows[6].input.family == InputFamily::Fock1);
  CHECK(rows[2].r == 1.0);
  REQUIRE(rows[10].resource.bell);
  CHECK(rows[10].resource.bell->delta == 0.4);
  for (const auto& row : rows) CHECK(row.error.empty());
  CHECK(std::abs(rows[1].fidelity - 1.0 / (1.0 + std::exp(-1.0))) < 1e-12);
}
