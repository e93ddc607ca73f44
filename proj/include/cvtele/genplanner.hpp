#pragma once

#include <Eigen/Dense>

#include "cvtele/fock_state.hpp"
#include "cvtele/types.hpp"

namespace cvtele {

/// Effective pump amplitudes for heralded squeezed Bell generation.
/// kappa_a multiplies a1+ a2+ a3+ and kappa_b multiplies a1 a2 a3+ in the
/// first-order evolution acting on the twin beam S12(zeta)|0,0>|0>.
struct PumpPlan {
  cplx kappa_a;
  cplx kappa_b;
  ResourceSpec target;
  /// Squared norm of the heralded (mode 3 in |1>) component.
  double predicted_success_weight = 0.0;
  /// Set when a gain exceeds 0.1, where first order is a poor model.
  bool large_gain = false;
};

/// M with (c1, c2) = M (kappa_a, tanh r * kappa_b), where c1 |0,0> + c2 |1,1>
/// is the heralded state before squeezing, up to a factor cosh^2 r.
/// det M = e^{i phi} / cosh^2 r.
Eigen::Matrix2cd pump_system_matrix(SqueezeParam zeta);

/// Solves for (kappa_a, kappa_b) reproducing a SqueezedBell target, scaled so
/// that the larger magnitude equals `gain`. At r = 0 only targets with
/// cos delta = 0 are reachable; others raise DomainError.
PumpPlan solve_pump_amplitudes(const ResourceSpec& target, double gain = 0.01);

struct CascadeResult {
  FockState state;
  /// Norm squared before renormalization.
  double weight = 0.0;
};

/// Applies (1 + kappa_a a1+ a2+ a3+ + kappa_b a1 a2 a3+) to the twin beam
/// |zeta>|0> at a converged cutoff (at least `cutoff`), projects mode 3 on
/// |1> and renormalizes. Throws DomainError if both gains vanish.
CascadeResult simulate_cascade(const PumpPlan& plan, int cutoff = 30);

}  // namespace cvtele
