#include "cvtele/genplanner.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cvtele/fock_oracle.hpp"

namespace cvtele {

Eigen::Matrix2cd pump_system_matrix(SqueezeParam zeta) {
  zeta = SqueezeParam::make(zeta.r, zeta.phi);
  const double t = std::tanh(zeta.r);
  const cplx e = zeta.phase();
  Eigen::Matrix2cd m;
  m << -std::conj(e) * t, -e,
       1.0, e * e * t;
  return m;
}

PumpPlan solve_pump_amplitudes(const ResourceSpec& target, double gain) {
  target.validate();
  if (target.family != ResourceFamily::SqueezedBell)
    throw DomainError("pump plans are solved for squeezed Bell targets");
  if (!(gain > 0.0) || !std::isfinite(gain)) throw DomainError("gain must be positive");

  const BellAngles ang = *target.bell;
  const Eigen::Vector2cd c(std::cos(ang.delta), std::polar(std::sin(ang.delta), ang.theta));
  const Eigen::Vector2cd k = pump_system_matrix(target.zeta).partialPivLu().solve(c);

  // k = (kappa_a, tanh r * kappa_b).
  const double t = std::tanh(target.zeta.r);
  cplx ka = k(0);
  cplx kb;
  if (t == 0.0) {
    if (std::abs(k(1)) > 1e-12)
      throw DomainError("without squeezing the heralded state has no |0,0> component; "
                        "only delta = pi/2 targets are reachable");
    kb = 0.0;
  } else {
    kb = k(1) / t;
  }

  const double scale = gain / std::max(std::abs(ka), std::abs(kb));
  PumpPlan plan;
  plan.kappa_a = ka * scale;
  plan.kappa_b = kb * scale;
  plan.target = target;
  const Eigen::Vector2cd seed =
      pump_system_matrix(target.zeta) * Eigen::Vector2cd(plan.kappa_a, t * plan.kappa_b);
  plan.predicted_success_weight = std::pow(std::cosh(target.zeta.r), 4) * seed.squaredNorm();
  plan.large_gain = std::max(std::abs(plan.kappa_a), std::abs(plan.kappa_b)) > 0.1;
  return plan;
}

CascadeResult simulate_cascade(const PumpPlan& plan, int cutoff) {
  if (plan.kappa_a == cplx{} && plan.kappa_b == cplx{})
    throw DomainError("degenerate pump plan: both gains vanish");
  const SqueezeParam z = plan.target.zeta;
  // Twin-beam amplitudes (-e^{i phi} tanh r)^n / cosh r in closed form. The
  // ladder operators amplify the truncated tail by ~n^2 cosh^4 r, so the
  // cutoff comes from the pair-ladder bound rather than a norm tolerance.
  const int n = std::max(cutoff, pair_cutoff(z.r, 1e-20));
  const cplx lambda = -z.phase() * std::tanh(z.r);
  FockState three({n, n, 0});
  cplx amp = 1.0 / std::cosh(z.r);
  for (int i = 0; i <= n; ++i, amp *= lambda) three.at({i, i, 0}) = amp;
  const double tail = std::pow(std::tanh(z.r), 2.0 * (n + 1));

  const FockState added = create(create(create(three, 0), 1), 2);
  const FockState removed =
      create(annihilate(annihilate(three, 0), 1), 2).resized(added.cutoffs());

  FockState heralded({n + 1, n + 1});
  for (int i = 0; i <= n + 1; ++i) {
    for (int j = 0; j <= n + 1; ++j) {
      heralded.at({i, j}) =
          plan.kappa_a * added.at({i, j, 1}) + plan.kappa_b * removed.at({i, j, 1});
    }
  }
  CascadeResult res;
  res.weight = heralded.norm_squared();
  if (!(res.weight > 0.0)) throw DomainError("heralded component vanishes");
  heralded.normalize();
  heralded.set_norm_deficit(tail);
  res.state = std::move(heralded);
  return res;
}

}  // namespace cvtele
