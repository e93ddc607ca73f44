#include "cvtele/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cvtele/charfunc.hpp"
#include "cvtele/fock_oracle.hpp"
#include "cvtele/moment_engine.hpp"
#include "cvtele/scalar_search.hpp"

namespace cvtele {

namespace {

// Pair amplitudes kept to a tail far below the 1e-6 checks.
constexpr double kPairTail = 1e-24;

// |<TwinBeam(r', phi')|psi>|^2 for psi given by its |n,n> amplitudes.
double tb_overlap2(const std::vector<cplx>& psi, double rp, double phip) {
  rp = std::abs(rp);
  const cplx step = std::conj(-std::polar(std::tanh(rp), phip));
  cplx term = 1.0 / std::cosh(rp);
  cplx sum = 0.0;
  for (const cplx& a : psi) {
    sum += term * a;
    term *= step;
    if (std::abs(term) < 1e-300) break;
  }
  return std::norm(sum);
}

}  // namespace

double entanglement_entropy(const ResourceSpec& spec) {
  return reduced_entropy(build_resource(spec));
}

double non_gaussianity(const ResourceSpec& spec) {
  const GaussPolyCF chi = cf_resource(spec);
  const QuadratureMoments m = moments_from_cf(chi);
  const double det = m.covariance.determinant();
  if (!(det > 0.0)) throw ConvergenceError("covariance matrix is singular", det);
  const double mu_g = 1.0 / (4.0 * std::sqrt(det));
  const GaussPolyCF g_reflected =
      pullback(gaussian_cf(m), -Eigen::MatrixXd::Identity(4, 4));
  const double overlap = integrate(chi * g_reflected).value.real() / (kPi * kPi);
  return std::clamp(0.5 * (1.0 + mu_g - 2.0 * overlap), 0.0, 1.0);
}

TwinBeamFit tb_relative_fit(const ResourceSpec& spec) {
  spec.validate();
  const auto psi = pair_amplitudes(spec, pair_cutoff(spec.zeta.r, kPairTail));
  const double r_hi = spec.zeta.r + 3.0;
  auto best_r = [&](double phip) {
    return grid_maximize([&](double rp) { return tb_overlap2(psi, rp, phip); },
                         0.0, r_hi, 61);
  };

  constexpr int kPhiGrid = 16;
  const double h = 2.0 * kPi / kPhiGrid;
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i < kPhiGrid; ++i) {
    const double v = best_r(i * h).value;
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const ScalarMax phi_opt = golden_maximize(
      [&](double phip) { return best_r(phip).value; }, (best - 1) * h, (best + 1) * h);
  const ScalarMax r_opt = best_r(phi_opt.x);

  TwinBeamFit fit;
  fit.value = std::clamp(1.0 - r_opt.value, 0.0, 1.0);
  fit.r_prime = std::abs(r_opt.x);
  fit.phi_prime = SqueezeParam::make(fit.r_prime, phi_opt.x).phi;
  return fit;
}

double tb_relative_non_gaussianity(const ResourceSpec& spec) {
  return tb_relative_fit(spec).value;
}

Affinity vacuum_affinity(const ResourceSpec& spec) {
  spec.validate();
  const auto psi = pair_amplitudes(spec, pair_cutoff(spec.zeta.r, kPairTail));
  auto f = [&](double s) { return tb_overlap2(psi, std::max(s, 0.0), kPi); };
  const ScalarMax m = grid_maximize(f, 0.0, 5.0, 101);
  return {std::min(m.value, 1.0), std::max(m.x, 0.0)};
}

MetricReport compute_metrics(const ResourceSpec& spec) {
  MetricReport rep;
  rep.entropy = entanglement_entropy(spec);
  rep.non_gaussianity = non_gaussianity(spec);
  rep.tb_relative_nG = tb_relative_non_gaussianity(spec);
  const Affinity a = vacuum_affinity(spec);
  rep.affinity = a.value;
  rep.affinity_argmax_s = a.s;
  return rep;
}

}  // namespace cvtele
