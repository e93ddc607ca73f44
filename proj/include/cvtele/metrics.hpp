#pragma once

#include "cvtele/types.hpp"

namespace cvtele {

struct MetricReport {
  double entropy = 0.0;
  double non_gaussianity = 0.0;
  double tb_relative_nG = 0.0;
  double affinity = 0.0;
  double affinity_argmax_s = 0.0;
};

/// von Neumann entropy (nats) of the mode-1 reduced state, from the Fock
/// oracle at a converged cutoff.
double entanglement_entropy(const ResourceSpec& spec);

/// Hilbert-Schmidt non-Gaussianity (1 + mu_G - 2 Tr[rho rho_G]) / 2 of a pure
/// resource. rho_G shares the covariance and first moments read off the CF;
/// Tr[rho rho_G] is the exact phase-space overlap integral.
double non_gaussianity(const ResourceSpec& spec);

/// 1 - max over twin beams |<zeta'|psi>|^2, with zeta' = r' e^{i phi'}.
struct TwinBeamFit {
  double value = 0.0;
  double r_prime = 0.0;
  double phi_prime = 0.0;
};
TwinBeamFit tb_relative_fit(const ResourceSpec& spec);
double tb_relative_non_gaussianity(const ResourceSpec& spec);

/// max over s in [0, 5] of |<TwinBeam(-s)|psi>|^2 and its argmax s.
struct Affinity {
  double value = 0.0;
  double s = 0.0;
};
Affinity vacuum_affinity(const ResourceSpec& spec);

MetricReport compute_metrics(const ResourceSpec& spec);

}  // namespace cvtele
