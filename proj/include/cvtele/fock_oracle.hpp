#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cvtele/fock_state.hpp"
#include "cvtele/types.hpp"

namespace cvtele {

/// Cutoff escalation for the state builders: start at the requested cutoff,
/// double until the norm deficit drops below `tolerance`, never beyond `cap`.
struct TruncationPolicy {
  double tolerance = 1e-10;
  int cap = 480;
};

inline constexpr int kDefaultCutoff = 30;

/// S12(zeta) = exp(-zeta a1+ a2+ + zeta* a1 a2) applied to a two-mode state,
/// by exponentiating the generator on each photon-difference sector of a
/// padded working space and truncating the result to `cutoff` per mode.
/// The result is renormalized; its norm_deficit records what was lost.
/// Throws ConvergenceError when the truncation loses more than max_deficit.
FockState apply_two_mode_squeeze(const FockState& state, SqueezeParam zeta,
                                  int cutoff, double max_deficit = 1e-10);

/// Resource state at a fixed cutoff, no escalation and no tolerance check.
FockState build_resource_at(const ResourceSpec& spec, int cutoff);
/// Resource state with cutoff escalation; throws ConvergenceError (carrying
/// the achieved deficit) if the cap is reached first.
FockState build_resource(const ResourceSpec& spec, int cutoff = kDefaultCutoff,
                         TruncationPolicy policy = {});

FockState build_input_at(const InputSpec& spec, int cutoff);
FockState build_input(const InputSpec& spec, int cutoff = kDefaultCutoff,
                      TruncationPolicy policy = {});

/// Amplitudes <n,n|psi> for n = 0..n_max of a resource state, from the
/// Bogoliubov ladder S (a1+ a2+) S+ = (cosh r a1+ + e^{-i phi} sinh r a2)(...)
/// acting on the closed-form twin-beam amplitudes. Exact at every n.
std::vector<cplx> pair_amplitudes(const ResourceSpec& spec, int n_max);

/// Smallest n_max for which the pair amplitudes of a squeezing-r resource
/// carry all but `tolerance` of the norm.
int pair_cutoff(double r, double tolerance = 1e-14);

/// <a|b>, zero-padding the smaller cutoffs. Throws on mode-count mismatch.
cplx overlap(const FockState& a, const FockState& b);

/// Eigenvalues of the mode-1 reduced density matrix, ascending.
Eigen::VectorXd reduced_spectrum(const FockState& state);

/// von Neumann entropy (nats) of the mode-1 reduced state.
double reduced_entropy(const FockState& state);

struct QuadratureMoments {
  /// Ordering (x1, p1, x2, p2), vacuum = I/2.
  Eigen::Matrix4d covariance;
  Eigen::Vector4d mean;
};

/// Covariance matrix and first moments of a two-mode state from Fock-space
/// expectation values. Throws ConvergenceError if the uncertainty relation
/// sigma + i Omega / 2 >= 0 fails by more than 1e-9.
QuadratureMoments covariance_matrix(const FockState& state);

/// a_mode |psi>, same cutoffs.
FockState annihilate(const FockState& state, int mode);
/// a_mode^+ |psi>, cutoff of `mode` grows by one.
FockState create(const FockState& state, int mode);

/// Symplectic form Omega = diag(J, J), J = [[0, 1], [-1, 0]].
Eigen::Matrix4d symplectic_form();

}  // namespace cvtele
