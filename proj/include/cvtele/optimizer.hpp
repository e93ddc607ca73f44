#pragma once

#include <string>
#include <vector>

#include "cvtele/types.hpp"

namespace cvtele {

enum class OptimizationMethod { GridRefine, ClosedForm };
std::string_view to_string(OptimizationMethod method);

struct OptimizationResult {
  double delta_star = 0.0;
  double fidelity_star = 0.0;
  OptimizationMethod method = OptimizationMethod::GridRefine;
  int iterations = 0;
};

/// Squeezed Bell resource at (r, phi, delta, theta).
ResourceSpec squeezed_bell_at(double r, double delta, double phi = kPi,
                              double theta = 0.0);

/// Maximizes F(r, phi, delta, theta) over delta in [0, pi): 64-point grid,
/// golden section around the best node, then one second-harmonic polish
/// step through delta* and delta* +- pi/4. Ties go to the smaller delta.
OptimizationResult optimize_delta(const InputSpec& input, double r,
                                  double phi = kPi, double theta = 0.0);

/// Same maximum from three fidelity evaluations. F is a quadratic form in
/// (cos delta, sin delta), so F = A + B cos 2delta + C sin 2delta exactly and
/// the argmax is atan2(C, B) / 2.
OptimizationResult optimize_delta_harmonic(const InputSpec& input, double r,
                                           double phi = kPi, double theta = 0.0);

enum class ClosedFormKind { Coherent, Fock1 };

/// Closed-form optimal Bell angles. For Fock1 the expression is 0/0 at r = 0;
/// pass allow_limit to get its r -> 0+ value, pi/4, instead of a DomainError.
double delta_closed_form(ClosedFormKind kind, double r, bool allow_limit = false);

/// (F_opt - F_ref) / F_ref at squeezing r, phi = pi. The reference keeps its
/// family and angles; its squeezing is set to (r, pi).
double relative_fidelity(const InputSpec& input, double r, const ResourceSpec& reference);

struct SweepRow {
  InputSpec input;
  ResourceSpec resource;
  double r = 0.0;
  double fidelity = 0.0;
  std::string error;
};

/// Dense table in input-major, resource, ascending-r order. Each resource
/// keeps its family, angles and phase; r comes from the grid. Cell errors
/// are recorded in the row and do not stop the sweep.
std::vector<SweepRow> sweep(const std::vector<InputSpec>& inputs,
                            const std::vector<ResourceSpec>& resources,
                            std::vector<double> r_grid);

/// A point where the optimized squeezed Bell resource coincides with the
/// photon-subtracted resource, so their fidelity gap vanishes.
struct Coincidence {
  double r_bar = 0.0;
  double delta_star = 0.0;
  double relative_fidelity = 0.0;
  double state_overlap = 0.0;
};

/// Zeros in [lo, hi] of g(r) = delta*(r) - atan(tanh r) (mod pi, wrapped to
/// (-pi/2, pi/2]), bracketed on a `step` scan and bisected. g changes sign
/// where the relative fidelity against the photon-subtracted resource
/// touches zero from above.
std::vector<Coincidence> find_coincidences(const InputSpec& input, double lo = 0.3,
                                           double hi = 1.2, double step = 0.02);

}  // namespace cvtele
