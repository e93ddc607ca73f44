#pragma once

#include "cvtele/gauss_poly_cf.hpp"
#include "cvtele/types.hpp"

namespace cvtele {

enum class FidelityMethod { GaussianMoment, Quadrature };

struct FidelityResult {
  double value = 0.0;
  FidelityMethod method = FidelityMethod::GaussianMoment;
  double est_error = 0.0;
};

std::string_view to_string(FidelityMethod method);

/// chi_out(a) = chi_in(a) chi12(a*, a) for unit-gain teleportation.
GaussPolyCF output_cf(const GaussPolyCF& input, const GaussPolyCF& resource);

/// F = (1/pi) int chi_in(l) chi_out(-l) d^2 l, evaluated exactly by the
/// moment engine. Throws DomainError if the combined exponent is not
/// integrable.
FidelityResult fidelity(const InputSpec& input, const ResourceSpec& resource);
FidelityResult fidelity(const GaussPolyCF& input_cf, const GaussPolyCF& resource_cf);

/// Same integral on a trapezoid grid over [-L, L]^2, halving the step until
/// the relative change drops below tol. The integrand is evaluated pointwise
/// from the separate input and resource CFs, so it shares no algebra with
/// fidelity(). Throws ConvergenceError (carrying the best estimate) if the
/// grid cap is reached.
FidelityResult fidelity_quadrature(const InputSpec& input,
                                   const ResourceSpec& resource,
                                   double tol = 1e-10);

}  // namespace cvtele
