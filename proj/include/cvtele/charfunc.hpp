#pragma once

#include <span>

#include "cvtele/fock_oracle.hpp"
#include "cvtele/fock_state.hpp"
#include "cvtele/gauss_poly_cf.hpp"
#include "cvtele/types.hpp"

namespace cvtele {

/// Symmetric-order characteristic function chi(a1, a2) = Tr[D1(a1) D2(a2) rho]
/// of a resource state, in closed form.
///
/// Every family is S12(zeta) applied to c00|0,0> + c11|1,1>, so
/// chi = <psi0| D(xi1) D(xi2) |psi0> with xi_k = cosh r a_k + e^{i phi} sinh r a_l*.
/// For the squeezed Bell state this gives the cross term
/// 2 c1 c2 Re[e^{-i theta} xi1 xi2].
GaussPolyCF cf_resource(const ResourceSpec& spec);

/// Single-mode input characteristic function chi(a) = Tr[D(a) rho].
GaussPolyCF cf_input(const InputSpec& spec);

/// Tr[D(a_1) ... D(a_n) rho] for a pure Fock-basis state, summed directly
/// over displacement matrix elements. Independent of the closed forms above.
/// Writes a warning to std::clog when the state's recorded truncation
/// deficit makes the tail bound exceed 1e-8.
cplx cf_from_fock(const FockState& state, std::span<const cplx> point);

/// Matrix <m|D(a)|n>, m, n = 0..cutoff, by the recurrence
/// sqrt(m) D[m][n] = sqrt(n) D[m-1][n-1] + a D[m-1][n], which is the
/// associated-Laguerre recurrence with the factorial prefactors folded in.
Eigen::MatrixXcd displacement_matrix(cplx alpha, int cutoff);

/// Covariance matrix and first moments (x1, p1, x2, p2; vacuum = I/2) read
/// off the value, gradient and Hessian of a two-mode CF at the origin.
QuadratureMoments moments_from_cf(const GaussPolyCF& cf);

/// CF of the Gaussian state with the given covariance and first moments.
GaussPolyCF gaussian_cf(const QuadratureMoments& moments);

}  // namespace cvtele
