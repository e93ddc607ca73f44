#include "cvtele/charfunc.hpp"

#include <cmath>
#include <iostream>

#include "cvtele/moment_engine.hpp"

namespace cvtele {

namespace {

Polynomial monomial(int num_vars, std::initializer_list<int> powers, cplx coef) {
  Polynomial::Exponent e{};
  int i = 0;
  for (int p : powers) e[i++] = static_cast<std::uint8_t>(p);
  Polynomial out(num_vars);
  out.add_term(e, coef);
  return out;
}

// 1 - |xi_k|^2 over 2 * modes variables.
Polynomial one_minus_norm(int num_vars, int mode) {
  Polynomial p = Polynomial::constant(num_vars, 1.0);
  Polynomial::Exponent e{};
  e[var_alpha(mode)] = 1;
  e[var_conj(mode)] = 1;
  p.add_term(e, -1.0);
  return p;
}

// Real map v_xi = A v_alpha for xi = cosh x a + e^{i phase} sinh x (swap a)*,
// where `swap` exchanges the modes (two-mode squeezer) or not (single mode).
Eigen::MatrixXd bogoliubov_map(int modes, double r, double phase, bool swap) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(modes, modes) * std::cosh(r);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(modes, modes);
  const cplx s = std::polar(std::sinh(r), phase);
  for (int k = 0; k < modes; ++k) b(k, swap ? modes - 1 - k : k) = s;
  return complex_linear_to_real(a, b);
}

GaussPolyCF in_xi_coordinates(int modes, Polynomial poly) {
  GaussPolyCF cf = GaussPolyCF::vacuum(modes);
  cf.poly = std::move(poly);
  return cf;
}

// Per-mode block sqrt2 [[0, 1], [-1, 0]]: the displacement exponent is
// i eta^T R with eta = Lambda v.
Eigen::Matrix4d lambda_map() {
  Eigen::Matrix4d L = Eigen::Matrix4d::Zero();
  const double s = std::sqrt(2.0);
  for (int k = 0; k < 2; ++k) {
    L(2 * k, 2 * k + 1) = s;
    L(2 * k + 1, 2 * k) = -s;
  }
  return L;
}

}  // namespace

GaussPolyCF cf_resource(const ResourceSpec& spec) {
  spec.validate();
  const auto [a, b] = seed_coefficients(spec);
  constexpr int nv = 4;

  // <psi0| D(xi1) D(xi2) |psi0> / e^{-(|xi1|^2 + |xi2|^2)/2} for
  // psi0 = a|0,0> + b|1,1>.
  Polynomial p = Polynomial::constant(nv, std::norm(a));
  if (b != cplx{}) {
    p += std::norm(b) * (one_minus_norm(nv, 0) * one_minus_norm(nv, 1));
    p += monomial(nv, {0, 1, 0, 1}, std::conj(a) * b);
    p += monomial(nv, {1, 0, 1, 0}, a * std::conj(b));
  }
  p.prune();
  const auto xi = in_xi_coordinates(2, std::move(p));
  return pullback(xi, bogoliubov_map(2, spec.zeta.r, spec.zeta.phi, true));
}

GaussPolyCF cf_input(const InputSpec& spec) {
  spec.validate();
  constexpr int nv = 2;
  switch (spec.family) {
    case InputFamily::Coherent: {
      GaussPolyCF cf = GaussPolyCF::vacuum(1);
      const cplx beta = *spec.beta;
      // 2i Im[a beta*] = 2i (y Re beta - x Im beta)
      cf.linear(0) = cplx(0.0, -2.0 * beta.imag());
      cf.linear(1) = cplx(0.0, 2.0 * beta.real());
      return cf;
    }
    case InputFamily::SqueezedVacuum: {
      const SqueezeParam sq = *spec.squeeze;
      const auto xi = in_xi_coordinates(1, Polynomial::constant(nv, 1.0));
      return pullback(xi, bogoliubov_map(1, sq.r, sq.phi, false));
    }
    case InputFamily::Fock1:
      return in_xi_coordinates(1, one_minus_norm(nv, 0));
    case InputFamily::PhotonAddedCoherent: {
      // Coherent factor times (1 + |b|^2 - |a|^2 + a b* - a* b) / (1 + |b|^2).
      // The linear phase is 2i Im[a b*], as for the coherent state; the
      // Fock-space oracle confirms this.
      GaussPolyCF cf = cf_input(InputSpec::coherent(*spec.beta));
      const cplx beta = *spec.beta;
      const double n = 1.0 + std::norm(beta);
      Polynomial p = one_minus_norm(nv, 0);
      p += Polynomial::constant(nv, std::norm(beta));
      p += monomial(nv, {1, 0}, std::conj(beta));
      p += monomial(nv, {0, 1}, -beta);
      cf.poly = p * cplx(1.0 / n);
      return cf;
    }
    case InputFamily::SqueezedFock1: {
      const SqueezeParam sq = *spec.squeeze;
      const auto xi = in_xi_coordinates(1, one_minus_norm(nv, 0));
      return pullback(xi, bogoliubov_map(1, sq.r, sq.phi, false));
    }
  }
  throw DomainError("unknown input family");
}

Eigen::MatrixXcd displacement_matrix(cplx alpha, int cutoff) {
  if (cutoff < 0) throw DomainError("negative displacement cutoff");
  const int d = cutoff + 1;
  Eigen::MatrixXcd D(d, d);
  const cplx minus_conj = -std::conj(alpha);
  D(0, 0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < d; ++n) D(0, n) = D(0, n - 1) * minus_conj / std::sqrt(double(n));
  for (int m = 1; m < d; ++m) {
    const double inv = 1.0 / std::sqrt(double(m));
    D(m, 0) = alpha * D(m - 1, 0) * inv;
    for (int n = 1; n < d; ++n)
      D(m, n) = (std::sqrt(double(n)) * D(m - 1, n - 1) + alpha * D(m - 1, n)) * inv;
  }
  return D;
}

cplx cf_from_fock(const FockState& state, std::span<const cplx> point) {
  if (static_cast<int>(point.size()) != state.num_modes())
    throw DomainError("oracle point has the wrong number of modes");
  if (state.norm_deficit() > 1e-8) {
    std::clog << "warning: Fock oracle state carries truncation deficit "
              << state.norm_deficit() << "\n";
  }
  const auto amps = state.amplitudes();
  if (state.num_modes() == 1) {
    const Eigen::Map<const Eigen::VectorXcd> psi(amps.data(), state.dim(0));
    const Eigen::MatrixXcd D = displacement_matrix(point[0], state.cutoff(0));
    return psi.dot(D * psi);
  }
  if (state.num_modes() == 2) {
    const auto psi = state.as_matrix();
    const Eigen::MatrixXcd D1 = displacement_matrix(point[0], state.cutoff(0));
    const Eigen::MatrixXcd D2 = displacement_matrix(point[1], state.cutoff(1));
    const Eigen::MatrixXcd moved = D1 * psi * D2.transpose();
    return (psi.conjugate().cwiseProduct(moved)).sum();
  }
  throw DomainError("Fock oracle characteristic function supports 1 or 2 modes");
}

QuadratureMoments moments_from_cf(const GaussPolyCF& cf) {
  if (cf.num_modes != 2) throw DomainError("moments_from_cf needs a two-mode CF");
  const OriginJet jet = jet_at_origin(cf);
  if (std::abs(jet.value - 1.0) > 1e-9)
    throw DomainError("characteristic function is not normalized at the origin");
  const Eigen::Matrix4d L = lambda_map();
  const Eigen::Matrix4d Linv = L.transpose() / 2.0;

  // grad chi(0) = i L^T <R>, Hess chi(0) = -L^T M L with M the symmetrized
  // second moments.
  QuadratureMoments out;
  const Eigen::Vector4cd mean = cplx(0.0, -1.0) * (Linv.transpose().cast<cplx>() * jet.gradient);
  out.mean = mean.real();
  const Eigen::Matrix4cd M = -(Linv.transpose().cast<cplx>() * jet.hessian * Linv.cast<cplx>());
  out.covariance = M.real() - out.mean * out.mean.transpose();
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

GaussPolyCF gaussian_cf(const QuadratureMoments& moments) {
  const Eigen::Matrix4d L = lambda_map();
  GaussPolyCF cf = GaussPolyCF::unit(2);
  cf.quad = L.transpose() * moments.covariance * L;
  cf.quad = 0.5 * (cf.quad + cf.quad.transpose()).eval();
  cf.linear = cplx(0.0, 1.0) * (L.transpose() * moments.mean).cast<cplx>();
  return cf;
}

}  // namespace cvtele
