#include "cvtele/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cvtele {

namespace {

// Working space for the sector exponentials. Amplitude that reaches the
// artificial wall is reflected back; with the wall this far out the
// reflection is far below the truncation deficit at `cutoff`.
int working_cutoff(int cutoff) { return 2 * cutoff + 16; }

// exp(G) x on one photon-difference sector. The sector basis is
// |n0 + j + k, n0 + j> (k >= 0) or |n0 + j, n0 + j - k> ... given by the
// occupations in `n1`, `n2`. G has entries G[j+1][j] = -zeta w_j and
// G[j][j+1] = zeta* w_j; writing G = i H and gauging the constant phase of
// the sub-diagonal away gives a real symmetric tridiagonal problem.
Eigen::VectorXcd exponentiate_sector(const std::vector<int>& n1,
                                     const std::vector<int>& n2,
                                     const Eigen::VectorXcd& x,
                                     SqueezeParam zeta) {
  const int len = static_cast<int>(n1.size());
  if (len == 1 || zeta.r == 0.0) return x;

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(len);
  Eigen::VectorXd sub(len - 1);
  for (int j = 0; j + 1 < len; ++j)
    sub(j) = zeta.r * std::sqrt(double(n1[j] + 1) * double(n2[j] + 1));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success)
    throw ConvergenceError("squeeze sector eigensolve failed", 0.0);

  // H = D T D^+, D = diag(e^{i j psi}), psi = phi + pi/2.
  const double psi = zeta.phi + 0.5 * kPi;
  Eigen::VectorXcd gauge(len);
  for (int j = 0; j < len; ++j) gauge(j) = std::polar(1.0, j * psi);

  const Eigen::MatrixXd& V = eig.eigenvectors();
  Eigen::VectorXcd y = gauge.conjugate().cwiseProduct(x);
  Eigen::VectorXcd coeffs = V.transpose().cast<cplx>() * y;
  for (int j = 0; j < len; ++j) coeffs(j) *= std::polar(1.0, eig.eigenvalues()(j));
  y = V.cast<cplx>() * coeffs;
  return gauge.cwiseProduct(y);
}

double deficit_of(double kept, double total) {
  return std::max(0.0, 1.0 - kept / total);
}

}  // namespace

FockState apply_two_mode_squeeze(const FockState& state, SqueezeParam zeta,
                                 int cutoff, double max_deficit) {
  if (state.num_modes() != 2)
    throw DomainError("two-mode squeeze needs a two-mode state");
  if (cutoff < 1) throw DomainError("squeeze output cutoff must be positive");
  zeta = SqueezeParam::make(zeta.r, zeta.phi);

  const double input_norm2 = state.norm_squared();
  if (input_norm2 <= 0.0) throw DomainError("cannot squeeze the zero state");

  const int W = std::max({working_cutoff(cutoff), state.cutoff(0), state.cutoff(1)});
  const FockState work = state.resized({W, W});
  auto in = work.as_matrix();

  FockState out({cutoff, cutoff});
  auto res = out.as_matrix();

  std::vector<int> n1, n2;
  for (int k = -W; k <= W; ++k) {
    n1.clear();
    n2.clear();
    for (int b = std::max(0, -k); b + k <= W && b <= W; ++b) {
      n1.push_back(b + k);
      n2.push_back(b);
    }
    const int len = static_cast<int>(n1.size());
    Eigen::VectorXcd x(len);
    bool any = false;
    for (int j = 0; j < len; ++j) {
      x(j) = in(n1[j], n2[j]);
      any = any || x(j) != cplx{};
    }
    if (!any) continue;
    const Eigen::VectorXcd y = exponentiate_sector(n1, n2, x, zeta);
    for (int j = 0; j < len; ++j) {
      if (n1[j] <= cutoff && n2[j] <= cutoff) res(n1[j], n2[j]) = y(j);
    }
  }

  const double fresh = deficit_of(out.norm_squared(), input_norm2);
  const double total = 1.0 - (1.0 - state.norm_deficit()) * (1.0 - fresh);
  if (total > max_deficit) {
    throw ConvergenceError("two-mode squeeze: norm deficit " +
                               std::to_string(total) + " at cutoff " +
                               std::to_string(cutoff),
                           total);
  }
  out.normalize();
  out.set_norm_deficit(total);
  return out;
}

FockState build_resource_at(const ResourceSpec& spec, int cutoff) {
  spec.validate();
  if (cutoff < 2) throw DomainError("resource cutoff must be at least 2");
  const auto seed = seed_coefficients(spec);
  FockState psi0({1, 1});
  psi0.at({0, 0}) = seed[0];
  psi0.at({1, 1}) = seed[1];
  return apply_two_mode_squeeze(psi0, spec.zeta, cutoff,
                                std::numeric_limits<double>::infinity());
}

namespace {

template <class Builder>
FockState escalate(Builder&& build, int cutoff, TruncationPolicy policy,
                   const char* what) {
  int n = std::min(cutoff, policy.cap);
  while (true) {
    FockState s = build(n);
    if (s.norm_deficit() < policy.tolerance) return s;
    if (n >= policy.cap) {
      throw ConvergenceError(std::string(what) + ": norm deficit " +
                                 std::to_string(s.norm_deficit()) +
                                 " still above tolerance at cutoff cap " +
                                 std::to_string(policy.cap),
                             s.norm_deficit());
    }
    n = std::min(2 * n, policy.cap);
  }
}

}  // namespace

FockState build_resource(const ResourceSpec& spec, int cutoff,
                         TruncationPolicy policy) {
  if (cutoff < 2) throw DomainError("resource cutoff must be at least 2");
  return escalate([&](int n) { return build_resource_at(spec, n); }, cutoff,
                  policy, "build_resource");
}

namespace {

// Unnormalized single-mode S(eps)|0> amplitudes up to n_max, exact.
std::vector<cplx> squeezed_vacuum_amplitudes(SqueezeParam sq, int n_max) {
  std::vector<cplx> a(n_max + 1, cplx{});
  a[0] = 1.0 / std::sqrt(std::cosh(sq.r));
  const cplx ratio = -sq.phase() * std::tanh(sq.r);
  for (int n = 2; n <= n_max; n += 2) {
    // sqrt((2m)!)/(2^m m!) recursion with m = n/2
    const int m = n / 2;
    a[n] = a[n - 2] * ratio * std::sqrt(double(n) * double(n - 1)) / (2.0 * m);
  }
  return a;
}

std::vector<cplx> coherent_amplitudes(cplx beta, int n_max) {
  std::vector<cplx> a(n_max + 1);
  a[0] = std::exp(-0.5 * std::norm(beta));
  for (int n = 1; n <= n_max; ++n) a[n] = a[n - 1] * beta / std::sqrt(double(n));
  return a;
}

}  // namespace

FockState build_input_at(const InputSpec& spec, int cutoff) {
  spec.validate();
  if (cutoff < 1) throw DomainError("input cutoff must be at least 1");
  FockState s({cutoff});
  auto amps = s.amplitudes();
  switch (spec.family) {
    case InputFamily::Coherent: {
      const auto a = coherent_amplitudes(*spec.beta, cutoff);
      std::copy(a.begin(), a.end(), amps.begin());
      break;
    }
    case InputFamily::SqueezedVacuum: {
      const auto a = squeezed_vacuum_amplitudes(*spec.squeeze, cutoff);
      std::copy(a.begin(), a.end(), amps.begin());
      break;
    }
    case InputFamily::Fock1:
      amps[1] = 1.0;
      break;
    case InputFamily::PhotonAddedCoherent: {
      const auto a = coherent_amplitudes(*spec.beta, cutoff);
      const double norm = 1.0 / std::sqrt(1.0 + std::norm(*spec.beta));
      for (int n = 1; n <= cutoff; ++n) amps[n] = norm * std::sqrt(double(n)) * a[n - 1];
      break;
    }
    case InputFamily::SqueezedFock1: {
      // S a+ S+ = cosh s a+ + e^{-i varphi} sinh s a
      const SqueezeParam sq = *spec.squeeze;
      const auto a = squeezed_vacuum_amplitudes(sq, cutoff + 1);
      const double c = std::cosh(sq.r);
      const cplx s = std::conj(sq.phase()) * std::sinh(sq.r);
      for (int n = 0; n <= cutoff; ++n) {
        cplx v = s * std::sqrt(double(n + 1)) * a[n + 1];
        if (n > 0) v += c * std::sqrt(double(n)) * a[n - 1];
        amps[n] = v;
      }
      break;
    }
  }
  const double deficit = std::max(0.0, 1.0 - s.norm_squared());
  s.normalize();
  s.set_norm_deficit(deficit);
  return s;
}

FockState build_input(const InputSpec& spec, int cutoff, TruncationPolicy policy) {
  if (cutoff < 1) throw DomainError("input cutoff must be at least 1");
  return escalate([&](int n) { return build_input_at(spec, n); }, cutoff, policy,
                  "build_input");
}

std::vector<cplx> pair_amplitudes(const ResourceSpec& spec, int n_max) {
  spec.validate();
  if (n_max < 0) throw DomainError("negative pair cutoff");
  const auto seed = seed_coefficients(spec);
  const double c = std::cosh(spec.zeta.r);
  const double s = std::sinh(spec.zeta.r);
  const cplx e = spec.zeta.phase();
  const cplx lambda = -e * std::tanh(spec.zeta.r);

  // Twin-beam amplitudes A_n = lambda^n / cosh r, one past n_max.
  std::vector<cplx> tb(n_max + 2);
  tb[0] = 1.0 / c;
  for (int n = 1; n <= n_max + 1; ++n) tb[n] = tb[n - 1] * lambda;

  std::vector<cplx> out(n_max + 1);
  const cplx ec = std::conj(e);
  for (int m = 0; m <= n_max; ++m) {
    // S|1,1> = (c a1+ + e^{-i phi} s a2)(c a2+ + e^{-i phi} s a1) S|0,0>
    cplx b = c * s * ec * double(2 * m + 1) * tb[m] +
             ec * ec * s * s * double(m + 1) * tb[m + 1];
    if (m > 0) b += c * c * double(m) * tb[m - 1];
    out[m] = seed[0] * tb[m] + seed[1] * b;
  }
  return out;
}

int pair_cutoff(double r, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("pair cutoff tolerance must be positive");
  const double t = std::tanh(r);
  if (t < 1e-6) return 8;
  // Tail |t|^{2n} times the (n + 2)^2 cosh^4 r growth of the |1,1> branch.
  const double log_t2 = 2.0 * std::log(t);
  const double log_c4 = 4.0 * std::log(std::cosh(r));
  double n = std::log(tolerance) / log_t2;
  for (int it = 0; it < 8; ++it)
    n = (std::log(tolerance) - log_c4 - 2.0 * std::log(n + 2.0)) / log_t2;
  return static_cast<int>(std::ceil(n)) + 8;
}

cplx overlap(const FockState& a, const FockState& b) {
  if (a.num_modes() != b.num_modes())
    throw DomainError("overlap of states with different mode counts");
  if (a.cutoffs() == b.cutoffs()) {
    cplx sum = 0.0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) sum += std::conj(x[i]) * y[i];
    return sum;
  }
  std::vector<int> cut(a.num_modes());
  for (int k = 0; k < a.num_modes(); ++k) cut[k] = std::max(a.cutoff(k), b.cutoff(k));
  return overlap(a.resized(cut), b.resized(cut));
}

Eigen::VectorXd reduced_spectrum(const FockState& state) {
  if (state.num_modes() != 2)
    throw DomainError("reduced entropy needs a two-mode state");
  const auto psi = state.as_matrix();
  const Eigen::MatrixXcd rho = psi * psi.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success)
    throw ConvergenceError("reduced density matrix eigensolve failed", 0.0);
  const Eigen::VectorXd ev = eig.eigenvalues();
  if (ev.minCoeff() < -1e-12)
    throw ConvergenceError("reduced density matrix is not positive semidefinite",
                           ev.minCoeff());
  return ev;
}

double reduced_entropy(const FockState& state) {
  const Eigen::VectorXd ev = reduced_spectrum(state);
  double entropy = 0.0;
  for (double p : ev) {
    if (p > 1e-14) entropy -= p * std::log(p);
  }
  return std::max(0.0, entropy);
}

FockState annihilate(const FockState& state, int mode) {
  if (mode < 0 || mode >= state.num_modes()) throw DomainError("mode out of range");
  FockState out(state.cutoffs());
  const int m = state.num_modes();
  std::vector<int> occ(m, 0);
  auto src = state.amplitudes();
  auto dst = out.amplitudes();
  // Iterate over all occupations with occ[mode] >= 1.
  const std::size_t total = state.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int k = m - 1; k >= 0; --k) {
      occ[k] = static_cast<int>(rem % state.dim(k));
      rem /= state.dim(k);
    }
    if (occ[mode] == 0 || src[flat] == cplx{}) continue;
    const double amp = std::sqrt(double(occ[mode]));
    --occ[mode];
    dst[out.index(occ)] += amp * src[flat];
  }
  out.set_norm_deficit(state.norm_deficit());
  return out;
}

FockState create(const FockState& state, int mode) {
  if (mode < 0 || mode >= state.num_modes()) throw DomainError("mode out of range");
  std::vector<int> cut = state.cutoffs();
  ++cut[mode];
  FockState out(cut);
  const int m = state.num_modes();
  std::vector<int> occ(m, 0);
  auto src = state.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    std::size_t rem = flat;
    for (int k = m - 1; k >= 0; --k) {
      occ[k] = static_cast<int>(rem % state.dim(k));
      rem /= state.dim(k);
    }
    if (src[flat] == cplx{}) continue;
    const double amp = std::sqrt(double(occ[mode] + 1));
    ++occ[mode];
    dst[out.index(occ)] += amp * src[flat];
  }
  out.set_norm_deficit(state.norm_deficit());
  return out;
}

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

QuadratureMoments covariance_matrix(const FockState& state) {
  if (state.num_modes() != 2)
    throw DomainError("covariance matrix needs a two-mode state");
  const FockState a[2] = {annihilate(state, 0), annihilate(state, 1)};

  cplx first[2];        // <a_i>
  cplx pair[2][2];      // <a_i a_j>
  cplx number[2][2];    // <a_i+ a_j>
  for (int i = 0; i < 2; ++i) {
    first[i] = overlap(state, a[i]);
    for (int j = 0; j < 2; ++j) {
      pair[i][j] = overlap(state, annihilate(a[j], i));
      number[i][j] = overlap(a[i], a[j]);
    }
  }

  // R_a = sum_i (u_ai a_i + conj(u_ai) a_i+), with x = (a + a+)/sqrt2 and
  // p = (a - a+)/(i sqrt2).
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Matrix<cplx, 4, 2> u = Eigen::Matrix<cplx, 4, 2>::Zero();
  u(0, 0) = h;
  u(1, 0) = cplx(0.0, -h);
  u(2, 1) = h;
  u(3, 1) = cplx(0.0, -h);

  QuadratureMoments out;
  for (int p = 0; p < 4; ++p) {
    cplx m = 0.0;
    for (int i = 0; i < 2; ++i) m += u(p, i) * first[i] + std::conj(u(p, i)) * std::conj(first[i]);
    out.mean(p) = m.real();
  }
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      cplx m = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const cplx a_adag = number[j][i] + (i == j ? 1.0 : 0.0);  // <a_i a_j+>
          const cplx adag_adag = std::conj(pair[j][i]);              // <a_i+ a_j+>
          m += u(p, i) * u(q, j) * pair[i][j];
          m += u(p, i) * std::conj(u(q, j)) * a_adag;
          m += std::conj(u(p, i)) * u(q, j) * number[i][j];
          m += std::conj(u(p, i)) * std::conj(u(q, j)) * adag_adag;
        }
      }
      out.covariance(p, q) = m.real() - out.mean(p) * out.mean(q);
    }
  }
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();

  const Eigen::Matrix4cd bound =
      out.covariance.cast<cplx>() + cplx(0.0, 0.5) * symplectic_form().cast<cplx>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(bound, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-9)
    throw ConvergenceError("covariance matrix violates the uncertainty relation",
                           eig.eigenvalues().minCoeff());
  return out;
}

}  // namespace cvtele
