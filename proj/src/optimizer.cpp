#include "cvtele/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "cvtele/fock_oracle.hpp"
#include "cvtele/scalar_search.hpp"
#include "cvtele/teleport.hpp"

namespace cvtele {

std::string_view to_string(OptimizationMethod method) {
  return method == OptimizationMethod::GridRefine ? "grid_refine" : "closed_form";
}

ResourceSpec squeezed_bell_at(double r, double delta, double phi, double theta) {
  return ResourceSpec::squeezed_bell(r, phi, delta, theta);
}

namespace {

double reduce_delta(double delta) {
  double d = std::fmod(delta, kPi);
  if (d < 0.0) d += kPi;
  if (d >= kPi) d -= kPi;
  return d;
}

// Wraps an angle difference of period pi into (-pi/2, pi/2].
double wrap_half(double d) {
  d = std::fmod(d, kPi);
  if (d <= -0.5 * kPi) d += kPi;
  if (d > 0.5 * kPi) d -= kPi;
  return d;
}

}  // namespace

OptimizationResult optimize_delta(const InputSpec& input, double r, double phi,
                                  double theta) {
  if (!(r >= 0.0)) throw DomainError("squeezing must be non-negative");
  auto f = [&](double delta) {
    return fidelity(input, squeezed_bell_at(r, delta, phi, theta)).value;
  };
  constexpr int kGrid = 64;
  // 64 nodes on [0, pi); the extra endpoint closes the period.
  const ScalarMax m = grid_maximize(f, 0.0, kPi, kGrid + 1);
  OptimizationResult res;
  res.delta_star = m.x;
  res.fidelity_star = m.value;
  res.method = OptimizationMethod::GridRefine;
  res.iterations = m.iterations;

  // Near a flat maximum golden section only resolves delta to about
  // sqrt(eps / curvature). F is a pure second harmonic in delta, so one
  // wide-stencil fit around the bracketed optimum pins it down linearly.
  const double fm = f(m.x - 0.25 * kPi);
  const double fp = f(m.x + 0.25 * kPi);
  const double b = m.value - 0.5 * (fm + fp);
  const double c = 0.5 * (fp - fm);
  const double step = 0.5 * std::atan2(c, b);
  // At large r the evaluation noise is comparable to the harmonic amplitude,
  // so no value gate; the fit is trusted while it stays in the bracket.
  if (std::abs(step) < kPi / kGrid) {
    res.delta_star = m.x + step;
    res.fidelity_star = f(res.delta_star);
  }
  res.iterations += 3;
  res.delta_star = reduce_delta(res.delta_star);
  return res;
}

OptimizationResult optimize_delta_harmonic(const InputSpec& input, double r,
                                           double phi, double theta) {
  if (!(r >= 0.0)) throw DomainError("squeezing must be non-negative");
  auto f = [&](double delta) {
    return fidelity(input, squeezed_bell_at(r, delta, phi, theta)).value;
  };
  const double f0 = f(0.0);
  const double f1 = f(0.25 * kPi);
  const double f2 = f(0.5 * kPi);
  const double a = 0.5 * (f0 + f2);
  const double b = 0.5 * (f0 - f2);
  const double c = f1 - a;
  OptimizationResult res;
  res.delta_star = reduce_delta(0.5 * std::atan2(c, b));
  res.fidelity_star = a + std::hypot(b, c);
  res.method = OptimizationMethod::ClosedForm;
  res.iterations = 3;
  return res;
}

double delta_closed_form(ClosedFormKind kind, double r, bool allow_limit) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("squeezing must be finite and non-negative");
  if (kind == ClosedFormKind::Coherent) return 0.5 * std::atan(1.0 + std::exp(-2.0 * r));
  if (r == 0.0) {
    if (allow_limit) return 0.25 * kPi;
    throw DomainError("Fock closed form is 0/0 at r = 0; request the limit");
  }
  // e^{-2r}(1 - e^{2r} + e^{4r} + 3e^{6r}) / (3 (e^{2r} - 1)^2), with the
  // denominator through expm1 so small r stays accurate.
  const double u = std::expm1(2.0 * r);
  const double e2 = 1.0 + u;
  if (e2 > 1e100) return 0.5 * std::atan(1.0);
  const double num = (1.0 - e2 + e2 * e2 + 3.0 * e2 * e2 * e2) / e2;
  return 0.5 * std::atan(num / (3.0 * u * u));
}

double relative_fidelity(const InputSpec& input, double r, const ResourceSpec& reference) {
  const double f_opt = optimize_delta(input, r).fidelity_star;
  const double f_ref = fidelity(input, reference.with_squeezing(r, kPi)).value;
  if (!(f_ref > 0.0)) throw DomainError("reference fidelity is not positive");
  return (f_opt - f_ref) / f_ref;
}

std::vector<SweepRow> sweep(const std::vector<InputSpec>& inputs,
                            const std::vector<ResourceSpec>& resources,
                            std::vector<double> r_grid) {
  if (inputs.empty() || resources.empty() || r_grid.empty())
    throw DomainError("sweep grids must be non-empty");
  std::sort(r_grid.begin(), r_grid.end());
  std::vector<SweepRow> rows;
  rows.reserve(inputs.size() * resources.size() * r_grid.size());
  for (const auto& in : inputs) {
    for (const auto& res : resources) {
      for (double r : r_grid) {
        SweepRow row{in, res, r, 0.0, {}};
        try {
          row.resource = res.with_squeezing(r, res.zeta.phi);
          row.fidelity = fidelity(in, row.resource).value;
        } catch (const std::exception& e) {
          row.fidelity = std::nan("");
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<Coincidence> find_coincidences(const InputSpec& input, double lo,
                                           double hi, double step) {
  if (!(hi > lo) || !(step > 0.0)) throw DomainError("bad coincidence scan range");
  auto g = [&](double r) {
    return wrap_half(optimize_delta_harmonic(input, r).delta_star -
                     photon_subtracted_bell_angle(r));
  };

  std::vector<Coincidence> out;
  const int n = static_cast<int>(std::round((hi - lo) / step));
  double r0 = lo;
  double g0 = g(r0);
  for (int i = 1; i <= n; ++i) {
    const double r1 = lo + i * step;
    const double g1 = g(r1);
    // A jump across the wrap boundary is not a zero.
    if (g0 * g1 <= 0.0 && std::abs(g0 - g1) < 0.5 * kPi) {
      double a = r0, b = r1, ga = g0;
      for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
        const double m = 0.5 * (a + b);
        const double gm = g(m);
        if (ga * gm <= 0.0) {
          b = m;
        } else {
          a = m;
          ga = gm;
        }
      }
      Coincidence c;
      c.r_bar = 0.5 * (a + b);
      const OptimizationResult opt = optimize_delta(input, c.r_bar);
      c.delta_star = opt.delta_star;
      const ResourceSpec pss = ResourceSpec::photon_subtracted(c.r_bar, kPi);
      c.relative_fidelity =
          (opt.fidelity_star - fidelity(input, pss).value) / fidelity(input, pss).value;
      const int cut = pair_cutoff(c.r_bar, 1e-20);
      const auto sb_amp = pair_amplitudes(squeezed_bell_at(c.r_bar, opt.delta_star), cut);
      const auto pss_amp = pair_amplitudes(pss, cut);
      cplx ov = 0.0;
      for (int k = 0; k <= cut; ++k) ov += std::conj(sb_amp[k]) * pss_amp[k];
      c.state_overlap = std::norm(ov);
      if (out.empty() || std::abs(out.back().r_bar - c.r_bar) > 1e-9) out.push_back(c);
    }
    r0 = r1;
    g0 = g1;
  }
  return out;
}

}  // namespace cvtele
