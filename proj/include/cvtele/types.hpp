#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cvtele {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Raised when a truncated computation cannot reach its tolerance.
/// Carries the best value achieved (norm deficit, residual, or estimate).
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Invalid parameter combination or precondition violation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Complex squeezing zeta = r e^{i phi}.
struct SqueezeParam {
  double r = 0.0;
  double phi = 0.0;

  /// Validates r (finite, >= 0) and reduces phi to [0, 2 pi).
  static SqueezeParam make(double r, double phi);
  cplx value() const { return std::polar(r, phi); }
  cplx phase() const { return std::polar(1.0, phi); }
};

enum class ResourceFamily {
  TwinBeam,
  SqueezedNumber11,
  PhotonAdded11,
  PhotonSubtracted11,
  SqueezedBell,
};

struct BellAngles {
  double delta = 0.0;
  double theta = 0.0;
};

/// Two-mode resource: a family tag plus its parameters. Angles are present
/// exactly when the family is SqueezedBell; use the factories.
struct ResourceSpec {
  ResourceFamily family = ResourceFamily::TwinBeam;
  SqueezeParam zeta;
  std::optional<BellAngles> bell;

  static ResourceSpec twin_beam(double r, double phi);
  static ResourceSpec squeezed_number(double r, double phi);
  static ResourceSpec photon_added(double r, double phi);
  static ResourceSpec photon_subtracted(double r, double phi);
  static ResourceSpec squeezed_bell(double r, double phi, double delta,
                                    double theta);
  static ResourceSpec make(ResourceFamily family, double r, double phi,
                           double delta = 0.0, double theta = 0.0);

  /// Same family and angles with a different squeezing.
  ResourceSpec with_squeezing(double r, double phi) const;
  void validate() const;
};

enum class InputFamily {
  Coherent,
  SqueezedVacuum,
  Fock1,
  PhotonAddedCoherent,
  SqueezedFock1,
};

/// Single-mode input to be teleported. `beta` is used by the coherent
/// families, `squeeze` (s, varphi) by the squeezed ones.
struct InputSpec {
  InputFamily family = InputFamily::Coherent;
  std::optional<cplx> beta;
  std::optional<SqueezeParam> squeeze;

  static InputSpec coherent(cplx beta);
  static InputSpec squeezed_vacuum(double s, double varphi);
  static InputSpec fock1();
  static InputSpec photon_added_coherent(cplx beta);
  static InputSpec squeezed_fock1(double s, double varphi);

  void validate() const;
};

/// Coefficients (c00, c11) of the pre-squeeze superposition
/// c00|0,0> + c11|1,1> such that the resource equals S12(zeta) applied to it,
/// up to a global phase. Normalized.
std::array<cplx, 2> seed_coefficients(const ResourceSpec& spec);

std::string_view to_string(ResourceFamily family);
std::string_view to_string(InputFamily family);
ResourceFamily parse_resource_family(std::string_view name);
InputFamily parse_input_family(std::string_view name);

/// Bell angle at which a SqueezedBell state with theta = 0 and the same
/// squeezing reproduces the photon-subtracted state at phi = pi.
double photon_subtracted_bell_angle(double r);

}  // namespace cvtele
