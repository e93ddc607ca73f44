#include "cvtele/types.hpp"

#include <cmath>

namespace cvtele {

namespace {

double reduce_phase(double phi) {
  double p = std::fmod(phi, 2.0 * kPi);
  if (p < 0.0) p += 2.0 * kPi;
  // fmod can land exactly on 2 pi after the shift for tiny negative inputs.
  if (p >= 2.0 * kPi) p = 0.0;
  return p;
}

}  // namespace

SqueezeParam SqueezeParam::make(double r, double phi) {
  if (!std::isfinite(r) || r < 0.0)
    throw DomainError("squeezing modulus must be finite and non-negative");
  if (!std::isfinite(phi)) throw DomainError("squeezing phase must be finite");
  return SqueezeParam{r, reduce_phase(phi)};
}

ResourceSpec ResourceSpec::twin_beam(double r, double phi) {
  return make(ResourceFamily::TwinBeam, r, phi);
}
ResourceSpec ResourceSpec::squeezed_number(double r, double phi) {
  return make(ResourceFamily::SqueezedNumber11, r, phi);
}
ResourceSpec ResourceSpec::photon_added(double r, double phi) {
  return make(ResourceFamily::PhotonAdded11, r, phi);
}
ResourceSpec ResourceSpec::photon_subtracted(double r, double phi) {
  return make(ResourceFamily::PhotonSubtracted11, r, phi);
}
ResourceSpec ResourceSpec::squeezed_bell(double r, double phi, double delta,
                                         double theta) {
  return make(ResourceFamily::SqueezedBell, r, phi, delta, theta);
}

ResourceSpec ResourceSpec::make(ResourceFamily family, double r, double phi,
                                double delta, double theta) {
  ResourceSpec spec;
  spec.family = family;
  spec.zeta = SqueezeParam::make(r, phi);
  if (family == ResourceFamily::SqueezedBell) {
    if (!std::isfinite(delta) || !std::isfinite(theta))
      throw DomainError("Bell angles must be finite");
    spec.bell = BellAngles{delta, theta};
  }
  return spec;
}

ResourceSpec ResourceSpec::with_squeezing(double r, double phi) const {
  ResourceSpec copy = *this;
  copy.zeta = SqueezeParam::make(r, phi);
  return copy;
}

void ResourceSpec::validate() const {
  (void)SqueezeParam::make(zeta.r, zeta.phi);
  const bool is_bell = family == ResourceFamily::SqueezedBell;
  if (is_bell != bell.has_value())
    throw DomainError("Bell angles are required for, and only for, SqueezedBell");
}

InputSpec InputSpec::coherent(cplx beta) {
  InputSpec in;
  in.family = InputFamily::Coherent;
  in.beta = beta;
  in.validate();
  return in;
}

InputSpec InputSpec::squeezed_vacuum(double s, double varphi) {
  InputSpec in;
  in.family = InputFamily::SqueezedVacuum;
  in.squeeze = SqueezeParam::make(s, varphi);
  return in;
}

InputSpec InputSpec::fock1() {
  InputSpec in;
  in.family = InputFamily::Fock1;
  return in;
}

InputSpec InputSpec::photon_added_coherent(cplx beta) {
  InputSpec in;
  in.family = InputFamily::PhotonAddedCoherent;
  in.beta = beta;
  in.validate();
  return in;
}

InputSpec InputSpec::squeezed_fock1(double s, double varphi) {
  InputSpec in;
  in.family = InputFamily::SqueezedFock1;
  in.squeeze = SqueezeParam::make(s, varphi);
  return in;
}

void InputSpec::validate() const {
  const bool wants_beta = family == InputFamily::Coherent ||
                          family == InputFamily::PhotonAddedCoherent;
  const bool wants_squeeze = family == InputFamily::SqueezedVacuum ||
                             family == InputFamily::SqueezedFock1;
  if (wants_beta != beta.has_value())
    throw DomainError("coherent amplitude given for the wrong input family");
  if (wants_squeeze != squeeze.has_value())
    throw DomainError("input squeezing given for the wrong input family");
  if (beta && (!std::isfinite(beta->real()) || !std::isfinite(beta->imag())))
    throw DomainError("coherent amplitude must be finite");
  if (squeeze) (void)SqueezeParam::make(squeeze->r, squeeze->phi);
}

std::array<cplx, 2> seed_coefficients(const ResourceSpec& spec) {
  spec.validate();
  const double t = std::tanh(spec.zeta.r);
  const cplx e = spec.zeta.phase();
  const double norm = 1.0 / std::sqrt(1.0 + t * t);
  switch (spec.family) {
    case ResourceFamily::TwinBeam:
      return {1.0, 0.0};
    case ResourceFamily::SqueezedNumber11:
      return {0.0, 1.0};
    case ResourceFamily::PhotonAdded11:
      return {-t * norm, e * norm};
    case ResourceFamily::PhotonSubtracted11:
      return {-norm, e * t * norm};
    case ResourceFamily::SqueezedBell:
      return {std::cos(spec.bell->delta),
              std::polar(1.0, spec.bell->theta) * std::sin(spec.bell->delta)};
  }
  throw DomainError("unknown resource family");
}

std::string_view to_string(ResourceFamily family) {
  switch (family) {
    case ResourceFamily::TwinBeam: return "twin_beam";
    case ResourceFamily::SqueezedNumber11: return "squeezed_number";
    case ResourceFamily::PhotonAdded11: return "photon_added";
    case ResourceFamily::PhotonSubtracted11: return "photon_subtracted";
    case ResourceFamily::SqueezedBell: return "squeezed_bell";
  }
  return "unknown";
}

std::string_view to_string(InputFamily family) {
  switch (family) {
    case InputFamily::Coherent: return "coherent";
    case InputFamily::SqueezedVacuum: return "squeezed_vacuum";
    case InputFamily::Fock1: return "fock1";
    case InputFamily::PhotonAddedCoherent: return "photon_added_coherent";
    case InputFamily::SqueezedFock1: return "squeezed_fock1";
  }
  return "unknown";
}

ResourceFamily parse_resource_family(std::string_view name) {
  for (auto f : {ResourceFamily::TwinBeam, ResourceFamily::SqueezedNumber11,
                 ResourceFamily::PhotonAdded11,
                 ResourceFamily::PhotonSubtracted11,
                 ResourceFamily::SqueezedBell}) {
    if (to_string(f) == name) return f;
  }
  if (name == "tb") return ResourceFamily::TwinBeam;
  if (name == "sn") return ResourceFamily::SqueezedNumber11;
  if (name == "pas") return ResourceFamily::PhotonAdded11;
  if (name == "pss") return ResourceFamily::PhotonSubtracted11;
  if (name == "sb") return ResourceFamily::SqueezedBell;
  throw DomainError("unknown resource family '" + std::string(name) + "'");
}

InputFamily parse_input_family(std::string_view name) {
  for (auto f : {InputFamily::Coherent, InputFamily::SqueezedVacuum,
                 InputFamily::Fock1, InputFamily::PhotonAddedCoherent,
                 InputFamily::SqueezedFock1}) {
    if (to_string(f) == name) return f;
  }
  if (name == "pac") return InputFamily::PhotonAddedCoherent;
  if (name == "squeezed") return InputFamily::SqueezedVacuum;
  if (name == "squeezed_fock") return InputFamily::SqueezedFock1;
  throw DomainError("unknown input family '" + std::string(name) + "'");
}

double photon_subtracted_bell_angle(double r) {
  return std::atan(std::tanh(r));
}

}  // namespace cvtele
