#include "cvtele/fock_state.hpp"

#include <cmath>
#include <numeric>

namespace cvtele {

FockState::FockState(std::vector<int> cutoffs) : cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty() || cutoffs_.size() > 3)
    throw DomainError("FockState supports 1 to 3 modes");
  std::size_t total = 1;
  strides_.assign(cutoffs_.size(), 1);
  for (int k = static_cast<int>(cutoffs_.size()) - 1; k >= 0; --k) {
    if (cutoffs_[k] < 0) throw DomainError("negative Fock cutoff");
    strides_[k] = total;
    total *= static_cast<std::size_t>(cutoffs_[k] + 1);
  }
  amps_.assign(total, cplx{});
}

FockState FockState::basis(std::vector<int> cutoffs, std::vector<int> occupation) {
  FockState s(std::move(cutoffs));
  if (occupation.size() != s.cutoffs_.size())
    throw DomainError("basis occupation has the wrong number of modes");
  s.amps_[s.index(occupation)] = 1.0;
  return s;
}

std::size_t FockState::index(std::span<const int> occupation) const {
  if (occupation.size() != cutoffs_.size())
    throw DomainError("occupation has the wrong number of modes");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < cutoffs_.size(); ++k) {
    if (occupation[k] < 0 || occupation[k] > cutoffs_[k])
      throw DomainError("occupation outside the truncated space");
    idx += strides_[k] * static_cast<std::size_t>(occupation[k]);
  }
  return idx;
}

cplx& FockState::at(std::initializer_list<int> occupation) {
  return amps_[index(std::span<const int>(occupation.begin(), occupation.size()))];
}

cplx FockState::at(std::initializer_list<int> occupation) const {
  return amps_[index(std::span<const int>(occupation.begin(), occupation.size()))];
}

double FockState::norm_squared() const {
  return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                         [](double acc, cplx a) { return acc + std::norm(a); });
}

void FockState::normalize() {
  const double n2 = norm_squared();
  if (n2 <= 0.0) throw DomainError("cannot normalize the zero state");
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amps_) a *= scale;
}

FockState FockState::resized(std::vector<int> cutoffs) const {
  if (cutoffs.size() != cutoffs_.size())
    throw DomainError("resize must keep the number of modes");
  FockState out(cutoffs);
  out.norm_deficit_ = norm_deficit_;
  std::vector<int> occ(cutoffs_.size(), 0);
  // Walk every stored index and copy what fits.
  for (std::size_t flat = 0; flat < amps_.size(); ++flat) {
    std::size_t rem = flat;
    bool fits = true;
    for (std::size_t k = 0; k < cutoffs_.size(); ++k) {
      occ[k] = static_cast<int>(rem / strides_[k]);
      rem %= strides_[k];
      if (occ[k] > cutoffs[k]) fits = false;
    }
    if (fits && amps_[flat] != cplx{}) out.amps_[out.index(occ)] = amps_[flat];
  }
  return out;
}

Eigen::Map<const FockState::RowMatrix> FockState::as_matrix() const {
  if (num_modes() != 2) throw DomainError("matrix view needs a two-mode state");
  return Eigen::Map<const RowMatrix>(amps_.data(), dim(0), dim(1));
}

Eigen::Map<FockState::RowMatrix> FockState::as_matrix() {
  if (num_modes() != 2) throw DomainError("matrix view needs a two-mode state");
  return Eigen::Map<RowMatrix>(amps_.data(), dim(0), dim(1));
}

}  // namespace cvtele
