#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cvtele/types.hpp"

namespace cvtele {

/// Truncated Fock-basis state of 1 to 3 modes.
///
/// Mode k holds photon numbers 0..cutoff(k). Amplitudes are stored row-major
/// with mode 0 slowest. `norm_deficit` is 1 - sum |amplitude|^2 as measured
/// before the state was renormalized; builders set it, normalize() leaves it
/// alone.
class FockState {
 public:
  using RowMatrix =
      Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  FockState() = default;
  explicit FockState(std::vector<int> cutoffs);

  static FockState basis(std::vector<int> cutoffs, std::vector<int> occupation);

  int num_modes() const { return static_cast<int>(cutoffs_.size()); }
  int cutoff(int mode) const { return cutoffs_.at(mode); }
  const std::vector<int>& cutoffs() const { return cutoffs_; }
  int dim(int mode) const { return cutoffs_.at(mode) + 1; }
  std::size_t size() const { return amps_.size(); }

  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }

  std::size_t index(std::span<const int> occupation) const;
  cplx& at(std::initializer_list<int> occupation);
  cplx at(std::initializer_list<int> occupation) const;

  double norm_squared() const;
  double norm_deficit() const { return norm_deficit_; }
  void set_norm_deficit(double deficit) { norm_deficit_ = deficit; }
  /// Scales to unit norm. Throws DomainError on a zero state.
  void normalize();

  /// Zero-padded (or truncated) copy with new cutoffs.
  FockState resized(std::vector<int> cutoffs) const;

  /// Two-mode amplitude matrix Psi(n1, n2).
  Eigen::Map<const RowMatrix> as_matrix() const;
  Eigen::Map<RowMatrix> as_matrix();

 private:
  std::vector<int> cutoffs_;
  std::vector<std::size_t> strides_;
  std::vector<cplx> amps_;
  double norm_deficit_ = 0.0;
};

}  // namespace cvtele
