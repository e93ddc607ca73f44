#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>

#include <Eigen/Dense>

#include "cvtele/types.hpp"

namespace cvtele {

/// Sparse multivariate polynomial with complex coefficients.
///
/// Terms are keyed by their exponent tuple, so products are exponent
/// additions. Characteristic functions use the variable order
/// (a_1, a_1*, a_2, a_2*, ...); real-coordinate polynomials use
/// (x_1, y_1, x_2, y_2, ...).
class Polynomial {
 public:
  static constexpr int kMaxVars = 8;
  using Exponent = std::array<std::uint8_t, kMaxVars>;
  using TermMap = std::map<Exponent, cplx>;

  explicit Polynomial(int num_vars = 0);

  static Polynomial constant(int num_vars, cplx value);
  static Polynomial variable(int num_vars, int index, cplx coef = 1.0);

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int degree() const;
  cplx coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, cplx coef);
  cplx evaluate(std::span<const cplx> x) const;

  /// Substitutes old_i = sum_j map(i, j) * new_j. The result has map.cols()
  /// variables.
  Polynomial substitute(const Eigen::MatrixXcd& map) const;

  /// Drops terms with |coef| <= tol.
  void prune(double tol = 0.0);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(cplx scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
  friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }

 private:
  void check_compatible(const Polynomial& other) const;

  int num_vars_;
  TermMap terms_;
};

}  // namespace cvtele
