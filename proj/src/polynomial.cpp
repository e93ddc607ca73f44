#include "cvtele/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace cvtele {

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars)
    throw DomainError("polynomial variable count out of range");
}

Polynomial Polynomial::constant(int num_vars, cplx value) {
  Polynomial p(num_vars);
  p.add_term(Exponent{}, value);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index, cplx coef) {
  if (index < 0 || index >= num_vars)
    throw DomainError("polynomial variable index out of range");
  Polynomial p(num_vars);
  Exponent e{};
  e[index] = 1;
  p.add_term(e, coef);
  return p;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < num_vars_; ++i) d += e[i];
    deg = std::max(deg, d);
  }
  return deg;
}

cplx Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cplx{} : it->second;
}

void Polynomial::add_term(const Exponent& e, cplx coef) {
  if (coef == cplx{}) return;
  auto [it, inserted] = terms_.emplace(e, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == cplx{}) terms_.erase(it);
  }
}

cplx Polynomial::evaluate(std::span<const cplx> x) const {
  if (static_cast<int>(x.size()) != num_vars_)
    throw DomainError("polynomial evaluated at a point of the wrong dimension");
  int max_exp = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < num_vars_; ++i) max_exp = std::max<int>(max_exp, e[i]);

  // powers[i][k] = x_i^k
  std::vector<std::vector<cplx>> powers(num_vars_,
                                        std::vector<cplx>(max_exp + 1, 1.0));
  for (int i = 0; i < num_vars_; ++i)
    for (int k = 1; k <= max_exp; ++k) powers[i][k] = powers[i][k - 1] * x[i];

  cplx sum = 0.0;
  for (const auto& [e, c] : terms_) {
    cplx term = c;
    for (int i = 0; i < num_vars_; ++i) term *= powers[i][e[i]];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(const Eigen::MatrixXcd& map) const {
  if (map.rows() != num_vars_)
    throw DomainError("substitution map has the wrong number of rows");
  const int new_vars = static_cast<int>(map.cols());

  int max_exp = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < num_vars_; ++i) max_exp = std::max<int>(max_exp, e[i]);

  std::vector<std::vector<Polynomial>> powers(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    Polynomial form(new_vars);
    for (int j = 0; j < new_vars; ++j) {
      if (map(i, j) != cplx{}) form += variable(new_vars, j, map(i, j));
    }
    powers[i].push_back(constant(new_vars, 1.0));
    for (int k = 1; k <= max_exp; ++k)
      powers[i].push_back(powers[i].back() * form);
  }

  Polynomial out(new_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(new_vars, c);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] > 0) term *= powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

void Polynomial::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_)
    throw DomainError("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e{};
      for (int i = 0; i < a.num_vars_; ++i) {
        const int sum = ea[i] + eb[i];
        if (sum > 255) throw DomainError("polynomial exponent overflow");
        e[i] = static_cast<std::uint8_t>(sum);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(cplx scale) {
  if (scale == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scale;
  return *this;
}

}  // namespace cvtele
