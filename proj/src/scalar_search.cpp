#include "cvtele/scalar_search.hpp"

#include <cmath>

#include "cvtele/types.hpp"

namespace cvtele {

ScalarMax golden_maximize(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_iter) {
  if (!(b > a)) throw DomainError("golden section needs a < b");
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int it = 0;
  while (b - a > tol) {
    if (++it > max_iter)
      throw ConvergenceError("golden section exceeded its iteration cap", b - a);
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 >= f2 ? ScalarMax{x1, f1, it} : ScalarMax{x2, f2, it};
}

ScalarMax grid_maximize(const std::function<double(double)>& f, double a,
                        double b, int points, double tol, int max_iter) {
  if (points < 3) throw DomainError("grid search needs at least 3 points");
  const double h = (b - a) / (points - 1);
  int best = 0;
  double best_val = f(a);
  for (int i = 1; i < points; ++i) {
    const double v = f(a + i * h);
    if (v > best_val) {
      best = i;
      best_val = v;
    }
  }
  const double center = a + best * h;
  ScalarMax refined = golden_maximize(f, center - h, center + h, tol, max_iter);
  refined.iterations += points;
  if (best_val > refined.value) return {center, best_val, refined.iterations};
  return refined;
}

}  // namespace cvtele
