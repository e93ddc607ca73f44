#pragma once

#include <functional>

namespace cvtele {

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section maximization on [a, b]; stops when the bracket is
/// narrower than tol. Throws ConvergenceError past max_iter.
ScalarMax golden_maximize(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-8, int max_iter = 200);

/// Evaluates f on `points` equally spaced nodes of [a, b] (both ends
/// included), then refines around the first best node by golden section.
/// The refinement bracket may reach one step beyond [a, b].
ScalarMax grid_maximize(const std::function<double(double)>& f, double a,
                        double b, int points, double tol = 1e-8,
                        int max_iter = 200);

}  // namespace cvtele
