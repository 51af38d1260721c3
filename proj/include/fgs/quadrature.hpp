#pragma once

#include <cstddef>
#include <functional>

#include "fgs/types.hpp"

namespace fgs::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b] to absolute tolerance.
/// Panels are refined left to right and summed in a fixed order, so the
/// result is reproducible for a given decomposition.  Throws
/// QuadratureNotConverged if the budget is exhausted.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 48,
                 std::size_t max_panels = 1u << 20);

}  // namespace fgs::quadrature
