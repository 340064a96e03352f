#pragma once

#include <optional>
#include <vector>

#include "wonderkit/rational.hpp"

namespace wk {

/// a . x >= b  (or a . x = b when used as an equality).
struct LinearConstraint {
  QVec a;
  Rational b;
};

/// Exact Fourier-Motzkin feasibility over Q^dim. Returns a point satisfying every
/// inequality and equality, or nullopt when the system is infeasible.
std::optional<QVec> feasible_point(std::size_t dim, const std::vector<LinearConstraint>& inequalities,
                                   const std::vector<LinearConstraint>& equalities = {});

}  // namespace wk
