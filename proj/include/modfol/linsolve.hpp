#pragma once

#include "modfol/rational.hpp"

#include <vector>

namespace modfol {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly for A with rows >= cols. Rows are scaled to integers
/// and reduced with Bareiss' fraction-free elimination. Throws
/// Error(Singular) when rank(A) < cols and Error(Inconsistent) when the extra
/// rows contradict the solution.
std::vector<Rational> solve_linear_exact(const RationalMatrix& a, const std::vector<Rational>& b);

} // namespace modfol
