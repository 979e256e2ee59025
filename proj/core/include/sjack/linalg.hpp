#pragma once

#include <vector>

#include "sjack/scalar.hpp"

namespace sjack {

// Gaussian elimination with first-nonzero pivoting (partial pivoting when inexact).
// Throws std::domain_error on a singular system.
std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b);

}  // namespace sjack
