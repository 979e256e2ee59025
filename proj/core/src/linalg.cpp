#include "sjack/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace sjack {

std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b) {
  const std::size_t n = b.size();
  if (A.size() != n) throw std::invalid_argument("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = 0;
    for (std::size_t r = col; r < n; ++r) {
      if (A[r][col].is_zero()) continue;
      if (A[r][col].is_exact()) {
        piv = r;
        break;
      }
      double mag = std::abs(A[r][col].to_double());
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (piv == n) throw std::domain_error("solve_linear: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (A[r][col].is_zero()) continue;
      Scalar f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Scalar> x(n, Scalar(0));
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= A[i][c] * x[c];
    x[i] = acc / A[i][i];
  }
  return x;
}

}  // namespace sjack
