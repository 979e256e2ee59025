#include "sjack/special.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sjack {

namespace {

// Golub–Welsch: nodes are eigenvalues of the Jacobi matrix, weights μ0·v0².
QuadRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offsq, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) J(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = J(i + 1, i) = std::sqrt(offsq[i]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw std::runtime_error("quadrature eigensolve failed");
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

}  // namespace

double lgamma_checked(double x) {
  if (x <= 0 && x == std::floor(x)) throw std::domain_error("Gamma pole at " + std::to_string(x));
  return std::lgamma(x);
}

double log_beta(double a, double b) { return lgamma_checked(a) + lgamma_checked(b) - lgamma_checked(a + b); }

double rising_double(double x, int k) {
  double r = 1;
  for (int j = 0; j < k; ++j) r *= x + j;
  return r;
}

QuadRule gauss_jacobi01(int order, double p, double q) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  if (p <= -1 || q <= -1) throw std::domain_error("Jacobi weight exponents must exceed -1");
  // Monic recurrence for (1−y)^a (1+y)^b on [−1,1] with y = 2x − 1, a = q, b = p.
  const double a = q, b = p;
  std::vector<double> diag(order), offsq(order > 1 ? order - 1 : 0);
  for (int k = 0; k < order; ++k) {
    double s = 2.0 * k + a + b;
    diag[k] = k == 0 ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
  }
  for (int k = 1; k < order; ++k) {
    double s = 2.0 * k + a + b;
    if (k == 1)
      offsq[0] = 4 * (1 + a) * (1 + b) / ((2 + a + b) * (2 + a + b) * (3 + a + b));
    else
      offsq[k - 1] = 4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
  }
  QuadRule r = golub_welsch(diag, offsq, 1.0);
  const double total = std::exp(log_beta(p + 1, q + 1));
  for (int i = 0; i < order; ++i) {
    r.nodes[i] = 0.5 * (r.nodes[i] + 1);
    r.weights[i] *= total;
  }
  return r;
}

QuadRule gauss_legendre(int order, double lo, double hi) {
  QuadRule r = gauss_jacobi01(order, 0.0, 0.0);
  for (int i = 0; i < order; ++i) {
    r.nodes[i] = lo + (hi - lo) * r.nodes[i];
    r.weights[i] *= (hi - lo);
  }
  return r;
}

QuadRule gauss_laguerre_normalized(int order, double c) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  if (c <= -1) throw std::domain_error("Laguerre exponent must exceed -1");
  std::vector<double> diag(order), offsq(order > 1 ? order - 1 : 0);
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + c + 1;
  for (int k = 1; k < order; ++k) offsq[k - 1] = k * (k + c);
  return golub_welsch(diag, offsq, 1.0);
}

}  // namespace sjack

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace sjack {

double selberg_type_integral(int N, double l1, double l2, double lam, const SymmetricFn& f, double tol) {
  if (N < 0 || N > 3) throw std::invalid_argument("selberg_type_integral supports 0 <= N <= 3");
  if (l1 <= -1 || l2 <= -1) throw std::domain_error("lambda1, lambda2 must exceed -1");
  if (N >= 2 && lam <= -1.0 / N) throw std::domain_error("lambda too negative for integrability");
  if (N == 0) return f({});
  if (N == 1) {
    QuadRule r = gauss_jacobi01(64, l1, l2);
    double acc = 0;
    std::vector<double> x(1);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      x[0] = r.nodes[i];
      acc += r.weights[i] * f(x);
    }
    return acc;
  }
  boost::math::quadrature::tanh_sinh<double> ts(12);
  std::vector<double> x(N);
  auto weight1 = [&](double v) { return std::pow(v, l1) * std::pow(1 - v, l2); };
  auto gap = [&](double d) { return lam == 0 ? 1.0 : std::pow(std::abs(d), 2 * lam); };
  double fact = N == 2 ? 2.0 : 6.0;
  double total;
  // Ordered simplex x1 < x2 (< x3) with x_k = u_k x_{k+1}, so every nested integral runs over (0, 1).
  auto unit = [&](auto&& g) { return ts.integrate(g, 0.0, 1.0, tol); };
  if (N == 2) {
    auto outer = [&](double x2) {
      if (x2 <= 0 || x2 >= 1) return 0.0;
      auto inner = [&](double u) {
        if (u <= 0 || u >= 1) return 0.0;
        double x1 = u * x2;
        std::vector<double> p{x1, x2};
        return x2 * weight1(x1) * gap(x2 - x1) * f(p);
      };
      return weight1(x2) * unit(inner);
    };
    total = unit(outer);
  } else {
    auto outer = [&](double x3) {
      if (x3 <= 0 || x3 >= 1) return 0.0;
      auto middle = [&](double u2) {
        if (u2 <= 0 || u2 >= 1) return 0.0;
        double x2 = u2 * x3;
        auto inner = [&](double u1) {
          if (u1 <= 0 || u1 >= 1) return 0.0;
          double x1 = u1 * x2;
          std::vector<double> p{x1, x2, x3};
          return x2 * weight1(x1) * gap(x2 - x1) * gap(x3 - x1) * f(p);
        };
        return x3 * weight1(x2) * gap(x3 - x2) * unit(inner);
      };
      return weight1(x3) * unit(middle);
    };
    total = unit(outer);
  }
  return fact * total;
}

double laguerre_type_integral(int N, double a, double w, double b, const SymmetricFn& f, double tol) {
  if (N < 0 || N > 2) throw std::invalid_argument("laguerre_type_integral supports 0 <= N <= 2");
  if (a <= -1 || w <= 0) throw std::domain_error("need a > -1 and w > 0");
  if (N == 0) return f({});
  boost::math::quadrature::exp_sinh<double> es;
  boost::math::quadrature::tanh_sinh<double> ts(12);
  auto weight1 = [&](double v) { return std::pow(v, a) * std::exp(-w * v); };
  if (N == 1) {
    auto g = [&](double v) { return v <= 0 ? 0.0 : weight1(v) * f({v}); };
    return es.integrate(g, tol);
  }
  auto outer = [&](double x2) {
    if (x2 <= 0 || !std::isfinite(x2)) return 0.0;
    double wx2 = weight1(x2);
    if (wx2 == 0) return 0.0;
    auto inner = [&](double u) {
      if (u <= 0 || u >= 1) return 0.0;
      double x1 = u * x2;
      return x2 * weight1(x1) * std::pow(x2 - x1, b) * f({x1, x2});
    };
    return wx2 * ts.integrate(inner, 0.0, 1.0, tol);
  };
  return 2.0 * es.integrate(outer, tol);
}

}  // namespace sjack
