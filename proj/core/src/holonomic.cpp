#include "sjack/holonomic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sjack {

namespace {

Scalar max_abs(const Scalar& a, const Scalar& b) { return b.abs() > a ? b.abs() : a; }

void require_operator_index(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi) throw std::invalid_argument(std::string(what) + " index out of range");
}

// Lowering action shared by E⁰ and D¹: Σ_i (κ choose κ_(i)) · w_i · ratio · SP_{κ_(i)}.
template <class Weight>
BasisExpansion lower(const BasisExpansion& f, Weight&& weight) {
  BasisExpansion out{{}, f.n, f.m, f.alpha};
  const Scalar p0 = Scalar(f.n) - f.alpha * Scalar(f.m);
  for (const auto& [k, c] : f.coeffs) {
    if (k.empty() || c.is_zero()) continue;
    for (int i = 0; i < k.length(); ++i) {
      auto low = k.remove_box(i);
      if (!low) continue;
      Scalar w = weight(k, i);
      if (w.is_zero()) continue;
      out.add(*low, c * binomial_remove_box(k, *low, f.alpha) * w * ones_ratio(k, *low, f.alpha, p0));
    }
  }
  return out;
}

struct Derivs {
  std::vector<double> d1, d2;
};

// Central differences with one Richardson step in every coordinate.
Derivs finite_differences(const Evaluable& F, const std::vector<double>& t, const std::vector<double>& s, double h) {
  const std::size_t n = t.size(), N = t.size() + s.size();
  std::vector<double> w(t);
  w.insert(w.end(), s.begin(), s.end());
  auto call = [&](const std::vector<double>& x) {
    std::vector<double> tt(x.begin(), x.begin() + static_cast<long>(n)), ss(x.begin() + static_cast<long>(n), x.end());
    return F(tt, ss);
  };
  const double f0 = call(w);
  Derivs d{std::vector<double>(N), std::vector<double>(N)};
  for (std::size_t i = 0; i < N; ++i) {
    auto at = [&](double dx) {
      auto x = w;
      x[i] += dx;
      return call(x);
    };
    double p1 = at(h), m1 = at(-h), p2 = at(h / 2), m2 = at(-h / 2);
    double g1 = (p1 - m1) / (2 * h), g2 = (p2 - m2) / h;
    double s1 = (p1 - 2 * f0 + m1) / (h * h), s2 = (p2 - 2 * f0 + m2) / (h * h / 4);
    d.d1[i] = (4 * g2 - g1) / 3;
    d.d2[i] = (4 * s2 - s1) / 3;
  }
  return d;
}

double powi(double x, int k) { return k == 0 ? 1.0 : (k == 1 ? x : x * x); }

}  // namespace

DeformedSystemSpec DeformedSystemSpec::jacobi(Scalar a, Scalar b, Scalar c, Scalar alpha, int n, int m) {
  DeformedSystemSpec s;
  s.family = SystemFamily::Jacobi2SF1;
  s.alpha = alpha;
  s.a = a;
  s.b = b;
  s.c = c;
  s.n = n;
  s.m = m;
  s.alpha1 = Scalar(1);
  s.alpha2 = Scalar(-1);
  s.beta0 = c;
  s.beta1 = -(a + b + Scalar(1));
  s.gamma0 = -(a * b);
  return s;
}

DeformedSystemSpec DeformedSystemSpec::general(Scalar alpha1, Scalar alpha2, Scalar beta0, Scalar beta1,
                                               Scalar gamma0, Scalar alpha, int n, int m) {
  DeformedSystemSpec s;
  s.family = SystemFamily::General;
  s.alpha = alpha;
  s.n = n;
  s.m = m;
  s.alpha1 = alpha1;
  s.alpha2 = alpha2;
  s.beta0 = beta0;
  s.beta1 = beta1;
  s.gamma0 = gamma0;
  return s;
}

DeformedSystemSpec DeformedSystemSpec::gaussian(Scalar a, Scalar b, Scalar alpha, int n, int m) {
  DeformedSystemSpec s;
  s.family = SystemFamily::Gaussian;
  s.alpha = alpha;
  s.a = a;
  s.b = b;
  s.n = n;
  s.m = m;
  return s;
}

std::vector<Scalar> DeformedSystemSpec::general_coefficients() const {
  if (family == SystemFamily::Gaussian) throw std::invalid_argument("the Gaussian system is not in the general family");
  return {alpha1, alpha2, beta0, beta1, gamma0};
}

void DeformedSystemSpec::validate(int max_weight) const {
  require_alpha(alpha);
  if (n < 0 || m < 0 || n + m == 0) throw std::invalid_argument("system needs n + m >= 1 variables");
  if (family == SystemFamily::Gaussian) return;
  for (const auto& k : enumerate_partitions(max_weight, FatHook{n, m})) {
    for (int i = 0; i <= k.length(); ++i) {
      Scalar v = beta0 - (Scalar(i) / alpha - Scalar(k[static_cast<std::size_t>(i)])) * alpha1;
      if (v.is_zero())
        throw std::domain_error("system coefficient beta0 - ((i-1)/alpha - kappa_i) alpha1 vanishes at kappa = (" +
                                k.str() + "), i = " + std::to_string(i + 1));
    }
  }
}

Scalar BasisExpansion::coeff(const Partition& k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Scalar(0) : it->second;
}

void BasisExpansion::add(const Partition& k, const Scalar& c) {
  if (!FatHook{n, m}.contains(k)) throw std::invalid_argument("partition (" + k.str() + ") is outside the fat hook");
  auto [it, fresh] = coeffs.emplace(k, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

int BasisExpansion::degree() const {
  int d = -1;
  for (const auto& [k, c] : coeffs) d = std::max(d, k.weight());
  return d;
}

double BasisExpansion::evaluate(const SuperPoint& pt) const {
  if (pt.n() != n || pt.m() != m) throw std::invalid_argument("point has the wrong number of variables");
  SuperJackEvaluator<double> ev(alpha.to_double(), to_doubles(pt.t), to_doubles(pt.s));
  double sum = 0;
  for (const auto& [k, c] : coeffs) sum += c.to_double() * ev(k);
  return sum;
}

BasisExpansion truncated_2SF1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, int n, int m,
                              int degree) {
  auto spec = SeriesSpec::standard({a, b}, {c}, alpha);
  spec.validate();
  auto bounds = series_support(spec, n, m);
  BasisExpansion out{{}, n, m, alpha};
  for (int w = 0; w <= degree; ++w)
    for (const auto& k : partitions_bounded(w, bounds.max_part, bounds.max_len, FatHook{n, m}))
      out.add(k, series_coefficient(spec, k));
  return out;
}

BasisExpansion op_E(int l, const BasisExpansion& f) {
  require_operator_index(l, 0, 1, "E");
  if (l == 1) {
    BasisExpansion out{{}, f.n, f.m, f.alpha};
    for (const auto& [k, c] : f.coeffs)
      if (k.weight() > 0) out.coeffs.emplace(k, c * Scalar(k.weight()));
    return out;
  }
  return lower(f, [](const Partition&, int) { return Scalar(1); });
}

BasisExpansion op_D(int kind, const BasisExpansion& f) {
  require_operator_index(kind, 1, 2, "D");
  const Scalar p0 = Scalar(f.n) - f.alpha * Scalar(f.m);
  if (kind == 2) {
    BasisExpansion out{{}, f.n, f.m, f.alpha};
    for (const auto& [k, c] : f.coeffs) {
      Scalar e = jack_eigen_e(k, f.alpha, p0);
      if (!e.is_zero()) out.coeffs.emplace(k, c * e);
    }
    return out;
  }
  return lower(f, [&](const Partition& k, int i) {
    return Scalar(k[static_cast<std::size_t>(i)] - 1) + (p0 - Scalar(i + 1)) / f.alpha;
  });
}

double op_E_pointwise(int l, const Partition& k, const Scalar& alpha, const SuperPoint& pt) {
  require_operator_index(l, 0, 1, "E");
  const auto w = to_doubles(pt.t), ws = to_doubles(pt.s);
  double sum = 0;
  for (int v = 0; v < pt.n() + pt.m(); ++v) {
    double x = v < pt.n() ? w[static_cast<std::size_t>(v)] : ws[static_cast<std::size_t>(v - pt.n())];
    sum += powi(x, l) * super_jack_jet(k, alpha, pt, v).d1;
  }
  return sum;
}

double op_D_pointwise(int kind, const Partition& k, const Scalar& alpha, const SuperPoint& pt) {
  require_operator_index(kind, 1, 2, "D");
  const int n = pt.n(), m = pt.m();
  const double al = alpha.to_double();
  const auto t = to_doubles(pt.t), s = to_doubles(pt.s);
  std::vector<Jet> jt, js;
  for (int i = 0; i < n; ++i) jt.push_back(super_jack_jet(k, alpha, pt, i));
  for (int j = 0; j < m; ++j) js.push_back(super_jack_jet(k, alpha, pt, n + j));
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    sum += powi(t[i], kind) * jt[i].d2;
    for (int j = 0; j < n; ++j)
      if (j != i) sum += (2 / al) * powi(t[i], kind) / (t[i] - t[j]) * jt[i].d1;
  }
  for (int i = 0; i < m; ++i) {
    sum -= (1 / al) * powi(s[i], kind) * js[i].d2;
    for (int j = 0; j < m; ++j)
      if (j != i) sum -= 2 * powi(s[i], kind) / (s[i] - s[j]) * js[i].d1;
    sum -= kind * (1 + 1 / al) * powi(s[i], kind - 1) * js[i].d1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      sum -= 2 / (t[i] - s[j]) * (powi(t[i], kind) * jt[i].d1 + (1 / al) * powi(s[j], kind) * js[j].d1);
  return sum;
}

BasisExpansion apply_summed_operator(const DeformedSystemSpec& sys, const BasisExpansion& f) {
  if (sys.family != SystemFamily::Jacobi2SF1)
    throw std::invalid_argument("the summed operator is defined for the 2SF1 system");
  const Scalar p0 = sys.p0(), shift = (p0 - Scalar(1)) / sys.alpha;
  BasisExpansion out{{}, f.n, f.m, f.alpha};
  auto acc = [&](const BasisExpansion& g, const Scalar& w) {
    if (w.is_zero()) return;
    for (const auto& [k, c] : g.coeffs) out.add(k, w * c);
  };
  acc(op_D(1, f), Scalar(1));
  acc(op_D(2, f), Scalar(-1));
  acc(op_E(0, f), sys.c - shift);
  acc(op_E(1, f), -(sys.a + sys.b + Scalar(1) - shift));
  acc(f, -(p0 * sys.a * sys.b));
  return out;
}

SummedResidual summed_operator_residual(const DeformedSystemSpec& sys, const BasisExpansion& f, int degree) {
  if (f.n != sys.n || f.m != sys.m) throw std::invalid_argument("expansion and system disagree on (n, m)");
  SummedResidual r;
  r.degree = degree;
  for (const auto& [k, c] : apply_summed_operator(sys, f).coeffs) {
    if (k.weight() < degree)
      r.below_top = max_abs(r.below_top, c);
    else
      r.top = max_abs(r.top, c);
  }
  return r;
}

std::vector<double> pointwise_system_residual(const DeformedSystemSpec& sys, const Evaluable& F,
                                              const std::vector<double>& t, const std::vector<double>& s, double h) {
  if (static_cast<int>(t.size()) != sys.n || static_cast<int>(s.size()) != sys.m)
    throw std::invalid_argument("point has the wrong number of variables");
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<double> w(t);
  w.insert(w.end(), s.begin(), s.end());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j]) throw std::domain_error("coincident coordinates make the system singular");

  const int n = sys.n, m = sys.m;
  const double al = sys.alpha.to_double();
  const auto d = finite_differences(F, t, s, h);
  const double f0 = F(t, s);
  auto Ft = [&](int i) { return d.d1[static_cast<std::size_t>(i)]; };
  auto Fs = [&](int j) { return d.d1[static_cast<std::size_t>(n + j)]; };
  std::vector<double> out;

  if (sys.family == SystemFamily::Gaussian) {
    const double a = sys.a.to_double(), b = sys.b.to_double();
    for (int i = 0; i < n; ++i) {
      double r = d.d2[i] - b * t[i] * Ft(i) - a * b * f0;
      for (int k = 0; k < n; ++k)
        if (k != i) r += (1 / al) * (Ft(i) - Ft(k)) / (t[i] - t[k]);
      for (int k = 0; k < m; ++k) r -= (Ft(i) + (1 / al) * Fs(k)) / (t[i] - s[k]);
      out.push_back(r);
    }
    for (int j = 0; j < m; ++j) {
      double r = -(1 / al) * d.d2[n + j] - b * s[j] * Fs(j) + al * a * b * f0;
      for (int k = 0; k < m; ++k)
        if (k != j) r -= (Fs(j) - Fs(k)) / (s[j] - s[k]);
      for (int k = 0; k < n; ++k) r += ((1 / al) * Fs(j) + Ft(k)) / (s[j] - t[k]);
      out.push_back(r);
    }
    return out;
  }

  const double a1 = sys.alpha1.to_double(), a2 = sys.alpha2.to_double(), b0 = sys.beta0.to_double(),
               b1 = sys.beta1.to_double(), g0 = sys.gamma0.to_double();
  auto q = [&](double x) { return a1 + a2 * x; };
  for (int i = 0; i < n; ++i) {
    double r = t[i] * q(t[i]) * d.d2[i] + (b0 + b1 * t[i]) * Ft(i) + g0 * f0;
    for (int k = 0; k < n; ++k)
      if (k != i) r += (1 / al) * t[k] / (t[i] - t[k]) * (q(t[i]) * Ft(i) - q(t[k]) * Ft(k));
    for (int k = 0; k < m; ++k) r -= s[k] / (t[i] - s[k]) * (q(t[i]) * Ft(i) + (1 / al) * q(s[k]) * Fs(k));
    out.push_back(r);
  }
  for (int j = 0; j < m; ++j) {
    double r = -(1 / al) * s[j] * q(s[j]) * d.d2[n + j] + (b0 + (b1 - (1 + 1 / al) * a2) * s[j]) * Fs(j) -
               al * g0 * f0;
    for (int k = 0; k < m; ++k)
      if (k != j) r -= s[k] / (s[j] - s[k]) * (q(s[j]) * Fs(j) - q(s[k]) * Fs(k));
    for (int k = 0; k < n; ++k) r += t[k] / (s[j] - t[k]) * ((1 / al) * q(s[j]) * Fs(j) + q(t[k]) * Ft(k));
    out.push_back(r);
  }
  return out;
}

double cancellation_residual(const Evaluable& F, const Scalar& alpha, const std::vector<double>& t,
                             const std::vector<double>& s, int i, int j, double h) {
  if (i < 0 || i >= static_cast<int>(t.size()) || j < 0 || j >= static_cast<int>(s.size()))
    throw std::invalid_argument("cancellation indices out of range");
  auto d = finite_differences(F, t, s, h);
  return d.d1[static_cast<std::size_t>(i)] + d.d1[t.size() + static_cast<std::size_t>(j)] / alpha.to_double();
}

std::pair<DeformedSystemSpec, Evaluable> inversion_transform(const DeformedSystemSpec& sys, const Evaluable& G) {
  if (sys.family != SystemFamily::Jacobi2SF1) throw std::invalid_argument("inversion is defined for the 2SF1 system");
  const Scalar shift = (sys.p0() - Scalar(1)) / sys.alpha;
  auto out = DeformedSystemSpec::jacobi(sys.a, sys.a - sys.c + Scalar(1) + shift, sys.a - sys.b + Scalar(1) + shift,
                                        sys.alpha, sys.n, sys.m);
  const double a = sys.a.to_double(), al = sys.alpha.to_double();
  Evaluable F = [G, a, al](const std::vector<double>& t, const std::vector<double>& s) {
    double pref = 1;
    std::vector<double> ti, si;
    for (double x : t) {
      pref *= std::pow(x, -a);
      ti.push_back(1 / x);
    }
    for (double y : s) {
      pref *= std::pow(y, a * al);
      si.push_back(1 / y);
    }
    return pref * G(ti, si);
  };
  return {out, F};
}

KanekoReport kaneko_criterion_check_with(const CoefficientFn& A, const Scalar& a, const Scalar& b, const Scalar& c,
                                         const Scalar& alpha, int n, int m, int max_weight) {
  if (n < 1 || m < 0) throw std::invalid_argument("Kaneko criterion needs n >= 1 and m >= 0");
  KanekoReport rep;
  std::vector<std::pair<int, int>> cases;
  for (int p = 1; p <= n; ++p) cases.emplace_back(p, 0);
  for (int q = 1; q <= m; ++q) cases.emplace_back(n, q);
  for (auto [p, q] : cases) {
    auto r = recurrence_check_with(A, a, b, c, alpha, p, q, max_weight);
    if (!r.ok) {
      rep.ok = false;
      rep.failed.emplace_back(p, q);
    }
  }
  return rep;
}

KanekoReport kaneko_criterion_check(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, int n,
                                    int m, int max_weight) {
  return kaneko_criterion_check_with([&](const Partition& k) { return twoF1_coefficient(a, b, c, alpha, k); }, a, b,
                                     c, alpha, n, m, max_weight);
}

Scalar super_jacobi_eigenvalue(const Partition& k, const Scalar& alpha, const Scalar& p0, const Scalar& gamma,
                               const Scalar& eta) {
  return -jack_eigen_e(k, alpha, p0) - (gamma + eta + Scalar(2)) * Scalar(k.weight());
}

SuperJacobi super_jacobi(int N, int M, const Scalar& alpha, const Scalar& c, int n, int m) {
  require_alpha(alpha);
  if (N < 1 || M < 1) throw std::invalid_argument("super Jacobi needs positive integers N and M");
  if (M < n || N < m) throw std::domain_error("largest partition (N^n, m^(M-n)) is not a partition in the fat hook");
  std::vector<int> top(static_cast<std::size_t>(n), N);
  for (int i = 0; i < M - n; ++i) top.push_back(m);
  SuperJacobi out;
  out.kappa_max = Partition(top);
  const Scalar a(-N), b = Scalar(M) / alpha;
  auto spec = SeriesSpec::standard({a, b}, {c}, alpha);
  spec.validate();
  auto bounds = series_support(spec, n, m);
  auto wmax = bounds.max_weight();
  if (!wmax) throw std::domain_error("parameters do not terminate the series");
  out.poly = truncated_2SF1(a, b, c, alpha, n, m, *wmax);

  const Scalar p0 = Scalar(n) - alpha * Scalar(m);
  out.gamma = c - Scalar(1) - (p0 - Scalar(1)) / alpha;
  out.eta = -out.gamma - Scalar(1) + Scalar(m - N) + Scalar(M + 1 - n) / alpha;
  out.eps_top = super_jacobi_eigenvalue(out.kappa_max, alpha, p0, out.gamma, out.eta);
  out.ab_p0 = a * b * p0;

  // (D¹ − D² + (γ+1)E⁰ − (γ+η+2)E¹) P − ab·p₀·P must vanish identically.
  BasisExpansion image{{}, n, m, alpha};
  auto acc = [&](const BasisExpansion& g, const Scalar& w) {
    for (const auto& [k, v] : g.coeffs) image.add(k, w * v);
  };
  acc(op_D(1, out.poly), Scalar(1));
  acc(op_D(2, out.poly), Scalar(-1));
  acc(op_E(0, out.poly), out.gamma + Scalar(1));
  acc(op_E(1, out.poly), -(out.gamma + out.eta + Scalar(2)));
  acc(out.poly, -out.ab_p0);
  out.eigen_ok = image.coeffs.empty();

  out.top_ok = !out.poly.coeff(out.kappa_max).is_zero();
  for (const auto& [k, v] : out.poly.coeffs)
    if (!out.kappa_max.contains(k)) out.top_ok = false;
  return out;
}

}  // namespace sjack
