#include "sjack/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sjack/ensembles.hpp"
#include "sjack/special.hpp"

namespace sjack {

namespace {

double mag(const Scalar& x) { return std::abs(x.to_double()); }
double mag(double x) { return std::abs(x); }

template <class T>
T cast(const Scalar& x);
template <>
Scalar cast<Scalar>(const Scalar& x) {
  return x;
}
template <>
double cast<double>(const Scalar& x) {
  return x.to_double();
}

template <class T>
std::vector<T> cast_all(const std::vector<Scalar>& v) {
  std::vector<T> out;
  out.reserve(v.size());
  for (auto& x : v) out.push_back(cast<T>(x));
  return out;
}

bool is_zero(const Scalar& x) { return x.is_zero(); }
bool is_zero(double x) { return x == 0.0; }

// Nonnegative integer M with x = −M, if any.
std::optional<int> neg_integer(const Scalar& x) {
  if (!x.is_integer() || x.sign() > 0) return std::nullopt;
  return static_cast<int>(-x.to_long());
}

// Nonnegative integer M with x = M/α, if any.
std::optional<int> over_alpha_integer(const Scalar& x, const Scalar& alpha) {
  Scalar y = x * alpha;
  if (!y.is_integer() || y.sign() < 0) return std::nullopt;
  return static_cast<int>(y.to_long());
}

Scalar pow_scalar(const Scalar& base, const Scalar& e) {
  if (e.is_integer() && base.is_exact()) {
    long k = e.to_long();
    if (k >= 0) return base.pow(k);
    if (base.is_zero()) throw std::domain_error("pole: zero base with negative exponent");
    return Scalar(1) / base.pow(-k);
  }
  double b = base.to_double();
  if (b < 0) throw std::domain_error("negative base with non-integer exponent");
  if (b == 0 && e.to_double() < 0) throw std::domain_error("pole: zero base with negative exponent");
  return Scalar::from_double(std::pow(b, e.to_double()));
}

template <class T>
T coefficient_T(const SeriesSpec& spec, const Partition& k, const T& alpha, const std::vector<T>& up,
                const std::vector<T>& lo, bool* numerator_zero) {
  T num(1);
  for (auto& a : up) num *= gen_pochhammer(a, k, alpha);
  if (numerator_zero) *numerator_zero = is_zero(num);
  if (is_zero(num)) return T(0);
  T den(1);
  if (spec.variant == SeriesVariant::Hat)
    den = rising(lo[0], k.weight());
  else
    for (auto& b : lo) den *= gen_pochhammer(b, k, alpha);
  if (is_zero(den))
    throw std::domain_error("lower parameter makes [b]_kappa vanish at kappa=(" + k.str() + ")");
  return num / (den * hook_product(k, alpha));
}

template <class T>
SeriesValue eval_impl(const SeriesSpec& spec, const SuperPoint& pt, int max_degree, const SeriesOptions& opts) {
  const int n = pt.n(), m = pt.m();
  const SupportBounds bounds = series_support(spec, n, m);
  const T alpha = cast<T>(spec.alpha);
  const std::vector<T> up = cast_all<T>(spec.upper), lo = cast_all<T>(spec.lower);
  const std::vector<T> t = cast_all<T>(pt.t), s = cast_all<T>(pt.s);
  const bool gamma = spec.variant == SeriesVariant::GammaDeformed;
  const bool mixed = spec.variant == SeriesVariant::Mixed;
  const int ell = static_cast<int>(spec.z.size());

  SuperJackEvaluator<T> sp(alpha, t, s);
  std::optional<SuperJackEvaluator<T>> zev;
  if (mixed) zev.emplace(alpha, cast_all<T>(spec.z), std::vector<T>{});
  std::optional<FatHook> hook;
  if (!gamma) hook = FatHook{n, m};

  SeriesValue out;
  out.report.max_degree = max_degree;
  T total(0);
  for (int w = 0; w <= max_degree; ++w) {
    double shell = 0;
    for (const auto& k : partitions_bounded(w, bounds.max_part, bounds.max_len, hook)) {
      T coef = coefficient_T<T>(spec, k, alpha, up, lo, nullptr);
      if (is_zero(coef)) continue;
      T value = gamma ? cast<T>(gamma_super_jack_eval(k, spec.alpha, spec.gamma,
                                                      SuperPoint{pt.t, pt.s}))
                      : sp(k);
      if (mixed) value = value * (*zev)(k) / ones_ratio<T>(k, Partition{}, alpha, T(ell));
      T term = coef * value;
      if (is_zero(term)) continue;
      total += term;
      shell += mag(term);
      ++out.report.terms;
    }
    out.report.shell_norms.push_back(shell);
  }
  out.report.last_shell_norm = out.report.shell_norms.back();
  if constexpr (std::is_same_v<T, double>)
    out.value = Scalar::from_double(total);
  else
    out.value = total;

  auto maxw = bounds.max_weight();
  out.report.terminated = maxw && *maxw <= max_degree;
  if (out.report.terminated) {
    out.report.tail_bound = 0.0;
  } else if (opts.compute_tail && !gamma && n + m > 0) {
    const double norm = pt.norm();
    double zmax = 1;
    if (mixed) {
      zmax = 0;
      for (auto& z : spec.z) zmax = std::max(zmax, std::abs(z.to_double()));
    }
    const double a = spec.alpha.to_double();
    std::vector<double> upd, lod;
    for (auto& x : spec.upper) upd.push_back(x.to_double());
    for (auto& x : spec.lower) lod.push_back(x.to_double());
    std::vector<double> shells;
    double tail = 0;
    for (int w = max_degree + 1; w <= max_degree + 8; ++w) {
      double b = 0;
      for (const auto& k : partitions_bounded(w, bounds.max_part, bounds.max_len, hook)) {
        double c = std::abs(coefficient_T<double>(spec, k, a, upd, lod, nullptr));
        if (c == 0) continue;
        b += c * upbound(k, spec.alpha, n, m, norm) * std::pow(zmax, w);
      }
      shells.push_back(b);
      tail += b;
    }
    double last = shells.back(), prev = shells[shells.size() - 2];
    if (last == 0) {
      out.report.tail_bound = tail;
    } else if (prev > 0 && last < prev) {
      double rho = last / prev;
      out.report.tail_bound = tail + last * rho / (1 - rho);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

bool SeriesSpec::exact() const {
  if (!alpha.is_exact() || !gamma.is_exact()) return false;
  for (auto& v : upper)
    if (!v.is_exact()) return false;
  for (auto& v : lower)
    if (!v.is_exact()) return false;
  for (auto& v : z)
    if (!v.is_exact()) return false;
  return true;
}

std::string SeriesSpec::name() const {
  std::string core = std::to_string(p()) + "SF" + std::to_string(q());
  switch (variant) {
    case SeriesVariant::Standard: return core;
    case SeriesVariant::Mixed: return std::to_string(p()) + "SFmixed" + std::to_string(q());
    case SeriesVariant::Hat: return "2SFhat1";
    case SeriesVariant::GammaDeformed: return core + "(gamma)";
  }
  return core;
}

SeriesSpec SeriesSpec::standard(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar alpha) {
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.alpha = std::move(alpha);
  s.validate();
  return s;
}

SeriesSpec SeriesSpec::hat(Scalar a, Scalar b, Scalar c, Scalar alpha) {
  SeriesSpec s;
  s.upper = {std::move(a), std::move(b)};
  s.lower = {std::move(c)};
  s.alpha = std::move(alpha);
  s.variant = SeriesVariant::Hat;
  s.validate();
  return s;
}

SeriesSpec SeriesSpec::mixed(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar alpha, std::vector<Scalar> z) {
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.alpha = std::move(alpha);
  s.variant = SeriesVariant::Mixed;
  s.z = std::move(z);
  s.validate();
  return s;
}

SeriesSpec SeriesSpec::gamma_deformed(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar alpha,
                                      Scalar gamma) {
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.alpha = std::move(alpha);
  s.variant = SeriesVariant::GammaDeformed;
  s.gamma = std::move(gamma);
  s.validate();
  return s;
}

void SeriesSpec::validate() const {
  require_alpha(alpha);
  if (variant == SeriesVariant::Hat) {
    if (p() != 2 || q() != 1) throw std::invalid_argument("hat series needs exactly two upper and one lower parameter");
    if (neg_integer(lower[0])) throw std::domain_error("hat series lower parameter c must not be 0, -1, -2, ...");
    return;
  }
  if (variant == SeriesVariant::Mixed && z.empty()) throw std::invalid_argument("mixed series needs z arguments");
  // (i−1)/α − b ∈ ℕ₀ would make [b]_κ vanish; only fatal when the numerator survives, checked per term.
}

std::optional<int> SupportBounds::max_weight() const {
  if (max_part < 0 || max_len < 0) return std::nullopt;
  return max_part * max_len;
}

SupportBounds series_support(const SeriesSpec& spec, int n, int m) {
  SupportBounds b;
  auto tighten = [](int& slot, int v) { slot = slot < 0 ? v : std::min(slot, v); };
  for (auto& a : spec.upper) {
    if (auto M = neg_integer(a)) tighten(b.max_part, *M);
    if (auto M = over_alpha_integer(a, spec.alpha)) tighten(b.max_len, *M);
  }
  if (spec.variant != SeriesVariant::GammaDeformed) {
    if (m == 0) tighten(b.max_len, n);
    if (n == 0) tighten(b.max_part, m);
  }
  if (spec.variant == SeriesVariant::Mixed) tighten(b.max_len, static_cast<int>(spec.z.size()));
  return b;
}

Scalar series_coefficient(const SeriesSpec& spec, const Partition& k) {
  return coefficient_T<Scalar>(spec, k, spec.alpha, spec.upper, spec.lower, nullptr);
}

double convergence_radius(const Scalar& alpha, int n, int m) {
  double a = alpha.to_double();
  double r1 = std::max(a, 1 / a);
  return 1.0 / (r1 * r1 * (n + r1 * m));
}

double upbound_constant(const Scalar& alpha, int n, int m) {
  double a = alpha.to_double();
  double r1 = std::max(a, 1 / a);
  const int d = n + m;
  if (d == 0) return 0;
  double best = 0;
  const double base = n + m * r1;
  for (int k = 1; k <= 4000; ++k) {
    double v = std::log(static_cast<double>(d)) + (d - 1) * std::log(static_cast<double>(k)) - k * std::log(base);
    best = std::max(best, std::exp(v));
  }
  return std::sqrt(best);
}

double upbound(const Partition& k, const Scalar& alpha, int n, int m, double norm) {
  if (k.empty()) return 1.0;
  if (n + m == 0) return 0.0;
  double a = alpha.to_double();
  double r1 = std::max(a, 1 / a);
  double h = hook_product(k, a), hp = hook_product_prime(k, a);
  return upbound_constant(alpha, n, m) * std::sqrt(h / hp) * std::pow(r1 * (n + r1 * m) * norm, k.weight());
}

SeriesValue eval_series(const SeriesSpec& spec, const SuperPoint& pt, int max_degree, const SeriesOptions& opts) {
  spec.validate();
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  const int n = pt.n(), m = pt.m();
  const bool finite = series_support(spec, n, m).max_weight().has_value();
  const double norm = pt.norm();
  if (!finite && norm > 0) {
    if (spec.variant != SeriesVariant::Hat && spec.p() > spec.q() + 1)
      throw std::domain_error(
          "series with p > q+1 has no disk of absolute convergence unless it terminates (refusing to sum)");
    if (spec.variant == SeriesVariant::Standard && spec.p() == spec.q() + 1 && !opts.allow_outside_radius) {
      double r = convergence_radius(spec.alpha, n, m);
      if (norm >= r)
        throw std::domain_error("point norm " + std::to_string(norm) + " is outside the guaranteed radius " +
                                std::to_string(r) + "; pass allow_outside_radius to override");
    }
    if (spec.variant == SeriesVariant::Hat && norm >= 1 && !opts.allow_outside_radius)
      throw std::domain_error("hat series converges only in the unit polydisk");
  }
  if (spec.exact() && pt.exact()) return eval_impl<Scalar>(spec, pt, max_degree, opts);
  return eval_impl<double>(spec, pt, max_degree, opts);
}

Scalar closed_form_1SF0(const Scalar& a, const Scalar& alpha, const SuperPoint& pt) {
  require_alpha(alpha);
  Scalar r(1);
  for (auto& t : pt.t) {
    if (t == Scalar(1)) throw std::domain_error("pole at t_i = 1");
    r *= pow_scalar(Scalar(1) - t, -a);
  }
  for (auto& s : pt.s) r *= pow_scalar(Scalar(1) - s, alpha * a);
  return r;
}

Scalar closed_form_0SF0(const Scalar& alpha, const SuperPoint& pt) {
  require_alpha(alpha);
  Scalar e(0);
  for (auto& t : pt.t) e += t;
  for (auto& s : pt.s) e -= alpha * s;
  if (e.is_zero()) return Scalar(1);
  return Scalar::from_double(std::exp(e.to_double()));
}

std::pair<SeriesSpec, SuperPoint> dual_spec(const SeriesSpec& spec, const SuperPoint& pt) {
  const Scalar& a = spec.alpha;
  SeriesSpec d = spec;
  d.alpha = Scalar(1) / a;
  for (auto& u : d.upper) u = -a * u;
  SuperPoint q;
  if (spec.variant == SeriesVariant::Standard) {
    for (auto& l : d.lower) l = -a * l;
    Scalar f = pow_scalar(-a, Scalar(spec.q() + 1 - spec.p()));
    for (auto& s : pt.s) q.t.push_back(f * s);
    for (auto& t : pt.t) q.s.push_back(f * t);
  } else if (spec.variant == SeriesVariant::Hat) {
    for (auto& s : pt.s) q.t.push_back(-s / a);
    for (auto& t : pt.t) q.s.push_back(-t / a);
  } else {
    throw std::invalid_argument("duality is defined for standard and hat series only");
  }
  d.validate();
  return {d, q};
}

namespace {

SuperPoint to_float(const SuperPoint& pt) {
  SuperPoint q;
  for (auto& t : pt.t) q.t.push_back(t.as_float());
  for (auto& s : pt.s) q.s.push_back(s.as_float());
  return q;
}

double prefactor(const SuperPoint& pt, const Scalar& alpha, const Scalar& e) {
  double r = 1;
  double ed = e.to_double(), ad = alpha.to_double();
  for (auto& t : pt.t) {
    double b = 1 - t.to_double();
    if (b == 0) throw std::domain_error("pole at t_i = 1");
    r *= std::pow(b, ed);
  }
  for (auto& s : pt.s) {
    double b = 1 - s.to_double();
    if (b == 0) throw std::domain_error("pole at s_j = 1");
    r *= std::pow(b, -ad * ed);
  }
  return r;
}

}  // namespace

std::pair<double, double> pfaff_euler(const SeriesSpec& spec, int which, const SuperPoint& pt, int max_degree) {
  if (spec.variant != SeriesVariant::Standard || spec.p() != 2 || spec.q() != 1)
    throw std::invalid_argument("pfaff_euler needs a standard 2SF1 spec");
  if (which < 1 || which > 3) throw std::invalid_argument("pfaff_euler form must be 1, 2 or 3");
  const Scalar &a = spec.upper[0], &b = spec.upper[1], &c = spec.lower[0];
  SeriesOptions opts;
  opts.compute_tail = false;
  SuperPoint fp = to_float(pt);
  double lhs = eval_series(spec, fp, max_degree, opts).value.to_double();
  SuperPoint mapped;
  for (auto& t : fp.t) {
    double v = t.to_double();
    if (v == 1) throw std::domain_error("pole at t_i = 1");
    mapped.t.push_back(Scalar::from_double(-v / (1 - v)));
  }
  for (auto& s : fp.s) {
    double v = s.to_double();
    if (v == 1) throw std::domain_error("pole at s_j = 1");
    mapped.s.push_back(Scalar::from_double(-v / (1 - v)));
  }
  double rhs = 0;
  if (which == 1) {
    auto sp = SeriesSpec::standard({a, c - b}, {c}, spec.alpha);
    rhs = prefactor(fp, spec.alpha, -a) * eval_series(sp, mapped, max_degree, opts).value.to_double();
  } else if (which == 2) {
    auto sp = SeriesSpec::standard({c - a, b}, {c}, spec.alpha);
    rhs = prefactor(fp, spec.alpha, -b) * eval_series(sp, mapped, max_degree, opts).value.to_double();
  } else {
    auto sp = SeriesSpec::standard({c - a, c - b}, {c}, spec.alpha);
    rhs = prefactor(fp, spec.alpha, c - a - b) * eval_series(sp, fp, max_degree, opts).value.to_double();
  }
  return {lhs, rhs};
}

std::pair<double, double> kummer(const SeriesSpec& spec, const SuperPoint& pt, int max_degree) {
  if (spec.variant != SeriesVariant::Standard || spec.p() != 1 || spec.q() != 1)
    throw std::invalid_argument("kummer needs a standard 1SF1 spec");
  const Scalar &a = spec.upper[0], &c = spec.lower[0];
  SeriesOptions opts;
  opts.compute_tail = false;
  SuperPoint fp = to_float(pt);
  double lhs = eval_series(spec, fp, max_degree, opts).value.to_double();
  SuperPoint neg;
  for (auto& t : fp.t) neg.t.push_back(-t);
  for (auto& s : fp.s) neg.s.push_back(-s);
  auto sp = SeriesSpec::standard({c - a}, {c}, spec.alpha);
  double rhs = closed_form_0SF0(spec.alpha, fp).to_double() * eval_series(sp, neg, max_degree, opts).value.to_double();
  return {lhs, rhs};
}

Scalar eval_hat_2SF1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, const SuperPoint& pt,
                     int max_degree) {
  SeriesOptions opts;
  opts.compute_tail = false;
  return eval_series(SeriesSpec::hat(a, b, c, alpha), pt, max_degree, opts).value;
}

// ---------------------------------------------------------------------------
// Regularized 2SF0

namespace {

// h_k = Σ_{|κ|=k} coef_κ SP_κ(pt): the hat series as a power series in u.
template <class T>
std::vector<T> hat_shells(const SeriesSpec& spec, const SuperPoint& pt, int degree) {
  const int n = pt.n(), m = pt.m();
  const SupportBounds bounds = series_support(spec, n, m);
  const T alpha = cast<T>(spec.alpha);
  const std::vector<T> up = cast_all<T>(spec.upper), lo = cast_all<T>(spec.lower);
  SuperJackEvaluator<T> sp(alpha, cast_all<T>(pt.t), cast_all<T>(pt.s));
  std::vector<T> h(degree + 1, T(0));
  for (int w = 0; w <= degree; ++w)
    for (const auto& k : partitions_bounded(w, bounds.max_part, bounds.max_len, FatHook{n, m})) {
      T c = coefficient_T<T>(spec, k, alpha, up, lo, nullptr);
      if (!is_zero(c)) h[w] += c * sp(k);
    }
  return h;
}

// Coefficients of Σ h_k u^k after u = 4R w/(1−w)².
template <class T>
std::vector<T> koebe_compose(const std::vector<T>& h, const T& R) {
  const int D = static_cast<int>(h.size()) - 1;
  std::vector<T> g(D + 1, T(0));
  g[0] = h[0];
  std::vector<T> powR(D + 1, T(1));
  for (int k = 1; k <= D; ++k) powR[k] = powR[k - 1] * T(4) * R;
  for (int d = 1; d <= D; ++d) {
    // C(d+k−1, d−k), built incrementally over k from d down to 1.
    T binom(1);  // k = d: C(2d−1, 0)
    for (int k = d; k >= 1; --k) {
      if (!is_zero(h[k])) g[d] += h[k] * powR[k] * binom;
      // C(d+k−2, d−k+1) = C(d+k−1, d−k) · (2k−1)(2k−2) / ((d+k−1)(d−k+1))
      if (k > 1) binom = binom * T((2 * k - 1) * (2 * k - 2)) / T((d + k - 1) * (d - k + 1));
    }
  }
  return g;
}

double horner(const std::vector<double>& g, double w) {
  double r = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) r = r * w + *it;
  return r;
}

}  // namespace

double regularized_2SF0(const Scalar& a, const Scalar& b, const Scalar& alpha, const Scalar& c0, const SuperPoint& pt,
                        int quad_order) {
  require_alpha(alpha);
  if (c0.sign() <= 0) throw std::domain_error("c0 must be positive for the Gamma-integral to converge");
  if (quad_order < 2) throw std::invalid_argument("quadrature order must be >= 2");
  const double c0d = c0.to_double();
  QuadRule gl = gauss_laguerre_normalized(quad_order, c0d - 1);
  SeriesSpec spec = SeriesSpec::hat(a, b, c0, alpha);
  const int n = pt.n(), m = pt.m();
  auto maxw = series_support(spec, n, m).max_weight();
  if (pt.norm() == 0) return 1.0;

  // Only nodes carrying non-negligible mass matter.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    if (gl.weights[i] > 1e-22) active.push_back(i);

  if (maxw) {
    std::vector<double> h;
    if (spec.exact() && pt.exact())
      h = to_doubles(hat_shells<Scalar>(spec, pt, *maxw));
    else
      h = hat_shells<double>(spec, pt, *maxw);
    double acc = 0;
    for (auto i : active) acc += gl.weights[i] * horner(h, gl.nodes[i]);
    return acc;
  }

  // Singularities of the u-continuation sit at u = −α/s_j; require them off the positive axis.
  double smax = 0;
  for (auto& s : pt.s) {
    double v = s.to_double();
    if (v < 0) throw std::domain_error("s_j < 0 puts a singularity of the hat series on the integration path");
    smax = std::max(smax, v);
  }
  Scalar R = smax > 0 ? alpha / *std::max_element(pt.s.begin(), pt.s.end())
                      : Scalar::from_double(std::min(1.0, alpha.to_double()) / pt.norm());
  const double Rd = R.to_double();
  double wmax = 0;
  for (auto i : active) {
    double y = gl.nodes[i] / (4 * Rd);
    wmax = std::max(wmax, 2 * y / ((2 * y + 1) + std::sqrt(4 * y + 1)));
  }

  const bool exact = spec.exact() && pt.exact() && R.is_exact();
  double result = 0;
  for (int D = 40; D <= 320; D *= 2) {
    std::vector<double> g;
    if (exact) {
      auto h = hat_shells<Scalar>(spec, pt, D);
      g = to_doubles(koebe_compose<Scalar>(h, R));
    } else {
      auto h = hat_shells<double>(spec, pt, D);
      g = koebe_compose<double>(h, Rd);
    }
    double acc = 0;
    for (auto i : active) {
      double y = gl.nodes[i] / (4 * Rd);
      double w = 2 * y / ((2 * y + 1) + std::sqrt(4 * y + 1));
      acc += gl.weights[i] * horner(g, w);
    }
    result = acc;
    double tail = 0;
    for (int d = D - 4; d <= D; ++d) tail = std::max(tail, std::abs(g[d]) * std::pow(wmax, d));
    if (tail < 1e-13 * std::max(1.0, std::abs(acc))) break;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Recurrence

Scalar jack_eigen_e(const Partition& k, const Scalar& alpha, const Scalar& p0) {
  Scalar e(0);
  Scalar two_over = Scalar(2) / alpha;
  for (int i = 0; i < k.length(); ++i)
    e += Scalar(k[i]) * (Scalar(k[i] - 1) + two_over * (p0 - Scalar(i + 1)));
  return e;
}

Scalar twoF1_coefficient(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, const Partition& k) {
  Scalar num = gen_pochhammer(a, k, alpha) * gen_pochhammer(b, k, alpha);
  if (num.is_zero()) return Scalar(0);
  Scalar den = gen_pochhammer(c, k, alpha);
  if (den.is_zero()) throw std::domain_error("[c]_kappa vanishes at kappa=(" + k.str() + ")");
  return num / den;
}

RecurrenceReport recurrence_check_with(const CoefficientFn& A, const Scalar& a, const Scalar& b, const Scalar& c,
                                       const Scalar& alpha, int n, int m, int max_weight) {
  require_alpha(alpha);
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be >= 0");
  RecurrenceReport rep;
  const Scalar p0 = Scalar(n) - alpha * Scalar(m);
  const FatHook hook{n, m};
  auto jprod = [&](const Partition& k) { return hook_product(k, alpha) * hook_product_prime(k, alpha); };
  for (const auto& k : enumerate_partitions(max_weight, hook)) {
    Scalar lhs(0), literal(0);
    const Scalar jk = jprod(k);
    for (int i = 0; i <= k.length(); ++i) {
      auto kp = k.add_box(i);
      if (!kp || !hook.contains(*kp)) continue;
      Scalar Akp = A(*kp);
      if (Akp.is_zero()) continue;
      auto binoms = binomial_coefficients(*kp, alpha);
      auto it = binoms.find(k);
      Scalar binom = it == binoms.end() ? Scalar(0) : it->second;
      Scalar ki(k[i]);
      Scalar f = (c + ki - Scalar(i) / alpha) * (p0 + alpha * ki - Scalar(i));
      literal += binom * f * Akp;
      lhs += binom * f * jk / (alpha * jprod(*kp)) * Akp;
    }
    Scalar rhs = (jack_eigen_e(k, alpha, p0) + (a + b + Scalar(1) - (p0 - Scalar(1)) / alpha) * Scalar(k.weight()) +
                  p0 * a * b) *
                 A(k);
    ++rep.checked;
    Scalar diff = (lhs - rhs).abs();
    if (rep.max_abs_residual < diff) rep.max_abs_residual = diff;
    bool ok = diff.is_exact() ? diff.is_zero() : diff.to_double() <= 1e-10 * std::max(1.0, std::abs(rhs.to_double()));
    if (!ok) {
      rep.ok = false;
      rep.failures.push_back("(" + k.str() + "): lhs=" + lhs.str() + " rhs=" + rhs.str());
    }
    if (!((literal - rhs).is_zero())) rep.literal_form_ok = false;
  }
  return rep;
}

RecurrenceReport coefficient_recurrence_check(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha,
                                              int n, int m, int max_weight) {
  auto A = [&](const Partition& k) { return twoF1_coefficient(a, b, c, alpha, k); };
  return recurrence_check_with(A, a, b, c, alpha, n, m, max_weight);
}

// ---------------------------------------------------------------------------
// Kadell

namespace {

double eval_monomials_double(const SymPoly& poly, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  double total = 0;
  for (const auto& [mu, c] : poly.terms) {
    if (mu.length() > n) continue;
    std::vector<int> e(mu.parts());
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    double msum = 0;
    do {
      double term = 1;
      for (int i = 0; i < n; ++i) term *= std::pow(x[i], e[i]);
      msum += term;
    } while (std::next_permutation(e.begin(), e.end()));
    total += c.to_double() * msum;
  }
  return total;
}

}  // namespace

std::pair<double, double> kadell_jack_integral(const Partition& k, const Scalar& alpha, const Scalar& lambda1,
                                               const Scalar& lambda2, int ell) {
  require_alpha(alpha);
  if (ell < 1 || ell > 3) throw std::invalid_argument("kadell integral supports 1 <= ell <= 3");
  SymPoly poly = jack_in_monomial(k, alpha);
  const double l1 = lambda1.to_double(), l2 = lambda2.to_double(), lam = 1.0 / alpha.to_double();
  double quad = selberg_type_integral(ell, l1, l2, lam, [&](const std::vector<double>& x) {
                  return eval_monomials_double(poly, x);
                }) /
                selberg_constant(ell, l1, l2, lam);
  Scalar L(ell);
  Scalar formula = jack_at_ones(k, alpha, ell) *
                   gen_pochhammer(lambda1 + Scalar(1) + (L - Scalar(1)) / alpha, k, alpha) /
                   gen_pochhammer(lambda1 + lambda2 + Scalar(2) + Scalar(2) * (L - Scalar(1)) / alpha, k, alpha);
  return {quad, formula.to_double()};
}

KadellRecord kadell_superseries_lift(const SeriesSpec& mixed_spec, const Scalar& lambda1, const Scalar& lambda2,
                                     int ell, const SuperPoint& pt, int max_degree) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (ell > 3) throw std::invalid_argument("ell > 3 refused: quadrature cost grows too fast");
  const Scalar& alpha = mixed_spec.alpha;
  require_alpha(alpha);
  const Scalar L(ell);
  bool has_ell = false;
  for (auto& a : mixed_spec.upper) has_ell = has_ell || a == L / alpha;
  if (!has_ell) throw std::domain_error("lift needs an upper parameter equal to ell/alpha");

  SeriesSpec base = mixed_spec;
  base.variant = SeriesVariant::Mixed;
  base.z.assign(ell, Scalar(1));
  base.validate();
  const int n = pt.n(), m = pt.m();
  const SupportBounds bounds = series_support(base, n, m);
  const double a = alpha.to_double();
  SuperJackEvaluator<double> sp(a, to_doubles(pt.t), to_doubles(pt.s));
  std::vector<std::pair<Partition, double>> weights;
  std::vector<double> upd, lod;
  for (auto& x : base.upper) upd.push_back(x.to_double());
  for (auto& x : base.lower) lod.push_back(x.to_double());
  for (int w = 0; w <= max_degree; ++w)
    for (const auto& k : partitions_bounded(w, bounds.max_part, bounds.max_len, FatHook{n, m})) {
      double c = coefficient_T<double>(base, k, a, upd, lod, nullptr);
      if (c == 0) continue;
      double v = c * sp(k) / ones_ratio<double>(k, Partition{}, a, static_cast<double>(ell));
      if (v != 0) weights.emplace_back(k, v);
    }
  const double l1 = lambda1.to_double(), l2 = lambda2.to_double();
  auto integrand = [&](const std::vector<double>& z) {
    SuperJackEvaluator<double> pz(a, z, {});
    double acc = 0;
    for (auto& [k, v] : weights) acc += v * pz(k);
    return acc;
  };
  KadellRecord rec;
  rec.degree = max_degree;
  rec.integrated = selberg_type_integral(ell, l1, l2, 1.0 / a, integrand) / selberg_constant(ell, l1, l2, 1.0 / a);

  SeriesSpec lifted = mixed_spec;
  lifted.variant = SeriesVariant::Standard;
  lifted.z.clear();
  lifted.upper.push_back(lambda1 + Scalar(1) + (L - Scalar(1)) / alpha);
  lifted.lower.push_back(lambda1 + lambda2 + Scalar(2) + Scalar(2) * (L - Scalar(1)) / alpha);
  SeriesOptions opts;
  opts.allow_outside_radius = true;
  opts.compute_tail = false;
  SuperPoint fp;
  for (auto& t : pt.t) fp.t.push_back(t.as_float());
  for (auto& s : pt.s) fp.s.push_back(s.as_float());
  rec.lifted = eval_series(lifted, fp, max_degree, opts).value.to_double();
  rec.discrepancy = std::abs(rec.integrated - rec.lifted);
  return rec;
}

}  // namespace sjack
