#include "sjack/ensembles.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "sjack/series.hpp"
#include "sjack/special.hpp"

namespace sjack {

namespace {

constexpr double kPi = std::numbers::pi;

// Shortest decimal that round-trips, read back as an exact rational.
Scalar rationalize(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite parameter");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string text(buf, res.ptr);
  int exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stoi(text.substr(e + 1));
    text.resize(e);
  }
  bool neg = !text.empty() && text[0] == '-';
  if (neg) text.erase(0, 1);
  if (auto dot = text.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<int>(text.size() - dot - 1);
    text.erase(dot, 1);
  }
  mpz_class num(text, 10), ten(10), scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::abs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return Scalar(neg ? mpq_class(-q) : q);
}

double gamma_sign(double x) {
  if (x > 0) return 1;
  return (static_cast<long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

// ∏Γ(num)/∏Γ(den) with sign tracking.
double gamma_ratio(const std::vector<double>& num, const std::vector<double>& den) {
  double logv = 0, sign = 1;
  for (double x : num) {
    logv += lgamma_checked(x);
    sign *= gamma_sign(x);
  }
  for (double x : den) {
    logv -= lgamma_checked(x);
    sign *= gamma_sign(x);
  }
  return sign * std::exp(logv);
}

std::vector<double> symmetric_tridiagonal_eigs(const Eigen::VectorXd& d, const Eigen::VectorXd& e) {
  const auto n = d.size();
  if (n == 1) return {d(0)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

double chi(double k, std::mt19937_64& rng) {
  std::chi_squared_distribution<double> d(k);
  return std::sqrt(d(rng));
}

// B(s,t) on [−1,1]: density ∝ (1−x)^{s−1}(1+x)^{t−1}.
double beta_pm1(double s, double t, std::mt19937_64& rng) {
  std::gamma_distribution<double> gs(s, 1.0), gt(t, 1.0);
  double u = gs(rng), v = gt(rng);
  return 1 - 2 * u / (u + v);
}

std::vector<double> sample_hermite(int N, double beta, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(2.0));
  Eigen::VectorXd d(N), e(std::max(N - 1, 0));
  const double scale = 1 / std::sqrt(2 * beta);
  for (int i = 0; i < N; ++i) d(i) = g(rng) * scale;
  for (int i = 0; i + 1 < N; ++i) e(i) = chi(beta * (N - 1 - i), rng) * scale;
  return symmetric_tridiagonal_eigs(d, e);
}

std::vector<double> sample_laguerre(int N, double beta, double l1, std::mt19937_64& rng) {
  const double a = l1 + 1 + beta * (N - 1) / 2;
  std::vector<double> x(N), y(std::max(N - 1, 0));
  for (int i = 0; i < N; ++i) x[i] = chi(2 * a - beta * i, rng);
  for (int i = 0; i + 1 < N; ++i) y[i] = chi(beta * (N - 1 - i), rng);
  Eigen::VectorXd d(N), e(std::max(N - 1, 0));
  for (int i = 0; i < N; ++i) d(i) = (x[i] * x[i] + (i > 0 ? y[i - 1] * y[i - 1] : 0.0)) / beta;
  for (int i = 0; i + 1 < N; ++i) e(i) = x[i] * y[i] / beta;
  return symmetric_tridiagonal_eigs(d, e);
}

// Killip–Nenciu model on [−2,2] with weight (2−x)^{λ₁}(2+x)^{λ₂}, mapped by y = (2−x)/4.
std::vector<double> sample_jacobi(int N, double beta, double l1, double l2, std::mt19937_64& rng) {
  std::vector<double> al(2 * N + 1, 0.0);
  auto A = [&](int k) -> double& { return al[static_cast<std::size_t>(k + 1)]; };
  A(-1) = -1;
  for (int k = 0; k <= 2 * N - 2; ++k) {
    if (k % 2 == 0) {
      double s = (2 * N - k - 2) * beta / 4 + l1 + 1, t = (2 * N - k - 2) * beta / 4 + l2 + 1;
      A(k) = beta_pm1(s, t, rng);
    } else {
      double s = (2 * N - k - 3) * beta / 4 + l1 + l2 + 2, t = (2 * N - k - 1) * beta / 4;
      A(k) = beta_pm1(s, t, rng);
    }
  }
  A(2 * N - 1) = -1;
  Eigen::VectorXd d(N), e(std::max(N - 1, 0));
  for (int k = 0; k < N; ++k) {
    double prev2 = k >= 1 ? A(2 * k - 2) : 0.0;
    d(k) = (1 - A(2 * k - 1)) * A(2 * k) - (1 + A(2 * k - 1)) * prev2;
  }
  for (int k = 0; k + 1 < N; ++k)
    e(k) = std::sqrt(std::max(0.0, (1 - A(2 * k - 1)) * (1 - A(2 * k) * A(2 * k)) * (1 + A(2 * k + 1))));
  auto ev = symmetric_tridiagonal_eigs(d, e);
  for (auto& v : ev) v = (2 - v) / 4;
  return ev;
}

// Eigenphases of the CMV matrix L·M built from Verblunsky coefficients al (|al[N−1]| = 1).
std::vector<double> cmv_eigenphases(const std::vector<std::complex<double>>& al) {
  const int N = static_cast<int>(al.size());
  auto theta = [&](int k) {
    Eigen::Matrix2cd T;
    double rho = std::sqrt(std::max(0.0, 1 - std::norm(al[k])));
    T << std::conj(al[k]), rho, rho, -al[k];
    return T;
  };
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(N, N), M = Eigen::MatrixXcd::Zero(N, N);
  auto place = [&](Eigen::MatrixXcd& X, int start, int k) {
    if (start + 1 < N)
      X.block<2, 2>(start, start) = theta(k);
    else
      X(start, start) = std::conj(al[k]);
  };
  for (int k = 0; k < N; k += 2) place(L, k, k);
  M(0, 0) = 1;
  for (int k = 1; k < N; k += 2) place(M, k, k);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(L * M, false);
  std::vector<double> out(N);
  for (int i = 0; i < N; ++i) out[i] = std::arg(es.eigenvalues()(i));
  return out;
}

// Point of the closed disk with density ∝ (1 − |z|²)^{b−1}; b = 0 means uniform on the circle.
std::complex<double> theta_variable(double b, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double phase = 2 * kPi * uni(rng);
  double r = b > 0 ? std::sqrt(1 - std::pow(1 - uni(rng), 1 / b)) : 1.0;
  return std::polar(r, phase);
}

// Killip–Nenciu CMV model: Verblunsky α_k ~ Θ_{β(N−k−1)+1}, α_{N−1} uniform on the circle.
std::vector<double> sample_circular(int N, double beta, std::mt19937_64& rng) {
  std::vector<std::complex<double>> al(N);
  for (int k = 0; k < N; ++k) al[k] = theta_variable(beta * (N - k - 1) / 2, rng);
  return cmv_eigenphases(al);
}

// Deformed Verblunsky model (Bourgade, Nikeghbali, Rouault): independent γ_k with density
// ∝ (1 − |γ|²)^{β(N−k−1)/2 − 1} |1 − γ|^{2b}, then α_k = γ_k ∏_{j<k} (1 − γ_j)/(1 − γ̄_j).
// This gives the weight ∏|1 − e^{iθ}|^{2b}; negating the eigenvalues moves the singularity to −1.
std::vector<double> sample_circular_jacobi(int N, double beta, double b, std::mt19937_64& rng) {
  using C = std::complex<double>;
  if (b < 0) throw std::domain_error("circular Jacobi sampler needs b >= 0");
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<C> al(N);
  C phase(1.0);
  for (int k = 0; k < N; ++k) {
    C g;
    do g = theta_variable(beta * (N - k - 1) / 2, rng);
    while (uni(rng) >= std::pow(std::abs(1.0 - g) / 2, 2 * b));
    al[k] = g * phase;
    phase *= (1.0 - g) / (1.0 - std::conj(g));
  }
  auto th = cmv_eigenphases(al);
  for (auto& t : th) t = t > 0 ? t - kPi : t + kPi;
  return th;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t parts[2];
  seq.generate(parts, parts + 2);
  return (static_cast<std::uint64_t>(parts[0]) << 32) | parts[1];
}

double real_power(double base, double e, const char* what) {
  if (e == std::floor(e)) {
    if (base == 0 && e < 0) throw std::domain_error(std::string(what) + " point hits the spectrum");
    return std::pow(base, e);
  }
  if (base <= 0) throw std::domain_error(std::string(what) + " point inside the spectrum support");
  return std::pow(base, e);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Jacobi: return "jacobi";
    case Family::Laguerre: return "laguerre";
    case Family::Hermite: return "hermite";
    case Family::Circular: return "circular";
    case Family::CircularJacobi: return "circular-jacobi";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Jacobi, Family::Laguerre, Family::Hermite, Family::Circular, Family::CircularJacobi})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown ensemble family '" + name + "'");
}

void EnsembleSpec::validate() const {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (!(beta > 0)) throw std::domain_error("beta must be positive");
  if (family == Family::Jacobi && (lambda1 <= -1 || lambda2 <= -1))
    throw std::domain_error("Jacobi ensemble needs lambda1, lambda2 > -1");
  if (family == Family::Laguerre && lambda1 <= -1) throw std::domain_error("Laguerre ensemble needs lambda1 > -1");
  if (family == Family::CircularJacobi && b_cj <= -0.5) throw std::domain_error("circular Jacobi needs b > -1/2");
}

double log_selberg_constant(int N, double l1, double l2, double lam) {
  double r = 0;
  for (int j = 0; j < N; ++j)
    r += lgamma_checked(1 + l1 + j * lam) + lgamma_checked(1 + l2 + j * lam) + lgamma_checked(1 + (j + 1) * lam) -
         lgamma_checked(2 + l1 + l2 + (N + j - 1) * lam) - lgamma_checked(1 + lam);
  return r;
}

double selberg_constant(int N, double l1, double l2, double lam) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  std::vector<double> num, den;
  for (int j = 0; j < N; ++j) {
    num.insert(num.end(), {1 + l1 + j * lam, 1 + l2 + j * lam, 1 + (j + 1) * lam});
    den.insert(den.end(), {2 + l1 + l2 + (N + j - 1) * lam, 1 + lam});
  }
  return gamma_ratio(num, den);
}

double morris_constant(int N, double a, double b, double lam) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  std::vector<double> num, den;
  for (int j = 0; j < N; ++j) {
    num.insert(num.end(), {1 + lam + j * lam, 1 + a + b + j * lam});
    den.insert(den.end(), {1 + lam, 1 + a + j * lam, 1 + b + j * lam});
  }
  return std::pow(2 * kPi, N) * gamma_ratio(num, den);
}

std::pair<double, double> morris_selberg_bridge(int N, double a, double b, double lam) {
  const double l1 = -b - (N - 1) * lam - 1, l2 = a + b;
  double S = selberg_constant(N, l1, l2, lam);
  double expo = N + N * (N - 1) * lam / 2;
  if (expo != std::floor(expo)) throw std::domain_error("bridge sign factor is not real at these parameters");
  double sign = std::fmod(std::abs(expo), 2.0) == 0 ? 1 : -1;
  double bridged = sign * morris_constant(N, a, b, lam) / std::pow(2 * std::sin(kPi * b), N);
  return {S, bridged};
}

double log_laguerre_W(double l1, double beta, int N) {
  double r = ((1 + l1) * N + beta * N * (N - 1) / 2) * std::log(2 / beta);
  for (int j = 0; j < N; ++j)
    r += lgamma_checked(1 + beta / 2 + j * beta / 2) + lgamma_checked(1 + l1 + j * beta / 2) -
         lgamma_checked(1 + beta / 2);
  return r;
}

double laguerre_W(double l1, double beta, int N) {
  if (N < 1 || beta <= 0 || l1 <= -1) throw std::invalid_argument("laguerre_W needs N >= 1, beta > 0, lambda1 > -1");
  return std::exp(log_laguerre_W(l1, beta, N));
}

double gaussian_G(double beta, int N) {
  double r = (-N / 2.0 - beta * N * (N - 1) / 4) * std::log(beta) + (N / 2.0) * std::log(2 * kPi);
  for (int j = 0; j < N; ++j) r += lgamma_checked(1 + beta / 2 + j * beta / 2) - lgamma_checked(1 + beta / 2);
  return std::exp(r);
}

double selberg_quadrature(const EnsembleSpec& spec, const RatioQuery& query) {
  spec.validate();
  if (spec.family != Family::Jacobi) throw std::invalid_argument("selberg_quadrature needs a Jacobi ensemble");
  if (spec.N > 3) throw std::invalid_argument("selberg_quadrature supports N <= 3");
  if (query.empty()) return 1.0;
  const double lam = spec.beta / 2;
  auto f = [&](const std::vector<double>& x) { return ratio_observable(spec, query, x); };
  return selberg_type_integral(spec.N, spec.lambda1, spec.lambda2, lam, f) /
         selberg_constant(spec.N, spec.lambda1, spec.lambda2, lam);
}

std::vector<double> sample_ensemble(const EnsembleSpec& spec, std::mt19937_64& rng) {
  switch (spec.family) {
    case Family::Hermite: return sample_hermite(spec.N, spec.beta, rng);
    case Family::Laguerre: return sample_laguerre(spec.N, spec.beta, spec.lambda1, rng);
    case Family::Jacobi: return sample_jacobi(spec.N, spec.beta, spec.lambda1, spec.lambda2, rng);
    case Family::Circular: return sample_circular(spec.N, spec.beta, rng);
    case Family::CircularJacobi: return sample_circular_jacobi(spec.N, spec.beta, spec.b_cj, rng);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<double> sample_ensemble(const EnsembleSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(derive_seed(seed, 0));
  return sample_ensemble(spec, rng);
}

double ratio_observable(const EnsembleSpec& spec, const RatioQuery& query, const std::vector<double>& x) {
  const double mu2 = -spec.beta / 2;
  if (spec.family == Family::Circular || spec.family == Family::CircularJacobi) {
    std::complex<double> r(1.0);
    for (double th : x) {
      std::complex<double> z = std::polar(1.0, th);
      for (double t : query.t) r *= 1.0 + t * z;
      for (double s : query.s) {
        std::complex<double> base = 1.0 + s * z;
        if (std::abs(base) == 0) throw std::domain_error("denominator point hits the spectrum");
        r *= std::pow(base, mu2);
      }
    }
    return r.real();
  }
  double r = 1;
  for (double v : x) {
    if (query.form == RatioForm::OneMinusTX) {
      for (double t : query.t) r *= 1 - t * v;
      for (double s : query.s) r *= real_power(1 - s * v, mu2, "denominator");
    } else {
      for (double t : query.t) r *= v - t;
      for (double s : query.s) r *= real_power(v - s, mu2, "denominator");
    }
  }
  return r;
}

// A denominator root inside the support makes the expectation divergent.
static void check_denominators_off_support(const EnsembleSpec& spec, const RatioQuery& query) {
  const bool one_minus = query.form == RatioForm::OneMinusTX;
  for (double s : query.s) {
    double root = s;
    if (one_minus) {
      if (s == 0) continue;
      root = 1 / s;
    }
    bool inside = false;
    if (spec.family == Family::Jacobi) inside = root >= 0 && root <= 1;
    if (spec.family == Family::Laguerre) inside = root >= 0;
    if (inside) throw std::domain_error("denominator vanishes inside the eigenvalue support");
  }
}

MCEstimate mc_ratio_expectation(const EnsembleSpec& spec, const RatioQuery& query, long n_samples,
                                std::uint64_t seed, int threads) {
  spec.validate();
  if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");
  check_denominators_off_support(spec, query);
  MCEstimate est;
  est.seed = seed;
  if (query.empty()) {
    est.n_samples = n_samples;
    est.ess = static_cast<double>(n_samples);
    return est;
  }
  constexpr long kChunk = 4096;
  const long chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<double> sums(chunks, 0.0), sq(chunks, 0.0);
  auto work = [&](long first, long stride) {
    for (long c = first; c < chunks; c += stride) {
      std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(c) + 1));
      long count = std::min(kChunk, n_samples - c * kChunk);
      double s1 = 0, s2 = 0;
      for (long i = 0; i < count; ++i) {
        double v = ratio_observable(spec, query, sample_ensemble(spec, rng));
        s1 += v;
        s2 += v * v;
      }
      sums[c] = s1;
      sq[c] = s2;
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(chunks)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex mu;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (!err) err = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  double s1 = 0, s2 = 0;
  for (long c = 0; c < chunks; ++c) {
    s1 += sums[c];
    s2 += sq[c];
  }
  const double n = static_cast<double>(n_samples);
  est.mean = s1 / n;
  double var = std::max(0.0, (s2 - n * est.mean * est.mean) / (n - 1));
  est.std_error = std::sqrt(var / n);
  est.n_samples = n_samples;
  est.ess = n;
  return est;
}

double ratio_series_prediction(const EnsembleSpec& spec, const RatioQuery& query, int max_degree) {
  spec.validate();
  if (query.form != RatioForm::OneMinusTX)
    throw std::invalid_argument("series prediction is implemented for the (1 - t x) form");
  const int N = spec.N;
  const Scalar beta = rationalize(spec.beta), l1 = rationalize(spec.lambda1), l2 = rationalize(spec.lambda2);
  const Scalar alpha = beta / Scalar(2), two_b = Scalar(2) / beta;
  SuperPoint pt;
  for (double t : query.t) pt.t.push_back(rationalize(t));
  for (double s : query.s) pt.s.push_back(rationalize(s));
  SeriesOptions opts;
  opts.compute_tail = false;
  switch (spec.family) {
    case Family::Jacobi: {
      auto sp = SeriesSpec::standard({Scalar(-N), Scalar(1 - N) - two_b * (Scalar(1) + l1)},
                                     {Scalar(2 - 2 * N) - two_b * (Scalar(2) + l1 + l2)}, alpha);
      return eval_series(sp, pt, max_degree, opts).value.to_double();
    }
    case Family::CircularJacobi: {
      const Scalar b = rationalize(spec.b_cj);
      auto sp = SeriesSpec::standard({Scalar(-N), two_b * b}, {Scalar(1 - N) - two_b * (Scalar(1) + b)}, alpha);
      return eval_series(sp, pt, max_degree, opts).value.to_double();
    }
    case Family::Laguerre: {
      SuperPoint neg;
      for (auto& t : pt.t) neg.t.push_back(-t);
      for (auto& s : pt.s) neg.s.push_back(-s);
      Scalar c0 = l1 * Scalar(N) + alpha * Scalar(N * (N - 1)) + Scalar(N);
      return regularized_2SF0(Scalar(-N), Scalar(1 - N) - two_b * (Scalar(1) + l1), alpha, c0, neg);
    }
    default: throw std::invalid_argument("no series prediction for the " + family_name(spec.family) + " ensemble");
  }
}

namespace {

// Neville extrapolation of values(h) to h = 0.
double neville_at_zero(const std::vector<double>& h, std::vector<double> v) {
  const std::size_t n = h.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 0; i + k < n; ++i) v[i] = (h[i + k] * v[i] - h[i] * v[i + 1]) / (h[i + k] - h[i]);
  return v[0];
}

}  // namespace

GaussianComparison gaussian_ratio_vs_limit(const EnsembleSpec& spec, const RatioQuery& query,
                                           const std::vector<int>& L_grid, long n_samples, std::uint64_t seed,
                                           int threads) {
  spec.validate();
  if (spec.family != Family::Hermite) throw std::invalid_argument("gaussian_ratio_vs_limit needs a Hermite ensemble");
  if (!query.s.empty()) throw std::invalid_argument("gaussian limit comparison is implemented for m = 0");
  if (L_grid.size() < 2) throw std::invalid_argument("need at least two L values");
  RatioQuery q = query;
  q.form = RatioForm::XMinusT;
  GaussianComparison out;
  out.mc = mc_ratio_expectation(spec, q, n_samples, seed, threads);

  const int N = spec.N, n = static_cast<int>(q.t.size());
  const Scalar beta = rationalize(spec.beta), alpha = beta / Scalar(2), two_b = Scalar(2) / beta;
  const Scalar p0(n);
  std::vector<double> h;
  for (int L : L_grid) {
    if (L <= 0) throw std::invalid_argument("L must be positive");
    Scalar Ls(L);
    auto sp = SeriesSpec::standard({Scalar(-N), two_b * (Scalar(1) + p0) + Scalar(2) * Ls * Ls},
                                   {two_b * p0 + Ls * Ls}, alpha);
    SuperPoint pt;
    for (double t : q.t) pt.t.push_back(Scalar(1, 2) * (Scalar(1) - rationalize(t) / Ls));
    SeriesOptions opts;
    opts.compute_tail = false;
    Scalar v = eval_series(sp, pt, N * n, opts).value * (-Ls).pow(static_cast<long>(n) * N);
    out.L_grid.push_back(L);
    out.series_at_L.push_back(v.to_double());
    h.push_back(1.0 / L);
  }
  out.extrapolated = neville_at_zero(h, out.series_at_L);

  // Per-draw residual of the Gaussian system (a = −N, b = 2) in the first variable; the residual is
  // linear in F, so its mean and spread estimate the residual of the expectation.
  if (n >= 1) {
    const double a = -N, b = 2, al = spec.beta / 2, step = 1e-3;
    std::mt19937_64 rng(derive_seed(seed, 0x9e3779b9ULL));
    const long draws = n_samples;
    double s1 = 0, s2 = 0;
    for (long k = 0; k < draws; ++k) {
      auto x = sample_ensemble(spec, rng);
      auto F = [&](const std::vector<double>& t) {
        RatioQuery r;
        r.t = t;
        r.form = RatioForm::XMinusT;
        return ratio_observable(spec, r, x);
      };
      auto shifted = [&](int i, double d) {
        auto t = q.t;
        t[i] += d;
        return F(t);
      };
      const double f0 = F(q.t);
      auto d1 = [&](int i) { return (shifted(i, step) - shifted(i, -step)) / (2 * step); };
      double res = (shifted(0, step) - 2 * f0 + shifted(0, -step)) / (step * step) - b * q.t[0] * d1(0) - a * b * f0;
      for (int k2 = 1; k2 < n; ++k2) res += (1 / al) * (d1(0) - d1(k2)) / (q.t[0] - q.t[k2]);
      s1 += res;
      s2 += res * res;
    }
    const double nd = static_cast<double>(draws);
    out.pde_residual_mean = s1 / nd;
    out.pde_residual_se = std::sqrt(std::max(0.0, (s2 - nd * out.pde_residual_mean * out.pde_residual_mean) / (nd - 1)) / nd);
  }
  return out;
}

HardEdge laguerre_hardedge_quantities(int N, const Scalar& beta, int n, int m, const Scalar& s) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be >= 0");
  if (beta.sign() <= 0) throw std::domain_error("beta must be positive");
  if (s.sign() <= 0) throw std::domain_error("s must be positive");
  const Scalar alpha = beta / Scalar(2), two_b = Scalar(2) / beta;
  const Scalar a = Scalar(n) - alpha * Scalar(m);
  if (a.to_double() <= -1) throw std::domain_error("need a = n - (beta/2) m > -1");
  const double bd = beta.to_double(), ad = a.to_double(), sd = s.to_double();
  SuperPoint pt;
  Scalar inv = Scalar(1) / s;
  pt.t.assign(n, inv);
  pt.s.assign(m, inv);
  const double pref = std::exp(-N * bd * sd / 2) * std::pow(sd, ad * N);
  HardEdge out;
  Scalar c0 = Scalar(N) + alpha * Scalar(N * (N - 1));
  out.E = pref * std::exp(log_laguerre_W(0, bd, N) - log_laguerre_W(ad, bd, N)) *
          regularized_2SF0(Scalar(-N), Scalar(1 - N) - two_b, alpha, c0, pt);
  const int M = N - 1;
  double tail = 1;
  if (M > 0) {
    Scalar c1 = beta * Scalar(M) + alpha * Scalar(M * (M - 1)) + Scalar(M);
    tail = regularized_2SF0(Scalar(-M), Scalar(-N) - two_b, alpha, c1, pt);
  }
  out.p = N * pref * std::exp(log_laguerre_W(bd, bd, M) - log_laguerre_W(ad, bd, N)) * tail;
  return out;
}

HardEdge laguerre_hardedge_quadrature(int N, double beta, double a, double s) {
  if (N < 1 || N > 2) throw std::invalid_argument("hard-edge quadrature supports N in {1, 2}");
  HardEdge out;
  auto shifted = [&](const std::vector<double>& x) {
    double r = 1;
    for (double v : x) r *= std::pow(v + s, a);
    return r;
  };
  const double logW = log_laguerre_W(a, beta, N);
  out.E = std::exp(-N * beta * s / 2 - logW) * laguerre_type_integral(N, 0, beta / 2, beta, shifted);
  out.p = N * std::exp(-N * beta * s / 2 - logW) * std::pow(s, a) *
          laguerre_type_integral(N - 1, beta, beta / 2, beta, shifted);
  return out;
}

GammaSelbergRecord gamma_selberg_check(const Scalar& alpha, const Scalar& gamma, const Scalar& lambda1,
                                       const Scalar& lambda2, int N, const std::vector<Scalar>& t,
                                       const std::vector<Scalar>& s, int max_degree) {
  require_alpha(alpha);
  if (N < 1 || N > 2) throw std::invalid_argument("gamma_selberg_check supports N in {1, 2}");
  const double l1 = lambda1.to_double(), l2 = lambda2.to_double(), lam = 1 / alpha.to_double();
  const double g = gamma.to_double();
  const auto td = to_doubles(t), sd = to_doubles(s);
  auto f = [&](const std::vector<double>& x) {
    double r = 1;
    for (double v : x) {
      for (double tt : td) r *= 1 - v * tt;
      for (double ss : sd) r *= real_power(1 - v * ss, -g, "denominator");
    }
    return r;
  };
  GammaSelbergRecord rec;
  rec.quadrature = selberg_type_integral(N, l1, l2, lam, f) / selberg_constant(N, l1, l2, lam);
  auto sp = SeriesSpec::gamma_deformed(
      {Scalar(-N), Scalar(1 - N) - alpha * (Scalar(1) + lambda1)},
      {Scalar(2 - 2 * N) - alpha * (Scalar(2) + lambda1 + lambda2)}, Scalar(1) / alpha, gamma);
  SeriesOptions opts;
  opts.compute_tail = false;
  SuperPoint pt{t, s};
  rec.series = eval_series(sp, pt, max_degree, opts).value.to_double();
  rec.discrepancy = std::abs(rec.quadrature - rec.series);
  return rec;
}

}  // namespace sjack
