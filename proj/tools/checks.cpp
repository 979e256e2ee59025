#include "checks.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sjack/ensembles.hpp"
#include "sjack/holonomic.hpp"
#include "sjack/series.hpp"
#include "sjack/special.hpp"

namespace sjack::checks {

std::string fmt_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

CheckRow make_row(std::string id, double lhs, double rhs, double tol, bool relative) {
  CheckRow r;
  r.id = std::move(id);
  r.lhs = fmt_double(lhs);
  r.rhs = fmt_double(rhs);
  r.abs_err = std::abs(lhs - rhs);
  if (relative && rhs != 0) r.abs_err /= std::abs(rhs);
  r.tol = tol;
  r.pass = std::isfinite(r.abs_err) && r.abs_err < tol;
  return r;
}

namespace {

CheckRow exact_row(std::string id, const Scalar& lhs, const Scalar& rhs) {
  CheckRow r;
  r.id = std::move(id);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.exact = true;
  r.abs_err = (lhs - rhs).abs().to_double();
  r.tol = 0;
  r.pass = lhs == rhs;
  return r;
}

CheckRow flag_row(std::string id, bool ok) {
  CheckRow r;
  r.id = std::move(id);
  r.lhs = ok ? "true" : "false";
  r.rhs = "true";
  r.exact = true;
  r.abs_err = ok ? 0 : 1;
  r.pass = ok;
  return r;
}

Scalar Q(const char* s) { return Scalar::rational(s); }

std::string tag(const std::string& base, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string s = base;
  char sep = '/';
  for (auto& [k, v] : kv) {
    s += sep + k + "=" + v;
    sep = ',';
  }
  return s;
}

Evaluable as_function(const BasisExpansion& ex) {
  return [&ex](const std::vector<double>& t, const std::vector<double>& s) {
    return ex.evaluate(SuperPoint{to_scalars(t), to_scalars(s)});
  };
}

// ----------------------------------------------------------------------------------------------

std::vector<CheckRow> c_selberg(const SuiteOptions&) {
  std::vector<CheckRow> rows;
  const char* grid[] = {"0", "1/2", "1"};
  for (int N = 1; N <= 2; ++N)
    for (auto l1 : grid)
      for (auto l2 : grid)
        for (auto lam : grid) {
          double a = Q(l1).to_double(), b = Q(l2).to_double(), c = Q(lam).to_double();
          double quad = selberg_type_integral(N, a, b, c, [](const std::vector<double>&) { return 1.0; });
          rows.push_back(make_row(tag("selberg", {{"N", std::to_string(N)}, {"l1", l1}, {"l2", l2}, {"lam", lam}}),
                                  quad, selberg_constant(N, a, b, c), 1e-8, true));
        }
  return rows;
}

std::vector<CheckRow> c_headline(const SuiteOptions&) {
  std::vector<CheckRow> rows;
  for (int N = 1; N <= 3; ++N) {
    EnsembleSpec sp;
    sp.family = Family::Jacobi;
    sp.N = N;
    sp.beta = 2;
    sp.lambda1 = 0.5;
    sp.lambda2 = 0.5;
    RatioQuery q;
    q.t = {0.2};
    q.s = {0.3};
    rows.push_back(make_row(tag("deformed-selberg", {{"N", std::to_string(N)}}), selberg_quadrature(sp, q),
                            ratio_series_prediction(sp, q, 20), 1e-6));
  }
  return rows;
}

std::vector<CheckRow> c_kadell(const SuiteOptions&) {
  std::vector<CheckRow> rows;
  for (const char* a : {"1/2", "1", "2"})
    for (int w = 0; w <= 3; ++w)
      for (const auto& k : partitions_of(w)) {
        auto [quad, closed] = kadell_jack_integral(k, Q(a), Q("1/2"), Q("1/3"), 2);
        rows.push_back(make_row(tag("kadell", {{"alpha", a}, {"kappa", k.str()}}), quad, closed, 1e-8, true));
      }
  return rows;
}

std::vector<CheckRow> c_recurrence(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  const int maxw = o.full ? 7 : 6;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}})
    for (const char* a : {"1/2", "2/3", "3"}) {
      auto r = coefficient_recurrence_check(Q("2/7"), Q("-5/3"), Q("11/5"), Q(a), n, m, maxw);
      auto row = exact_row(tag("recurrence", {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"alpha", a}}),
                           r.max_abs_residual, Scalar(0));
      row.pass = row.pass && r.ok && r.checked > 0;
      rows.push_back(row);
    }
  return rows;
}

std::vector<CheckRow> c_holonomic(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  const Scalar al(2), l1(1, 2), l2(1, 2);
  const int N = 3;
  const Scalar a(-N), b = Scalar(1 - N) - (Scalar(1) + l1) / al, c = Scalar(2 - 2 * N) - (Scalar(2) + l1 + l2) / al;
  auto sys = DeformedSystemSpec::jacobi(a, b, c, al, 1, 1);
  auto ex = truncated_2SF1(a, b, c, al, 1, 1, 16);
  auto F = as_function(ex);
  std::mt19937_64 rng(o.seed ^ 0x5151);
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  const int points = o.full ? 40 : 10;
  for (int p = 0; p < points; ++p) {
    double t = u(rng), s = u(rng);
    while (std::abs(t - s) < 5e-3) s = u(rng);
    auto r = pointwise_system_residual(sys, F, {t}, {s}, 1e-3);
    for (std::size_t e = 0; e < r.size(); ++e)
      rows.push_back(make_row(tag("pde", {{"point", std::to_string(p)}, {"eq", std::to_string(e + 1)}}), r[e], 0, 1e-5));
  }
  for (int p = 0; p < points; ++p) {
    double t = u(rng);
    rows.push_back(make_row(tag("cancellation", {{"point", std::to_string(p)}}),
                            cancellation_residual(F, al, {t}, {t}, 0, 0, 1e-3), 0, 1e-6));
  }
  auto sr = summed_operator_residual(sys, ex, 16);
  rows.push_back(exact_row("summed-operator/below-top-shell", sr.below_top, Scalar(0)));
  if (o.full) {
    auto sys2 = DeformedSystemSpec::jacobi(Q("-3/2"), Q("1/3"), Q("5/7"), Q("1/2"), 2, 1);
    auto e2 = truncated_2SF1(sys2.a, sys2.b, sys2.c, sys2.alpha, 2, 1, 14);
    auto F2 = as_function(e2);
    for (int p = 0; p < 10; ++p) {
      auto r = pointwise_system_residual(sys2, F2, {u(rng), u(rng)}, {u(rng)}, 1e-3);
      for (std::size_t e = 0; e < r.size(); ++e)
        rows.push_back(make_row(tag("pde-2-1", {{"point", std::to_string(p)}, {"eq", std::to_string(e + 1)}}), r[e],
                                0, 1e-5));
    }
  }
  return rows;
}

std::vector<CheckRow> c_transforms(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(o.seed ^ 0x7a7a);
  std::uniform_real_distribution<double> unit(0, 1);
  const Scalar alphas[] = {Q("1/2"), Q("1"), Q("3/2"), Q("2")};
  const int draws = o.full ? 200 : 50;
  auto F = [](double v) { return Scalar::from_double(v); };
  for (int d = 0; d < draws; ++d) {
    const Scalar al = alphas[rng() % 4];
    const int n = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 2);
    double r1 = std::max(al.to_double(), 1 / al.to_double());
    double radius = std::min(convergence_radius(al, n, m), 1 / (r1 * r1 * (m + r1 * n)));
    auto point = [&](double scale) {
      SuperPoint pt;
      for (int i = 0; i < n; ++i) pt.t.push_back(F(scale * (2 * unit(rng) - 1)));
      for (int j = 0; j < m; ++j) pt.s.push_back(F(scale * (2 * unit(rng) - 1)));
      return pt;
    };
    const Scalar a = F(4 * unit(rng) - 2), b = F(4 * unit(rng) - 2), c = F(0.5 + 2.5 * unit(rng));
    const std::string id = std::to_string(d);
    auto spec = SeriesSpec::standard({a, b}, {c}, al);
    SeriesOptions so;
    so.compute_tail = false;
    {
      auto pt = point(0.25 * radius);
      double lhs = eval_series(spec, pt, 20, so).value.to_double();
      auto [ds, dp] = dual_spec(spec, pt);
      rows.push_back(make_row("duality/" + id, lhs, eval_series(ds, dp, 20, so).value.to_double(), 1e-9));
    }
    for (int w = 1; w <= 3; ++w) {
      auto [l, r] = pfaff_euler(spec, w, point(0.25 * radius), 20);
      rows.push_back(make_row("pfaff-euler-" + std::to_string(w) + "/" + id, l, r, 1e-9));
    }
    {
      auto ks = SeriesSpec::standard({a}, {c}, al);
      auto [l, r] = kummer(ks, point(0.25 * radius), 20);
      rows.push_back(make_row("kummer/" + id, l, r, 1e-9));
    }
  }
  return rows;
}

std::vector<CheckRow> c_super_jacobi(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(o.seed ^ 0x3c3c);
  const Scalar alphas[] = {Q("1/2"), Q("1"), Q("2/3"), Q("3"), Q("3/2")};
  const int draws = o.full ? 30 : 10;
  for (int d = 0; d < draws; ++d) {
    const int n = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 2);
    const int N = m + static_cast<int>(rng() % 2), M = n + static_cast<int>(rng() % 3);
    const Scalar al = alphas[rng() % 5];
    const Scalar c(static_cast<long>(rng() % 97) + 3, 11);
    auto sj = super_jacobi(N, M, al, c, n, m);
    const std::string id = tag("draw", {{"N", std::to_string(N)}, {"M", std::to_string(M)}, {"n", std::to_string(n)},
                                        {"m", std::to_string(m)}, {"alpha", al.str()}, {"c", c.str()}});
    rows.push_back(exact_row("eigenvalue-top/" + id, sj.eps_top, sj.ab_p0));
    rows.push_back(flag_row("eigen-equation/" + id, sj.eigen_ok));
    rows.push_back(flag_row("top-term/" + id, sj.top_ok));

    // Support: coefficient nonzero exactly on κ ∈ H_{n,m} with κ₁ ≤ N and ℓ(κ) ≤ M.
    auto spec = SeriesSpec::standard({Scalar(-N), Scalar(M) / al}, {c}, al);
    long mismatches = 0;
    for (const auto& k : enumerate_partitions(sj.kappa_max.weight() + 2, FatHook{n, m})) {
      bool inside = k[0] <= N && k.length() <= M;
      bool nonzero = !series_coefficient(spec, k).is_zero();
      bool vanish = pochhammer_vanishes(k, al, VanishKind::NegInt, N) ||
                    pochhammer_vanishes(k, al, VanishKind::OverAlpha, M);
      if (inside != nonzero || vanish == inside) ++mismatches;
    }
    rows.push_back(exact_row("support/" + id, Scalar(mismatches), Scalar(0)));
    rows.push_back(exact_row("support-weight/" + id, Scalar(sj.poly.degree()), Scalar(sj.kappa_max.weight())));
  }
  return rows;
}

CheckRow mc_row(const std::string& id, const MCEstimate& e, double prediction) {
  auto r = make_row(id, e.mean, prediction, 3 * e.std_error);
  r.pass = r.abs_err <= r.tol;
  return r;
}

std::vector<CheckRow> c_ensembles(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  const long samples = 100000;
  EnsembleSpec sp;
  sp.N = 3;
  RatioQuery q;
  q.t = {0.1};

  sp.family = Family::Jacobi;
  sp.beta = 2;
  sp.lambda1 = 0.5;
  sp.lambda2 = 0.5;
  q.s = {0.05};
  rows.push_back(mc_row("jacobi/N=3,beta=2", mc_ratio_expectation(sp, q, samples, o.seed, o.threads),
                        ratio_series_prediction(sp, q)));

  sp.family = Family::Laguerre;
  q.s = {-0.05};
  rows.push_back(mc_row("laguerre/N=3,beta=2", mc_ratio_expectation(sp, q, samples, o.seed + 1, o.threads),
                        ratio_series_prediction(sp, q)));

  sp.family = Family::CircularJacobi;
  sp.beta = 4;
  sp.b_cj = 1;
  q.s = {0.05};
  rows.push_back(mc_row("circular-jacobi/N=3,beta=4", mc_ratio_expectation(sp, q, samples, o.seed + 2, o.threads),
                        ratio_series_prediction(sp, q)));

  if (o.full) {
    sp.family = Family::Jacobi;
    sp.beta = 1;
    sp.lambda1 = 1;
    sp.lambda2 = 0.5;
    q.t = {0.2, -0.1};
    q.s = {0.1};
    rows.push_back(mc_row("jacobi/N=3,beta=1,n=2", mc_ratio_expectation(sp, q, samples, o.seed + 3, o.threads),
                          ratio_series_prediction(sp, q)));
  }
  return rows;
}

std::vector<CheckRow> c_gaussian(const SuiteOptions& o) {
  EnsembleSpec sp;
  sp.family = Family::Hermite;
  sp.N = 2;
  sp.beta = 2;
  RatioQuery q;
  q.t = {3};
  q.form = RatioForm::XMinusT;
  auto g = gaussian_ratio_vs_limit(sp, q, {8, 16, 32, 64, 128}, 100000, o.seed, o.threads);
  std::vector<CheckRow> rows;
  rows.push_back(mc_row("mc-vs-limit/N=2,beta=2,t=3", g.mc, g.extrapolated));
  auto r = make_row("gaussian-system-residual/N=2,beta=2,t=3", g.pde_residual_mean, 0, 3 * g.pde_residual_se);
  r.pass = r.abs_err <= r.tol;
  rows.push_back(r);
  return rows;
}

std::vector<CheckRow> c_bound(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(o.seed ^ 0x9e9e);
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}})
    for (const char* as : {"1/2", "1", "2"}) {
      const Scalar al = Q(as);
      double worst = 0;
      for (int p = 0; p < 100; ++p) {
        double scale = std::exp(-3 * std::abs(u(rng)));
        SuperPoint pt;
        std::vector<double> t, s;
        for (int i = 0; i < n; ++i) t.push_back(scale * u(rng));
        for (int j = 0; j < m; ++j) s.push_back(scale * u(rng));
        pt.t = to_scalars(t);
        pt.s = to_scalars(s);
        SuperJackEvaluator<double> ev(al.to_double(), t, s);
        const double norm = pt.norm();
        for (const auto& k : enumerate_partitions(6, FatHook{n, m})) {
          double bound = upbound(k, al, n, m, norm);
          worst = std::max(worst, std::abs(ev(k)) / bound);
        }
      }
      auto r = make_row(tag("upbound", {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"alpha", as}}), worst, 1, 0);
      r.abs_err = std::max(0.0, worst - 1);
      r.pass = worst <= 1;
      rows.push_back(r);
    }

  // Shell norms inside the radius decay geometrically: the least-squares slope of log(shell norm)
  // over the upper half of the shells is negative.
  std::uniform_real_distribution<double> unit(0, 1);
  const Scalar alphas[] = {Q("1/2"), Q("1"), Q("2")};
  for (int cs = 0; cs < 20; ++cs) {
    const Scalar al = alphas[cs % 3];
    const int n = 1 + cs % 2, m = 1 + (cs / 2) % 2;
    const double radius = convergence_radius(al, n, m);
    auto F = [](double v) { return Scalar::from_double(v); };
    auto spec = SeriesSpec::standard({F(0.3 + unit(rng)), F(0.3 + unit(rng))}, {F(0.5 + unit(rng))}, al);
    SuperPoint pt;
    for (int i = 0; i < n; ++i) pt.t.push_back(F(0.9 * radius * (0.5 + 0.5 * unit(rng))));
    for (int j = 0; j < m; ++j) pt.s.push_back(F(-0.9 * radius * (0.5 + 0.5 * unit(rng))));
    SeriesOptions so;
    so.compute_tail = false;
    const int deg = 16;
    auto rep = eval_series(spec, pt, deg, so).report;
    std::vector<double> xs, ys;
    for (int k = deg / 2; k <= deg; ++k)
      if (rep.shell_norms[static_cast<std::size_t>(k)] > 0) {
        xs.push_back(k);
        ys.push_back(std::log(rep.shell_norms[static_cast<std::size_t>(k)]));
      }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= xs.size();
    my /= xs.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
    const double ratio = std::exp(sxy / sxx);
    auto r = make_row("shell-decay/" + std::to_string(cs), ratio, 1, 0);
    r.abs_err = std::max(0.0, ratio - 1);
    r.pass = ratio < 1;
    rows.push_back(r);
  }
  return rows;
}

std::vector<CheckRow> c_gamma(const SuiteOptions&) {
  std::vector<CheckRow> rows;
  const Scalar al(2);
  for (const char* g : {"1", "2", "1/2", "4"}) {
    auto rec = gamma_selberg_check(al, Q(g), Q("0"), Q("0"), 1, {Q("1/10")}, {Q("1/10")}, 30);
    rows.push_back(make_row(tag("gamma-selberg", {{"alpha", "2"}, {"gamma", g}}), rec.quadrature, rec.series, 1e-7));
  }
  // γ = r·α': the deformed series at (t; s) equals the plain series with each s_j repeated r times.
  for (const char* as : {"1/2", "2", "3/2"}) {
    const Scalar a = Q(as);
    for (int r = 1; r <= 2; ++r) {
      auto deformed = SeriesSpec::gamma_deformed({Q("2/7"), Q("-3/5")}, {Q("9/4")}, a, a * Scalar(r));
      auto plain = SeriesSpec::standard({Q("2/7"), Q("-3/5")}, {Q("9/4")}, a);
      SuperPoint pt{{Q("1/9")}, {Q("-1/13")}}, rep{{Q("1/9")}, {}};
      for (int k = 0; k < r; ++k) rep.s.push_back(Q("-1/13"));
      SeriesOptions so;
      so.compute_tail = false;
      so.allow_outside_radius = true;  // truncated polynomials compared term by term
      rows.push_back(exact_row(tag("replication", {{"alpha", as}, {"r", std::to_string(r)}}),
                               eval_series(deformed, pt, 8, so).value, eval_series(plain, rep, 8, so).value));
    }
  }
  return rows;
}

struct Criterion {
  std::string id, title;
  double budget;
  std::vector<CheckRow> (*run)(const SuiteOptions&);
};

const std::vector<Criterion>& registry() {
  static const std::vector<Criterion> reg = {
      {"selberg-constant", "Selberg constant vs tensor quadrature", 10, c_selberg},
      {"deformed-selberg-2sf1", "deformed Selberg integral equals S_N times 2SF1", 120, c_headline},
      {"kadell-integral", "Kadell Jack integral", 0, c_kadell},
      {"coefficient-recurrence", "exact 2SF1 coefficient recurrence", 0, c_recurrence},
      {"holonomic-residual", "deformed holonomic system residuals", 0, c_holonomic},
      {"transformation-identities", "duality, Pfaff-Euler and Kummer", 0, c_transforms},
      {"super-jacobi-termination", "termination and super Jacobi eigenvalue", 0, c_super_jacobi},
      {"ensemble-oracles", "Monte Carlo ratios vs series", 900, c_ensembles},
      {"gaussian-limit", "Gaussian ensemble vs large-L Jacobi series", 300, c_gaussian},
      {"convergence-bound", "super Jack bound and shell decay", 0, c_bound},
      {"gamma-deformation", "gamma-deformed Selberg integral", 0, c_gamma},
  };
  return reg;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& criteria() {
  static const auto list = [] {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& c : registry()) v.emplace_back(c.id, c.title);
    return v;
  }();
  return list;
}

std::vector<CriterionReport> run_acceptance(const SuiteOptions& opts,
                                            const std::function<void(const CriterionReport&)>& on_done) {
  std::vector<CriterionReport> out;
  for (const auto& c : registry()) {
    if (!opts.filter.empty() && c.id.find(opts.filter) == std::string::npos) continue;
    CriterionReport rep;
    rep.id = c.id;
    rep.title = c.title;
    rep.time_budget = c.budget;
    auto t0 = std::chrono::steady_clock::now();
    try {
      rep.rows = c.run(opts);
    } catch (const std::exception& e) {
      CheckRow r;
      r.id = "error";
      r.lhs = e.what();
      r.rhs = "";
      r.abs_err = INFINITY;
      rep.rows.push_back(r);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.within_budget = c.budget <= 0 || rep.seconds <= c.budget;
    rep.pass = rep.within_budget && !rep.rows.empty() &&
               std::all_of(rep.rows.begin(), rep.rows.end(), [](const CheckRow& r) { return r.pass; });
    if (on_done) on_done(rep);
    out.push_back(std::move(rep));
  }
  return out;
}

// ------------------------------------------------------------------------------------------------
// verify

std::string VerifyParams::get(const std::string& key, const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() || it->second.empty() ? fallback : it->second;
}

namespace {

Scalar num(const VerifyParams& p, const std::string& key, const std::string& fallback) {
  return Scalar::parse(p.get(key, fallback), p.allow_float);
}
int integer(const VerifyParams& p, const std::string& key, int fallback) {
  return std::stoi(p.get(key, std::to_string(fallback)));
}
std::vector<Scalar> list(const VerifyParams& p, const std::string& key, const std::string& fallback) {
  std::vector<Scalar> v;
  std::string text = p.get(key, fallback);
  if (text == "-") return v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    v.push_back(Scalar::parse(text.substr(pos, next - pos), p.allow_float));
    pos = next + 1;
  }
  return v;
}

// The negative control shifts lhs by (fudge − 1) on the scale of the compared values.
CheckRow fudged(std::string id, double lhs, double rhs, double tol, const VerifyParams& p, bool relative = false) {
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  return make_row(std::move(id), lhs + (p.fudge - 1) * (scale > 0 ? scale : 1), rhs, tol, relative);
}

CheckRow fudged_exact(std::string id, const Scalar& lhs, const Scalar& rhs, const VerifyParams& p) {
  Scalar l = lhs;
  if (p.fudge != 1) l = l + Scalar::from_double(p.fudge - 1) * (lhs.is_zero() ? Scalar(1) : lhs);
  return exact_row(std::move(id), l, rhs);
}

using Verifier = std::vector<CheckRow> (*)(const VerifyParams&);

std::vector<CheckRow> v_selberg(const VerifyParams& p) {
  const int N = integer(p, "N", 2);
  double l1 = num(p, "lambda1", "1/2").to_double(), l2 = num(p, "lambda2", "1/2").to_double(),
         lam = num(p, "lambda", "1").to_double();
  if (N < 1 || N > 3) throw std::invalid_argument("selberg-constant supports N in 1..3");
  double quad = selberg_type_integral(N, l1, l2, lam, [](const std::vector<double>&) { return 1.0; });
  return {fudged("selberg-constant", quad, selberg_constant(N, l1, l2, lam), 1e-8, p, true)};
}

std::vector<CheckRow> v_kadell(const VerifyParams& p) {
  auto k = Partition::parse(p.get("kappa", "2,1"));
  auto [q, f] = kadell_jack_integral(k, num(p, "alpha", "1"), num(p, "lambda1", "1/2"), num(p, "lambda2", "1/3"),
                                     integer(p, "N", 2));
  return {fudged("kadell-integral", q, f, 1e-8, p, true)};
}

std::vector<CheckRow> v_recurrence(const VerifyParams& p) {
  auto r = coefficient_recurrence_check(num(p, "a", "2/7"), num(p, "b", "-5/3"), num(p, "c", "11/5"),
                                        num(p, "alpha", "1"), integer(p, "n", 1), integer(p, "m", 1),
                                        integer(p, "maxw", 5));
  auto row = fudged_exact("recurrence", r.max_abs_residual, Scalar(0), p);
  row.pass = row.pass && r.ok;
  return {row};
}

std::vector<CheckRow> v_kaneko(const VerifyParams& p) {
  auto r = kaneko_criterion_check(num(p, "a", "2/7"), num(p, "b", "-5/3"), num(p, "c", "11/5"), num(p, "alpha", "2"),
                                  integer(p, "n", 2), integer(p, "m", 1), integer(p, "maxw", 5));
  auto row = flag_row("kaneko-criterion", r.ok);
  if (p.fudge != 1) row = flag_row("kaneko-criterion", false);
  return {row};
}

std::vector<CheckRow> v_holonomic(const VerifyParams& p) {
  const Scalar al = num(p, "alpha", "2"), a = num(p, "a", "-3"), b = num(p, "b", "-11/4"), c = num(p, "c", "-11/2");
  const auto t = list(p, "t", "3/100"), s = list(p, "s", "1/50");
  const int deg = integer(p, "degree", 16), n = static_cast<int>(t.size()), m = static_cast<int>(s.size());
  auto sys = DeformedSystemSpec::jacobi(a, b, c, al, n, m);
  auto ex = truncated_2SF1(a, b, c, al, n, m, deg);
  auto F = as_function(ex);
  std::vector<CheckRow> rows;
  auto r = pointwise_system_residual(sys, F, to_doubles(t), to_doubles(s), 1e-3);
  for (std::size_t e = 0; e < r.size(); ++e) rows.push_back(fudged("pde/eq=" + std::to_string(e + 1), r[e], 0, 1e-5, p));
  if (n > 0 && m > 0) {
    auto tt = to_doubles(t), ss = to_doubles(s);
    ss[0] = tt[0];
    rows.push_back(fudged("cancellation", cancellation_residual(F, al, tt, ss, 0, 0, 1e-3), 0, 1e-6, p));
  }
  rows.push_back(fudged_exact("summed-operator", summed_operator_residual(sys, ex, deg).below_top, Scalar(0), p));
  return rows;
}

SeriesSpec two_f_one(const VerifyParams& p) {
  return SeriesSpec::standard({num(p, "a", "1/3"), num(p, "b", "-1/2")}, {num(p, "c", "7/4")}, num(p, "alpha", "2"));
}

SuperPoint point(const VerifyParams& p) { return SuperPoint{list(p, "t", "1/20"), list(p, "s", "-1/30")}; }

std::vector<CheckRow> v_pfaff(const VerifyParams& p) {
  std::vector<CheckRow> rows;
  for (int w = 1; w <= 3; ++w) {
    auto [l, r] = pfaff_euler(two_f_one(p), w, point(p), integer(p, "degree", 30));
    rows.push_back(fudged("pfaff-euler-" + std::to_string(w), l, r, 1e-9, p));
  }
  return rows;
}

std::vector<CheckRow> v_kummer(const VerifyParams& p) {
  auto spec = SeriesSpec::standard({num(p, "a", "1/3")}, {num(p, "c", "7/4")}, num(p, "alpha", "2"));
  auto [l, r] = kummer(spec, point(p), integer(p, "degree", 30));
  return {fudged("kummer", l, r, 1e-9, p)};
}

std::vector<CheckRow> v_duality(const VerifyParams& p) {
  auto spec = two_f_one(p);
  auto pt = point(p);
  const int deg = integer(p, "degree", 20);
  SeriesOptions so;
  so.compute_tail = false;
  auto [ds, dp] = dual_spec(spec, pt);
  return {fudged("duality", eval_series(spec, pt, deg, so).value.to_double(),
                 eval_series(ds, dp, deg, so).value.to_double(), 1e-9, p)};
}

std::vector<CheckRow> v_cauchy(const VerifyParams& p) {
  double d = cauchy_kernel_check(num(p, "alpha", "2"), list(p, "x", "1/5,1/7"), point(p), integer(p, "degree", 16));
  return {fudged("cauchy-kernel", d, 0, 1e-9, p)};
}

std::vector<CheckRow> v_gamma(const VerifyParams& p) {
  auto rec = gamma_selberg_check(num(p, "alpha", "2"), num(p, "gamma", "1"), num(p, "lambda1", "0"),
                                 num(p, "lambda2", "0"), integer(p, "N", 1), list(p, "t", "1/10"),
                                 list(p, "s", "1/10"), integer(p, "degree", 30));
  return {fudged("gamma-selberg", rec.quadrature, rec.series, 1e-7, p)};
}

std::vector<CheckRow> v_hardedge(const VerifyParams& p) {
  const int N = integer(p, "N", 2), n = integer(p, "n", 1), m = integer(p, "m", 0);
  const Scalar beta = num(p, "beta", "2"), s = num(p, "s", "1/2");
  if (N > 2) throw std::invalid_argument("hard-edge quadrature supports N <= 2");
  auto series = laguerre_hardedge_quantities(N, beta, n, m, s);
  const double a = n - beta.to_double() / 2 * m;
  auto quad = laguerre_hardedge_quadrature(N, beta.to_double(), a, s.to_double());
  return {fudged("hard-edge-gap", series.E, quad.E, 1e-8, p), fudged("hard-edge-density", series.p, quad.p, 1e-8, p)};
}

const std::vector<std::pair<std::string, Verifier>>& verifiers() {
  static const std::vector<std::pair<std::string, Verifier>> v = {
      {"selberg-constant", v_selberg}, {"kadell", v_kadell},         {"recurrence", v_recurrence},
      {"kaneko-criterion", v_kaneko},  {"holonomic-residual", v_holonomic}, {"pfaff-euler", v_pfaff},
      {"kummer", v_kummer},            {"duality", v_duality},       {"cauchy", v_cauchy},
      {"gamma-selberg", v_gamma},      {"hard-edge", v_hardedge},
  };
  return v;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const auto names = [] {
    std::vector<std::string> v;
    for (auto& [n, f] : verifiers()) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<CheckRow> verify_identity(const std::string& name, const VerifyParams& params) {
  for (auto& [n, f] : verifiers())
    if (n == name) return f(params);
  throw std::invalid_argument("unknown identity '" + name + "'");
}

}  // namespace sjack::checks
