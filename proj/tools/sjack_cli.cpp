// sjack: command-line driver for super Jack polynomials, super hypergeometric series and
// the β-ensemble identity checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "sjack/ensembles.hpp"
#include "sjack/holonomic.hpp"
#include "sjack/series.hpp"
#include "sjack/version.hpp"

using json = nlohmann::ordered_json;
using namespace sjack;
namespace ck = sjack::checks;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string output;
  bool allow_float = false;
  int threads = 1;
  std::uint64_t seed = 20240611;
};

Scalar number(const std::string& text, const Globals& g) { return Scalar::parse(text, g.allow_float); }

std::vector<Scalar> numbers(const std::string& text, const Globals& g) {
  std::vector<Scalar> v;
  if (text.empty()) return v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(number(tok, g));
  return v;
}

std::vector<double> doubles(const std::vector<Scalar>& v) { return to_doubles(v); }

json scalar_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.to_double();
}

json row_json(const ck::CheckRow& r) {
  json j;
  j["id"] = r.id;
  if (r.exact) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  } else {
    j["lhs"] = std::strtod(r.lhs.c_str(), nullptr);
    j["rhs"] = std::strtod(r.rhs.c_str(), nullptr);
  }
  j["abs_err"] = r.abs_err;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string rows_csv(const std::vector<ck::CheckRow>& rows) {
  std::string out = "id,lhs,rhs,abs_err,tol,pass\n";
  for (const auto& r : rows)
    out += csv_field(r.id) + "," + csv_field(r.lhs) + "," + csv_field(r.rhs) + "," + ck::fmt_double(r.abs_err) + "," +
           ck::fmt_double(r.tol) + "," + (r.pass ? "true" : "false") + "\n";
  return out;
}

json envelope(const std::string& command, const json& config) {
  json j;
  j["schema"] = 1;
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config;
  return j;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.output);
  if (!f) throw UsageError("cannot write '" + g.output + "'");
  f << text;
}

// Shared output path for commands that produce check rows.
int report_rows(const Globals& g, json doc, const std::vector<ck::CheckRow>& rows, const std::string& headline) {
  bool pass = !rows.empty();
  for (const auto& r : rows) pass = pass && r.pass;
  if (g.format == "csv") {
    emit(g, rows_csv(rows));
  } else if (g.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    doc["results"] = arr;
    doc["pass"] = pass;
    emit(g, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << headline << "\n";
    for (const auto& r : rows)
      os << "  " << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  lhs=" << r.lhs << "  rhs=" << r.rhs
         << "  err=" << ck::fmt_double(r.abs_err) << "  tol=" << ck::fmt_double(r.tol) << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
    emit(g, os.str());
  }
  return pass ? 0 : kExitFailed;
}

void require_no_csv(const Globals& g) {
  if (g.format == "csv") throw UsageError("csv output is available for verify, expect, series --check and acceptance");
}

// ------------------------------------------------------------------------------------------------

struct JackArgs {
  std::string kappa, alpha = "1", basis = "monomial", eval;
};

int cmd_jack(const Globals& g, const JackArgs& a) {
  require_no_csv(g);
  const Partition k = Partition::parse(a.kappa);
  const Scalar alpha = number(a.alpha, g);
  json cfg{{"kappa", k.str()}, {"alpha", scalar_json(alpha)}, {"basis", a.basis}, {"eval", a.eval}};
  json doc = envelope("jack", cfg);
  std::string text;
  if (!a.eval.empty()) {
    Scalar v = eval_jack(k, alpha, numbers(a.eval, g));
    doc["value"] = scalar_json(v);
    text = v.str();
  } else {
    SymPoly p;
    if (a.basis == "monomial")
      p = jack_in_monomial(k, alpha);
    else if (a.basis == "powersum")
      p = jack_in_powersum(k, alpha);
    else
      throw UsageError("basis must be monomial or powersum");
    json terms = json::object();
    for (const auto& [mu, c] : p.terms) terms[mu.str()] = scalar_json(c);
    doc["terms"] = terms;
    doc["expansion"] = p.str();
    text = p.str();
  }
  emit(g, g.format == "json" ? doc.dump(2) + "\n" : text + "\n");
  return 0;
}

struct SuperJackArgs {
  std::string kappa, alpha = "1", t, s, gamma;
  int n = -1, m = -1;
};

int cmd_superjack(const Globals& g, const SuperJackArgs& a) {
  require_no_csv(g);
  const Partition k = Partition::parse(a.kappa);
  const Scalar alpha = number(a.alpha, g);
  json cfg{{"kappa", k.str()}, {"alpha", scalar_json(alpha)}, {"t", a.t}, {"s", a.s}, {"gamma", a.gamma},
           {"n", a.n}, {"m", a.m}};
  json doc = envelope("superjack", cfg);
  Scalar v;
  if (a.n >= 0 || a.m >= 0) {
    if (!a.t.empty() || !a.s.empty()) throw UsageError("give either --n/--m (value at ones) or --t/--s");
    v = super_jack_at_ones(k, alpha, std::max(a.n, 0), std::max(a.m, 0));
  } else {
    SuperPoint pt{numbers(a.t, g), numbers(a.s, g)};
    v = a.gamma.empty() ? super_jack_eval(k, alpha, pt) : gamma_super_jack_eval(k, alpha, number(a.gamma, g), pt);
  }
  doc["value"] = scalar_json(v);
  emit(g, g.format == "json" ? doc.dump(2) + "\n" : v.str() + "\n");
  return 0;
}

struct SeriesArgs {
  std::string type = "2SF1", a, b, c, upper, lower, alpha = "1", t, s, variant = "standard", gamma, z, check;
  int degree = 16;
  bool outside = false;
};

SeriesSpec build_series(const Globals& g, const SeriesArgs& a) {
  int p = -1, q = -1;
  if (std::sscanf(a.type.c_str(), "%dSF%d", &p, &q) != 2 || p < 0 || q < 0)
    throw UsageError("series type must look like 2SF1");
  std::vector<Scalar> up = numbers(a.upper, g), lo = numbers(a.lower, g);
  if (a.upper.empty()) {
    if (p >= 1) up.push_back(number(a.a.empty() ? throw UsageError("missing --a") : a.a, g));
    if (p >= 2) up.push_back(number(a.b.empty() ? throw UsageError("missing --b") : a.b, g));
    if (p > 2) throw UsageError("use --upper for more than two upper parameters");
  }
  if (a.lower.empty()) {
    if (q >= 1) lo.push_back(number(a.c.empty() ? throw UsageError("missing --c") : a.c, g));
    if (q > 1) throw UsageError("use --lower for more than one lower parameter");
  }
  if (static_cast<int>(up.size()) != p || static_cast<int>(lo.size()) != q)
    throw UsageError("parameter count does not match " + a.type);
  const Scalar alpha = number(a.alpha, g);
  if (a.variant == "standard") return SeriesSpec::standard(up, lo, alpha);
  if (a.variant == "hat") {
    if (p != 2 || q != 1) throw UsageError("hat variant is 2SF1 only");
    return SeriesSpec::hat(up[0], up[1], lo[0], alpha);
  }
  if (a.variant == "gamma") return SeriesSpec::gamma_deformed(up, lo, alpha, number(a.gamma, g));
  if (a.variant == "mixed") return SeriesSpec::mixed(up, lo, alpha, numbers(a.z, g));
  throw UsageError("variant must be standard, hat, gamma or mixed");
}

int cmd_series(const Globals& g, const SeriesArgs& a) {
  SeriesSpec spec = build_series(g, a);
  SuperPoint pt{numbers(a.t, g), numbers(a.s, g)};
  json cfg{{"type", a.type},   {"variant", a.variant}, {"alpha", scalar_json(spec.alpha)}, {"t", a.t},
           {"s", a.s},         {"degree", a.degree},   {"check", a.check},                 {"allow_outside_radius", a.outside}};
  json up = json::array(), lo = json::array();
  for (auto& u : spec.upper) up.push_back(scalar_json(u));
  for (auto& l : spec.lower) lo.push_back(scalar_json(l));
  cfg["upper"] = up;
  cfg["lower"] = lo;
  if (spec.variant == SeriesVariant::GammaDeformed) cfg["gamma"] = scalar_json(spec.gamma);
  json doc = envelope("series", cfg);

  if (!a.check.empty()) {
    std::vector<ck::CheckRow> rows;
    SeriesOptions so;
    so.compute_tail = false;
    so.allow_outside_radius = a.outside;
    if (a.check == "duality") {
      auto [ds, dp] = dual_spec(spec, pt);
      rows.push_back(ck::make_row("duality", eval_series(spec, pt, a.degree, so).value.to_double(),
                                  eval_series(ds, dp, a.degree, so).value.to_double(), 1e-9));
    } else if (a.check.rfind("pfaff", 0) == 0) {
      int w = std::atoi(a.check.c_str() + 5);
      auto [l, r] = pfaff_euler(spec, w, pt, a.degree);
      rows.push_back(ck::make_row("pfaff-euler-" + std::to_string(w), l, r, 1e-9));
    } else if (a.check == "kummer") {
      auto [l, r] = kummer(spec, pt, a.degree);
      rows.push_back(ck::make_row("kummer", l, r, 1e-9));
    } else if (a.check == "closed-form") {
      Scalar closed;
      if (spec.p() == 1 && spec.q() == 0)
        closed = closed_form_1SF0(spec.upper[0], spec.alpha, pt);
      else if (spec.p() == 0 && spec.q() == 0)
        closed = closed_form_0SF0(spec.alpha, pt);
      else
        throw UsageError("closed-form check is available for 1SF0 and 0SF0");
      rows.push_back(ck::make_row("closed-form", eval_series(spec, pt, a.degree, so).value.to_double(),
                                  closed.to_double(), 1e-9));
    } else {
      throw UsageError("check must be duality, pfaff1, pfaff2, pfaff3, kummer or closed-form");
    }
    return report_rows(g, doc, rows, spec.name() + " " + a.check);
  }

  require_no_csv(g);
  SeriesOptions so;
  so.allow_outside_radius = a.outside;
  auto val = eval_series(spec, pt, a.degree, so);
  doc["value"] = scalar_json(val.value);
  json rep{{"max_degree", val.report.max_degree},
           {"terms", val.report.terms},
           {"terminated", val.report.terminated},
           {"last_shell_norm", val.report.last_shell_norm},
           {"shell_norms", val.report.shell_norms}};
  rep["tail_bound"] = val.report.tail_bound ? json(*val.report.tail_bound) : json(nullptr);
  doc["truncation"] = rep;
  if (g.format == "json") {
    emit(g, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << val.value.str();
    if (val.value.is_exact()) os << "  (" << ck::fmt_double(val.value.to_double()) << ")";
    os << "\nterms=" << val.report.terms << " last_shell=" << ck::fmt_double(val.report.last_shell_norm);
    if (val.report.terminated) os << " terminated";
    if (val.report.tail_bound) os << " tail_bound=" << ck::fmt_double(*val.report.tail_bound);
    emit(g, os.str() + "\n");
  }
  return 0;
}

struct EnsembleArgs {
  std::string family = "jacobi", beta = "2", lambda1 = "0", lambda2 = "0", b = "0", t, s, form = "one-minus-tx",
              lgrid = "8,16,32,64,128";
  int N = 3;
  long count = 1;
  long samples = 100000;
  int degree = 24;
};

EnsembleSpec build_ensemble(const Globals& g, const EnsembleArgs& a) {
  EnsembleSpec sp;
  sp.family = parse_family(a.family);
  sp.N = a.N;
  sp.beta = number(a.beta, g).to_double();
  sp.lambda1 = number(a.lambda1, g).to_double();
  sp.lambda2 = number(a.lambda2, g).to_double();
  sp.b_cj = number(a.b, g).to_double();
  sp.validate();
  return sp;
}

json ensemble_config(const EnsembleSpec& sp, const EnsembleArgs& a, const Globals& g) {
  return json{{"family", family_name(sp.family)}, {"N", sp.N},       {"beta", sp.beta},
              {"lambda1", sp.lambda1},           {"lambda2", sp.lambda2}, {"b", sp.b_cj},
              {"seed", g.seed},                  {"threads", g.threads},  {"t", a.t},
              {"s", a.s},                        {"form", a.form}};
}

int cmd_sample(const Globals& g, const EnsembleArgs& a) {
  require_no_csv(g);
  auto sp = build_ensemble(g, a);
  json cfg = ensemble_config(sp, a, g);
  cfg["count"] = a.count;
  json doc = envelope("sample", cfg);
  std::mt19937_64 rng(g.seed);
  json draws = json::array();
  std::ostringstream os;
  for (long i = 0; i < a.count; ++i) {
    auto x = sample_ensemble(sp, rng);
    draws.push_back(x);
    for (std::size_t k = 0; k < x.size(); ++k) os << (k ? " " : "") << ck::fmt_double(x[k]);
    os << "\n";
  }
  doc["samples"] = draws;
  emit(g, g.format == "json" ? doc.dump(2) + "\n" : os.str());
  return 0;
}

int cmd_expect(const Globals& g, const EnsembleArgs& a) {
  auto sp = build_ensemble(g, a);
  RatioQuery q;
  q.t = doubles(numbers(a.t, g));
  q.s = doubles(numbers(a.s, g));
  if (a.form == "x-minus-t")
    q.form = RatioForm::XMinusT;
  else if (a.form != "one-minus-tx")
    throw UsageError("form must be one-minus-tx or x-minus-t");
  json cfg = ensemble_config(sp, a, g);
  cfg["samples"] = a.samples;
  json doc = envelope("expect", cfg);
  std::vector<ck::CheckRow> rows;
  auto within = [](ck::CheckRow r) {
    r.pass = r.abs_err <= r.tol;
    return r;
  };
  if (sp.family == Family::Hermite) {
    std::vector<int> grid;
    for (auto& v : numbers(a.lgrid, g)) grid.push_back(static_cast<int>(v.to_long()));
    cfg["L_grid"] = grid;
    doc["config"] = cfg;
    q.form = RatioForm::XMinusT;
    auto res = gaussian_ratio_vs_limit(sp, q, grid, a.samples, g.seed, g.threads);
    rows.push_back(within(ck::make_row("mc-vs-limit", res.mc.mean, res.extrapolated, 3 * res.mc.std_error)));
    rows.push_back(within(ck::make_row("gaussian-system-residual", res.pde_residual_mean, 0, 3 * res.pde_residual_se)));
  } else {
    auto est = mc_ratio_expectation(sp, q, a.samples, g.seed, g.threads);
    double pred = ratio_series_prediction(sp, q, a.degree);
    rows.push_back(within(ck::make_row("mc-vs-series", est.mean, pred, 3 * est.std_error)));
  }
  return report_rows(g, doc, rows, family_name(sp.family) + " ratio expectation (lhs: Monte Carlo, rhs: series)");
}

struct VerifyArgs {
  std::string identity;
  std::map<std::string, std::string> values;
  double fudge = 1;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  const auto& names = ck::identity_names();
  if (std::find(names.begin(), names.end(), a.identity) == names.end()) {
    std::string list;
    for (auto& n : names) list += " " + n;
    throw UsageError("unknown identity '" + a.identity + "'; known:" + list);
  }
  ck::VerifyParams p;
  p.values = a.values;
  p.allow_float = g.allow_float;
  p.fudge = a.fudge;
  p.threads = g.threads;
  p.seed = g.seed;
  json params = json::object();
  for (auto& [k, v] : a.values)
    if (!v.empty()) params[k] = v;
  json cfg{{"identity", a.identity}, {"parameters", params}, {"fudge", a.fudge}, {"float", g.allow_float}};
  auto rows = ck::verify_identity(a.identity, p);
  return report_rows(g, envelope("verify", cfg), rows, "verify " + a.identity);
}

struct AcceptanceArgs {
  std::string suite = "fast", filter, json_path, csv_path;
};

int cmd_acceptance(const Globals& g, const AcceptanceArgs& a) {
  if (a.suite != "fast" && a.suite != "full") throw UsageError("suite must be fast or full");
  ck::SuiteOptions o;
  o.full = a.suite == "full";
  o.filter = a.filter;
  o.threads = g.threads;
  o.seed = g.seed;
  const bool text = g.format == "text";
  auto reports = ck::run_acceptance(o, [&](const ck::CriterionReport& r) {
    if (!text) return;
    long fails = std::count_if(r.rows.begin(), r.rows.end(), [](const ck::CheckRow& x) { return !x.pass; });
    std::printf("%-4s %-28s %4zu checks  %ld failed  %7.2fs%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                r.rows.size(), fails, r.seconds, r.within_budget ? "" : "  (over time budget)");
    for (const auto& x : r.rows)
      if (!x.pass)
        std::printf("       %s  lhs=%s rhs=%s err=%s tol=%s\n", x.id.c_str(), x.lhs.c_str(), x.rhs.c_str(),
                    ck::fmt_double(x.abs_err).c_str(), ck::fmt_double(x.tol).c_str());
    std::fflush(stdout);
  });
  if (reports.empty()) throw UsageError("filter '" + a.filter + "' matches no criterion");
  bool pass = std::all_of(reports.begin(), reports.end(), [](const ck::CriterionReport& r) { return r.pass; });

  json cfg{{"suite", a.suite}, {"filter", a.filter}, {"seed", g.seed}, {"threads", g.threads}};
  json doc = envelope("acceptance", cfg);
  json crit = json::array();
  std::vector<ck::CheckRow> all;
  for (const auto& r : reports) {
    json rows = json::array();
    for (const auto& x : r.rows) {
      rows.push_back(row_json(x));
      auto y = x;
      y.id = r.id + ":" + x.id;
      all.push_back(y);
    }
    crit.push_back(json{{"id", r.id},
                        {"title", r.title},
                        {"pass", r.pass},
                        {"within_time_budget", r.within_budget},
                        {"time_budget_seconds", r.time_budget},
                        {"results", rows}});
  }
  doc["criteria"] = crit;
  doc["pass"] = pass;
  auto write = [](const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << body;
  };
  if (!a.json_path.empty()) write(a.json_path, doc.dump(2) + "\n");
  if (!a.csv_path.empty()) write(a.csv_path, rows_csv(all));
  if (g.format == "json") emit(g, doc.dump(2) + "\n");
  if (g.format == "csv") emit(g, rows_csv(all));
  if (text) std::printf("%s\n", pass ? "ALL PASS" : "FAILURES");
  return pass ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"super Jack polynomials, super hypergeometric series and beta-ensemble checks", "sjack"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Globals g;
  app.add_option("--format", g.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output,-o", g.output, "write the report to this file");
  app.add_flag("--float", g.allow_float, "accept decimal inputs (computed in floating point)");
  app.add_option("--threads", g.threads, "worker threads for Monte Carlo")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");

  JackArgs ja;
  auto* jack = app.add_subcommand("jack", "Jack polynomial expansion or evaluation");
  jack->add_option("--kappa", ja.kappa, "partition, e.g. 3,1,1")->required();
  jack->add_option("--alpha", ja.alpha, "Jack parameter (p/q)");
  jack->add_option("--basis", ja.basis, "monomial or powersum");
  jack->add_option("--eval", ja.eval, "evaluate at x1,x2,...");

  SuperJackArgs sa;
  auto* sj = app.add_subcommand("superjack", "super Jack polynomial value");
  sj->add_option("--kappa", sa.kappa, "partition")->required();
  sj->add_option("--alpha", sa.alpha, "Jack parameter");
  sj->add_option("--t", sa.t, "even variables t1,t2,...");
  sj->add_option("--s", sa.s, "odd variables s1,s2,...");
  sj->add_option("--gamma", sa.gamma, "gamma deformation");
  sj->add_option("--n", sa.n, "value at ones: number of even variables");
  sj->add_option("--m", sa.m, "value at ones: number of odd variables");

  SeriesArgs ra;
  auto* se = app.add_subcommand("series", "super hypergeometric series");
  se->add_option("--type", ra.type, "pSFq, e.g. 2SF1");
  se->add_option("--a", ra.a, "first upper parameter");
  se->add_option("--b", ra.b, "second upper parameter");
  se->add_option("--c", ra.c, "lower parameter");
  se->add_option("--upper", ra.upper, "all upper parameters, comma separated");
  se->add_option("--lower", ra.lower, "all lower parameters, comma separated");
  se->add_option("--alpha", ra.alpha, "Jack parameter");
  se->add_option("--t", ra.t, "even variables");
  se->add_option("--s", ra.s, "odd variables");
  se->add_option("--variant", ra.variant, "standard, hat, gamma or mixed");
  se->add_option("--gamma", ra.gamma, "gamma for the gamma variant");
  se->add_option("--z", ra.z, "Jack-side arguments for the mixed variant");
  se->add_option("--degree", ra.degree, "truncation degree")->check(CLI::NonNegativeNumber);
  se->add_option("--check", ra.check, "duality, pfaff1, pfaff2, pfaff3, kummer or closed-form");
  se->add_flag("--allow-outside-radius", ra.outside, "evaluate beyond the guaranteed radius");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "check a named identity");
  ve->add_option("identity", va.identity, "identity name")->required();
  for (const char* key : {"N", "n", "m", "alpha", "a", "b", "c", "lambda1", "lambda2", "lambda", "beta", "gamma",
                          "kappa", "t", "s", "x", "maxw", "degree"})
    ve->add_option(std::string("--") + key, va.values[key], std::string("parameter ") + key);
  ve->add_option("--fudge", va.fudge, "multiply-style perturbation of the left side (negative control)");

  EnsembleArgs ea;
  auto ensemble_opts = [&](CLI::App* c) {
    c->add_option("--family", ea.family, "jacobi, laguerre, hermite, circular, circular-jacobi");
    c->add_option("--N", ea.N, "matrix size")->check(CLI::PositiveNumber);
    c->add_option("--beta", ea.beta, "beta");
    c->add_option("--lambda1", ea.lambda1, "Jacobi/Laguerre exponent");
    c->add_option("--lambda2", ea.lambda2, "Jacobi exponent");
    c->add_option("--b", ea.b, "circular Jacobi weight exponent");
  };
  auto* sm = app.add_subcommand("sample", "draw eigenvalues");
  ensemble_opts(sm);
  sm->add_option("--count", ea.count, "number of draws")->check(CLI::PositiveNumber);
  auto* ex = app.add_subcommand("expect", "Monte Carlo ratio expectation against the series");
  ensemble_opts(ex);
  ex->add_option("--t", ea.t, "numerator points");
  ex->add_option("--s", ea.s, "denominator points");
  ex->add_option("--form", ea.form, "one-minus-tx or x-minus-t");
  ex->add_option("--samples", ea.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  ex->add_option("--degree", ea.degree, "series truncation degree");
  ex->add_option("--L-grid", ea.lgrid, "Gaussian limit grid");

  AcceptanceArgs aa;
  auto* ac = app.add_subcommand("acceptance", "run the acceptance suite");
  ac->add_option("suite", aa.suite, "fast or full");
  ac->add_option("--filter", aa.filter, "only criteria whose id contains this text");
  ac->add_option("--json", aa.json_path, "also write the JSON report here");
  ac->add_option("--csv", aa.csv_path, "also write the CSV rows here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*jack) return cmd_jack(g, ja);
    if (*sj) return cmd_superjack(g, sa);
    if (*se) return cmd_series(g, ra);
    if (*ve) return cmd_verify(g, va);
    if (*sm) return cmd_sample(g, ea);
    if (*ex) return cmd_expect(g, ea);
    if (*ac) return cmd_acceptance(g, aa);
  } catch (const UsageError& e) {
    std::cerr << "sjack: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sjack: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "sjack: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sjack: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
