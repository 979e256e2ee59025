#include "sjack/jack.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "sjack/linalg.hpp"
#include "sjack/lru_cache.hpp"

namespace sjack {

void SymPoly::add(const Partition& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Scalar SymPoly::coeff(const Partition& k) const {
  auto it = terms.find(k);
  return it == terms.end() ? Scalar(0) : it->second;
}

std::string SymPoly::str() const {
  const char* tag = basis == Basis::Monomial ? "m" : basis == Basis::PowerSum ? "p" : "P";
  if (terms.empty()) return "0";
  std::string out;
  // Highest weight first, then lexicographically largest; only a unit leading coefficient is elided.
  std::vector<std::pair<Partition, Scalar>> items(terms.begin(), terms.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() > b.first.weight();
    return a.first.parts() > b.first.parts();
  });
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    const auto& [k, c] = items[idx];
    Scalar shown = c;
    if (idx > 0) {
      out += c.sign() < 0 ? " - " : " + ";
      shown = c.abs();
    } else if (c.sign() < 0) {
      out += "-";
      shown = c.abs();
    }
    if (idx > 0 || !(shown == Scalar(1)) || !shown.is_exact()) out += shown.str() + "·";
    out += std::string(tag) + "[" + k.str() + "]";
  }
  return out;
}

bool SuperPoint::exact() const {
  for (auto& v : t)
    if (!v.is_exact()) return false;
  for (auto& v : s)
    if (!v.is_exact()) return false;
  return true;
}

double SuperPoint::norm() const {
  double r = 0;
  for (auto& v : t) r = std::max(r, std::abs(v.to_double()));
  for (auto& v : s) r = std::max(r, std::abs(v.to_double()));
  return r;
}

std::vector<double> to_doubles(const std::vector<Scalar>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (auto& x : v) out.push_back(x.to_double());
  return out;
}

std::vector<Scalar> to_scalars(const std::vector<double>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (double x : v) out.push_back(Scalar::from_double(x));
  return out;
}

// ---------------------------------------------------------------------------
// Monomial-basis operator and triangular eigen-solve

Scalar jack_operator_entry(const Partition& mu, const Partition& nu, int N, const Scalar& alpha) {
  if (mu.weight() != nu.weight()) return Scalar(0);
  if (mu.length() > N || nu.length() > N) return Scalar(0);
  const int W = mu.weight();
  std::vector<int> cmu(W + 1, 0), cnu(W + 1, 0);
  for (int i = 0; i < N; ++i) {
    ++cmu[mu[i]];
    ++cnu[nu[i]];
  }
  std::vector<int> diff(W + 1);
  for (int v = 0; v <= W; ++v) diff[v] = cmu[v] - cnu[v];

  Scalar two_over_alpha = Scalar(2) / alpha;
  Scalar coef(0);
  if (mu == nu) {
    long d = 0;
    for (int i = 0; i < nu.length(); ++i) d += static_cast<long>(nu[i]) * (nu[i] - 1);
    coef += Scalar(d) - two_over_alpha * Scalar(static_cast<long>(N - 1) * W);
  }
  long pair_sum = 0;
  std::vector<int> delta(W + 1, 0);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      int u = nu[i], w = nu[j];
      int S = u + w;
      if (S == 0) continue;
      for (int p = (S + 1) / 2; p <= S; ++p) {
        int q = S - p;
        // multiset(μ) must equal multiset(ν) − {u, w} + {p, q}
        --delta[u];
        --delta[w];
        ++delta[p];
        ++delta[q];
        bool match = true;
        for (int v = 0; v <= W && match; ++v) match = delta[v] == diff[v];
        ++delta[u];
        ++delta[w];
        --delta[p];
        --delta[q];
        if (!match) continue;
        long wgt = 0;
        if (p == q) {
          if (u == p) wgt = p;
        } else {
          if (q <= u && u <= p) wgt += p;
          if (q + 1 <= u && u <= p - 1) wgt -= q;
        }
        pair_sum += wgt;
      }
    }
  }
  coef += two_over_alpha * Scalar(pair_sum);
  return coef;
}

namespace {

struct AlphaKey {
  Partition k;
  std::string alpha;
  bool operator==(const AlphaKey& o) const { return k == o.k && alpha == o.alpha; }
};
struct AlphaKeyHash {
  std::size_t operator()(const AlphaKey& a) const noexcept {
    return PartitionHash{}(a.k) ^ (std::hash<std::string>{}(a.alpha) * 31u);
  }
};

std::string alpha_tag(const Scalar& alpha) { return (alpha.is_exact() ? "q:" : "f:") + alpha.str(); }

LruCache<AlphaKey, SymPoly, AlphaKeyHash>& monomial_cache() {
  static LruCache<AlphaKey, SymPoly, AlphaKeyHash> cache(4096);
  return cache;
}
LruCache<AlphaKey, SymPoly, AlphaKeyHash>& powersum_cache() {
  static LruCache<AlphaKey, SymPoly, AlphaKeyHash> cache(4096);
  return cache;
}

long count_assignments(const std::vector<int>& sigma, std::size_t idx, std::vector<int>& rem) {
  if (idx == sigma.size()) {
    for (int r : rem)
      if (r) return 0;
    return 1;
  }
  long total = 0;
  for (std::size_t j = 0; j < rem.size(); ++j) {
    if (rem[j] >= sigma[idx]) {
      rem[j] -= sigma[idx];
      total += count_assignments(sigma, idx + 1, rem);
      rem[j] += sigma[idx];
    }
  }
  return total;
}

}  // namespace

long powersum_to_monomial_entry(const Partition& sigma, const Partition& mu) {
  if (sigma.weight() != mu.weight()) return 0;
  std::vector<int> rem(mu.parts());
  return count_assignments(sigma.parts(), 0, rem);
}

SymPoly jack_in_monomial(const Partition& k, const Scalar& alpha) {
  require_alpha(alpha);
  AlphaKey key{k, alpha_tag(alpha)};
  if (auto hit = monomial_cache().get(key)) return *hit;

  const int N = k.weight();
  std::vector<Partition> basis;
  for (auto& p : partitions_of(N))
    if (dominance_leq(p, k)) basis.push_back(p);  // reverse-lex: κ first

  const std::size_t B = basis.size();
  std::vector<Scalar> c(B);
  c[0] = Scalar(1);
  Scalar eps = jack_operator_entry(k, k, N, alpha);
  for (std::size_t v = 1; v < B; ++v) {
    Scalar rhs(0);
    for (std::size_t u = 0; u < v; ++u) {
      if (c[u].is_zero() || !dominance_leq(basis[v], basis[u])) continue;
      rhs += c[u] * jack_operator_entry(basis[u], basis[v], N, alpha);
    }
    Scalar gap = eps - jack_operator_entry(basis[v], basis[v], N, alpha);
    if (gap.is_zero()) {
      if (rhs.is_zero()) continue;
      throw std::domain_error("eigenvalue collision at alpha=" + alpha.str() + " between (" + k.str() + ") and (" +
                              basis[v].str() + ")");
    }
    c[v] = rhs / gap;
  }
  SymPoly out;
  out.basis = Basis::Monomial;
  for (std::size_t v = 0; v < B; ++v) out.add(basis[v], c[v]);
  monomial_cache().put(key, out);
  return out;
}

SymPoly jack_in_powersum(const Partition& k, const Scalar& alpha) {
  require_alpha(alpha);
  AlphaKey key{k, alpha_tag(alpha)};
  if (auto hit = powersum_cache().get(key)) return *hit;

  SymPoly mono = jack_in_monomial(k, alpha);
  const int N = k.weight();
  std::vector<Partition> ps = partitions_of(N);  // coarse to fine
  const std::size_t B = ps.size();
  // c_μ = Σ_σ χ_σ R[σ][μ] with R[σ][μ] ≠ 0 only when μ ≥ σ; solve from the finest μ upward.
  std::vector<Scalar> chi(B);
  for (std::size_t iu = B; iu-- > 0;) {
    Scalar acc = mono.coeff(ps[iu]);
    for (std::size_t is = iu + 1; is < B; ++is) {
      if (chi[is].is_zero()) continue;
      long r = powersum_to_monomial_entry(ps[is], ps[iu]);
      if (r) acc -= chi[is] * Scalar(r);
    }
    chi[iu] = acc / Scalar(powersum_to_monomial_entry(ps[iu], ps[iu]));
  }
  SymPoly out;
  out.basis = Basis::PowerSum;
  for (std::size_t i = 0; i < B; ++i) out.add(ps[i], chi[i]);
  powersum_cache().put(key, out);
  return out;
}

Scalar eval_monomial_expansion(const SymPoly& poly, const std::vector<Scalar>& x) {
  if (poly.basis != Basis::Monomial) throw std::invalid_argument("monomial expansion expected");
  const int n = static_cast<int>(x.size());
  Scalar total(0);
  for (const auto& [mu, c] : poly.terms) {
    if (mu.length() > n) continue;
    std::vector<int> e(mu.parts());
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    Scalar msum(0);
    do {
      Scalar term(1);
      for (int i = 0; i < n; ++i) term *= x[i].pow(e[i]);
      msum += term;
    } while (std::next_permutation(e.begin(), e.end()));
    total += c * msum;
  }
  return total;
}

Scalar eval_jack(const Partition& k, const Scalar& alpha, const std::vector<Scalar>& x) {
  require_alpha(alpha);
  if (k.length() > static_cast<int>(x.size())) return Scalar(0);
  bool exact = alpha.is_exact();
  for (auto& v : x) exact = exact && v.is_exact();
  if (exact) {
    SuperJackEvaluator<Scalar> ev(alpha, x, {});
    return ev(k);
  }
  SuperJackEvaluator<double> ev(alpha.to_double(), to_doubles(x), {});
  return Scalar::from_double(ev(k));
}

Scalar jack_at_ones(const Partition& k, const Scalar& alpha, int n) {
  require_alpha(alpha);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (k.length() > n) return Scalar(0);
  // α^{|κ|}[n/α]_κ / h^{(1/α)}_{κ′}
  Scalar inv = Scalar(1) / alpha;
  return alpha.pow(k.weight()) * gen_pochhammer(Scalar(n) / alpha, k, alpha) / hook_product(k.conjugate(), inv);
}

Scalar super_jack_at_ones(const Partition& k, const Scalar& alpha, int n, int m) {
  require_alpha(alpha);
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be >= 0");
  Scalar p0 = Scalar(n) - alpha * Scalar(m);
  return ones_ratio<Scalar>(k, Partition{}, alpha, p0);
}

namespace {

// Power sums q_r = p_r(t) − γ p_r(s) for r = 1..R.
std::vector<Scalar> deformed_powersums(const SuperPoint& pt, const Scalar& gamma, int R) {
  std::vector<Scalar> q(R + 1, Scalar(0));
  for (int r = 1; r <= R; ++r) {
    Scalar acc(0);
    for (auto& v : pt.t) acc += v.pow(r);
    Scalar accs(0);
    for (auto& v : pt.s) accs += v.pow(r);
    q[r] = acc - gamma * accs;
  }
  return q;
}

Scalar eval_powersum_expansion(const SymPoly& ps, const std::vector<Scalar>& q) {
  Scalar total(0);
  for (const auto& [sigma, chi] : ps.terms) {
    Scalar term = chi;
    for (int r : sigma.parts()) term *= q[r];
    total += term;
  }
  return total;
}

bool is_column(const Partition& k) { return k.empty() || k[0] == 1; }
bool is_row(const Partition& k) { return k.length() <= 1; }

// Coefficient of u^d in ∏_i (1 + c_i u)^{e_i}.
Scalar binomial_product_coeff(const std::vector<std::pair<Scalar, Scalar>>& factors, int d) {
  std::vector<Scalar> poly(d + 1, Scalar(0));
  poly[0] = Scalar(1);
  for (const auto& [c, e] : factors) {
    std::vector<Scalar> f(d + 1, Scalar(0));
    Scalar coeff(1);
    for (int k = 0; k <= d; ++k) {
      f[k] = coeff * c.pow(k);
      coeff = coeff * (e - Scalar(k)) / Scalar(k + 1);
    }
    std::vector<Scalar> next(d + 1, Scalar(0));
    for (int a = 0; a <= d; ++a) {
      if (poly[a].is_zero()) continue;
      for (int b = 0; a + b <= d; ++b) next[a + b] += poly[a] * f[b];
    }
    poly = std::move(next);
  }
  return poly[d];
}

}  // namespace

Scalar super_jack_eval(const Partition& k, const Scalar& alpha, const SuperPoint& pt) {
  require_alpha(alpha);
  if (k.weight() <= kPowerSumMaxDegree) {
    SymPoly ps = jack_in_powersum(k, alpha);
    return eval_powersum_expansion(ps, deformed_powersums(pt, alpha, k.weight()));
  }
  if (pt.exact() && alpha.is_exact()) {
    SuperJackEvaluator<Scalar> ev(alpha, pt.t, pt.s);
    return ev(k);
  }
  SuperJackEvaluator<double> ev(alpha.to_double(), to_doubles(pt.t), to_doubles(pt.s));
  return Scalar::from_double(ev(k));
}

Scalar gamma_super_jack_eval(const Partition& k, const Scalar& alpha, const Scalar& gamma, const SuperPoint& pt) {
  require_alpha(alpha);
  // One-row and one-column shapes have product generating functions:
  //   Σ P_(1^d) u^d = ∏(1 + x u),  Σ P_(d) u^d ∝ ∏(1 − x u)^{−1/α}.
  if (is_column(k)) {
    std::vector<std::pair<Scalar, Scalar>> f;
    for (auto& v : pt.t) f.emplace_back(v, Scalar(1));
    for (auto& v : pt.s) f.emplace_back(v, -gamma);
    return binomial_product_coeff(f, k.weight());
  }
  if (is_row(k)) {
    // P_(d) = d! / (1/α)_d · g_d, with Σ g_d u^d = ∏(1 − x u)^{−1/α} under p_r ↦ p_r(t) − γ p_r(s).
    std::vector<std::pair<Scalar, Scalar>> f;
    Scalar inv = Scalar(1) / alpha;
    for (auto& v : pt.t) f.emplace_back(-v, -inv);
    for (auto& v : pt.s) f.emplace_back(-v, gamma * inv);
    int d = k.weight();
    Scalar norm(1);
    for (int j = 0; j < d; ++j) norm *= Scalar(j + 1) / (inv + Scalar(j));
    return norm * binomial_product_coeff(f, d);
  }
  if (k.weight() > kPowerSumMaxDegree)
    throw std::invalid_argument("gamma-deformed evaluation beyond degree " + std::to_string(kPowerSumMaxDegree) +
                                " is only available for one-row or one-column shapes");
  SymPoly ps = jack_in_powersum(k, alpha);
  return eval_powersum_expansion(ps, deformed_powersums(pt, gamma, k.weight()));
}

// ---------------------------------------------------------------------------
// Derivatives of the power-sum expansion

namespace {

struct VarView {
  std::vector<double> w;   // graded coordinates
  std::vector<double> wt;  // weight in q_r: 1 for t, −α for s
};

VarView graded(const SuperPoint& pt, double alpha) {
  VarView v;
  for (auto& x : pt.t) {
    v.w.push_back(x.to_double());
    v.wt.push_back(1.0);
  }
  for (auto& x : pt.s) {
    v.w.push_back(x.to_double());
    v.wt.push_back(-alpha);
  }
  return v;
}

}  // namespace

Jet super_jack_jet(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int var) {
  SymPoly ps = jack_in_powersum(k, alpha);
  VarView v = graded(pt, alpha.to_double());
  if (var < 0 || var >= static_cast<int>(v.w.size())) throw std::out_of_range("variable index");
  const int R = std::max(1, k.weight());
  std::vector<double> q(R + 1, 0), dq(R + 1, 0), ddq(R + 1, 0);
  for (int r = 1; r <= R; ++r) {
    for (std::size_t i = 0; i < v.w.size(); ++i) q[r] += v.wt[i] * std::pow(v.w[i], r);
    double x = v.w[var], c = v.wt[var];
    dq[r] = c * r * std::pow(x, r - 1);
    ddq[r] = r >= 2 ? c * r * (r - 1) * std::pow(x, r - 2) : 0.0;
  }
  Jet jet;
  for (const auto& [sigma, chi] : ps.terms) {
    const auto& parts = sigma.parts();
    const std::size_t L = parts.size();
    double c = chi.to_double();
    double f = 1;
    for (int r : parts) f *= q[r];
    double d1 = 0, d2 = 0;
    for (std::size_t a = 0; a < L; ++a) {
      double rest = 1;
      for (std::size_t b = 0; b < L; ++b)
        if (b != a) rest *= q[parts[b]];
      d1 += dq[parts[a]] * rest;
      d2 += ddq[parts[a]] * rest;
      for (std::size_t b = 0; b < L; ++b) {
        if (b == a) continue;
        double rest2 = 1;
        for (std::size_t e = 0; e < L; ++e)
          if (e != a && e != b) rest2 *= q[parts[e]];
        d2 += dq[parts[a]] * dq[parts[b]] * rest2;
      }
    }
    jet.f += c * f;
    jet.d1 += c * d1;
    jet.d2 += c * d2;
  }
  return jet;
}

double super_jack_mixed(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int a, int b) {
  if (a == b) return super_jack_jet(k, alpha, pt, a).d2;
  SymPoly ps = jack_in_powersum(k, alpha);
  VarView v = graded(pt, alpha.to_double());
  const int R = std::max(1, k.weight());
  std::vector<double> q(R + 1, 0), da(R + 1, 0), db(R + 1, 0);
  for (int r = 1; r <= R; ++r) {
    for (std::size_t i = 0; i < v.w.size(); ++i) q[r] += v.wt[i] * std::pow(v.w[i], r);
    da[r] = v.wt[a] * r * std::pow(v.w[a], r - 1);
    db[r] = v.wt[b] * r * std::pow(v.w[b], r - 1);
  }
  double total = 0;
  for (const auto& [sigma, chi] : ps.terms) {
    const auto& parts = sigma.parts();
    const std::size_t L = parts.size();
    double acc = 0;
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) {
        if (i == j) continue;
        double rest = 1;
        for (std::size_t e = 0; e < L; ++e)
          if (e != i && e != j) rest *= q[parts[e]];
        acc += da[parts[i]] * db[parts[j]] * rest;
      }
    total += chi.to_double() * acc;
  }
  return total;
}

double cancellation_analytic(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int i, int j) {
  double dt = super_jack_jet(k, alpha, pt, i).d1;
  double ds = super_jack_jet(k, alpha, pt, pt.n() + j).d1;
  return dt + ds / alpha.to_double();
}

double check_cancellation(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int i, int j, double h) {
  if (h <= 0) throw std::invalid_argument("step must be positive");
  if (i < 0 || i >= pt.n() || j < 0 || j >= pt.m()) throw std::out_of_range("cancellation index");
  const double a = alpha.to_double();
  auto value = [&](int var, double delta) {
    SuperPoint q = pt;
    auto& slot = var < pt.n() ? q.t[var] : q.s[var - pt.n()];
    slot = Scalar::from_double(slot.to_double() + delta);
    return super_jack_eval(k, alpha.as_float(), q).to_double();
  };
  auto derivative = [&](int var, double step) { return (value(var, step) - value(var, -step)) / (2 * step); };
  auto combo = [&](double step) { return derivative(i, step) + derivative(pt.n() + j, step) / a; };
  double coarse = combo(h), fine = combo(h / 2);
  return (4 * fine - coarse) / 3;
}

// ---------------------------------------------------------------------------
// Binomial coefficients

namespace {

using PsPoly = std::map<Partition, Scalar>;

PsPoly ps_multiply(const PsPoly& a, const PsPoly& b) {
  PsPoly out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      std::vector<int> parts(pa.parts());
      parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
      std::sort(parts.rbegin(), parts.rend());
      Partition key(std::move(parts));
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, ca * cb);
      else
        it->second += ca * cb;
    }
  return out;
}

long choose(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LruCache<AlphaKey, std::map<Partition, Scalar>, AlphaKeyHash>& binomial_cache() {
  static LruCache<AlphaKey, std::map<Partition, Scalar>, AlphaKeyHash> cache(4096);
  return cache;
}

}  // namespace

std::map<Partition, Scalar> binomial_coefficients(const Partition& k, const Scalar& alpha) {
  require_alpha(alpha);
  AlphaKey key{k, alpha_tag(alpha)};
  if (auto hit = binomial_cache().get(key)) return *hit;

  const int n = std::max(1, k.weight());
  // P_κ(x + 1) in power sums with p_0 = n.
  PsPoly shifted;
  for (const auto& [sigma, chi] : jack_in_powersum(k, alpha).terms) {
    PsPoly term{{Partition{}, chi}};
    for (int r : sigma.parts()) {
      PsPoly f;
      for (int j = 0; j <= r; ++j) {
        Scalar c(choose(r, j));
        if (j == 0) c *= Scalar(n);
        Partition pj = j == 0 ? Partition{} : Partition{j};
        auto it = f.find(pj);
        if (it == f.end())
          f.emplace(pj, c);
        else
          it->second += c;
      }
      term = ps_multiply(term, f);
    }
    for (auto& [p, c] : term) {
      auto it = shifted.find(p);
      if (it == shifted.end())
        shifted.emplace(p, c);
      else
        it->second += c;
    }
  }

  std::map<Partition, Scalar> out;
  Scalar top = jack_at_ones(k, alpha, n);
  for (int d = 0; d <= k.weight(); ++d) {
    std::vector<Partition> ps = partitions_of(d);
    const std::size_t B = ps.size();
    // Columns: Jack P_σ in power sums; rows: power-sum index.
    std::vector<std::vector<Scalar>> M(B, std::vector<Scalar>(B, Scalar(0)));
    std::vector<Scalar> rhs(B, Scalar(0));
    for (std::size_t c = 0; c < B; ++c) {
      if (d == 0) {
        M[0][0] = Scalar(1);
        continue;
      }
      SymPoly jp = jack_in_powersum(ps[c], alpha);
      for (std::size_t r = 0; r < B; ++r) M[r][c] = jp.coeff(ps[r]);
    }
    bool any = false;
    for (std::size_t r = 0; r < B; ++r) {
      auto it = shifted.find(ps[r]);
      if (it != shifted.end()) {
        rhs[r] = it->second;
        any = any || !it->second.is_zero();
      }
    }
    if (!any) continue;
    std::vector<Scalar> x;
    try {
      x = solve_linear(M, rhs);
    } catch (const std::domain_error&) {
      throw std::domain_error("singular Jack change of basis at alpha=" + alpha.str());
    }
    for (std::size_t c = 0; c < B; ++c) {
      if (x[c].is_zero()) continue;
      out[ps[c]] = x[c] * jack_at_ones(ps[c], alpha, n) / top;
    }
  }
  binomial_cache().put(key, out);
  return out;
}

// ---------------------------------------------------------------------------
// Cauchy kernel

Scalar cauchy_coefficient(const Partition& k, const Scalar& alpha) {
  Scalar inv = Scalar(1) / alpha;
  return hook_product(k.conjugate(), inv) / (alpha.pow(k.weight()) * hook_product(k, alpha));
}

double cauchy_kernel_check(const Scalar& alpha, const std::vector<Scalar>& x, const SuperPoint& pt, int max_deg) {
  require_alpha(alpha);
  const double a = alpha.to_double();
  for (auto& xi : x) {
    for (auto& s : pt.s)
      if (std::abs(xi.to_double() * s.to_double()) >= 1) throw std::domain_error("|x_i s_j| must be < 1");
    for (auto& t : pt.t)
      if (std::abs(xi.to_double() * t.to_double()) >= 1) throw std::domain_error("|x_i t_k| must be < 1");
  }
  if (x.empty()) return 0.0;
  double lhs = 1;
  for (auto& xi : x) {
    for (auto& s : pt.s) lhs *= 1 - xi.to_double() * s.to_double();
    for (auto& t : pt.t) lhs *= std::pow(1 - xi.to_double() * t.to_double(), -1.0 / a);
  }
  SuperJackEvaluator<double> px(a, to_doubles(x), {});
  SuperJackEvaluator<double> sp(a, to_doubles(pt.t), to_doubles(pt.s));
  double rhs = 0;
  const int lx = static_cast<int>(x.size());
  for (const auto& k : enumerate_partitions(max_deg, FatHook{pt.n(), pt.m()})) {
    if (k.length() > lx) continue;
    rhs += cauchy_coefficient(k, alpha).to_double() * px(k) * sp(k);
  }
  return std::abs(lhs - rhs);
}

}  // namespace sjack
