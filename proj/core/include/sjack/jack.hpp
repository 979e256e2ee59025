#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sjack/partition.hpp"
#include "sjack/scalar.hpp"

namespace sjack {

enum class Basis { Monomial, PowerSum, Jack };

struct SymPoly {
  Basis basis = Basis::Monomial;
  std::map<Partition, Scalar> terms;
  std::optional<int> nvars_hint;

  void add(const Partition& k, const Scalar& c);
  Scalar coeff(const Partition& k) const;
  std::string str() const;  // e.g. "m[2] + 2/3·m[1,1]"
};

// Graded point (t; s): t are the even variables, s the odd ones.
struct SuperPoint {
  std::vector<Scalar> t;
  std::vector<Scalar> s;
  int n() const { return static_cast<int>(t.size()); }
  int m() const { return static_cast<int>(s.size()); }
  bool exact() const;
  double norm() const;  // max |coordinate|
};

// Degree up to which the power-sum route (exact transition matrices) is used.
inline constexpr int kPowerSumMaxDegree = 12;

SymPoly jack_in_monomial(const Partition& k, const Scalar& alpha);
SymPoly jack_in_powersum(const Partition& k, const Scalar& alpha);

// Coefficient of m_ν in (D² − (2/α)(N−1)E¹) m_μ with N variables.
Scalar jack_operator_entry(const Partition& mu, const Partition& nu, int N, const Scalar& alpha);
// Coefficient of m_μ in p_σ.
long powersum_to_monomial_entry(const Partition& sigma, const Partition& mu);

Scalar eval_monomial_expansion(const SymPoly& poly, const std::vector<Scalar>& x);
Scalar eval_jack(const Partition& k, const Scalar& alpha, const std::vector<Scalar>& x);
Scalar jack_at_ones(const Partition& k, const Scalar& alpha, int n);

Scalar super_jack_eval(const Partition& k, const Scalar& alpha, const SuperPoint& pt);
Scalar gamma_super_jack_eval(const Partition& k, const Scalar& alpha, const Scalar& gamma, const SuperPoint& pt);
Scalar super_jack_at_ones(const Partition& k, const Scalar& alpha, int n, int m);

// SP_κ(1^{n+m}) / SP_σ(1^{n+m}) for σ ⊆ κ with p0 = n − αm, in a form that never divides by zero:
// ∏_{κ−σ} (p0 + αj − i) · ∏_σ(αa+l+1) / ∏_κ(αa+l+1).
template <class T>
T ones_ratio(const Partition& k, const Partition& s, const T& alpha, const T& p0);

// Value and first/second derivative of SP_κ in one graded variable (index < n: t, else s),
// by analytic differentiation of the power-sum expansion.
struct Jet {
  double f = 0, d1 = 0, d2 = 0;
};
Jet super_jack_jet(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int var);
// Mixed partial ∂²/∂w_a∂w_b of the power-sum expansion.
double super_jack_mixed(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int a, int b);

// Central-difference (∂/∂t_i + (1/α)∂/∂s_j) SP_κ with one Richardson step.
double check_cancellation(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int i, int j, double h);
double cancellation_analytic(const Partition& k, const Scalar& alpha, const SuperPoint& pt, int i, int j);

// (κ choose σ) for all σ ⊆ κ.
std::map<Partition, Scalar> binomial_coefficients(const Partition& k, const Scalar& alpha);

// b_κ = α^{−|κ|} h^{(1/α)}_{κ′} / h^{(α)}_κ
Scalar cauchy_coefficient(const Partition& k, const Scalar& alpha);
double cauchy_kernel_check(const Scalar& alpha, const std::vector<Scalar>& x, const SuperPoint& pt, int max_deg);

// b_λ(s) = (αa + l + 1)/(αa + l + α) for s ∈ λ, 1 otherwise.
template <class T>
T branch_b(const Partition& lam, int i, int j, const T& alpha) {
  if (j >= lam[static_cast<std::size_t>(i)]) return T(1);
  T al = alpha * T(lam.arm(i, j)) + T(lam.leg(i, j));
  return (al + T(1)) / (al + alpha);
}

// ψ_{λ/μ} for a horizontal strip λ/μ.
template <class T>
T branch_psi(const Partition& lam, const Partition& mu, const T& alpha) {
  Partition lc = lam.conjugate(), mc = mu.conjugate();
  T r(1);
  for (int i = 0; i < lam.length(); ++i) {
    if (lam[i] == mu[i]) continue;
    for (int j = 0; j < mu[i]; ++j) {
      if (lc[j] != mc[j]) continue;  // column meets λ/μ
      r *= branch_b(mu, i, j, alpha) / branch_b(lam, i, j, alpha);
    }
  }
  return r;
}

// φ_{λ/μ} for a horizontal strip λ/μ.
template <class T>
T branch_phi(const Partition& lam, const Partition& mu, const T& alpha) {
  Partition lc = lam.conjugate(), mc = mu.conjugate();
  T r(1);
  for (int j = 0; j < lam[0]; ++j) {
    if (lc[j] == mc[j]) continue;
    for (int i = 0; i < lc[j]; ++i) r *= branch_b(lam, i, j, alpha) / branch_b(mu, i, j, alpha);
  }
  return r;
}

// (κ choose κ_(i)) = φ_{κ/κ_(i)} ∏_κ(αa+l+α) / ∏_{κ_(i)}(αa+l+α), without the full binomial table.
template <class T>
T binomial_remove_box(const Partition& k, const Partition& lo, const T& alpha) {
  auto upper = [&](const Partition& p) {
    T r(1);
    for (int i = 0; i < p.length(); ++i)
      for (int j = 0; j < p[i]; ++j) r *= alpha * T(p.arm(i, j)) + T(p.leg(i, j)) + alpha;
    return r;
  };
  return branch_phi(k, lo, alpha) * upper(k) / upper(lo);
}

// Memoized evaluator of SP_κ(t; s) by variable-by-variable branching:
// P_κ(x_1..x_L) = Σ ψ_{κ/μ} x_L^{|κ/μ|} P_μ(x_1..x_{L−1}) over horizontal strips, then each odd
// variable y contributes (−1)^{|κ/μ|} φ^{(1/α)}_{κ′/μ′} y^{|κ/μ|} over vertical strips κ/μ.
template <class T>
class SuperJackEvaluator {
 public:
  SuperJackEvaluator(T alpha, std::vector<T> t, std::vector<T> s)
      : alpha_(alpha), inv_alpha_(T(1) / alpha), t_(std::move(t)), s_(std::move(s)),
        memo_(t_.size() + s_.size() + 1) {}

  T operator()(const Partition& k) { return eval(k, static_cast<int>(t_.size() + s_.size())); }
  int n() const { return static_cast<int>(t_.size()); }
  int m() const { return static_cast<int>(s_.size()); }

 private:
  T eval(const Partition& k, int level) {
    if (k.empty()) return T(1);
    if (level == 0) return T(0);
    int n = static_cast<int>(t_.size());
    if (level <= n) {
      if (k.length() > level) return T(0);
    } else if (!FatHook{n, level - n}.contains(k)) {
      return T(0);
    }
    auto& table = memo_[static_cast<std::size_t>(level)];
    auto it = table.find(k);
    if (it != table.end()) return it->second;
    T total(0);
    std::vector<int> mu(k.parts());
    if (level <= n) {
      const T& x = t_[static_cast<std::size_t>(level - 1)];
      horizontal(k, mu, 0, [&](const Partition& m) {
        int d = k.weight() - m.weight();
        T term = eval(m, level - 1);
        if (term == T(0)) return;
        total += branch_psi(k, m, alpha_) * pow_int(x, d) * term;
      });
    } else {
      const T& y = s_[static_cast<std::size_t>(level - n - 1)];
      Partition kc = k.conjugate();
      vertical(k, mu, 0, [&](const Partition& m) {
        int d = k.weight() - m.weight();
        T term = eval(m, level - 1);
        if (term == T(0)) return;
        T c = branch_phi(kc, m.conjugate(), inv_alpha_) * pow_int(y, d) * term;
        if (d % 2) c = -c;
        total += c;
      });
    }
    table.emplace(k, total);
    return total;
  }

  static T pow_int(const T& x, int d) {
    T r(1);
    for (int i = 0; i < d; ++i) r *= x;
    return r;
  }

  // μ with κ_{i+1} ≤ μ_i ≤ κ_i
  template <class F>
  void horizontal(const Partition& k, std::vector<int>& mu, int row, F&& fn) {
    if (row == k.length()) {
      fn(Partition(mu));
      return;
    }
    for (int v = k[row]; v >= k[row + 1]; --v) {
      mu[row] = v;
      horizontal(k, mu, row + 1, fn);
    }
    mu[row] = k[row];
  }

  // μ with κ_i − μ_i ∈ {0,1} and μ a partition
  template <class F>
  void vertical(const Partition& k, std::vector<int>& mu, int row, F&& fn) {
    if (row == k.length()) {
      fn(Partition(mu));
      return;
    }
    for (int d = 0; d <= 1; ++d) {
      int v = k[row] - d;
      if (row > 0 && v > mu[row - 1]) continue;
      mu[row] = v;
      vertical(k, mu, row + 1, fn);
    }
    mu[row] = k[row];
  }

  T alpha_, inv_alpha_;
  std::vector<T> t_, s_;
  std::vector<std::unordered_map<Partition, T, PartitionHash>> memo_;
};

template <class T>
T ones_ratio(const Partition& k, const Partition& s, const T& alpha, const T& p0) {
  T r(1);
  for (int i = 0; i < k.length(); ++i)
    for (int j = s[i]; j < k[i]; ++j) r *= p0 + alpha * T(j) - T(i);
  return r * lower_hook_product(s, alpha) / lower_hook_product(k, alpha);
}

std::vector<double> to_doubles(const std::vector<Scalar>& v);
std::vector<Scalar> to_scalars(const std::vector<double>& v);

}  // namespace sjack
