#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sjack/scalar.hpp"

namespace sjack {

// Weakly decreasing positive parts; trailing zeros are dropped on construction.
// Box coordinates (i, j) are 0-based row/column indices throughout.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);  // "3,1,1", "" or "0" for empty

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  int arm(int i, int j) const { return (*this)[i] - j - 1; }
  int leg(int i, int j) const;
  bool contains(const Partition& other) const;  // other ⊆ this

  // κ^(i) and κ_(i) (row index i, 0-based); nullopt if the result is not a partition.
  std::optional<Partition> add_box(int i) const;
  std::optional<Partition> remove_box(int i) const;

  std::string str() const;  // "3,1,1"; "" for the empty partition

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  // Enumeration order: weight ascending, then reverse-lexicographic.
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

struct FatHook {
  int n = 0;
  int m = 0;
  bool contains(const Partition& k) const { return k[static_cast<std::size_t>(n)] <= m; }
};

// Every partition of weight <= max_weight (inside hook if given), sorted by (weight, reverse-lex).
std::vector<Partition> enumerate_partitions(int max_weight, std::optional<FatHook> hook = std::nullopt);
// Partitions of exactly this weight, reverse-lex order.
std::vector<Partition> partitions_of(int weight);

// Partitions of exactly this weight with κ₁ ≤ max_part and ℓ(κ) ≤ max_len (negative = unbounded),
// optionally inside a fat hook; reverse-lex order.
std::vector<Partition> partitions_bounded(int weight, int max_part, int max_len, std::optional<FatHook> hook = std::nullopt);

bool dominance_leq(const Partition& k, const Partition& s);

// Validates α > 0 and returns it.
const Scalar& require_alpha(const Scalar& alpha);

// h_κ = ∏ (1 + a + l/α)
template <class T>
T hook_product(const Partition& k, const T& alpha) {
  T r(1);
  Partition c = k.conjugate();
  for (int i = 0; i < k.length(); ++i)
    for (int j = 0; j < k[i]; ++j) r *= T(1 + k.arm(i, j)) + T(c[j] - i - 1) / alpha;
  return r;
}

// h′_κ = ∏ (a + l/α + 1/α)
template <class T>
T hook_product_prime(const Partition& k, const T& alpha) {
  T r(1);
  Partition c = k.conjugate();
  for (int i = 0; i < k.length(); ++i)
    for (int j = 0; j < k[i]; ++j) r *= T(k.arm(i, j)) + T(c[j] - i) / alpha;
  return r;
}

// ∏ (α a + l + 1); equals α^{|κ|} h′_κ and never vanishes for α > 0.
template <class T>
T lower_hook_product(const Partition& k, const T& alpha) {
  T r(1);
  Partition c = k.conjugate();
  for (int i = 0; i < k.length(); ++i)
    for (int j = 0; j < k[i]; ++j) r *= alpha * T(k.arm(i, j)) + T(c[j] - i);
  return r;
}

// [x]_κ = ∏_i (x − (i−1)/α)_{κ_i}
template <class T>
T gen_pochhammer(const T& x, const Partition& k, const T& alpha) {
  T r(1);
  for (int i = 0; i < k.length(); ++i) {
    T base = x - T(i) / alpha;
    for (int j = 0; j < k[i]; ++j) r *= base + T(j);
  }
  return r;
}

// Scalar (x)_k
template <class T>
T rising(const T& x, int k) {
  T r(1);
  for (int j = 0; j < k; ++j) r *= x + T(j);
  return r;
}

enum class VanishKind { NegInt, OverAlpha };
// NegInt: [−M]_κ = 0 iff κ₁ > M.  OverAlpha: [M/α]_κ = 0 iff ℓ(κ) > M.
bool pochhammer_vanishes(const Partition& k, const Scalar& alpha, VanishKind kind, int M);

}  // namespace sjack
