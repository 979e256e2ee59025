#include "sjack/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sjack {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }),
              tok.end());
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

int Partition::leg(int i, int j) const {
  int l = 0;
  for (int r = i + 1; r < length() && parts_[r] > j; ++r) ++l;
  return l;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::optional<Partition> Partition::add_box(int i) const {
  if (i < 0 || i > length()) return std::nullopt;
  if (i > 0 && (*this)[i - 1] == (*this)[i]) return std::nullopt;
  std::vector<int> p = parts_;
  if (i == length()) p.push_back(0);
  ++p[i];
  return Partition(std::move(p));
}

std::optional<Partition> Partition::remove_box(int i) const {
  if (i < 0 || i >= length()) return std::nullopt;
  if ((*this)[i] == (*this)[i + 1]) return std::nullopt;
  std::vector<int> p = parts_;
  --p[i];
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool operator<(const Partition& a, const Partition& b) {
  if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
  return b.parts_ < a.parts_;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int f = std::min(remaining, max_part); f >= 1; --f) {
    cur.push_back(f);
    gen(remaining - f, f, cur, out);
    cur.pop_back();
  }
}

void gen_bounded(int remaining, int max_part, int rows_left, const std::optional<FatHook>& hook,
                 std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  int cap = std::min(remaining, max_part);
  if (hook && static_cast<int>(cur.size()) >= hook->n) cap = std::min(cap, hook->m);
  for (int f = cap; f >= 1; --f) {
    cur.push_back(f);
    gen_bounded(remaining - f, f, rows_left - 1, hook, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_bounded(int weight, int max_part, int max_len, std::optional<FatHook> hook) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> cur;
  gen_bounded(weight, max_part < 0 ? weight : max_part, max_len < 0 ? weight + 1 : max_len, hook, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (weight < 0) return out;
  gen(weight, weight, cur, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_weight, std::optional<FatHook> hook) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (auto& p : partitions_of(w))
      if (!hook || hook->contains(p)) out.push_back(std::move(p));
  return out;
}

bool dominance_leq(const Partition& k, const Partition& s) {
  if (k.weight() != s.weight())
    throw std::invalid_argument("dominance order needs equal weights: " + k.str() + " vs " + s.str());
  int a = 0, b = 0;
  int len = std::max(k.length(), s.length());
  for (int i = 0; i < len; ++i) {
    a += k[i];
    b += s[i];
    if (a > b) return false;
  }
  return true;
}

const Scalar& require_alpha(const Scalar& alpha) {
  if (alpha.sign() <= 0) throw std::domain_error("alpha must be positive, got " + alpha.str());
  return alpha;
}

bool pochhammer_vanishes(const Partition& k, const Scalar& alpha, VanishKind kind, int M) {
  require_alpha(alpha);
  if (M < 1) throw std::invalid_argument("M must be a positive integer");
  return kind == VanishKind::NegInt ? k[0] > M : k.length() > M;
}

}  // namespace sjack
