#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace sjack {

// Exact rational or IEEE double. Mixed arithmetic degrades to double.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int x) : v_(mpq_class(x)) {}
  Scalar(long x) : v_(mpq_class(x)) {}
  Scalar(long long x) : v_(mpq_class(static_cast<long>(x))) {}
  Scalar(const mpq_class& q) : v_(q) { std::get<0>(v_).canonicalize(); }
  Scalar(long num, long den);

  static Scalar from_double(double d);
  static Scalar rational(const std::string& text);
  // "p/q" or integer; decimals only if allow_float.
  static Scalar parse(const std::string& text, bool allow_float);

  bool is_exact() const { return v_.index() == 0; }
  const mpq_class& q() const;
  double to_double() const;
  Scalar as_float() const { return from_double(to_double()); }

  bool is_zero() const;
  int sign() const;
  bool is_integer() const;
  long to_long() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  Scalar pow(long e) const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  // "p/q" (or "p") for exact, shortest round-trip decimal for floats.
  std::string str() const;

 private:
  void check_finite() const;
  std::variant<mpq_class, double> v_;
};

inline double to_double(const Scalar& s) { return s.to_double(); }
inline double to_double(double d) { return d; }

}  // namespace sjack
