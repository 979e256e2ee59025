#include "sjack/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace sjack {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  v_ = q;
}

Scalar Scalar::from_double(double d) {
  Scalar s;
  s.v_ = d;
  s.check_finite();
  return s;
}

Scalar Scalar::rational(const std::string& text) { return parse(text, false); }

Scalar Scalar::parse(const std::string& text, bool allow_float) {
  if (text.empty()) throw std::invalid_argument("empty number");
  bool plain = true;
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      plain = false;
      break;
    }
  }
  if (plain) {
    std::string t = text[0] == '+' ? text.substr(1) : text;
    auto slash = t.find('/');
    if (slash != std::string::npos && (slash == 0 || slash + 1 == t.size()))
      throw std::invalid_argument("malformed rational '" + text + "'");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(q);
  }
  if (!allow_float)
    throw std::invalid_argument("'" + text + "' is not a rational p/q (pass --float to accept decimals)");
  double d = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number '" + text + "'");
  return from_double(d);
}

const mpq_class& Scalar::q() const {
  if (!is_exact()) throw std::logic_error("exact value requested from float scalar");
  return std::get<0>(v_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<0>(v_).get_d();
  return std::get<1>(v_);
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<0>(v_));
  double d = std::get<1>(v_);
  return (d > 0) - (d < 0);
}

bool Scalar::is_integer() const {
  if (is_exact()) return std::get<0>(v_).get_den() == 1;
  double d = std::get<1>(v_);
  return std::floor(d) == d;
}

long Scalar::to_long() const {
  if (!is_integer()) throw std::domain_error("non-integer scalar " + str());
  if (is_exact()) return std::get<0>(v_).get_num().get_si();
  return static_cast<long>(std::get<1>(v_));
}

void Scalar::check_finite() const {
  if (!is_exact() && !std::isfinite(std::get<1>(v_)))
    throw std::domain_error("non-finite float produced");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.is_exact())
    std::get<0>(r.v_) = -std::get<0>(r.v_);
  else
    std::get<1>(r.v_) = -std::get<1>(r.v_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<0>(v_) += std::get<0>(o.v_);
  else
    v_ = to_double() + o.to_double();
  check_finite();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<0>(v_) -= std::get<0>(o.v_);
  else
    v_ = to_double() - o.to_double();
  check_finite();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<0>(v_) *= std::get<0>(o.v_);
  else
    v_ = to_double() * o.to_double();
  check_finite();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_exact() && o.is_exact())
    std::get<0>(v_) /= std::get<0>(o.v_);
  else
    v_ = to_double() / o.to_double();
  check_finite();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return std::get<0>(a.v_) == std::get<0>(b.v_);
  return a.to_double() == b.to_double();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return std::get<0>(a.v_) < std::get<0>(b.v_);
  return a.to_double() < b.to_double();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return Scalar(1) / pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<0>(v_).get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<1>(v_));
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace sjack
