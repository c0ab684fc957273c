#ifndef CUBICONES_RATIONAL_HPP
#define CUBICONES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicones {

/// Exact arbitrary-precision fraction. Always in lowest terms, denominator
/// positive. All arithmetic is exact; there is no floating-point mode.
///
/// Serialized as "p/q", with "/q" omitted when q == 1.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : value_(n) {}
  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_ = den < 0 ? Backend(-num, -den) : Backend(num, den);  // canonicalized
  }

  static Rational parse(std::string_view text);

  Int numerator() const { return boost::multiprecision::numerator(value_); }
  Int denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  using Backend = boost::multiprecision::cpp_rational;
  Backend value_;
};

inline std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += '/';
    s += denominator().str();
  }
  return s;
}

inline Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty input");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(text)));
    }
    Int num{std::string(trim(text.substr(0, slash)))};
    Int den{std::string(trim(text.substr(slash + 1)))};
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational::parse: bad input '" + std::string(text) + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.to_string(); }

}  // namespace cubicones

#endif
