#ifndef CUBICONES_EPS_RATIONAL_HPP
#define CUBICONES_EPS_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include "cubicones/rational.hpp"

namespace cubicones {

/// Rational augmented with a formal infinitesimal: std_part + eps_part * e.
/// The symbol e is never given a numeric value; the order is lexicographic,
/// so a total of exactly 2 with a positive e coefficient counts as > 2.
///
/// Serialized as "p/q+r/s*e" (the e term dropped when its coefficient is 0).
struct EpsRational {
  Rational std_part;
  Rational eps_part;

  EpsRational() = default;
  EpsRational(Rational s) : std_part(std::move(s)) {}  // NOLINT
  EpsRational(Rational s, Rational e)
      : std_part(std::move(s)), eps_part(std::move(e)) {}

  bool is_zero() const { return std_part.is_zero() && eps_part.is_zero(); }

  EpsRational operator-() const { return {-std_part, -eps_part}; }

  EpsRational& operator+=(const EpsRational& o) {
    std_part += o.std_part;
    eps_part += o.eps_part;
    return *this;
  }
  EpsRational& operator-=(const EpsRational& o) {
    std_part -= o.std_part;
    eps_part -= o.eps_part;
    return *this;
  }
  EpsRational& operator*=(const Rational& c) {
    std_part *= c;
    eps_part *= c;
    return *this;
  }

  friend EpsRational operator+(EpsRational a, const EpsRational& b) { return a += b; }
  friend EpsRational operator-(EpsRational a, const EpsRational& b) { return a -= b; }
  friend EpsRational operator*(EpsRational a, const Rational& c) { return a *= c; }
  friend EpsRational operator*(const Rational& c, EpsRational a) { return a *= c; }

  friend bool operator==(const EpsRational&, const EpsRational&) = default;
  friend std::strong_ordering operator<=>(const EpsRational& a, const EpsRational& b) {
    if (auto c = a.std_part <=> b.std_part; c != 0) return c;
    return a.eps_part <=> b.eps_part;
  }

  std::string to_string() const {
    if (eps_part.is_zero()) return std_part.to_string();
    std::string s = std_part.to_string();
    s += eps_part.sign() < 0 ? "-" : "+";
    s += eps_part.abs().to_string();
    s += "*e";
    return s;
  }

  static EpsRational parse(std::string_view text);
};

inline EpsRational EpsRational::parse(std::string_view text) {
  const auto star = text.rfind("*e");
  if (star == std::string_view::npos) return {Rational::parse(text), Rational(0)};
  // Split off the trailing "<sign><coeff>*e" term. The sign separator is the
  // last +/- that is not the leading sign of the coefficient itself.
  std::string_view head = text.substr(0, star);
  size_t sep = std::string_view::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      sep = i;
      break;
    }
  }
  if (sep == std::string_view::npos) {
    // pure epsilon term, e.g. "1*e" or "-1/2*e"
    return {Rational(0), Rational::parse(head)};
  }
  Rational eps = Rational::parse(head.substr(sep + 1));
  if (head[sep] == '-') eps = -eps;
  return {Rational::parse(head.substr(0, sep)), eps};
}

inline std::string to_string(const EpsRational& x) { return x.to_string(); }

}  // namespace cubicones

#endif
