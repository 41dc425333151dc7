#pragma once

// Exact integers and rationals.
//
// Integer is boost's arbitrary precision cpp_int; Rational wraps
// cpp_rational so that the text format ("p/q" or "n") and the handful of
// helpers used throughout the library (floor, frac, parsing) live in one
// place. Nothing in the library touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hfs {

using Integer = boost::multiprecision::cpp_int;

/// Raised when an operation is called outside its mathematical domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for syntactically malformed input text.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for legal input that the library deliberately does not handle.
class unsupported_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal postcondition fails. Always a bug.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Floor division; b must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Least nonnegative residue of a modulo m > 0.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Checked narrowing to int64; throws unsupported_input on overflow.
inline std::int64_t to_int64(const Integer& x) {
  if (x > Integer(INT64_MAX) || x < Integer(INT64_MIN))
    throw unsupported_input("integer " + x.str() + " exceeds 64-bit range");
  return static_cast<std::int64_t>(x);
}

inline Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty()) throw parse_error("empty integer in '" + std::string(text) + "'");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw parse_error("malformed integer '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    // Boost 1.74 rejects negative denominators.
    v_ = den < 0 ? value_type(Integer(-num), Integer(-den)) : value_type(num, den);
  }

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  /// Largest integer <= *this.
  Integer floor() const { return floor_div(numerator(), denominator()); }
  /// Smallest integer >= *this.
  Integer ceil() const { return -floor_div(-numerator(), denominator()); }
  /// Fractional part in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  Rational operator-() const { return Rational(value_type(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q" in lowest terms, or "n" when integral.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Accepts "n" or "p/q" (q != 0) with an optional sign on p; no spaces.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw parse_error("sign in denominator of '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  const value_type& value() const { return v_; }

 private:
  explicit Rational(value_type v) : v_(std::move(v)) {}
  value_type v_{0};
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hfs
