#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace syz {

using Int = boost::multiprecision::cpp_int;
/// Non-negative by contract; same representation as Int.
using Nat = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(const Int& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : num_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(int value) : num_(value) {}         // NOLINT(google-explicit-constructor)

  /// Throws ParameterError when `den` is zero.
  Rational(Int num, Int den);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  /// Always "num/den", including integers ("3/1").
  std::string str() const;

  /// Accepts "num/den" (any sign placement on num, den > 0 after
  /// normalization) or a bare integer "k". Throws ParameterError otherwise.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize();

  Int num_{0};
  Int den_{1};
};

}  // namespace syz
