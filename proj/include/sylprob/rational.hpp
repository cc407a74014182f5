#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "sylprob/error.hpp"

namespace sylprob {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with positive denominator.
/// Serializes as "num/den", or just "num" when integral.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den)
      : v_(den != 0 ? Rep(num, den) : throw Error("rational with zero denominator")) {}
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_integral() const { return den() == 1; }

  std::string str() const {
    if (is_integral()) return num().str();
    return num().str() + "/" + den().str();
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s));
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad rational: '" + s + "'");
    }
  }

  Rational pow(unsigned e) const {
    using boost::multiprecision::pow;
    return Rational(pow(num(), e), pow(den(), e));
  }

  /// Smallest integer >= *this. Number must be nonnegative in our uses,
  /// but the formula below is correct for any sign.
  BigInt ceil() const {
    BigInt q = num() / den();
    if (num() % den() != 0 && num() > 0) ++q;
    return q;
  }

  BigInt floor() const {
    BigInt q = num() / den();
    if (num() % den() != 0 && num() < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw Error("rational division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep v) : v_(std::move(v)) {}

  Rep v_;  // kept normalized by the representation
};

}  // namespace sylprob
