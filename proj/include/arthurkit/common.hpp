#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arthurkit {

/// Error for inputs that violate a documented domain rule (as opposed to
/// programming errors, which assert). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number on int64, always normalized (positive denominator,
/// reduced). The domain only ever produces halves, so no overflow care is
/// needed beyond normalization.
class Rat {
public:
  constexpr Rat() = default;
  constexpr Rat(long long value) : num_(value) {}  // implicit: integers are rationals
  Rat(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    normalize();
  }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string to_latex(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  std::string num = std::to_string(r.numerator() < 0 ? -r.numerator() : r.numerator());
  std::string s = r.numerator() < 0 ? "-" : "";
  return s + "\\frac{" + num + "}{" + std::to_string(r.denominator()) + "}";
}

/// Multiplicative sign, +1 or -1.
class Sign {
public:
  constexpr Sign() : v_(1) {}
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  /// (-1)^k
  static constexpr Sign pow_minus_one(long long k) { return Sign(k % 2 == 0 ? 1 : -1); }

  static Sign from_int(int v) {
    if (v != 1 && v != -1) throw DomainError("sign must be +1 or -1, got " + std::to_string(v));
    return Sign(v);
  }

  constexpr int value() const { return v_; }
  constexpr bool positive() const { return v_ > 0; }

  friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
  friend constexpr bool operator==(Sign a, Sign b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Sign a, Sign b) { return a.v_ != b.v_; }

  std::string str() const { return v_ > 0 ? "+1" : "-1"; }

private:
  explicit constexpr Sign(int v) : v_(v) {}
  int v_;
};

}  // namespace arthurkit
