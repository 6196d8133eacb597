// rational.hpp
// Exact rational and Gaussian-rational arithmetic on checked 64-bit integers.
// Every coefficient appearing in the structure-constant catalog, the gamma
// representations and the Lagrangian identities stays tiny; the overflow
// checks are there to turn an unexpected blow-up into a hard error instead
// of silent wraparound.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cartankit {

struct ArithmeticError : std::runtime_error {
  explicit ArithmeticError(const std::string& m) : std::runtime_error(m) {}
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in +");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in *");
  return r;
}

}  // namespace detail

// Reduced fraction, denominator > 0.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using detail::checked_add;
    using detail::checked_mul;
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t da = a.den_ / g;
    std::int64_t db = b.den_ / g;
    Rational r;
    r.num_ = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
    r.den_ = checked_mul(checked_mul(da, db), g);
    r.reduce();
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // reduce crosswise first to keep intermediates small
    std::int64_t g1 = std::gcd(std::abs(a.num_), b.den_);
    std::int64_t g2 = std::gcd(std::abs(b.num_), a.den_);
    Rational r;
    r.num_ = detail::checked_mul(a.num_ / g1, b.num_ / g2);
    r.den_ = detail::checked_mul(a.den_ / g2, b.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ArithmeticError("division by zero rational");
    Rational inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return a * inv;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    // fine for the small values we handle; overflow checked
    return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void reduce() {
    if (den_ == 0) throw ArithmeticError("zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(std::abs(num_), den_);
    num_ /= g;
    den_ /= g;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(re) {}  // NOLINT
  GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational conj() const { return {re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n2 = b.re_ * b.re_ + b.im_ * b.im_;
    if (n2.is_zero()) throw ArithmeticError("division by zero Gaussian rational");
    GaussianRational c = a * b.conj();
    return {c.re_ / n2, c.im_ / n2};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // "3/2", "i", "-i/2", "1/2+3i", "0"
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    if (!re_.is_zero()) s += re_.str();
    if (!im_.is_zero()) {
      if (!s.empty() && !(im_.num() < 0)) s += "+";
      if (im_ == Rational(1)) {
        s += "i";
      } else if (im_ == Rational(-1)) {
        s += "-i";
      } else if (im_.den() == 1) {
        s += im_.str() + "i";
      } else {
        s += std::to_string(im_.num()) + "i/" + std::to_string(im_.den());
      }
    }
    return s;
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace cartankit
