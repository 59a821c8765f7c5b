#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace trialg {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; every arithmetic operation is exact.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    q_.canonicalize();
  }
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" with decimal integers.
  static Scalar parse(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const;
  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  /// Total number of bits in numerator and denominator; used only as a
  /// pivot-size heuristic to limit coefficient growth.
  std::size_t bit_size() const {
    return mpz_sizeinbase(q_.get_num_mpz_t(), 2) +
           mpz_sizeinbase(q_.get_den_mpz_t(), 2);
  }

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
  friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.q_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

  Scalar inverse() const {
    if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
    return Scalar(mpq_class(1) / q_);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace trialg
