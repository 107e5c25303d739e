#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace xhc {

/// Error thrown for malformed input files (distinct from axiom violations).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Error thrown for structurally broken data (index out of range etc.).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(unsigned long p);

/// Coefficient field: the rationals or a prime field F_p.
struct Field {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  unsigned long p = 0;

  static Field rational() { return Field{Kind::Rational, 0}; }
  static Field prime(unsigned long p);

  bool operator==(const Field&) const = default;
  std::string str() const;
};

/// Exact field element. Rational values are kept in lowest terms by GMP;
/// prime-field values are canonical residues in [0, p).
class Scalar {
 public:
  Scalar() : f_(Field::rational()) {}
  explicit Scalar(Field f) : f_(f) {}
  Scalar(long v, Field f) : v_(v), f_(f) { reduce_(); }
  Scalar(mpq_class v, Field f) : v_(std::move(v)), f_(f) { reduce_(); }

  static Scalar zero(Field f) { return Scalar(0, f); }
  static Scalar one(Field f) { return Scalar(1, f); }

  /// Parses "7", "-3/2" style decimal rationals. In F_p the denominator is
  /// inverted mod p. Floats are rejected.
  static Scalar parse(const std::string& s, Field f);
  std::string str() const;

  const Field& field() const { return f_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  void reduce_();
  void check_(const Scalar& o) const;

  mpq_class v_;
  Field f_;
};

}  // namespace xhc
