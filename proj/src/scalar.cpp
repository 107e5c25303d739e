#include "xhc/scalar.hpp"

namespace xhc {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) throw ParseError("field modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::Prime, p};
}

std::string Field::str() const {
  return kind == Kind::Rational ? "Q" : "F" + std::to_string(p);
}

void Scalar::reduce_() {
  v_.canonicalize();
  if (f_.kind == Field::Kind::Prime) {
    mpz_class den = v_.get_den();
    mpz_class num = v_.get_num();
    mpz_class mod(static_cast<unsigned long>(f_.p));
    if (den != 1) {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw StructuralError("denominator not invertible mod " + std::to_string(f_.p));
      num *= inv;
    }
    mpz_class r = num % mod;
    if (r < 0) r += mod;
    v_ = mpq_class(r);
  }
}

void Scalar::check_(const Scalar& o) const {
  if (!(f_ == o.f_)) throw StructuralError("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_(o);
  return Scalar(mpq_class(v_ + o.v_), f_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_(o);
  return Scalar(mpq_class(v_ - o.v_), f_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_(o);
  return Scalar(mpq_class(v_ * o.v_), f_);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_), f_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw StructuralError("division by zero");
  if (f_.kind == Field::Kind::Rational) return Scalar(mpq_class(1 / v_), f_);
  mpz_class inv, mod(static_cast<unsigned long>(f_.p));
  mpz_class num = v_.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw StructuralError("element not invertible mod " + std::to_string(f_.p));
  return Scalar(mpq_class(inv), f_);
}

Scalar Scalar::parse(const std::string& s, Field f) {
  if (s.empty()) throw ParseError("empty scalar literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("invalid scalar literal '" + s + "' (exact rationals only)");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParseError("invalid scalar literal '" + s + "'");
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  return Scalar(v, f);
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace xhc
