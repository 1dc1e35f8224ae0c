#include "glg/field.hpp"

#include <cctype>

namespace glg {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(long p) {
  if (p >= (1L << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime < 2^31, got " +
                                std::to_string(p));
  }
  return Field(FieldKind::prime_field, p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "q") return rationals();
  std::string t = text;
  if (t.size() >= 2 && (t[0] == 'g' || t[0] == 'G') && (t[1] == 'f' || t[1] == 'F')) {
    std::string digits;
    for (std::size_t i = 2; i < t.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(t[i]))) digits += t[i];
    }
    if (!digits.empty()) return prime(std::stol(digits));
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected Q or GF<p>)");
}

std::string Field::name() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "GF(" + std::to_string(char_) + ")";
}

Scalar::Scalar(Field field, long value) : field_(field), value_(value) { reduce(); }

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), value_(value) { reduce(); }

void Scalar::reduce() {
  if (field_.kind() == FieldKind::prime_field) {
    if (value_.get_den() != 1) {
      // q = a/b over GF(p) means a * b^{-1}; resolve at construction.
      Scalar num(field_, mpq_class(value_.get_num()));
      Scalar den(field_, mpq_class(value_.get_den()));
      value_ = (num * den.inverse()).value_;
      return;
    }
    mpz_class p(field_.characteristic());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), value_.get_num().get_mpz_t(), p.get_mpz_t());
    value_ = mpq_class(r);
  } else {
    value_.canonicalize();
  }
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) {
    throw std::invalid_argument("scalar field mismatch: " + a.field_.name() + " vs " +
                                b.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r = *this;
  if (field_.kind() == FieldKind::rationals) {
    r.value_ = 1 / value_;
  } else {
    mpz_class p(field_.characteristic());
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), p.get_mpz_t()) == 0) {
      throw std::domain_error("non-invertible residue");
    }
    r.value_ = mpq_class(inv);
  }
  r.reduce();
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar r = a;
  r.value_ = a.value_ + b.value_;
  r.reduce();
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar r = a;
  r.value_ = a.value_ - b.value_;
  r.reduce();
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar r = a;
  r.value_ = a.value_ * b.value_;
  r.reduce();
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  return a * b.inverse();
}

std::string Scalar::str() const { return value_.get_str(); }

}  // namespace glg
