#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace glg {

enum class FieldKind { rationals, prime_field };

/// Exact ground field: the rationals Q or a prime field GF(p).
/// GF(2) is fully supported; the characteristic is verified prime at
/// construction by trial division.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field prime(long p);

  /// Parses "Q", "q", "GF2", "gf7", "GF(3)".
  static Field parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  long characteristic() const { return char_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(FieldKind kind, long characteristic) : kind_(kind), char_(characteristic) {}

  FieldKind kind_;
  long char_;
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; prime-field values are residues in [0, p). Arithmetic never
/// rounds, and mixing elements of different fields throws.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), value_(0) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const { return field_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar&) const = default;

  /// "0", "-3", "2/5"; prime-field residues print as plain integers.
  std::string str() const;

 private:
  void reduce();
  static void require_same(const Scalar& a, const Scalar& b);

  Field field_;
  mpq_class value_;
};

}  // namespace glg
