#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "liekit/error.hpp"

namespace liekit {

/// The ground field: either Q or a prime field F_p with 2 <= p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws InvalidField unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }
  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// An exact field element. Rationals are kept as reduced fractions with a
/// positive denominator; F_p elements as residues in [0, p).
class Scalar {
 public:
  /// Zero of Q.
  Scalar() = default;
  /// Zero of the given field.
  explicit Scalar(FieldSpec field);
  Scalar(std::int64_t value, FieldSpec field);
  explicit Scalar(const mpq_class& q);

  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return Scalar(1, field); }

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Requires a rational scalar.
  const mpq_class& rational() const;
  /// Requires a prime-field scalar.
  std::uint32_t residue() const;

  /// Throws DivisionByZero on zero.
  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Elements of different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used for canonical (lexicographic) orderings: residues for
  /// F_p, numeric value for Q. Throws FieldMismatch across fields.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Grammar: -?[0-9]+(/[1-9][0-9]*)?. Throws ParseError, or DivisionByZero
/// when the denominator vanishes in the field.
Scalar parse_scalar(std::string_view text, FieldSpec field);
std::string format_scalar(const Scalar& s);

}  // namespace liekit
