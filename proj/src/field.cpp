#include "liekit/field.hpp"

#include <fmt/format.h>

namespace liekit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BoundsExceeded: return "BoundsExceeded";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::MissingEndoSets: return "MissingEndoSets";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::InternalClosureFailure: return "InternalClosureFailure";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::MissingG: return "MissingG";
    case ErrorCode::BaseNotAdmissible: return "BaseNotAdmissible";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Error";
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p))
    throw Error(ErrorCode::InvalidField, fmt::format("{} is not a prime below 2^31", p));
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : fmt::format("F{}", p_);
}

namespace {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field.is_rational()) value_ = mpq_class(0);
}

Scalar::Scalar(std::int64_t value, FieldSpec field) : field_(field) {
  if (field.is_rational()) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
    value_ = mpq_class(z);
  } else {
    value_ = reduce_mod(value, field.characteristic());
  }
}

Scalar::Scalar(const mpq_class& q) : field_(FieldSpec::rationals()), value_(q) {
  std::get<mpq_class>(value_).canonicalize();
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a prime-field scalar");
  return std::get<std::uint32_t>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw Error(ErrorCode::FieldMismatch,
                fmt::format("{} vs {}", field_.name(), other.field_.name()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar r(field_);
  if (field_.is_rational()) {
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  } else {
    std::uint32_t p = field_.characteristic();
    r.value_ = pow_mod(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto& v = std::get<std::uint32_t>(r.value_);
    if (v != 0) v = field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    std::uint64_t s = std::uint64_t{v} + std::get<std::uint32_t>(rhs.value_);
    if (s >= field_.characteristic()) s -= field_.characteristic();
    v = static_cast<std::uint32_t>(s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    std::uint32_t b = std::get<std::uint32_t>(rhs.value_);
    v = v >= b ? v - b : static_cast<std::uint32_t>(std::uint64_t{v} + field_.characteristic() - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(std::uint64_t{v} * std::get<std::uint32_t>(rhs.value_) %
                                   field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_rational()) {
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::get<std::uint32_t>(a.value_) <=> std::get<std::uint32_t>(b.value_);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::ParseError, "unknown arithmetic operation");
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::uint32_t mpz_mod_p(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Scalar parse_scalar(std::string_view text, FieldSpec field) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den) || den.front() == '0')
      throw Error(ErrorCode::ParseError, fmt::format("bad denominator in '{}'", text));
  }
  if (!all_digits(num)) throw Error(ErrorCode::ParseError, fmt::format("bad scalar '{}'", text));

  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);

  if (field.is_rational()) return Scalar(mpq_class(n, d));

  std::uint32_t p = field.characteristic();
  std::uint32_t dr = mpz_mod_p(d, p);
  if (dr == 0)
    throw Error(ErrorCode::DivisionByZero,
                fmt::format("denominator of '{}' vanishes in {}", text, field.name()));
  return Scalar(mpz_mod_p(n, p), field) / Scalar(dr, field);
}

std::string format_scalar(const Scalar& s) {
  if (s.field().is_rational()) return s.rational().get_str();
  return std::to_string(s.residue());
}

}  // namespace liekit
