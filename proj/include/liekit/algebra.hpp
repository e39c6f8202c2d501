#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liekit/linear.hpp"

namespace liekit {

/// The six structures: 1st/2nd/3rd kind, ungraded or Z2-graded.
enum class Kind { First, Second, Third, SuperFirst, SuperSecond, SuperThird };

std::string_view kind_name(Kind kind);
/// Throws SchemaError for unknown names.
Kind parse_kind(std::string_view name);
bool is_super(Kind kind);
/// 1, 2 or 3.
int kind_family(Kind kind);
Kind with_grading(Kind kind, bool graded);

/// The finite index set S of bracket labels, in a fixed order.
class LabelSet {
 public:
  /// Throws SchemaError when empty or when a label repeats.
  explicit LabelSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& name(std::size_t i) const { return labels_.at(i); }
  /// Throws UnknownLabel.
  std::size_t index(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return labels_; }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Structure constants of one bilinear product: entry(i, j, l) is the
/// coefficient of e_l in e_i * e_j.
class BracketTensor {
 public:
  BracketTensor(std::size_t dim, FieldSpec field);

  std::size_t dim() const noexcept { return dim_; }
  FieldSpec field() const noexcept { return field_; }

  const Scalar& entry(std::size_t i, std::size_t j, std::size_t l) const {
    return c_[(i * dim_ + j) * dim_ + l];
  }
  Scalar& entry(std::size_t i, std::size_t j, std::size_t l) { return c_[(i * dim_ + j) * dim_ + l]; }
  /// e_i * e_j as a coefficient vector.
  Vector product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const Vector& v);

  bool is_zero() const;
  BracketTensor scaled(const Scalar& s) const;
  std::span<const Scalar> entries() const { return c_; }

  friend bool operator==(const BracketTensor&, const BracketTensor&) = default;

 private:
  std::size_t dim_;
  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// Parity (0 even, 1 odd) of each basis vector.
struct Grading {
  std::vector<std::uint8_t> parity;

  std::size_t size() const noexcept { return parity.size(); }
  std::uint8_t operator[](std::size_t i) const { return parity[i]; }
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// The three endomorphism families used by 3rd-kind identities.
struct EndoSets {
  std::vector<Matrix> sigma;
  std::vector<Matrix> sigma_ring;
  std::vector<Matrix> sigma_check;

  const std::vector<Matrix>& family(std::size_t which) const {
    return which == 0 ? sigma : (which == 1 ? sigma_ring : sigma_check);
  }
  friend bool operator==(const EndoSets&, const EndoSets&) = default;
};

/// A vector space with a finite family of bilinear products indexed by S.
class MultiAlgebra {
 public:
  /// Validates shapes and fields. Super kinds need a grading (NotGraded);
  /// 3rd kinds need three nonempty endomorphism families (MissingEndoSets).
  MultiAlgebra(FieldSpec field, std::size_t dim, LabelSet labels, Kind kind,
               std::vector<BracketTensor> brackets, std::optional<Grading> grading = std::nullopt,
               std::optional<EndoSets> endos = std::nullopt);

  static MultiAlgebra zero(FieldSpec field, std::size_t dim, LabelSet labels, Kind kind,
                           std::optional<Grading> grading = std::nullopt,
                           std::optional<EndoSets> endos = std::nullopt);

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const LabelSet& labels() const noexcept { return labels_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  Kind kind() const noexcept { return kind_; }
  const std::vector<BracketTensor>& brackets() const noexcept { return brackets_; }
  const BracketTensor& bracket(std::size_t label) const { return brackets_.at(label); }
  const std::optional<Grading>& grading() const noexcept { return grading_; }
  const std::optional<EndoSets>& endos() const noexcept { return endos_; }

  /// Parity of basis vector i; 0 for ungraded algebras.
  std::uint8_t parity(std::size_t i) const { return grading_ ? grading_->parity[i] : 0; }
  std::span<const std::uint8_t> parity_vector() const {
    return grading_ ? std::span<const std::uint8_t>(grading_->parity) : std::span<const std::uint8_t>();
  }

  MultiAlgebra with_brackets(std::vector<BracketTensor> brackets) const;
  MultiAlgebra with_kind(Kind kind) const;

  friend bool operator==(const MultiAlgebra&, const MultiAlgebra&) = default;

 private:
  FieldSpec field_;
  std::size_t dim_;
  LabelSet labels_;
  Kind kind_;
  std::vector<BracketTensor> brackets_;
  std::optional<Grading> grading_;
  std::optional<EndoSets> endos_;
};

/// Bilinear extension of the structure constants of label k.
Vector bracket_eval(const MultiAlgebra& a, std::string_view label, const Vector& x, const Vector& y);
Vector bracket_eval(const MultiAlgebra& a, std::size_t label, const Vector& x, const Vector& y);

enum class Parity { Even, Odd, Mixed, Zero };

std::string_view parity_name(Parity p);
/// Throws NotGraded for ungraded algebras.
Parity parity_of(const MultiAlgebra& a, const Vector& x);

Vector apply_endo(const Matrix& m, const Vector& x);

/// Sign (-1)^(a*b) for parities a, b.
inline Scalar super_sign(std::uint8_t a, std::uint8_t b, FieldSpec field) {
  return Scalar((a & b & 1) ? -1 : 1, field);
}

}  // namespace liekit
