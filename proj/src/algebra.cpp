#include "liekit/algebra.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace liekit {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::First: return "first";
    case Kind::Second: return "second";
    case Kind::Third: return "third";
    case Kind::SuperFirst: return "super_first";
    case Kind::SuperSecond: return "super_second";
    case Kind::SuperThird: return "super_third";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::First, Kind::Second, Kind::Third, Kind::SuperFirst, Kind::SuperSecond, Kind::SuperThird})
    if (kind_name(k) == name) return k;
  throw Error(ErrorCode::SchemaError, fmt::format("unknown kind '{}'", name));
}

bool is_super(Kind kind) {
  return kind == Kind::SuperFirst || kind == Kind::SuperSecond || kind == Kind::SuperThird;
}

int kind_family(Kind kind) {
  switch (kind) {
    case Kind::First:
    case Kind::SuperFirst: return 1;
    case Kind::Second:
    case Kind::SuperSecond: return 2;
    case Kind::Third:
    case Kind::SuperThird: return 3;
  }
  return 0;
}

Kind with_grading(Kind kind, bool graded) {
  static constexpr Kind plain[] = {Kind::First, Kind::Second, Kind::Third};
  static constexpr Kind super[] = {Kind::SuperFirst, Kind::SuperSecond, Kind::SuperThird};
  int f = kind_family(kind) - 1;
  return graded ? super[f] : plain[f];
}

// ---------------------------------------------------------------- LabelSet

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::SchemaError, "label set S must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::SchemaError, fmt::format("duplicate label '{}'", l));
}

std::size_t LabelSet::index(std::string_view name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownLabel, fmt::format("no label '{}'", name));
  return static_cast<std::size_t>(it - labels_.begin());
}

// ---------------------------------------------------------------- BracketTensor

BracketTensor::BracketTensor(std::size_t dim, FieldSpec field)
    : dim_(dim), field_(field), c_(dim * dim * dim, Scalar(field)) {}

Vector BracketTensor::product(std::size_t i, std::size_t j) const {
  auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

void BracketTensor::set_product(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "product vector length");
  for (std::size_t l = 0; l < dim_; ++l) entry(i, j, l) = v[l];
}

bool BracketTensor::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

BracketTensor BracketTensor::scaled(const Scalar& s) const {
  BracketTensor t = *this;
  for (auto& x : t.c_) x *= s;
  return t;
}

// ---------------------------------------------------------------- MultiAlgebra

MultiAlgebra::MultiAlgebra(FieldSpec field, std::size_t dim, LabelSet labels, Kind kind,
                           std::vector<BracketTensor> brackets, std::optional<Grading> grading,
                           std::optional<EndoSets> endos)
    : field_(field),
      dim_(dim),
      labels_(std::move(labels)),
      kind_(kind),
      brackets_(std::move(brackets)),
      grading_(std::move(grading)),
      endos_(std::move(endos)) {
  if (brackets_.size() != labels_.size())
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} bracket tensors for {} labels", brackets_.size(), labels_.size()));
  for (std::size_t k = 0; k < brackets_.size(); ++k) {
    if (brackets_[k].dim() != dim_)
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("tensor for label '{}' has dim {}, expected {}", labels_.name(k), brackets_[k].dim(), dim_));
    if (brackets_[k].field() != field_)
      throw Error(ErrorCode::FieldMismatch, fmt::format("tensor for label '{}'", labels_.name(k)));
  }
  if (grading_) {
    if (grading_->size() != dim_)
      throw Error(ErrorCode::DimensionMismatch, fmt::format("grading of length {} for dim {}", grading_->size(), dim_));
    for (auto p : grading_->parity)
      if (p > 1) throw Error(ErrorCode::SchemaError, "parities must be 0 or 1");
  }
  if (is_super(kind_) && !grading_)
    throw Error(ErrorCode::NotGraded, fmt::format("{} algebra without a grading", kind_name(kind_)));
  if (endos_) {
    for (std::size_t which = 0; which < 3; ++which)
      for (const auto& m : endos_->family(which))
        if (m.rows() != dim_ || m.cols() != dim_ || m.field() != field_)
          throw Error(ErrorCode::DimensionMismatch, "endomorphisms must be dim x dim over the algebra's field");
  }
  if (kind_family(kind_) == 3 &&
      (!endos_ || endos_->sigma.empty() || endos_->sigma_ring.empty() || endos_->sigma_check.empty()))
    throw Error(ErrorCode::MissingEndoSets, "3rd-kind algebras need nonempty sigma, sigma_ring and sigma_check");
}

MultiAlgebra MultiAlgebra::zero(FieldSpec field, std::size_t dim, LabelSet labels, Kind kind,
                                std::optional<Grading> grading, std::optional<EndoSets> endos) {
  std::vector<BracketTensor> brackets(labels.size(), BracketTensor(dim, field));
  return MultiAlgebra(field, dim, std::move(labels), kind, std::move(brackets), std::move(grading),
                      std::move(endos));
}

MultiAlgebra MultiAlgebra::with_brackets(std::vector<BracketTensor> brackets) const {
  return MultiAlgebra(field_, dim_, labels_, kind_, std::move(brackets), grading_, endos_);
}

MultiAlgebra MultiAlgebra::with_kind(Kind kind) const {
  return MultiAlgebra(field_, dim_, labels_, kind, brackets_, grading_, endos_);
}

// ---------------------------------------------------------------- evaluation

Vector bracket_eval(const MultiAlgebra& a, std::string_view label, const Vector& x, const Vector& y) {
  return bracket_eval(a, a.labels().index(label), x, y);
}

Vector bracket_eval(const MultiAlgebra& a, std::size_t label, const Vector& x, const Vector& y) {
  if (label >= a.label_count()) throw Error(ErrorCode::UnknownLabel, fmt::format("label index {}", label));
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("operands of length {} and {} in dimension {}", x.size(), y.size(), n));
  const BracketTensor& c = a.bracket(label);
  Vector out = zero_vector(n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& e = c.entry(i, j, l);
        if (!e.is_zero()) out[l] += w * e;
      }
    }
  }
  return out;
}

std::string_view parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
    case Parity::Zero: return "zero";
  }
  return "?";
}

Parity parity_of(const MultiAlgebra& a, const Vector& x) {
  if (!a.grading()) throw Error(ErrorCode::NotGraded, "parity of an element of an ungraded algebra");
  if (x.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "element length");
  bool even = false, odd = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    (a.parity(i) ? odd : even) = true;
  }
  if (even && odd) return Parity::Mixed;
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Zero;
}

Vector apply_endo(const Matrix& m, const Vector& x) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "endomorphism must be square");
  return m.apply(x);
}

}  // namespace liekit
