#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "liekit/algebra.hpp"

namespace liekit {

enum class AnnihilatorKind { First, SecondPlus, SecondMinus, SuperFirst, SuperSecondPlus, SuperSecondMinus };

std::string_view annihilator_name(AnnihilatorKind w);
/// "first", "second_plus", ... Throws SchemaError.
AnnihilatorKind parse_annihilator(std::string_view name);
bool annihilator_compatible(Kind kind, AnnihilatorKind w);
/// The annihilators defined for a kind, minus before plus.
std::vector<AnnihilatorKind> annihilators_for(Kind kind);
bool is_minus(AnnihilatorKind w);

/// Left: products x * v with v in the subspace. Right: v * x.
enum class Side { Left, Right };

struct ClosureViolation {
  Side side;
  std::size_t label;
  std::size_t basis;      // algebra basis vector e_i
  std::size_t generator;  // row of the subspace basis
  Vector product;
};

struct IdealWitness {
  Subspace subspace;
  bool is_graded = false;
  std::vector<std::pair<Side, std::size_t>> closure_checked;
};

struct IdealCheck {
  bool ideal = false;
  IdealWitness witness;
  bool graded_required = false;
  std::optional<ClosureViolation> violation;  // first failing product, if any
};

/// One-sided for 1st kinds, two-sided for 2nd kinds; super kinds also need a
/// graded subspace. Throws KindMismatch for 3rd kinds, DimensionMismatch.
IdealCheck check_ideal(const MultiAlgebra& a, const Subspace& s);
bool is_ideal(const MultiAlgebra& a, const Subspace& s);

/// Matrices of x -> e_i * x (left) and x -> x * e_i (right) for every label.
std::vector<Matrix> multiplication_maps(const MultiAlgebra& a, bool left, bool right);

/// Generator vectors for each basis pair and ordered label pair, in (h, k, i, j) order.
std::vector<Vector> annihilator_generators(const MultiAlgebra& a, AnnihilatorKind w);
/// Span of the generators without the closure check. Throws KindMismatch.
Subspace annihilator_span(const MultiAlgebra& a, AnnihilatorKind w);
/// Span of the generators; throws InternalClosureFailure if it is not an ideal.
Subspace annihilator(const MultiAlgebra& a, AnnihilatorKind w);

struct LabelDependence {
  std::size_t h, k, i, j;
  Vector difference;  // quotient coordinates of e_i*_h e_j - e_i*_k e_j
};

struct FactorAlgebra {
  MultiAlgebra algebra;  // same labels and kind, quotient coordinates
  Quotient quotient;
  bool well_defined = true;  // coset-representative independence
  bool label_independent = true;
  std::optional<LabelDependence> dependence;
};

/// Quotient by an ideal. Throws NotAnIdeal.
FactorAlgebra factor_algebra(const MultiAlgebra& a, const Subspace& s);

/// Kind of the single-product factor by annihilator w: Lie for First and the
/// plus annihilators, Leibniz for the minus ones (graded when w is super).
Kind factor_kind(AnnihilatorKind w);
/// The factor by annihilator w collapsed to one product.
/// Throws NotWellDefined when the induced product depends on the label.
MultiAlgebra named_factor(const MultiAlgebra& a, AnnihilatorKind w);

enum class Decision { Simple, NotSimple, Inconclusive };
std::string_view decision_name(Decision d);

struct SimplicityVerdict {
  std::vector<Subspace> distinguished;  // {0, annihilators..., L}, distinct, in that order
  std::size_t i = 0;
  Decision decision = Decision::Inconclusive;
  std::optional<Subspace> offending_ideal;
  bool exhaustive = false;
  std::size_t subspaces_examined = 0;
  std::size_t ideals_found = 0;

  bool simple() const noexcept { return decision == Decision::Simple; }
};

/// Keeps the distinct members of `candidates` in order.
std::vector<Subspace> distinct_members(const std::vector<Subspace>& candidates);

/// Exhaustive over F_p (dim <= 4, p in {2,3,5}); over Q only ideals generated
/// by basis vectors and annihilator generators are examined, so the answer is
/// NotSimple or Inconclusive. Throws KindMismatch for 3rd kinds, BoundsExceeded.
SimplicityVerdict classify_simplicity(const MultiAlgebra& a, unsigned threads = 1);

}  // namespace liekit
