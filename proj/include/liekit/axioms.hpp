#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liekit/algebra.hpp"

namespace liekit {

/// A concrete failing instance of an identity. `basis` holds basis indices
/// (i, j, m as applicable), `labels` label indices (k) or (h, k), `endos`
/// endomorphism indices (sigma, sigma_ring, sigma_check) or (family, index).
struct Witness {
  std::vector<std::size_t> basis;
  std::vector<std::size_t> labels;
  std::vector<std::size_t> endos;
  Vector lhs;
  Vector rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;  // present iff !pass
};

struct VerificationReport {
  std::vector<CheckEntry> checks;

  bool all_pass() const;
  const CheckEntry* find(std::string_view name) const;
  /// First failing entry, or nullptr.
  const CheckEntry* first_failure() const;
};

struct CheckOptions {
  /// Also require [x, x]_k = 0 (for even x in the graded case). Only adds a
  /// check in characteristic 2, where anti-symmetry does not imply it.
  bool strict_alternating = false;
};

// Identity names as they appear in reports.
inline constexpr std::string_view kGrading = "grading";
inline constexpr std::string_view kAntisymmetry = "antisymmetry";
inline constexpr std::string_view kAlternating = "alternating";
inline constexpr std::string_view kJacobiFirst = "jacobi_first";
inline constexpr std::string_view kLongJacobiFirst = "long_jacobi_first";
inline constexpr std::string_view kJacobiSecond = "jacobi_second";
inline constexpr std::string_view kLabelFlip = "label_flip";
inline constexpr std::string_view kEndoEven = "endo_even";
inline constexpr std::string_view kJacobiThird = "jacobi_third";
inline constexpr std::string_view kHomLie = "hom_lie";

/// Products of homogeneous basis vectors land in the block of the summed parity.
CheckEntry check_grading(const MultiAlgebra& a);
/// [x, y]_k = -[y, x]_k, or the signed super form for super kinds.
CheckEntry check_antisymmetry(const MultiAlgebra& a);
CheckEntry check_alternating(const MultiAlgebra& a);
/// Mixed-label Jacobi identity over all ordered label pairs; the graded form
/// for SuperFirst.
CheckEntry check_jacobi_first(const MultiAlgebra& a);
/// Six-term identity symmetrized in the two labels, unordered label pairs.
CheckEntry check_long_jacobi_first(const MultiAlgebra& a);
/// {jacobi_second, label_flip}.
std::array<CheckEntry, 2> check_jacobi_second(const MultiAlgebra& a);
/// Every endomorphism preserves the parity blocks. Throws MissingEndoSets, NotGraded.
CheckEntry check_endo_even(const MultiAlgebra& a);
/// Endomorphism-twisted identity over all label pairs and all endomorphism
/// triples. Throws MissingEndoSets.
CheckEntry check_jacobi_third(const MultiAlgebra& a);
/// Cyclic sigma-twisted Jacobi sum for a single ungraded bracket.
/// Throws KindMismatch unless |S| = 1.
CheckEntry check_hom_lie(const MultiAlgebra& a, const Matrix& sigma);

/// Full identity suite for the algebra's kind. Every check runs; each failing
/// check carries the lexicographically least failing tuple.
VerificationReport verify(const MultiAlgebra& a, const CheckOptions& options = {});

/// Recomputes (lhs, rhs) of a witness through bracket_eval. `sigma` is only
/// used for hom_lie witnesses.
std::pair<Vector, Vector> replay_witness(const MultiAlgebra& a, std::string_view check, const Witness& w,
                                         const Matrix* sigma = nullptr);

}  // namespace liekit
