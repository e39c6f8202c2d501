#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekit/algebra.hpp"

namespace liekit {

struct TrivialityResult {
  bool trivial = false;
  /// When trivial: c_k = phi[k] * base for every label k.
  std::optional<BracketTensor> base;
  std::vector<Scalar> phi;
};

/// Decides whether all bracket tensors lie on one line through the origin.
/// The base is the first nonzero tensor and its phi is 1; an all-zero family
/// gives base 0 and phi = 0.
TrivialityResult triviality_test(const MultiAlgebra& a);

/// c_k = phi(k) * base. The base must satisfy the single-product identities of
/// `kind` (BaseNotAdmissible otherwise).
MultiAlgebra trivial_from_base(const BracketTensor& base, const std::vector<std::pair<std::string, Scalar>>& phi,
                               Kind kind, std::optional<Grading> grading = std::nullopt,
                               std::optional<EndoSets> endos = std::nullopt);

/// Block-diagonal sum. Same field, labels and kind required (Mismatch).
/// Gradings concatenate; endomorphism families become every block-diagonal
/// pair of members.
MultiAlgebra direct_sum(const MultiAlgebra& a, const MultiAlgebra& b);

}  // namespace liekit
