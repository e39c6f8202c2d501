#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "liekit/axioms.hpp"
#include "liekit/ideals.hpp"

namespace liekit {

/// maps[label][i] is the image of the algebra basis vector e_i.
using RepFamily = std::vector<std::vector<Matrix>>;

/// A family of linear maps f_k : L -> End(V) (and g_k for 2nd kinds).
class ModuleRep {
 public:
  /// Validates shapes. 2nd kinds need g (MissingG); super kinds need a carrier
  /// grading (NotGraded); 3rd kinds have no modules (KindMismatch).
  ModuleRep(MultiAlgebra algebra, std::size_t carrier_dim, RepFamily f, std::optional<RepFamily> g = std::nullopt,
            std::optional<Grading> carrier_grading = std::nullopt);

  static ModuleRep zero(const MultiAlgebra& algebra, std::size_t carrier_dim,
                        std::optional<Grading> carrier_grading = std::nullopt);

  const MultiAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t carrier_dim() const noexcept { return carrier_dim_; }
  const std::optional<Grading>& carrier_grading() const noexcept { return carrier_grading_; }
  std::uint8_t carrier_parity(std::size_t v) const { return carrier_grading_ ? carrier_grading_->parity[v] : 0; }
  std::span<const std::uint8_t> carrier_parity_vector() const {
    return carrier_grading_ ? std::span<const std::uint8_t>(carrier_grading_->parity) : std::span<const std::uint8_t>();
  }
  const RepFamily& f() const noexcept { return f_; }
  const std::optional<RepFamily>& g() const noexcept { return g_; }
  bool has_g() const noexcept { return g_.has_value(); }

  /// f_k(x) by linearity in x.
  Matrix eval_f(std::size_t label, const Vector& x) const;
  /// Throws MissingG.
  Matrix eval_g(std::size_t label, const Vector& x) const;
  /// Every f_k(e_i) and g_k(e_i).
  std::vector<Matrix> all_maps() const;

  ModuleRep with_f(RepFamily f) const;

  friend bool operator==(const ModuleRep&, const ModuleRep&) = default;

 private:
  MultiAlgebra algebra_;
  std::size_t carrier_dim_;
  RepFamily f_;
  std::optional<RepFamily> g_;
  std::optional<Grading> carrier_grading_;
};

inline constexpr std::string_view kModuleParity = "module_parity";
inline constexpr std::string_view kModuleBracket = "module_bracket";
inline constexpr std::string_view kModuleCommute = "module_commute";
inline constexpr std::string_view kModuleBracketF = "module_bracket_f";
inline constexpr std::string_view kModuleBracketG = "module_bracket_g";
inline constexpr std::string_view kModuleGG = "module_gg";
inline constexpr std::string_view kModuleFFCommute = "module_ff_commute";
inline constexpr std::string_view kModuleFGCommute = "module_fg_commute";

/// Module identities for the algebra's kind over all basis pairs and ordered
/// label pairs. Witness lhs/rhs are row-major flattened matrices; witness
/// basis is (i, j), labels (h, k).
VerificationReport check_module(const ModuleRep& rep);

/// The algebra acting on itself: ad_k for 1st kinds, (-r_k, l_k) for 2nd kinds.
/// Not assumed to satisfy the module identities. Throws KindMismatch.
ModuleRep adjoint_module(const MultiAlgebra& a);

struct SubmoduleCheck {
  bool submodule = false;
  bool graded_required = false;
  bool is_graded = false;
  /// (map index into all_maps(), generator row) of the first escaping image.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Throws DimensionMismatch.
SubmoduleCheck check_submodule(const ModuleRep& rep, const Subspace& u);
bool is_submodule(const ModuleRep& rep, const Subspace& u);

std::vector<Vector> module_annihilator_generators(const ModuleRep& rep, AnnihilatorKind w);
/// Throws KindMismatch.
Subspace module_annihilator_span(const ModuleRep& rep, AnnihilatorKind w);
/// Throws InternalClosureFailure when the span is not a submodule.
Subspace module_annihilator(const ModuleRep& rep, AnnihilatorKind w);

struct SubmoduleVerdict {
  std::vector<Subspace> distinguished;
  std::size_t i = 0;
  Decision decision = Decision::Inconclusive;
  std::optional<Subspace> offending;
  bool exhaustive = false;
  std::size_t subspaces_examined = 0;
  std::size_t submodules_found = 0;

  bool irreducible() const noexcept { return decision == Decision::Simple; }
};

/// Mirrors classify_simplicity on the carrier space.
SubmoduleVerdict classify_irreducibility(const ModuleRep& rep, unsigned threads = 1);

}  // namespace liekit
