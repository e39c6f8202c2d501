#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liekit/axioms.hpp"

namespace liekit {

inline constexpr std::uint64_t kSearchCap = std::uint64_t{1} << 24;

struct SearchSpec {
  FieldSpec field = FieldSpec::prime(2);
  std::size_t dim = 1;
  std::size_t label_count = 2;
  Kind kind = Kind::First;
  /// Only anti-symmetric tensors: c[j][i] is tied to c[i][j] and even
  /// diagonals vanish. 1st kinds only.
  bool alternating = false;
  /// Only tuples whose members each satisfy the single-product identities.
  /// Every passing tuple survives this filter.
  bool prefilter = false;
  std::optional<Grading> grading;  // required for super kinds
};

/// Position of a free coefficient: entry (i, j, l), optionally mirrored into
/// (j, i, l) with the given sign.
struct Slot {
  std::size_t i, j, l;
  std::optional<Scalar> mirror_sign;
};

/// Free coefficients of one tensor under the search filters.
std::vector<Slot> search_slots(const SearchSpec& spec);

struct NegativeSample {
  std::uint64_t index;
  std::string check;
  Witness witness;
};

struct CensusIssue {
  std::uint64_t index;
  std::string what;
};

struct Certification {
  std::uint64_t positives_reverified = 0;
  std::uint64_t positives_failed = 0;
  std::uint64_t negatives_replayed = 0;
  std::uint64_t negatives_not_refailing = 0;
  bool ok() const noexcept { return positives_failed == 0 && negatives_not_refailing == 0; }
};

struct CensusVariant {
  bool strict_alternating = false;
  std::uint64_t examined = 0;
  std::uint64_t passing = 0;
  std::uint64_t trivial = 0;
  std::uint64_t nontrivial = 0;
  std::uint64_t negatives = 0;
  /// annihilator name -> count of passing instances per annihilator dimension
  std::map<std::string, std::vector<std::uint64_t>> annihilator_dims;
  std::uint64_t closure_checked = 0;
  std::vector<CensusIssue> closure_violations;
  std::uint64_t containment_checked = 0;
  std::vector<CensusIssue> containment_violations;
  std::uint64_t factor_checked = 0;
  std::vector<CensusIssue> factor_failures;
  std::uint64_t adjoint_checked = 0;
  std::uint64_t adjoint_passed = 0;
  std::uint64_t adjoint_failed_trivial = 0;
  /// Every non-trivial passing instance whose adjoint module fails.
  std::vector<CensusIssue> adjoint_failures_nontrivial;
  std::uint64_t module_annihilator_checked = 0;
  std::vector<CensusIssue> module_annihilator_violations;
  std::vector<std::uint64_t> nontrivial_examples;  // first few, ascending
  std::vector<NegativeSample> negative_samples;    // first few, ascending
  std::vector<std::uint64_t> positive_indices;
  Certification certification;
};

struct CensusReport {
  SearchSpec spec;
  std::size_t slots_per_label = 0;
  std::uint64_t raw_space = 0;      // p^(slots * labels)
  std::uint64_t admissible_per_label = 0;  // with prefilter
  std::uint64_t candidates = 0;     // tuples actually enumerated
  std::vector<CensusVariant> variants;
};

struct SearchOptions {
  unsigned threads = 1;
  std::size_t max_samples = 8;
  /// Called with (done, total) from the coordinating thread.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Throws BoundsExceeded (p not in {2,3}, dim > 3, labels not in 1..3, or more
/// than 2^24 candidates) and KindMismatch (3rd kinds; alternating 2nd kinds).
void validate_search(const SearchSpec& spec);

/// The algebra for a raw candidate index (base p digits, label 0 slot 0 lowest).
MultiAlgebra decode_candidate(const SearchSpec& spec, std::uint64_t raw_index);

/// Enumerates every candidate, verifies it and profiles each positive. In
/// characteristic 2 a 1st-kind census is reported with the strict alternating
/// check off and on. Positives and stored negatives are re-checked afterwards.
CensusReport exhaustive_search(const SearchSpec& spec, const SearchOptions& options = {});

}  // namespace liekit
