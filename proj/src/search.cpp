#include "liekit/search.hpp"

#include <algorithm>
#include <atomic>

#include <fmt/format.h>

#include "liekit/constructions.hpp"
#include "liekit/ideals.hpp"
#include "liekit/modules.hpp"
#include "parallel.hpp"

namespace liekit {

std::vector<Slot> search_slots(const SearchSpec& spec) {
  const std::size_t n = spec.dim;
  const bool graded = spec.grading.has_value();
  auto parity = [&](std::size_t i) -> std::uint8_t { return graded ? spec.grading->parity[i] : 0; };
  auto allowed = [&](std::size_t i, std::size_t j, std::size_t l) {
    return !graded || parity(l) == ((parity(i) + parity(j)) & 1);
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = spec.alternating ? i : 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        if (!allowed(i, j, l)) continue;
        if (!spec.alternating) {
          slots.push_back({i, j, l, std::nullopt});
        } else if (i < j) {
          // c[j][i] = -(-1)^(ab) c[i][j]
          slots.push_back({i, j, l, -super_sign(parity(i), parity(j), spec.field)});
        } else if (graded && parity(i) == 1) {
          slots.push_back({i, i, l, std::nullopt});
        }
      }
  return slots;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, bool& overflow) {
  std::uint64_t r = 1;
  overflow = false;
  for (std::size_t e = 0; e < exp; ++e) {
    if (r > UINT64_MAX / base) {
      overflow = true;
      return UINT64_MAX;
    }
    r *= base;
  }
  return r;
}

BracketTensor decode_tensor(const SearchSpec& spec, const std::vector<Slot>& slots, std::uint64_t digits) {
  const std::uint64_t p = spec.field.characteristic();
  BracketTensor t(spec.dim, spec.field);
  for (const auto& s : slots) {
    Scalar v(static_cast<std::int64_t>(digits % p), spec.field);
    digits /= p;
    t.entry(s.i, s.j, s.l) = v;
    if (s.mirror_sign) t.entry(s.j, s.i, s.l) = *s.mirror_sign * v;
  }
  return t;
}

std::vector<std::string> label_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(fmt::format("k{}", k));
  return out;
}

MultiAlgebra assemble(const SearchSpec& spec, std::vector<BracketTensor> tensors) {
  LabelSet labels(label_names(tensors.size()));
  return MultiAlgebra(spec.field, spec.dim, std::move(labels), spec.kind, std::move(tensors), spec.grading,
                      std::nullopt);
}

bool strict_variant_applies(const SearchSpec& spec) {
  return spec.field.characteristic() == 2 && kind_family(spec.kind) == 1;
}

struct Layout {
  std::vector<Slot> slots;
  std::uint64_t per_label = 0;  // p^slots
  std::uint64_t raw_space = 0;
  std::vector<std::uint64_t> admissible;  // raw per-label values, prefilter only
  std::uint64_t candidates = 0;
};

Layout make_layout(const SearchSpec& spec) {
  validate_search(spec);
  Layout L;
  L.slots = search_slots(spec);
  bool overflow = false;
  L.per_label = checked_pow(spec.field.characteristic(), L.slots.size(), overflow);
  L.raw_space = checked_pow(L.per_label, spec.label_count, overflow);
  if (overflow) throw Error(ErrorCode::BoundsExceeded, "candidate space does not fit in 64 bits");
  if (!spec.prefilter) {
    L.candidates = L.raw_space;
  } else {
    if (L.per_label > kSearchCap) throw Error(ErrorCode::BoundsExceeded, "per-product space exceeds 2^24");
    for (std::uint64_t d = 0; d < L.per_label; ++d) {
      MultiAlgebra single = assemble(spec, {decode_tensor(spec, L.slots, d)});
      if (verify(single).all_pass()) L.admissible.push_back(d);
    }
    L.candidates = checked_pow(L.admissible.size(), spec.label_count, overflow);
  }
  if (L.candidates > kSearchCap)
    throw Error(ErrorCode::BoundsExceeded, fmt::format("{} candidates exceed the 2^24 cap", L.candidates));
  return L;
}

std::uint64_t raw_index_of(const SearchSpec& spec, const Layout& L, std::uint64_t t) {
  if (!spec.prefilter) return t;
  const std::uint64_t a = L.admissible.size();
  std::uint64_t raw = 0, scale = 1;
  for (std::size_t k = 0; k < spec.label_count; ++k) {
    raw += L.admissible[t % a] * scale;
    t /= a;
    scale *= L.per_label;
  }
  return raw;
}

MultiAlgebra decode_with(const SearchSpec& spec, const Layout& L, std::uint64_t raw) {
  std::vector<BracketTensor> tensors;
  for (std::size_t k = 0; k < spec.label_count; ++k) {
    tensors.push_back(decode_tensor(spec, L.slots, raw % L.per_label));
    raw /= L.per_label;
  }
  return assemble(spec, std::move(tensors));
}

void profile_positive(const MultiAlgebra& a, std::uint64_t index, const CheckOptions& opts, CensusVariant& v,
                      std::size_t max_samples) {
  ++v.passing;
  v.positive_indices.push_back(index);
  const bool trivial = triviality_test(a).trivial;
  if (trivial) {
    ++v.trivial;
  } else {
    ++v.nontrivial;
    if (v.nontrivial_examples.size() < max_samples) v.nontrivial_examples.push_back(index);
  }

  const auto ws = annihilators_for(a.kind());
  std::map<AnnihilatorKind, Subspace> spans;
  std::map<AnnihilatorKind, bool> closed;
  for (auto w : ws) {
    Subspace s = annihilator_span(a, w);
    auto& hist = v.annihilator_dims[std::string(annihilator_name(w))];
    if (hist.size() <= a.dim()) hist.resize(a.dim() + 1, 0);
    ++hist[s.dim()];
    ++v.closure_checked;
    closed[w] = is_ideal(a, s);
    if (!closed[w]) v.closure_violations.push_back({index, fmt::format("{} not an ideal", annihilator_name(w))});
    spans.emplace(w, std::move(s));
  }
  if (ws.size() == 2) {
    ++v.containment_checked;
    if (!spans.at(ws[1]).contains(spans.at(ws[0])))
      v.containment_violations.push_back({index, "minus annihilator not inside plus annihilator"});
  }

  for (auto w : ws) {
    if (!closed[w]) continue;
    ++v.factor_checked;
    FactorAlgebra f = factor_algebra(a, spans.at(w));
    if (!f.well_defined || !f.label_independent) {
      v.factor_failures.push_back({index, fmt::format("{} factor depends on the label", annihilator_name(w))});
      continue;
    }
    const auto& fa = f.algebra;
    MultiAlgebra single(fa.field(), fa.dim(), LabelSet({"k"}), factor_kind(w), {fa.bracket(0)}, fa.grading());
    auto report = verify(single, opts);
    if (const auto* bad = report.first_failure())
      v.factor_failures.push_back({index, fmt::format("{} factor fails {}", annihilator_name(w), bad->name)});
  }

  ModuleRep ad = adjoint_module(a);
  ++v.adjoint_checked;
  auto mod = check_module(ad);
  if (const auto* bad = mod.first_failure()) {
    if (trivial)
      ++v.adjoint_failed_trivial;
    else
      v.adjoint_failures_nontrivial.push_back({index, bad->name});
    return;
  }
  ++v.adjoint_passed;
  std::vector<Subspace> mspans;
  for (auto w : ws) {
    ++v.module_annihilator_checked;
    mspans.push_back(module_annihilator_span(ad, w));
    if (!is_submodule(ad, mspans.back()))
      v.module_annihilator_violations.push_back(
          {index, fmt::format("module {} annihilator not a submodule", annihilator_name(w))});
  }
  if (mspans.size() == 2 && !mspans[1].contains(mspans[0]))
    v.module_annihilator_violations.push_back({index, "module minus annihilator not inside plus annihilator"});
}

template <typename T>
void append(std::vector<T>& into, std::vector<T>& from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

void merge_into(CensusVariant& into, CensusVariant& from, std::size_t max_samples) {
  into.examined += from.examined;
  into.passing += from.passing;
  into.trivial += from.trivial;
  into.nontrivial += from.nontrivial;
  into.negatives += from.negatives;
  for (auto& [name, hist] : from.annihilator_dims) {
    auto& h = into.annihilator_dims[name];
    if (h.size() < hist.size()) h.resize(hist.size(), 0);
    for (std::size_t d = 0; d < hist.size(); ++d) h[d] += hist[d];
  }
  into.closure_checked += from.closure_checked;
  append(into.closure_violations, from.closure_violations);
  into.containment_checked += from.containment_checked;
  append(into.containment_violations, from.containment_violations);
  into.factor_checked += from.factor_checked;
  append(into.factor_failures, from.factor_failures);
  into.adjoint_checked += from.adjoint_checked;
  into.adjoint_passed += from.adjoint_passed;
  into.adjoint_failed_trivial += from.adjoint_failed_trivial;
  append(into.adjoint_failures_nontrivial, from.adjoint_failures_nontrivial);
  into.module_annihilator_checked += from.module_annihilator_checked;
  append(into.module_annihilator_violations, from.module_annihilator_violations);
  append(into.nontrivial_examples, from.nontrivial_examples);
  if (into.nontrivial_examples.size() > max_samples) into.nontrivial_examples.resize(max_samples);
  append(into.negative_samples, from.negative_samples);
  if (into.negative_samples.size() > max_samples) into.negative_samples.resize(max_samples);
  append(into.positive_indices, from.positive_indices);
}

}  // namespace

void validate_search(const SearchSpec& spec) {
  const auto p = spec.field.characteristic();
  if (p != 2 && p != 3) throw Error(ErrorCode::BoundsExceeded, "search runs over F2 or F3 only");
  if (spec.dim < 1 || spec.dim > 3) throw Error(ErrorCode::BoundsExceeded, "search dimension must be 1, 2 or 3");
  if (spec.label_count < 1 || spec.label_count > 3)
    throw Error(ErrorCode::BoundsExceeded, "search label count must be 1, 2 or 3");
  if (kind_family(spec.kind) == 3) throw Error(ErrorCode::KindMismatch, "3rd-kind algebras are not searched");
  if (spec.alternating && kind_family(spec.kind) != 1)
    throw Error(ErrorCode::KindMismatch, "the alternating filter applies to 1st kinds only");
  if (is_super(spec.kind) && !spec.grading) throw Error(ErrorCode::NotGraded, "super kinds need a grading");
  if (spec.grading && spec.grading->size() != spec.dim)
    throw Error(ErrorCode::DimensionMismatch, "grading length differs from the dimension");
  bool overflow = false;
  const std::uint64_t per_label = checked_pow(p, search_slots(spec).size(), overflow);
  const std::uint64_t raw = checked_pow(per_label, spec.label_count, overflow);
  if (spec.prefilter ? per_label > kSearchCap : (overflow || raw > kSearchCap))
    throw Error(ErrorCode::BoundsExceeded, "candidate space exceeds the 2^24 cap");
}

MultiAlgebra decode_candidate(const SearchSpec& spec, std::uint64_t raw_index) {
  validate_search(spec);
  Layout L;
  L.slots = search_slots(spec);
  bool overflow = false;
  L.per_label = checked_pow(spec.field.characteristic(), L.slots.size(), overflow);
  if (overflow) throw Error(ErrorCode::BoundsExceeded, "candidate space does not fit in 64 bits");
  return decode_with(spec, L, raw_index);
}

CensusReport exhaustive_search(const SearchSpec& spec, const SearchOptions& options) {
  Layout L = make_layout(spec);
  CensusReport report;
  report.spec = spec;
  report.slots_per_label = L.slots.size();
  report.raw_space = L.raw_space;
  report.admissible_per_label = spec.prefilter ? L.admissible.size() : L.per_label;
  report.candidates = L.candidates;

  std::vector<CheckOptions> variants{CheckOptions{false}};
  if (strict_variant_applies(spec)) variants.push_back(CheckOptions{true});

  const unsigned threads = std::max(1u, options.threads);
  const std::size_t max_samples = options.max_samples;
  std::vector<std::vector<CensusVariant>> partial(threads, std::vector<CensusVariant>(variants.size()));
  std::atomic<std::uint64_t> done{0};

  detail::parallel_ranges(L.candidates, threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& mine = partial[w];
    for (std::uint64_t t = begin; t < end; ++t) {
      const std::uint64_t raw = raw_index_of(spec, L, t);
      MultiAlgebra a = decode_with(spec, L, raw);
      for (std::size_t vi = 0; vi < variants.size(); ++vi) {
        auto& v = mine[vi];
        ++v.examined;
        auto rep = verify(a, variants[vi]);
        if (const auto* bad = rep.first_failure()) {
          ++v.negatives;
          if (v.negative_samples.size() < max_samples)
            v.negative_samples.push_back({raw, bad->name, *bad->witness});
        } else {
          profile_positive(a, raw, variants[vi], v, max_samples);
        }
      }
      auto finished = done.fetch_add(1) + 1;
      if (w == 0 && options.progress && (finished % 4096 == 0)) options.progress(finished, L.candidates);
    }
  });
  if (options.progress) options.progress(L.candidates, L.candidates);

  for (std::size_t vi = 0; vi < variants.size(); ++vi) {
    CensusVariant merged;
    merged.strict_alternating = variants[vi].strict_alternating;
    for (auto& per_worker : partial) merge_into(merged, per_worker[vi], max_samples);

    // second pass through the checker
    auto& cert = merged.certification;
    for (auto idx : merged.positive_indices) {
      ++cert.positives_reverified;
      if (!verify(decode_with(spec, L, idx), variants[vi]).all_pass()) ++cert.positives_failed;
    }
    for (const auto& neg : merged.negative_samples) {
      ++cert.negatives_replayed;
      auto [lhs, rhs] = replay_witness(decode_with(spec, L, neg.index), neg.check, neg.witness);
      if (lhs == rhs || lhs != neg.witness.lhs || rhs != neg.witness.rhs) ++cert.negatives_not_refailing;
    }
    report.variants.push_back(std::move(merged));
  }
  return report;
}

}  // namespace liekit
