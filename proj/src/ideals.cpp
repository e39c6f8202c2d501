#include "liekit/ideals.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "liekit/axioms.hpp"
#include "parallel.hpp"

namespace liekit {

std::string_view annihilator_name(AnnihilatorKind w) {
  switch (w) {
    case AnnihilatorKind::First: return "first";
    case AnnihilatorKind::SecondPlus: return "second_plus";
    case AnnihilatorKind::SecondMinus: return "second_minus";
    case AnnihilatorKind::SuperFirst: return "super_first";
    case AnnihilatorKind::SuperSecondPlus: return "super_second_plus";
    case AnnihilatorKind::SuperSecondMinus: return "super_second_minus";
  }
  return "?";
}

AnnihilatorKind parse_annihilator(std::string_view name) {
  for (auto w : {AnnihilatorKind::First, AnnihilatorKind::SecondPlus, AnnihilatorKind::SecondMinus,
                 AnnihilatorKind::SuperFirst, AnnihilatorKind::SuperSecondPlus, AnnihilatorKind::SuperSecondMinus})
    if (annihilator_name(w) == name) return w;
  throw Error(ErrorCode::SchemaError, fmt::format("unknown annihilator '{}'", name));
}

std::vector<AnnihilatorKind> annihilators_for(Kind kind) {
  switch (kind) {
    case Kind::First: return {AnnihilatorKind::First};
    case Kind::SuperFirst: return {AnnihilatorKind::SuperFirst};
    case Kind::Second: return {AnnihilatorKind::SecondMinus, AnnihilatorKind::SecondPlus};
    case Kind::SuperSecond: return {AnnihilatorKind::SuperSecondMinus, AnnihilatorKind::SuperSecondPlus};
    default: return {};
  }
}

bool annihilator_compatible(Kind kind, AnnihilatorKind w) {
  auto ws = annihilators_for(kind);
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

bool is_minus(AnnihilatorKind w) {
  return w == AnnihilatorKind::SecondMinus || w == AnnihilatorKind::SuperSecondMinus;
}

namespace {

void require_ideal_kind(const MultiAlgebra& a) {
  if (kind_family(a.kind()) == 3)
    throw Error(ErrorCode::KindMismatch, "ideals are not defined for 3rd-kind algebras");
}

Matrix multiplication_matrix(const MultiAlgebra& a, std::size_t label, std::size_t i, Side side) {
  const auto& c = a.bracket(label);
  const std::size_t n = a.dim();
  Matrix m(n, n, a.field());
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t l = 0; l < n; ++l)
      m(l, col) = side == Side::Left ? c.entry(i, col, l) : c.entry(col, i, l);
  return m;
}

Matrix parity_projection(const MultiAlgebra& a, std::uint8_t block) {
  Matrix m(a.dim(), a.dim(), a.field());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) == block) m(i, i) = Scalar::one(a.field());
  return m;
}

}  // namespace

std::vector<Matrix> multiplication_maps(const MultiAlgebra& a, bool left, bool right) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < a.label_count(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (left) out.push_back(multiplication_matrix(a, k, i, Side::Left));
      if (right) out.push_back(multiplication_matrix(a, k, i, Side::Right));
    }
  return out;
}

IdealCheck check_ideal(const MultiAlgebra& a, const Subspace& s) {
  require_ideal_kind(a);
  if (s.ambient_dim() != a.dim() || s.field() != a.field())
    throw Error(ErrorCode::DimensionMismatch, "subspace does not live in the algebra");
  IdealCheck r{false, IdealWitness{s, false, {}}, is_super(a.kind()), std::nullopt};
  if (a.grading()) r.witness.is_graded = s.is_graded(a.parity_vector());
  if (r.graded_required && !r.witness.is_graded) return r;

  std::vector<Side> sides{Side::Left};
  if (kind_family(a.kind()) == 2) sides.push_back(Side::Right);
  auto gens = s.basis_vectors();
  for (std::size_t k = 0; k < a.label_count(); ++k)
    for (Side side : sides) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector e = unit_vector(a.dim(), i, a.field());
        for (std::size_t g = 0; g < gens.size(); ++g) {
          Vector p = side == Side::Left ? bracket_eval(a, k, e, gens[g]) : bracket_eval(a, k, gens[g], e);
          if (!s.contains(p)) {
            r.violation = ClosureViolation{side, k, i, g, std::move(p)};
            return r;
          }
        }
      }
      r.witness.closure_checked.emplace_back(side, k);
    }
  r.ideal = true;
  return r;
}

bool is_ideal(const MultiAlgebra& a, const Subspace& s) { return check_ideal(a, s).ideal; }

std::vector<Vector> annihilator_generators(const MultiAlgebra& a, AnnihilatorKind w) {
  if (!annihilator_compatible(a.kind(), w))
    throw Error(ErrorCode::KindMismatch,
                fmt::format("annihilator '{}' is not defined for {} algebras", annihilator_name(w), kind_name(a.kind())));
  const std::size_t n = a.dim(), s = a.label_count();
  const bool plus = w == AnnihilatorKind::SecondPlus || w == AnnihilatorKind::SuperSecondPlus;
  std::vector<Vector> out;
  for (std::size_t h = 0; h < s; ++h)
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector x = a.bracket(h).product(i, j);
          if (plus) {
            Scalar sign = w == AnnihilatorKind::SuperSecondPlus ? super_sign(a.parity(i), a.parity(j), a.field())
                                                                : Scalar::one(a.field());
            axpy(x, sign, a.bracket(k).product(j, i));
          } else {
            x = x - a.bracket(k).product(i, j);
          }
          out.push_back(std::move(x));
        }
  return out;
}

Subspace annihilator_span(const MultiAlgebra& a, AnnihilatorKind w) {
  return Subspace::span(annihilator_generators(a, w), a.dim(), a.field());
}

Subspace annihilator(const MultiAlgebra& a, AnnihilatorKind w) {
  Subspace s = annihilator_span(a, w);
  auto check = check_ideal(a, s);
  if (!check.ideal) {
    std::string detail = check.violation
                             ? fmt::format(" (label {}, basis {}, generator {})", a.labels().name(check.violation->label),
                                           check.violation->basis, check.violation->generator)
                             : std::string(" (not graded)");
    throw Error(ErrorCode::InternalClosureFailure,
                fmt::format("annihilator '{}' is not an ideal{}", annihilator_name(w), detail));
  }
  return s;
}

FactorAlgebra factor_algebra(const MultiAlgebra& a, const Subspace& s) {
  auto check = check_ideal(a, s);
  if (!check.ideal) throw Error(ErrorCode::NotAnIdeal, "factor by a subspace that is not an ideal");
  Quotient q(s);
  const std::size_t n = a.dim(), m = q.dim();
  const auto& free = q.free_columns();

  std::vector<BracketTensor> tensors;
  for (std::size_t k = 0; k < a.label_count(); ++k) {
    BracketTensor t(m, a.field());
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) t.set_product(x, y, q.project(a.bracket(k).product(free[x], free[y])));
    tensors.push_back(std::move(t));
  }

  bool well_defined = true;
  auto gens = s.basis_vectors();
  for (std::size_t k = 0; k < a.label_count() && well_defined; ++k)
    for (std::size_t i = 0; i < n && well_defined; ++i) {
      Vector e = unit_vector(n, i, a.field());
      for (const auto& g : gens)
        if (!is_zero(q.project(bracket_eval(a, k, e, g))) || !is_zero(q.project(bracket_eval(a, k, g, e)))) {
          well_defined = false;
          break;
        }
    }

  std::optional<LabelDependence> dependence;
  for (std::size_t h = 0; h < a.label_count() && !dependence; ++h)
    for (std::size_t k = 0; k < a.label_count() && !dependence; ++k)
      for (std::size_t i = 0; i < n && !dependence; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector d = q.project(a.bracket(h).product(i, j) - a.bracket(k).product(i, j));
          if (!is_zero(d)) {
            dependence = LabelDependence{h, k, i, j, std::move(d)};
            break;
          }
        }

  std::optional<Grading> grading;
  if (a.grading()) {
    Grading g;
    for (auto c : free) g.parity.push_back(a.parity(c));
    grading = std::move(g);
  }
  MultiAlgebra fa(a.field(), m, a.labels(), a.kind(), std::move(tensors), std::move(grading), std::nullopt);
  return FactorAlgebra{std::move(fa), std::move(q), well_defined, !dependence.has_value(), std::move(dependence)};
}

Kind factor_kind(AnnihilatorKind w) {
  switch (w) {
    case AnnihilatorKind::First:
    case AnnihilatorKind::SecondPlus: return Kind::First;
    case AnnihilatorKind::SecondMinus: return Kind::Second;
    case AnnihilatorKind::SuperFirst:
    case AnnihilatorKind::SuperSecondPlus: return Kind::SuperFirst;
    case AnnihilatorKind::SuperSecondMinus: return Kind::SuperSecond;
  }
  return Kind::First;
}

MultiAlgebra named_factor(const MultiAlgebra& a, AnnihilatorKind w) {
  FactorAlgebra f = factor_algebra(a, annihilator(a, w));
  if (!f.label_independent) {
    const auto& d = *f.dependence;
    throw Error(ErrorCode::NotWellDefined,
                fmt::format("induced product depends on the label: labels ({}, {}) on basis pair ({}, {})",
                            a.labels().name(d.h), a.labels().name(d.k), d.i, d.j));
  }
  const auto& fa = f.algebra;
  return MultiAlgebra(fa.field(), fa.dim(), LabelSet({a.labels().name(0)}), factor_kind(w), {fa.bracket(0)},
                      fa.grading(), std::nullopt);
}

std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::Simple: return "simple";
    case Decision::NotSimple: return "not_simple";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Subspace> distinct_members(const std::vector<Subspace>& candidates) {
  std::vector<Subspace> out;
  for (const auto& s : candidates)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

SimplicityVerdict classify_simplicity(const MultiAlgebra& a, unsigned threads) {
  require_ideal_kind(a);
  SimplicityVerdict v;
  std::vector<Subspace> members{Subspace::zero(a.dim(), a.field())};
  for (auto w : annihilators_for(a.kind())) members.push_back(annihilator_span(a, w));
  members.push_back(Subspace::full(a.dim(), a.field()));
  v.distinguished = distinct_members(members);
  v.i = v.distinguished.size();
  auto distinguished = [&](const Subspace& s) {
    return std::find(v.distinguished.begin(), v.distinguished.end(), s) != v.distinguished.end();
  };

  if (a.field().is_rational() && a.dim() > 1) {
    // generated ideals only
    auto maps = multiplication_maps(a, true, kind_family(a.kind()) == 2 || is_super(a.kind()));
    if (is_super(a.kind())) {
      maps.push_back(parity_projection(a, 0));
      maps.push_back(parity_projection(a, 1));
    }
    std::vector<Vector> seeds;
    for (std::size_t i = 0; i < a.dim(); ++i) seeds.push_back(unit_vector(a.dim(), i, a.field()));
    for (auto w : annihilators_for(a.kind()))
      for (auto& g : annihilator_generators(a, w))
        if (!is_zero(g)) seeds.push_back(std::move(g));
    std::vector<Subspace> found;
    for (const auto& seed : seeds) {
      Subspace gen = invariant_closure(Subspace::span({seed}, a.dim(), a.field()), maps);
      ++v.subspaces_examined;
      if (!is_ideal(a, gen)) continue;
      ++v.ideals_found;
      if (!distinguished(gen)) found.push_back(gen);
    }
    if (!found.empty()) {
      v.decision = Decision::NotSimple;
      v.offending_ideal = *std::min_element(found.begin(), found.end());
    } else {
      v.decision = Decision::Inconclusive;
    }
    return v;
  }

  v.exhaustive = true;
  std::vector<Subspace> all;
  if (a.field().is_rational()) {
    all.push_back(Subspace::zero(a.dim(), a.field()));
    if (a.dim() == 1) all.push_back(Subspace::full(a.dim(), a.field()));
  } else {
    all = enumerate_subspaces(a.dim(), a.field(), a.grading() && is_super(a.kind()) ? a.parity_vector()
                                                                                        : std::span<const std::uint8_t>());
  }
  v.subspaces_examined = all.size();

  struct Partial {
    std::size_t ideals = 0;
    std::optional<std::size_t> offending;
  };
  std::vector<Partial> partial(std::max(1u, threads));
  detail::parallel_ranges(all.size(), threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& p = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      if (!is_ideal(a, all[idx])) continue;
      ++p.ideals;
      if (!p.offending && !distinguished(all[idx])) p.offending = idx;
    }
  });
  std::optional<std::size_t> offending;
  for (const auto& p : partial) {
    v.ideals_found += p.ideals;
    if (p.offending && (!offending || *p.offending < *offending)) offending = p.offending;
  }
  if (offending) {
    v.decision = Decision::NotSimple;
    v.offending_ideal = all[*offending];
  } else {
    v.decision = Decision::Simple;
  }
  return v;
}

}  // namespace liekit
