#include "liekit/constructions.hpp"

#include <fmt/format.h>

#include "liekit/axioms.hpp"

namespace liekit {

TrivialityResult triviality_test(const MultiAlgebra& a) {
  TrivialityResult r;
  const FieldSpec fld = a.field();
  std::optional<std::size_t> base_label;
  for (std::size_t k = 0; k < a.label_count() && !base_label; ++k)
    if (!a.bracket(k).is_zero()) base_label = k;
  if (!base_label) {
    r.trivial = true;
    r.base = BracketTensor(a.dim(), fld);
    r.phi.assign(a.label_count(), Scalar(fld));
    return r;
  }
  const BracketTensor& base = a.bracket(*base_label);
  auto entries = base.entries();
  std::size_t pivot = 0;
  while (entries[pivot].is_zero()) ++pivot;

  for (std::size_t k = 0; k < a.label_count(); ++k) {
    auto other = a.bracket(k).entries();
    Scalar ratio = other[pivot] / entries[pivot];
    for (std::size_t e = 0; e < entries.size(); ++e)
      if (other[e] != ratio * entries[e]) {
        r.phi.clear();
        return r;
      }
    r.phi.push_back(ratio);
  }
  r.trivial = true;
  r.base = base;
  return r;
}

MultiAlgebra trivial_from_base(const BracketTensor& base, const std::vector<std::pair<std::string, Scalar>>& phi,
                               Kind kind, std::optional<Grading> grading, std::optional<EndoSets> endos) {
  MultiAlgebra single(base.field(), base.dim(), LabelSet({"base"}), kind, {base}, grading, endos);
  auto report = verify(single);
  if (const auto* bad = report.first_failure())
    throw Error(ErrorCode::BaseNotAdmissible, fmt::format("base product fails '{}'", bad->name));

  std::vector<std::string> names;
  std::vector<BracketTensor> tensors;
  for (const auto& [label, s] : phi) {
    if (s.field() != base.field()) throw Error(ErrorCode::FieldMismatch, fmt::format("phi({})", label));
    names.push_back(label);
    tensors.push_back(base.scaled(s));
  }
  return MultiAlgebra(base.field(), base.dim(), LabelSet(std::move(names)), kind, std::move(tensors),
                      std::move(grading), std::move(endos));
}

namespace {

Matrix block_diag(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.rows(), m = y.rows();
  Matrix out(n + m, n + m, x.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = x(r, c);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out(n + r, n + c) = y(r, c);
  return out;
}

std::vector<Matrix> pair_family(const std::vector<Matrix>& xs, const std::vector<Matrix>& ys) {
  std::vector<Matrix> out;
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(block_diag(x, y));
  return out;
}

}  // namespace

MultiAlgebra direct_sum(const MultiAlgebra& a, const MultiAlgebra& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::Mismatch, "direct sum over different fields");
  if (!(a.labels() == b.labels())) throw Error(ErrorCode::Mismatch, "direct sum with different label sets");
  if (a.kind() != b.kind()) throw Error(ErrorCode::Mismatch, "direct sum of different kinds");
  if (a.grading().has_value() != b.grading().has_value())
    throw Error(ErrorCode::Mismatch, "direct sum of a graded and an ungraded algebra");
  if (a.endos().has_value() != b.endos().has_value())
    throw Error(ErrorCode::Mismatch, "only one summand carries endomorphisms");

  const std::size_t n = a.dim(), m = b.dim();
  std::vector<BracketTensor> tensors;
  for (std::size_t k = 0; k < a.label_count(); ++k) {
    BracketTensor t(n + m, a.field());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) t.entry(i, j, l) = a.bracket(k).entry(i, j, l);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l) t.entry(n + i, n + j, n + l) = b.bracket(k).entry(i, j, l);
    tensors.push_back(std::move(t));
  }
  std::optional<Grading> grading;
  if (a.grading()) {
    Grading g = *a.grading();
    g.parity.insert(g.parity.end(), b.grading()->parity.begin(), b.grading()->parity.end());
    grading = std::move(g);
  }
  std::optional<EndoSets> endos;
  if (a.endos()) {
    const auto &ea = *a.endos(), &eb = *b.endos();
    endos = EndoSets{pair_family(ea.sigma, eb.sigma), pair_family(ea.sigma_ring, eb.sigma_ring),
                     pair_family(ea.sigma_check, eb.sigma_check)};
  }
  return MultiAlgebra(a.field(), n + m, a.labels(), a.kind(), std::move(tensors), std::move(grading),
                      std::move(endos));
}

}  // namespace liekit
