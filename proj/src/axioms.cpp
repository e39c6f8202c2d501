#include "liekit/axioms.hpp"

#include <fmt/format.h>

namespace liekit {

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckEntry* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const CheckEntry* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

using Sides = std::pair<Vector, Vector>;

/// Basis-tuple coordinates of one identity instance.
struct Tuple {
  std::size_t i = 0, j = 0, m = 0;
  std::size_t h = 0, k = 0;
  std::size_t s0 = 0, s1 = 0, s2 = 0;
};

class Evaluator {
 public:
  explicit Evaluator(const MultiAlgebra& a) : a_(a), graded_(is_super(a.kind())) {
    for (std::size_t i = 0; i < a.dim(); ++i) e_.push_back(unit_vector(a.dim(), i, a.field()));
  }

  const Vector& e(std::size_t i) const { return e_[i]; }
  Vector mul(std::size_t label, const Vector& x, const Vector& y) const { return bracket_eval(a_, label, x, y); }
  Scalar sign(std::size_t i, std::size_t j) const {
    return graded_ ? super_sign(a_.parity(i), a_.parity(j), a_.field()) : Scalar::one(a_.field());
  }
  Vector zero() const { return zero_vector(a_.dim(), a_.field()); }
  bool graded() const { return graded_; }
  const MultiAlgebra& algebra() const { return a_; }

  Vector block_part(const Vector& v, std::uint8_t block) const {
    Vector r = zero();
    for (std::size_t l = 0; l < v.size(); ++l)
      if (a_.parity(l) == block) r[l] = v[l];
    return r;
  }

  Sides grading(const Tuple& t) const {
    Vector v = a_.bracket(t.k).product(t.i, t.j);
    return {v, block_part(v, (a_.parity(t.i) + a_.parity(t.j)) & 1)};
  }

  Sides antisymmetry(const Tuple& t) const {
    const auto& c = a_.bracket(t.k);
    return {c.product(t.i, t.j), -(sign(t.i, t.j) * c.product(t.j, t.i))};
  }

  Sides alternating(const Tuple& t) const { return {a_.bracket(t.k).product(t.i, t.i), zero()}; }

  Sides jacobi_first(const Tuple& t) const {
    const auto &x = e(t.i), &y = e(t.j), &z = e(t.m);
    if (!graded_) {
      Vector s = mul(t.k, mul(t.h, x, y), z);
      s = s + mul(t.h, mul(t.k, y, z), x);
      s = s + mul(t.k, mul(t.h, z, x), y);
      return {s, zero()};
    }
    Vector lhs = mul(t.k, mul(t.h, x, y), z);
    Vector rhs = mul(t.h, x, mul(t.k, y, z)) + sign(t.j, t.m) * mul(t.k, mul(t.h, x, z), y);
    return {lhs, rhs};
  }

  Sides long_jacobi_first(const Tuple& t) const {
    const auto &x = e(t.i), &y = e(t.j), &z = e(t.m);
    Vector s = zero();
    for (auto [p, q] : {std::pair{t.h, t.k}, std::pair{t.k, t.h}}) {
      s = s + sign(t.m, t.i) * mul(q, mul(p, x, y), z);
      s = s + sign(t.i, t.j) * mul(q, mul(p, y, z), x);
      s = s + sign(t.j, t.m) * mul(q, mul(p, z, x), y);
    }
    return {s, zero()};
  }

  Sides jacobi_second(const Tuple& t) const {
    const auto &x = e(t.i), &y = e(t.j), &z = e(t.m);
    if (!graded_) {
      Vector lhs = mul(t.h, mul(t.k, x, y), z);
      Vector rhs = mul(t.k, x, mul(t.h, y, z)) + mul(t.k, mul(t.h, x, z), y);
      return {lhs, rhs};
    }
    Vector lhs = mul(t.k, mul(t.h, x, y), z);
    Vector rhs = mul(t.h, x, mul(t.k, y, z)) + sign(t.j, t.m) * mul(t.h, mul(t.k, x, z), y);
    return {lhs, rhs};
  }

  Sides label_flip(const Tuple& t) const {
    const auto &x = e(t.i), &y = e(t.j), &z = e(t.m);
    if (!graded_) return {mul(t.h, mul(t.k, x, y), z), mul(t.k, mul(t.h, x, y), z)};
    return {mul(t.k, mul(t.h, x, y), z), mul(t.h, mul(t.k, x, y), z)};
  }

  Sides endo_even(const Tuple& t) const {
    // s0 = family, s1 = index within the family, i = column
    const Matrix& m = a_.endos()->family(t.s0).at(t.s1);
    Vector v = m.apply(e(t.i));
    return {v, block_part(v, a_.parity(t.i))};
  }

  Sides jacobi_third(const Tuple& t) const {
    const auto& endos = *a_.endos();
    const auto &x = e(t.i), &y = e(t.j), &z = e(t.m);
    Vector lhs = mul(t.k, mul(t.h, x, y), apply_endo(endos.sigma.at(t.s0), z));
    Vector rhs = mul(t.h, apply_endo(endos.sigma_ring.at(t.s1), x), mul(t.k, y, z)) +
                 sign(t.j, t.m) * mul(t.h, mul(t.k, x, z), apply_endo(endos.sigma_check.at(t.s2), y));
    return {lhs, rhs};
  }

  Sides hom_lie(const Tuple& t, const Matrix& sigma) const {
    const auto &x = e(t.i), &y = e(t.j), &z = e(t.m);
    Vector s = mul(0, mul(0, x, y), apply_endo(sigma, z));
    s = s + mul(0, mul(0, y, z), apply_endo(sigma, x));
    s = s + mul(0, mul(0, z, x), apply_endo(sigma, y));
    return {s, zero()};
  }

 private:
  const MultiAlgebra& a_;
  bool graded_;
  std::vector<Vector> e_;
};

CheckEntry failure(std::string_view name, Witness w) {
  return CheckEntry{std::string(name), false, std::move(w)};
}

CheckEntry success(std::string_view name) { return CheckEntry{std::string(name), true, std::nullopt}; }

/// Sweeps (h, k) ordered, then (i, j, m); returns at the first failure.
template <typename Fn>
CheckEntry sweep_triples(std::string_view name, const MultiAlgebra& a, bool unordered_labels, Fn&& eval) {
  const std::size_t n = a.dim(), s = a.label_count();
  for (std::size_t h = 0; h < s; ++h)
    for (std::size_t k = unordered_labels ? h : 0; k < s; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t m = 0; m < n; ++m) {
            Tuple t{i, j, m, h, k};
            auto [lhs, rhs] = eval(t);
            if (lhs != rhs) return failure(name, Witness{{i, j, m}, {h, k}, {}, lhs, rhs});
          }
  return success(name);
}

void require_graded(const MultiAlgebra& a, std::string_view what) {
  if (!a.grading()) throw Error(ErrorCode::NotGraded, fmt::format("{} needs a graded algebra", what));
}

void require_endos(const MultiAlgebra& a) {
  const auto& en = a.endos();
  if (!en || en->sigma.empty() || en->sigma_ring.empty() || en->sigma_check.empty())
    throw Error(ErrorCode::MissingEndoSets, "identity needs sigma, sigma_ring and sigma_check");
}

}  // namespace

CheckEntry check_grading(const MultiAlgebra& a) {
  require_graded(a, kGrading);
  Evaluator ev(a);
  for (std::size_t k = 0; k < a.label_count(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        auto [lhs, rhs] = ev.grading(Tuple{i, j, 0, 0, k});
        if (lhs != rhs) return failure(kGrading, Witness{{i, j}, {k}, {}, lhs, rhs});
      }
  return success(kGrading);
}

CheckEntry check_antisymmetry(const MultiAlgebra& a) {
  if (is_super(a.kind())) require_graded(a, kAntisymmetry);
  Evaluator ev(a);
  for (std::size_t k = 0; k < a.label_count(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i; j < a.dim(); ++j) {
        auto [lhs, rhs] = ev.antisymmetry(Tuple{i, j, 0, 0, k});
        if (lhs != rhs) return failure(kAntisymmetry, Witness{{i, j}, {k}, {}, lhs, rhs});
      }
  return success(kAntisymmetry);
}

CheckEntry check_alternating(const MultiAlgebra& a) {
  Evaluator ev(a);
  for (std::size_t k = 0; k < a.label_count(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (ev.graded() && a.parity(i) == 1) continue;
      auto [lhs, rhs] = ev.alternating(Tuple{i, i, 0, 0, k});
      if (lhs != rhs) return failure(kAlternating, Witness{{i}, {k}, {}, lhs, rhs});
    }
  return success(kAlternating);
}

CheckEntry check_jacobi_first(const MultiAlgebra& a) {
  Evaluator ev(a);
  return sweep_triples(kJacobiFirst, a, false, [&](const Tuple& t) { return ev.jacobi_first(t); });
}

CheckEntry check_long_jacobi_first(const MultiAlgebra& a) {
  Evaluator ev(a);
  return sweep_triples(kLongJacobiFirst, a, true, [&](const Tuple& t) { return ev.long_jacobi_first(t); });
}

std::array<CheckEntry, 2> check_jacobi_second(const MultiAlgebra& a) {
  Evaluator ev(a);
  return {sweep_triples(kJacobiSecond, a, false, [&](const Tuple& t) { return ev.jacobi_second(t); }),
          sweep_triples(kLabelFlip, a, false, [&](const Tuple& t) { return ev.label_flip(t); })};
}

CheckEntry check_endo_even(const MultiAlgebra& a) {
  require_endos(a);
  require_graded(a, kEndoEven);
  Evaluator ev(a);
  for (std::size_t fam = 0; fam < 3; ++fam)
    for (std::size_t idx = 0; idx < a.endos()->family(fam).size(); ++idx)
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Tuple t;
        t.i = i;
        t.s0 = fam;
        t.s1 = idx;
        auto [lhs, rhs] = ev.endo_even(t);
        if (lhs != rhs) return failure(kEndoEven, Witness{{i}, {}, {fam, idx}, lhs, rhs});
      }
  return success(kEndoEven);
}

CheckEntry check_jacobi_third(const MultiAlgebra& a) {
  require_endos(a);
  if (is_super(a.kind())) require_graded(a, kJacobiThird);
  Evaluator ev(a);
  const auto& en = *a.endos();
  const std::size_t n = a.dim(), s = a.label_count();
  for (std::size_t h = 0; h < s; ++h)
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t s0 = 0; s0 < en.sigma.size(); ++s0)
              for (std::size_t s1 = 0; s1 < en.sigma_ring.size(); ++s1)
                for (std::size_t s2 = 0; s2 < en.sigma_check.size(); ++s2) {
                  auto [lhs, rhs] = ev.jacobi_third(Tuple{i, j, m, h, k, s0, s1, s2});
                  if (lhs != rhs)
                    return failure(kJacobiThird, Witness{{i, j, m}, {h, k}, {s0, s1, s2}, lhs, rhs});
                }
  return success(kJacobiThird);
}

CheckEntry check_hom_lie(const MultiAlgebra& a, const Matrix& sigma) {
  if (a.label_count() != 1) throw Error(ErrorCode::KindMismatch, "hom-Lie identity needs a single bracket");
  if (sigma.rows() != a.dim() || sigma.cols() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "sigma must be dim x dim");
  Evaluator ev(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t m = 0; m < a.dim(); ++m) {
        auto [lhs, rhs] = ev.hom_lie(Tuple{i, j, m}, sigma);
        if (lhs != rhs) return failure(kHomLie, Witness{{i, j, m}, {0}, {}, lhs, rhs});
      }
  return success(kHomLie);
}

VerificationReport verify(const MultiAlgebra& a, const CheckOptions& options) {
  VerificationReport r;
  const bool graded = is_super(a.kind());
  const bool want_alternating = options.strict_alternating && a.field().characteristic() == 2;
  if (graded) r.checks.push_back(check_grading(a));
  switch (kind_family(a.kind())) {
    case 1:
      r.checks.push_back(check_antisymmetry(a));
      if (want_alternating) r.checks.push_back(check_alternating(a));
      r.checks.push_back(check_jacobi_first(a));
      r.checks.push_back(check_long_jacobi_first(a));
      break;
    case 2: {
      auto pair = check_jacobi_second(a);
      r.checks.push_back(std::move(pair[0]));
      r.checks.push_back(std::move(pair[1]));
      break;
    }
    case 3:
      if (graded) r.checks.push_back(check_endo_even(a));
      r.checks.push_back(check_jacobi_third(a));
      break;
  }
  return r;
}

std::pair<Vector, Vector> replay_witness(const MultiAlgebra& a, std::string_view check, const Witness& w,
                                         const Matrix* sigma) {
  auto at = [](const std::vector<std::size_t>& v, std::size_t i) { return i < v.size() ? v[i] : 0; };
  Tuple t{at(w.basis, 0), at(w.basis, 1), at(w.basis, 2), at(w.labels, 0), at(w.labels, 1),
          at(w.endos, 0), at(w.endos, 1), at(w.endos, 2)};
  for (auto b : w.basis)
    if (b >= a.dim()) throw Error(ErrorCode::DimensionMismatch, "witness basis index out of range");
  for (auto l : w.labels)
    if (l >= a.label_count()) throw Error(ErrorCode::UnknownLabel, "witness label index out of range");
  Evaluator ev(a);
  // single-label witnesses store k in labels[0]
  Tuple single = t;
  single.k = at(w.labels, 0);
  if (check == kGrading) return ev.grading(single);
  if (check == kAntisymmetry) return ev.antisymmetry(single);
  if (check == kAlternating) return ev.alternating(single);
  if (check == kJacobiFirst) return ev.jacobi_first(t);
  if (check == kLongJacobiFirst) return ev.long_jacobi_first(t);
  if (check == kJacobiSecond) return ev.jacobi_second(t);
  if (check == kLabelFlip) return ev.label_flip(t);
  if (check == kEndoEven) {
    require_endos(a);
    return ev.endo_even(t);
  }
  if (check == kJacobiThird) {
    require_endos(a);
    return ev.jacobi_third(t);
  }
  if (check == kHomLie) {
    if (!sigma) throw Error(ErrorCode::MissingEndoSets, "hom_lie replay needs sigma");
    return ev.hom_lie(t, *sigma);
  }
  throw Error(ErrorCode::SchemaError, fmt::format("unknown check '{}'", check));
}

}  // namespace liekit
