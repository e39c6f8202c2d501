#include "liekit/modules.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "parallel.hpp"

namespace liekit {

namespace {

void check_family(const RepFamily& fam, const MultiAlgebra& a, std::size_t m, std::string_view name) {
  if (fam.size() != a.label_count())
    throw Error(ErrorCode::DimensionMismatch, fmt::format("{}: {} labels, expected {}", name, fam.size(), a.label_count()));
  for (const auto& per_label : fam) {
    if (per_label.size() != a.dim())
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("{}: {} matrices per label, expected {}", name, per_label.size(), a.dim()));
    for (const auto& mat : per_label) {
      if (mat.rows() != m || mat.cols() != m)
        throw Error(ErrorCode::DimensionMismatch, fmt::format("{}: maps must be {}x{}", name, m, m));
      if (mat.field() != a.field()) throw Error(ErrorCode::FieldMismatch, fmt::format("{}: map field", name));
    }
  }
}

Matrix combine(const std::vector<Matrix>& per_basis, const Vector& x, std::size_t m, FieldSpec field) {
  if (x.size() != per_basis.size()) throw Error(ErrorCode::DimensionMismatch, "algebra element length");
  Matrix out(m, m, field);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + x[i] * per_basis[i];
  return out;
}

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

}  // namespace

ModuleRep::ModuleRep(MultiAlgebra algebra, std::size_t carrier_dim, RepFamily f, std::optional<RepFamily> g,
                     std::optional<Grading> carrier_grading)
    : algebra_(std::move(algebra)),
      carrier_dim_(carrier_dim),
      f_(std::move(f)),
      g_(std::move(g)),
      carrier_grading_(std::move(carrier_grading)) {
  const int family = kind_family(algebra_.kind());
  if (family == 3) throw Error(ErrorCode::KindMismatch, "modules are not defined over 3rd-kind algebras");
  check_family(f_, algebra_, carrier_dim_, "f");
  if (family == 2 && !g_) throw Error(ErrorCode::MissingG, "2nd-kind modules need the g family");
  if (family == 1 && g_) throw Error(ErrorCode::KindMismatch, "g family given for a 1st-kind algebra");
  if (g_) check_family(*g_, algebra_, carrier_dim_, "g");
  if (carrier_grading_) {
    if (carrier_grading_->size() != carrier_dim_)
      throw Error(ErrorCode::DimensionMismatch, "carrier grading length");
    for (auto p : carrier_grading_->parity)
      if (p > 1) throw Error(ErrorCode::SchemaError, "parities must be 0 or 1");
  }
  if (is_super(algebra_.kind()) && !carrier_grading_)
    throw Error(ErrorCode::NotGraded, "modules over superalgebras need a carrier grading");
}

ModuleRep ModuleRep::zero(const MultiAlgebra& algebra, std::size_t carrier_dim, std::optional<Grading> carrier_grading) {
  RepFamily fam(algebra.label_count(),
                std::vector<Matrix>(algebra.dim(), Matrix(carrier_dim, carrier_dim, algebra.field())));
  std::optional<RepFamily> g;
  if (kind_family(algebra.kind()) == 2) g = fam;
  return ModuleRep(algebra, carrier_dim, fam, std::move(g), std::move(carrier_grading));
}

Matrix ModuleRep::eval_f(std::size_t label, const Vector& x) const {
  return combine(f_.at(label), x, carrier_dim_, algebra_.field());
}

Matrix ModuleRep::eval_g(std::size_t label, const Vector& x) const {
  if (!g_) throw Error(ErrorCode::MissingG, "module has no g family");
  return combine(g_->at(label), x, carrier_dim_, algebra_.field());
}

std::vector<Matrix> ModuleRep::all_maps() const {
  std::vector<Matrix> out;
  for (const auto& per_label : f_) out.insert(out.end(), per_label.begin(), per_label.end());
  if (g_)
    for (const auto& per_label : *g_) out.insert(out.end(), per_label.begin(), per_label.end());
  return out;
}

ModuleRep ModuleRep::with_f(RepFamily f) const {
  return ModuleRep(algebra_, carrier_dim_, std::move(f), g_, carrier_grading_);
}

// ---------------------------------------------------------------- identities

namespace {

struct PairSweep {
  std::string_view name;
  std::optional<Witness> witness;

  void test(const Matrix& lhs, const Matrix& rhs, std::size_t i, std::size_t j, std::size_t h, std::size_t k,
            std::size_t part = 0) {
    if (witness || lhs == rhs) return;
    witness = Witness{{i, j}, {h, k}, {part}, flatten(lhs), flatten(rhs)};
  }
  CheckEntry entry() const { return CheckEntry{std::string(name), !witness, witness}; }
};

CheckEntry check_module_parity(const ModuleRep& rep) {
  const auto& a = rep.algebra();
  const std::size_t m = rep.carrier_dim();
  for (std::size_t fam = 0; fam < (rep.has_g() ? 2u : 1u); ++fam) {
    const RepFamily& maps = fam == 0 ? rep.f() : *rep.g();
    for (std::size_t k = 0; k < a.label_count(); ++k)
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t v = 0; v < m; ++v) {
          Vector col = maps[k][i].column(v);
          Vector allowed = col;
          std::uint8_t target = (a.parity(i) + rep.carrier_parity(v)) & 1;
          for (std::size_t r = 0; r < m; ++r)
            if (rep.carrier_parity(r) != target) allowed[r] = Scalar(a.field());
          if (col != allowed)
            return CheckEntry{std::string(kModuleParity), false, Witness{{i, v}, {k}, {fam}, col, allowed}};
        }
  }
  return CheckEntry{std::string(kModuleParity), true, std::nullopt};
}

}  // namespace

VerificationReport check_module(const ModuleRep& rep) {
  const auto& a = rep.algebra();
  const bool graded = is_super(a.kind());
  const FieldSpec fld = a.field();
  const std::size_t n = a.dim(), s = a.label_count();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i, fld));
  auto sign = [&](std::size_t i, std::size_t j) {
    return graded ? super_sign(a.parity(i), a.parity(j), fld) : Scalar::one(fld);
  };

  VerificationReport r;
  if (graded) r.checks.push_back(check_module_parity(rep));

  if (kind_family(a.kind()) == 1) {
    PairSweep bracket{kModuleBracket, {}}, commute{kModuleCommute, {}};
    for (std::size_t h = 0; h < s; ++h)
      for (std::size_t k = 0; k < s; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const Matrix &fhx = rep.f()[h][i], &fky = rep.f()[k][j];
            const Matrix &fhy = rep.f()[h][j], &fkx = rep.f()[k][i];
            bracket.test(rep.eval_f(h, bracket_eval(a, k, e[i], e[j])), fhx * fky - sign(i, j) * (fhy * fkx), i, j, h, k);
            commute.test(fkx * rep.f()[h][j], fhx * fky, i, j, h, k);
          }
    r.checks.push_back(bracket.entry());
    r.checks.push_back(commute.entry());
    return r;
  }

  const RepFamily& g = *rep.g();
  PairSweep bf{kModuleBracketF, {}}, bg{kModuleBracketG, {}}, gg{kModuleGG, {}}, ff{kModuleFFCommute, {}},
      fg{kModuleFGCommute, {}};
  for (std::size_t h = 0; h < s; ++h)
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto& f = rep.f();
          Vector xy = bracket_eval(a, k, e[i], e[j]);
          Scalar sg = sign(i, j);
          bf.test(rep.eval_f(h, xy), sg * (f[h][i] * f[k][j]) - f[k][j] * f[h][i], i, j, h, k);
          bg.test(rep.eval_g(h, xy), sg * (g[h][i] * f[k][j]) - f[k][j] * g[h][i], i, j, h, k);
          Matrix mid = g[h][i] * f[k][j];
          gg.test(g[k][i] * g[h][j], mid, i, j, h, k, 0);
          gg.test(mid, g[k][i] * f[h][j], i, j, h, k, 1);
          ff.test(f[k][i] * f[h][j], f[h][i] * f[k][j], i, j, h, k);
          fg.test(f[k][i] * g[h][j], f[h][i] * g[k][j], i, j, h, k);
        }
  for (const auto* sw : {&bf, &bg, &gg, &ff, &fg}) r.checks.push_back(sw->entry());
  return r;
}

ModuleRep adjoint_module(const MultiAlgebra& a) {
  const int family = kind_family(a.kind());
  if (family == 3) throw Error(ErrorCode::KindMismatch, "no adjoint module for 3rd-kind algebras");
  const std::size_t n = a.dim();
  RepFamily f(a.label_count()), g(a.label_count());
  for (std::size_t k = 0; k < a.label_count(); ++k) {
    const auto& c = a.bracket(k);
    for (std::size_t i = 0; i < n; ++i) {
      Matrix left(n, n, a.field()), right(n, n, a.field());
      for (std::size_t col = 0; col < n; ++col)
        for (std::size_t l = 0; l < n; ++l) {
          left(l, col) = c.entry(i, col, l);
          right(l, col) = -c.entry(col, i, l);
        }
      if (family == 1) {
        f[k].push_back(std::move(left));
      } else {
        f[k].push_back(std::move(right));
        g[k].push_back(std::move(left));
      }
    }
  }
  std::optional<RepFamily> gopt;
  if (family == 2) gopt = std::move(g);
  return ModuleRep(a, n, std::move(f), std::move(gopt), a.grading());
}

// ---------------------------------------------------------------- submodules

SubmoduleCheck check_submodule(const ModuleRep& rep, const Subspace& u) {
  if (u.ambient_dim() != rep.carrier_dim() || u.field() != rep.algebra().field())
    throw Error(ErrorCode::DimensionMismatch, "subspace does not live in the carrier");
  SubmoduleCheck r;
  r.graded_required = is_super(rep.algebra().kind());
  r.is_graded = rep.carrier_grading() ? u.is_graded(rep.carrier_parity_vector()) : false;
  if (r.graded_required && !r.is_graded) return r;
  auto maps = rep.all_maps();
  auto gens = u.basis_vectors();
  for (std::size_t mi = 0; mi < maps.size(); ++mi)
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      if (!u.contains(maps[mi].apply(gens[gi]))) {
        r.violation = std::pair{mi, gi};
        return r;
      }
  r.submodule = true;
  return r;
}

bool is_submodule(const ModuleRep& rep, const Subspace& u) { return check_submodule(rep, u).submodule; }

std::vector<Vector> module_annihilator_generators(const ModuleRep& rep, AnnihilatorKind w) {
  const auto& a = rep.algebra();
  if (!annihilator_compatible(a.kind(), w))
    throw Error(ErrorCode::KindMismatch, fmt::format("module annihilator '{}' is not defined for {} algebras",
                                                     annihilator_name(w), kind_name(a.kind())));
  const std::size_t n = a.dim(), s = a.label_count(), m = rep.carrier_dim();
  std::vector<Matrix> diffs;
  for (std::size_t h = 0; h < s; ++h)
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        switch (w) {
          case AnnihilatorKind::First:
          case AnnihilatorKind::SuperFirst: diffs.push_back(rep.f()[h][i] - rep.f()[k][i]); break;
          case AnnihilatorKind::SecondPlus:
          case AnnihilatorKind::SuperSecondPlus: diffs.push_back((*rep.g())[h][i] - rep.f()[k][i]); break;
          case AnnihilatorKind::SecondMinus:
          case AnnihilatorKind::SuperSecondMinus:
            diffs.push_back(rep.f()[h][i] - rep.f()[k][i]);
            diffs.push_back((*rep.g())[h][i] - (*rep.g())[k][i]);
            break;
        }
      }
  std::vector<Vector> out;
  for (const auto& d : diffs)
    for (std::size_t v = 0; v < m; ++v) out.push_back(d.column(v));
  return out;
}

Subspace module_annihilator_span(const ModuleRep& rep, AnnihilatorKind w) {
  return Subspace::span(module_annihilator_generators(rep, w), rep.carrier_dim(), rep.algebra().field());
}

Subspace module_annihilator(const ModuleRep& rep, AnnihilatorKind w) {
  Subspace s = module_annihilator_span(rep, w);
  if (!is_submodule(rep, s))
    throw Error(ErrorCode::InternalClosureFailure,
                fmt::format("module annihilator '{}' is not a submodule", annihilator_name(w)));
  return s;
}

SubmoduleVerdict classify_irreducibility(const ModuleRep& rep, unsigned threads) {
  const auto& a = rep.algebra();
  const std::size_t m = rep.carrier_dim();
  const FieldSpec fld = a.field();
  SubmoduleVerdict v;
  std::vector<Subspace> members{Subspace::zero(m, fld)};
  for (auto w : annihilators_for(a.kind())) members.push_back(module_annihilator_span(rep, w));
  members.push_back(Subspace::full(m, fld));
  v.distinguished = distinct_members(members);
  v.i = v.distinguished.size();
  auto distinguished = [&](const Subspace& s) {
    return std::find(v.distinguished.begin(), v.distinguished.end(), s) != v.distinguished.end();
  };

  if (fld.is_rational() && m > 1) {
    auto maps = rep.all_maps();
    if (is_super(a.kind()))
      for (std::uint8_t block : {0, 1}) {
        Matrix p(m, m, fld);
        for (std::size_t i = 0; i < m; ++i)
          if (rep.carrier_parity(i) == block) p(i, i) = Scalar::one(fld);
        maps.push_back(std::move(p));
      }
    std::vector<Vector> seeds;
    for (std::size_t i = 0; i < m; ++i) seeds.push_back(unit_vector(m, i, fld));
    for (auto w : annihilators_for(a.kind()))
      for (auto& g : module_annihilator_generators(rep, w))
        if (!is_zero(g)) seeds.push_back(std::move(g));
    std::vector<Subspace> found;
    for (const auto& seed : seeds) {
      Subspace gen = invariant_closure(Subspace::span({seed}, m, fld), maps);
      ++v.subspaces_examined;
      if (!is_submodule(rep, gen)) continue;
      ++v.submodules_found;
      if (!distinguished(gen)) found.push_back(gen);
    }
    if (!found.empty()) {
      v.decision = Decision::NotSimple;
      v.offending = *std::min_element(found.begin(), found.end());
    }
    return v;
  }

  v.exhaustive = true;
  std::vector<Subspace> all;
  if (fld.is_rational()) {
    all.push_back(Subspace::zero(m, fld));
    if (m == 1) all.push_back(Subspace::full(m, fld));
  } else {
    all = enumerate_subspaces(m, fld, is_super(a.kind()) ? rep.carrier_parity_vector() : std::span<const std::uint8_t>());
  }
  v.subspaces_examined = all.size();
  struct Partial {
    std::size_t found = 0;
    std::optional<std::size_t> offending;
  };
  std::vector<Partial> partial(std::max(1u, threads));
  detail::parallel_ranges(all.size(), threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& p = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      if (!is_submodule(rep, all[idx])) continue;
      ++p.found;
      if (!p.offending && !distinguished(all[idx])) p.offending = idx;
    }
  });
  std::optional<std::size_t> offending;
  for (const auto& p : partial) {
    v.submodules_found += p.found;
    if (p.offending && (!offending || *p.offending < *offending)) offending = p.offending;
  }
  v.decision = offending ? Decision::NotSimple : Decision::Simple;
  if (offending) v.offending = all[*offending];
  return v;
}

}  // namespace liekit
