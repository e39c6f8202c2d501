#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "liekit/modules.hpp"
#include "liekit/search.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace liekit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

Vector vec(std::initializer_list<int> xs, FieldSpec f) {
  Vector v;
  for (int x : xs) v.emplace_back(x, f);
  return v;
}

Matrix mat(std::initializer_list<std::initializer_list<int>> rows, FieldSpec f) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(vec(r, f));
  return Matrix::from_rows(rs, rs.front().size(), f);
}

// The defining representation of sl2 in the basis (e, f, h), scaled by phi per label.
ModuleRep sl2_natural(const MultiAlgebra& a, std::vector<int> phi) {
  const std::vector<Matrix> rho{mat({{0, 1}, {0, 0}}, F5), mat({{0, 0}, {1, 0}}, F5), mat({{1, 0}, {0, 4}}, F5)};
  RepFamily f;
  for (int s : phi) {
    f.emplace_back();
    for (const auto& m : rho) f.back().push_back(Scalar(s, F5) * m);
  }
  return ModuleRep(a, 2, f);
}

bool agrees(const ModuleRep& rep) {
  return check_module(rep).all_pass() == oracle::module_valid(oracle::from(rep));
}

}  // namespace

TEST_CASE("zero representation") {
  for (const char* f : {"h3_scaled.json", "sl2_scaled_f5.json", "leibniz2_scaled.json"}) {
    auto a = support::corpus(f);
    auto z = ModuleRep::zero(a, 2);
    CHECK(check_module(z).all_pass());
    CHECK(agrees(z));
  }
  auto s = support::corpus("super11_scaled.json");
  CHECK_THROWS_AS(ModuleRep::zero(s, 2), Error);
  CHECK(check_module(ModuleRep::zero(s, 2, Grading{{0, 1}})).all_pass());
  auto z = load_module(support::data("modules/h3_zero_rep.json"));
  CHECK(check_module(z.rep).all_pass());
}

TEST_CASE("construction errors") {
  auto h3 = support::corpus("h3_scaled.json");
  auto lb = support::corpus("leibniz2_scaled.json");
  CHECK_THROWS_AS(ModuleRep(lb, 1, ModuleRep::zero(lb, 1).f()), Error);
  CHECK_THROWS_AS(ModuleRep(h3, 1, ModuleRep::zero(h3, 1).f(), ModuleRep::zero(h3, 1).f()), Error);
  CHECK_THROWS_AS(ModuleRep::zero(support::corpus("sl2_identity_third.json"), 1), Error);
  auto f = ModuleRep::zero(h3, 2).f();
  f[0][0] = Matrix(3, 2, Q);
  CHECK_THROWS_AS(ModuleRep(h3, 2, f), Error);
  CHECK_THROWS_AS(ModuleRep::zero(h3, 1).eval_g(0, vec({1, 0, 0}, Q)), Error);
}

TEST_CASE("adjoint module of H3") {
  auto h3 = support::corpus("h3_scaled.json");
  auto ad = adjoint_module(h3);
  CHECK(ad.carrier_dim() == 3);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(ad.f()[k][i].column(j) == h3.bracket(k).product(i, j));
  CHECK(check_module(ad).all_pass());
  CHECK(ad == load_module(support::data("modules/h3_adjoint.json")).rep);

  auto bad = load_module(support::data("modules/h3_adjoint_corrupted.json")).rep;
  auto r = check_module(bad);
  CHECK_FALSE(r.all_pass());
  CHECK(agrees(bad));
}

TEST_CASE("adjoint module of the Leibniz algebra") {
  auto lb = support::corpus("leibniz2_scaled.json");
  auto ad = adjoint_module(lb);
  REQUIRE(ad.has_g());
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t a = 0; a < 2; ++a) {
        // f_k(e_i) e_a = -<e_a, e_i>_k, g_k(e_i) e_a = <e_i, e_a>_k
        CHECK(ad.f()[k][i].column(a) == Scalar(-1, Q) * lb.bracket(k).product(a, i));
        CHECK((*ad.g())[k][i].column(a) == lb.bracket(k).product(i, a));
      }
  CHECK(check_module(ad).all_pass());
  CHECK(ad == load_module(support::data("modules/leibniz2_adjoint.json")).rep);
  CHECK_THROWS_AS(adjoint_module(support::corpus("sl2_identity_third.json")), Error);
}

TEST_CASE("module checks agree with the reference on single-entry mutants") {
  std::size_t failing = 0;
  for (const char* f : {"h3_scaled.json", "leibniz2_scaled.json", "super11_scaled.json", "super_leibniz_scaled.json"}) {
    auto ad = adjoint_module(support::corpus(f));
    CHECK(agrees(ad));
    const auto one = Scalar::one(ad.algebra().field());
    for (std::size_t k = 0; k < ad.f().size(); ++k)
      for (std::size_t i = 0; i < ad.f()[k].size(); ++i)
        for (std::size_t r = 0; r < ad.carrier_dim(); ++r)
          for (std::size_t c = 0; c < ad.carrier_dim(); ++c) {
            auto fam = ad.f();
            fam[k][i](r, c) = fam[k][i](r, c) + one;
            auto m = ad.with_f(fam);
            CHECK(agrees(m));
            failing += !check_module(m).all_pass();
          }
  }
  CHECK(failing > 0);
}

TEST_CASE("module witnesses are flattened operators") {
  auto bad = load_module(support::data("modules/h3_adjoint_corrupted.json")).rep;
  auto r = check_module(bad);
  auto* fail = r.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->witness->lhs.size() == 9);
  CHECK(fail->witness->rhs.size() == 9);
  CHECK(fail->witness->lhs != fail->witness->rhs);
  CHECK(fail->witness->basis.size() == 2);
  CHECK(fail->witness->labels.size() == 2);
}

TEST_CASE("natural sl2 module") {
  auto sl2 = support::corpus("sl2_scaled_f5.json");
  MultiAlgebra single(F5, 3, LabelSet(std::vector<std::string>{"h"}), Kind::First, {sl2.bracket(0)});
  auto one = sl2_natural(single, {1});
  CHECK(check_module(one).all_pass());
  CHECK(agrees(one));
  auto two = sl2_natural(sl2, {1, 2});
  CHECK(check_module(two).all_pass());
  CHECK(agrees(two));
  auto wrong = sl2_natural(sl2, {1, 3});
  CHECK_FALSE(check_module(wrong).all_pass());
  CHECK(agrees(wrong));

  auto v1 = classify_irreducibility(one);
  CHECK(v1.irreducible());
  CHECK(v1.i == 2);
  auto v2 = classify_irreducibility(two);
  CHECK(v2.irreducible());
  CHECK(v2.i == 2);
  CHECK(v2.exhaustive);
}

TEST_CASE("submodules") {
  auto ad = adjoint_module(support::corpus("h3_scaled.json"));
  CHECK(is_submodule(ad, Subspace::span({vec({0, 0, 1}, Q)}, 3, Q)));
  auto c = check_submodule(ad, Subspace::span({vec({1, 0, 0}, Q)}, 3, Q));
  CHECK_FALSE(c.submodule);
  CHECK(c.violation.has_value());
  CHECK_THROWS_AS(check_submodule(ad, Subspace::zero(2, Q)), Error);

  auto s = ModuleRep::zero(support::corpus("super11_scaled.json"), 2, Grading{{0, 1}});
  auto mixed = check_submodule(s, Subspace::span({vec({1, 1}, Q)}, 2, Q));
  CHECK(mixed.graded_required);
  CHECK_FALSE(mixed.submodule);
  CHECK(is_submodule(s, Subspace::span({vec({0, 1}, Q)}, 2, Q)));
}

TEST_CASE("module annihilators") {
  auto ad = adjoint_module(support::corpus("h3_scaled.json"));
  CHECK(module_annihilator(ad, AnnihilatorKind::First) == Subspace::span({vec({0, 0, 1}, Q)}, 3, Q));
  auto lb = adjoint_module(support::corpus("leibniz2_scaled.json"));
  for (auto w : annihilators_for(Kind::Second)) {
    auto s = module_annihilator(lb, w);
    CHECK(is_submodule(lb, s));
  }
  CHECK(module_annihilator(lb, AnnihilatorKind::SecondPlus)
            .contains(module_annihilator(lb, AnnihilatorKind::SecondMinus)));
  CHECK_THROWS_AS(module_annihilator(ad, AnnihilatorKind::SecondPlus), Error);
  CHECK(module_annihilator(ModuleRep::zero(ad.algebra(), 2), AnnihilatorKind::First).dim() == 0);
}

TEST_CASE("irreducibility examples") {
  auto z = load_module(support::data("modules/h3_zero_rep.json")).rep;
  auto vz = classify_irreducibility(z);
  CHECK(vz.i == 2);
  CHECK(vz.decision != Decision::NotSimple);

  auto sl2 = load_module(support::data("modules/sl2_adjoint_f5.json")).rep;
  auto vs = classify_irreducibility(sl2);
  CHECK(vs.irreducible());
  CHECK(vs.i == 2);

  auto h3 = load_module(support::data("modules/h3_adjoint_f5.json")).rep;
  auto vh = classify_irreducibility(h3);
  CHECK(vh.decision == Decision::NotSimple);
  REQUIRE(vh.offending.has_value());
  CHECK(is_submodule(h3, *vh.offending));
  CHECK(std::find(vh.distinguished.begin(), vh.distinguished.end(), *vh.offending) == vh.distinguished.end());

  auto v8 = classify_irreducibility(h3, 8);
  CHECK(v8.offending == vh.offending);
  CHECK(v8.submodules_found == vh.submodules_found);
}

TEST_CASE("irreducibility agrees with member-set enumeration") {
  for (const char* f : {"modules/sl2_adjoint_f5.json", "modules/h3_adjoint_f5.json"}) {
    auto rep = load_module(support::data(f)).rep;
    auto o = oracle::from(rep);
    oracle::Space sp{o.alg.p, o.m};
    std::vector<std::function<oracle::Vec(const oracle::Vec&)>> maps;
    for (std::size_t k = 0; k < o.alg.labels; ++k)
      for (std::size_t i = 0; i < o.alg.n; ++i)
        maps.push_back([&o, k, i](const oracle::Vec& v) { return o.act(o.f, k, oracle::unit(o.alg.n, i), v); });
    std::size_t subs = 0;
    for (const auto& s : oracle::all_subspaces(sp)) subs += oracle::invariant(sp, s, maps, nullptr);
    auto v = classify_irreducibility(rep);
    CHECK(v.submodules_found == subs);
    CHECK(v.irreducible() == (subs == v.i));
  }
}

TEST_CASE("adjoint modules of census instances agree with the reference") {
  for (Kind kind : {Kind::First, Kind::Second}) {
    SearchSpec spec;
    spec.field = FieldSpec::prime(3);
    spec.dim = 2;
    spec.kind = kind;
    spec.alternating = kind == Kind::First;
    spec.prefilter = kind == Kind::Second;
    auto census = exhaustive_search(spec, {4});
    for (auto idx : census.variants[0].positive_indices) {
      auto a = decode_candidate(spec, idx);
      auto ad = adjoint_module(a);
      auto ref = oracle::adjoint(oracle::from(a));
      auto got = oracle::from(ad);
      CHECK(got.f.size() == ref.f.size());
      CHECK(agrees(ad));
      CHECK(check_module(ad).all_pass() == oracle::module_valid(ref));
    }
  }
}

TEST_CASE("module validity is invariant under a change of carrier basis") {
  std::mt19937 rng(31);
  auto sl2 = support::corpus("sl2_scaled_f5.json");
  auto rep = sl2_natural(sl2, {1, 2});
  for (int t = 0; t < 10; ++t) {
    Matrix p = support::random_invertible(rng, 2, F5);
    Matrix pinv = *inverse(p);
    RepFamily f = rep.f();
    for (auto& per : f)
      for (auto& m : per) m = pinv * m * p;
    ModuleRep conj(sl2, 2, f);
    CHECK(check_module(conj).all_pass());
    CHECK(classify_irreducibility(conj).irreducible());
  }
}
