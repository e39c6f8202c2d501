#include "liekit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace liekit {

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // locate the byte offset as line:column
    std::size_t line = 1, col = 1;
    for (std::size_t b = 0; b + 1 < e.byte && b < text.size(); ++b) {
      if (text[b] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, fmt::format("{}:{}:{}: malformed JSON", source, line, col));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, fmt::format("cannot read {}", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, fmt::format("cannot write {}", path.string()));
  out << text;
}

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaError, fmt::format("{}: {}", where, what));
}

void only_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  for (const auto& [key, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) schema(where, fmt::format("unknown key '{}'", key));
}

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) schema(where, fmt::format("missing key '{}'", key));
  return *it;
}

std::size_t count_from_json(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) schema(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_of(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  if (j.size() != n) schema(where, fmt::format("expected {} entries, found {}", n, j.size()));
  return j;
}

Grading grading_from_json(const json& j, std::size_t n, const std::string& where) {
  array_of(j, n, where);
  Grading g;
  for (const auto& p : j) {
    if (!p.is_number_unsigned() || p.get<unsigned>() > 1) schema(where, "parities must be 0 or 1");
    g.parity.push_back(static_cast<std::uint8_t>(p.get<unsigned>()));
  }
  return g;
}

json grading_to_json(const Grading& g) {
  json out = json::array();
  for (auto p : g.parity) out.push_back(static_cast<int>(p));
  return out;
}

Scalar scalar_from_json(const json& j, FieldSpec f, const std::string& where) {
  if (!j.is_string()) schema(where, "scalars are written as strings");
  try {
    return parse_scalar(j.get<std::string>(), f);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", where, e.what()));
  }
}

std::vector<Matrix> matrices_from_json(const json& j, FieldSpec f, std::size_t count, std::size_t dim,
                                       const std::string& where, bool exact_count) {
  if (!j.is_array()) schema(where, "expected an array of matrices");
  if (exact_count) array_of(j, count, where);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(matrix_from_json(j[i], f, dim, dim, fmt::format("{}[{}]", where, i)));
  return out;
}

json matrices_to_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

}  // namespace

json field_to_json(FieldSpec f) {
  if (f.is_rational()) return json{{"type", "Q"}};
  return json{{"type", "Fp"}, {"p", f.characteristic()}};
}

FieldSpec field_from_json(const json& j) {
  only_keys(j, {"type", "p"}, "field");
  const json& type = require(j, "type", "field");
  if (type == "Q") {
    if (j.contains("p")) schema("field", "Q takes no 'p'");
    return FieldSpec::rationals();
  }
  if (type == "Fp") {
    const json& p = require(j, "p", "field");
    if (!p.is_number_unsigned()) schema("field.p", "expected a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  schema("field.type", "expected \"Q\" or \"Fp\"");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(format_scalar(s));
  return out;
}

Vector vector_from_json(const json& j, FieldSpec f, std::size_t n, const std::string& where) {
  array_of(j, n, where);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], f, fmt::format("{}[{}]", where, i)));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j, FieldSpec f, std::size_t rows, std::size_t cols, const std::string& where) {
  array_of(j, rows, where);
  std::vector<Vector> rs;
  for (std::size_t r = 0; r < rows; ++r) rs.push_back(vector_from_json(j[r], f, cols, fmt::format("{}[{}]", where, r)));
  return rows == 0 ? Matrix(0, cols, f) : Matrix::from_rows(rs, cols, f);
}

// ---------------------------------------------------------------- algebras

json algebra_to_json(const MultiAlgebra& a) {
  json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  j["labels"] = a.labels().names();
  j["kind"] = std::string(kind_name(a.kind()));
  if (a.grading()) j["grading"] = grading_to_json(*a.grading());
  json brackets = json::object();
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < a.label_count(); ++k) {
    json t = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t jj = 0; jj < n; ++jj) row.push_back(vector_to_json(a.bracket(k).product(i, jj)));
      t.push_back(std::move(row));
    }
    brackets[a.labels().name(k)] = std::move(t);
  }
  j["brackets"] = std::move(brackets);
  if (a.endos()) {
    j["endos"] = json{{"sigma", matrices_to_json(a.endos()->sigma)},
                      {"sigma_ring", matrices_to_json(a.endos()->sigma_ring)},
                      {"sigma_check", matrices_to_json(a.endos()->sigma_check)}};
  }
  return j;
}

MultiAlgebra algebra_from_json(const json& j) {
  only_keys(j, {"field", "dim", "labels", "kind", "grading", "brackets", "endos"}, "algebra");
  FieldSpec f = field_from_json(require(j, "field", "algebra"));
  const std::size_t n = count_from_json(require(j, "dim", "algebra"), "dim");
  const json& labels_j = require(j, "labels", "algebra");
  if (!labels_j.is_array()) schema("labels", "expected an array of strings");
  std::vector<std::string> names;
  for (const auto& l : labels_j) {
    if (!l.is_string()) schema("labels", "expected an array of strings");
    names.push_back(l.get<std::string>());
  }
  if (names.empty()) schema("labels", "the label set S must be nonempty");
  LabelSet labels(names);
  const json& kind_j = require(j, "kind", "algebra");
  if (!kind_j.is_string()) schema("kind", "expected a string");
  Kind kind = parse_kind(kind_j.get<std::string>());

  std::optional<Grading> grading;
  if (j.contains("grading")) grading = grading_from_json(j["grading"], n, "grading");
  if (is_super(kind) && !grading) schema("grading", fmt::format("{} algebras need a grading", kind_name(kind)));

  const json& br = require(j, "brackets", "algebra");
  if (!br.is_object()) schema("brackets", "expected an object keyed by label");
  for (const auto& [key, _] : br.items())
    if (std::find(names.begin(), names.end(), key) == names.end())
      schema("brackets", fmt::format("unknown label '{}'", key));
  std::vector<BracketTensor> tensors;
  for (const auto& name : names) {
    const std::string where = fmt::format("brackets.{}", name);
    const json& t = array_of(require(br, name.c_str(), "brackets"), n, where);
    BracketTensor tensor(n, f);
    for (std::size_t i = 0; i < n; ++i) {
      const json& row = array_of(t[i], n, fmt::format("{}[{}]", where, i));
      for (std::size_t jj = 0; jj < n; ++jj)
        tensor.set_product(i, jj, vector_from_json(row[jj], f, n, fmt::format("{}[{}][{}]", where, i, jj)));
    }
    tensors.push_back(std::move(tensor));
  }

  std::optional<EndoSets> endos;
  if (j.contains("endos")) {
    const json& e = j["endos"];
    only_keys(e, {"sigma", "sigma_ring", "sigma_check"}, "endos");
    endos = EndoSets{matrices_from_json(require(e, "sigma", "endos"), f, 0, n, "endos.sigma", false),
                     matrices_from_json(require(e, "sigma_ring", "endos"), f, 0, n, "endos.sigma_ring", false),
                     matrices_from_json(require(e, "sigma_check", "endos"), f, 0, n, "endos.sigma_check", false)};
  }
  return MultiAlgebra(f, n, std::move(labels), kind, std::move(tensors), std::move(grading), std::move(endos));
}

MultiAlgebra load_algebra(const std::filesystem::path& path) {
  return algebra_from_json(parse_json(read_file(path), path.string()));
}

void save_algebra(const MultiAlgebra& a, const std::filesystem::path& path) {
  write_file(path, dump_json(algebra_to_json(a)));
}

// ---------------------------------------------------------------- modules

namespace {

json family_to_json(const RepFamily& fam, const LabelSet& labels) {
  json out = json::object();
  for (std::size_t k = 0; k < fam.size(); ++k) out[labels.name(k)] = matrices_to_json(fam[k]);
  return out;
}

RepFamily family_from_json(const json& j, const MultiAlgebra& a, std::size_t m, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object keyed by label");
  for (const auto& [key, _] : j.items())
    if (!std::count(a.labels().names().begin(), a.labels().names().end(), key))
      schema(where, fmt::format("unknown label '{}'", key));
  RepFamily fam;
  for (const auto& name : a.labels().names())
    fam.push_back(matrices_from_json(require(j, name.c_str(), where), a.field(), a.dim(), m,
                                     fmt::format("{}.{}", where, name), true));
  return fam;
}

}  // namespace

json module_to_json(const ModuleFile& m) {
  const auto& rep = m.rep;
  json j;
  if (m.algebra_path)
    j["algebra"] = *m.algebra_path;
  else
    j["algebra"] = algebra_to_json(rep.algebra());
  j["carrier_dim"] = rep.carrier_dim();
  if (rep.carrier_grading()) j["carrier_grading"] = grading_to_json(*rep.carrier_grading());
  j["f"] = family_to_json(rep.f(), rep.algebra().labels());
  if (rep.g()) j["g"] = family_to_json(*rep.g(), rep.algebra().labels());
  return j;
}

ModuleFile module_from_json(const json& j, const std::filesystem::path& base_dir) {
  only_keys(j, {"algebra", "carrier_dim", "carrier_grading", "f", "g"}, "module");
  const json& alg = require(j, "algebra", "module");
  std::optional<std::string> path;
  std::optional<MultiAlgebra> a;
  if (alg.is_string()) {
    path = alg.get<std::string>();
    std::filesystem::path p(*path);
    a = load_algebra(p.is_absolute() ? p : base_dir / p);
  } else {
    a = algebra_from_json(alg);
  }
  const std::size_t m = count_from_json(require(j, "carrier_dim", "module"), "carrier_dim");
  std::optional<Grading> cg;
  if (j.contains("carrier_grading")) cg = grading_from_json(j["carrier_grading"], m, "carrier_grading");
  RepFamily f = family_from_json(require(j, "f", "module"), *a, m, "f");
  std::optional<RepFamily> g;
  if (j.contains("g")) g = family_from_json(j["g"], *a, m, "g");
  return ModuleFile{ModuleRep(std::move(*a), m, std::move(f), std::move(g), std::move(cg)), std::move(path)};
}

ModuleFile load_module(const std::filesystem::path& path) {
  return module_from_json(parse_json(read_file(path), path.string()), path.parent_path());
}

void save_module(const ModuleFile& m, const std::filesystem::path& path) {
  write_file(path, dump_json(module_to_json(m)));
}

// ---------------------------------------------------------------- subspaces and reports

Subspace subspace_from_json(const json& j, FieldSpec f) {
  only_keys(j, {"ambient_dim", "dim", "rows"}, "subspace");
  const std::size_t n = count_from_json(require(j, "ambient_dim", "subspace"), "ambient_dim");
  const json& rows = require(j, "rows", "subspace");
  if (!rows.is_array()) schema("rows", "expected an array of vectors");
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < rows.size(); ++r) vs.push_back(vector_from_json(rows[r], f, n, fmt::format("rows[{}]", r)));
  Subspace s = Subspace::span(vs, n, f);
  // reports carry the dimension; when present it must match the rows
  if (j.contains("dim") && count_from_json(j["dim"], "dim") != s.dim()) schema("dim", "does not match the rows");
  return s;
}

json subspace_to_json(const Subspace& s) {
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"rows", matrix_to_json(s.basis())}};
}

json witness_to_json(const Witness& w, const LabelSet* labels) {
  json lab = json::array();
  for (auto l : w.labels) {
    if (labels && l < labels->size())
      lab.push_back(labels->name(l));
    else
      lab.push_back(l);
  }
  return json{{"basis", w.basis}, {"labels", lab}, {"endos", w.endos}, {"lhs", vector_to_json(w.lhs)},
              {"rhs", vector_to_json(w.rhs)}};
}

json check_to_json(const CheckEntry& c, const LabelSet* labels) {
  json j{{"name", c.name}, {"pass", c.pass}};
  if (c.witness) j["witness"] = witness_to_json(*c.witness, labels);
  return j;
}

json report_to_json(const VerificationReport& r, const LabelSet* labels) {
  json out = json::array();
  for (const auto& c : r.checks) out.push_back(check_to_json(c, labels));
  return out;
}

namespace {

json issues_to_json(const std::vector<CensusIssue>& issues) {
  json out = json::array();
  for (const auto& i : issues) out.push_back(json{{"index", i.index}, {"what", i.what}});
  return out;
}

}  // namespace

json census_to_json(const CensusReport& r) {
  json j;
  json search{{"field", r.spec.field.name()},
             {"dim", r.spec.dim},
             {"labels", r.spec.label_count},
             {"kind", std::string(kind_name(r.spec.kind))},
             {"alternating", r.spec.alternating},
             {"prefilter", r.spec.prefilter}};
  if (r.spec.grading) search["grading"] = grading_to_json(*r.spec.grading);
  j["search"] = search;
  j["slots_per_label"] = r.slots_per_label;
  j["raw_space"] = r.raw_space;
  j["admissible_per_label"] = r.admissible_per_label;
  j["candidates"] = r.candidates;
  json variants = json::array();
  for (const auto& v : r.variants) {
    json negs = json::array();
    for (const auto& n : v.negative_samples)
      negs.push_back(json{{"index", n.index}, {"check", n.check}, {"witness", witness_to_json(n.witness, nullptr)}});
    const auto& c = v.certification;
    variants.push_back(json{
        {"strict_alternating", v.strict_alternating},
        {"examined", v.examined},
        {"passing", v.passing},
        {"trivial", v.trivial},
        {"nontrivial", v.nontrivial},
        {"negatives", v.negatives},
        {"annihilator_dims", v.annihilator_dims},
        {"closure", json{{"checked", v.closure_checked}, {"violations", issues_to_json(v.closure_violations)}}},
        {"containment",
         json{{"checked", v.containment_checked}, {"violations", issues_to_json(v.containment_violations)}}},
        {"factors", json{{"checked", v.factor_checked}, {"failures", issues_to_json(v.factor_failures)}}},
        {"adjoint", json{{"checked", v.adjoint_checked},
                         {"passed", v.adjoint_passed},
                         {"failed_trivial", v.adjoint_failed_trivial},
                         {"failures_nontrivial", issues_to_json(v.adjoint_failures_nontrivial)}}},
        {"module_annihilators", json{{"checked", v.module_annihilator_checked},
                                     {"violations", issues_to_json(v.module_annihilator_violations)}}},
        {"nontrivial_examples", v.nontrivial_examples},
        {"negative_samples", negs},
        {"certification", json{{"positives_reverified", c.positives_reverified},
                               {"positives_failed", c.positives_failed},
                               {"negatives_replayed", c.negatives_replayed},
                               {"negatives_not_refailing", c.negatives_not_refailing},
                               {"ok", c.ok()}}}});
  }
  j["variants"] = variants;
  return j;
}

}  // namespace liekit
