#include "liekit/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <openssl/evp.h>

#include "liekit/constructions.hpp"
#include "liekit/ideals.hpp"
#include "liekit/io.hpp"
#include "liekit/modules.hpp"
#include "liekit/search.hpp"

namespace liekit {

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  for (unsigned i = 0; i < len; ++i) out += fmt::format("{:02x}", md[i]);
  return out;
}

struct Output {
  std::string command;
  std::string digest_input;
  json checks = json::array();
  json result = json::object();
  std::vector<std::string> notes;
  bool failed = false;

  void add_checks(const VerificationReport& r, const LabelSet* labels, std::string_view prefix = "") {
    for (const auto& c : r.checks) {
      json j = check_to_json(c, labels);
      if (!prefix.empty()) j["name"] = fmt::format("{}{}", prefix, c.name);
      checks.push_back(std::move(j));
      if (!c.pass) failed = true;
    }
  }
  void add_flag(std::string name, bool pass) {
    checks.push_back(json{{"name", std::move(name)}, {"pass", pass}});
    if (!pass) failed = true;
  }
  void note(std::string n) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(std::move(n));
  }
};

void render_text(const json& doc, std::ostream& out) {
  out << "command: " << doc["command"].get<std::string>() << "\n";
  out << "input_digest: " << doc["input_digest"].get<std::string>() << "\n";
  for (const auto& c : doc["checks"]) {
    out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (c.contains("witness")) {
      const auto& w = c["witness"];
      out << "  basis=" << w["basis"].dump() << " labels=" << w["labels"].dump() << " endos=" << w["endos"].dump()
          << " lhs=" << w["lhs"].dump() << " rhs=" << w["rhs"].dump();
    }
    out << "\n";
  }
  for (const auto& [key, value] : doc["result"].items()) out << key << ": " << value.dump() << "\n";
  for (const auto& n : doc["notes"]) out << "note: " << n.get<std::string>() << "\n";
}

json tensor_to_json(const BracketTensor& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) row.push_back(vector_to_json(t.product(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

void kind_notes(Output& o, const MultiAlgebra& a) {
  if (a.field().characteristic() == 2 && kind_family(a.kind()) == 1)
    o.note("characteristic 2: anti-symmetry coincides with symmetry; --strict-alternating also requires [x,x]_k = 0");
  if (a.kind() == Kind::SuperSecond)
    o.note("graded 2nd-kind identity checked as <<x,y>_h,z>_k = <x,<y,z>_k>_h + (-1)^(beta gamma) <<x,z>_k,y>_h");
}

void verify_input(Output& o, const MultiAlgebra& a, const CheckOptions& opts) {
  o.add_checks(verify(a, opts), &a.labels());
  kind_notes(o, a);
}

FieldSpec parse_search_field(const std::string& text) {
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    try {
      return FieldSpec::prime(std::stoull(text.substr(1)));
    } catch (const std::logic_error&) {
    }
  }
  if (text == "Q") throw Error(ErrorCode::BoundsExceeded, "search runs over finite fields only");
  throw Error(ErrorCode::SchemaError, fmt::format("field '{}' is not of the form F<p>", text));
}

Grading parse_grading_list(const std::string& text) {
  Grading g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "0" && item != "1") throw Error(ErrorCode::SchemaError, "grading entries must be 0 or 1");
    g.parity.push_back(static_cast<std::uint8_t>(item[0] - '0'));
  }
  return g;
}

json verdict_members(const std::vector<Subspace>& members) {
  json out = json::array();
  for (const auto& s : members) out.push_back(subspace_to_json(s));
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("LIEKIT_THREADS")) {
    try {
      unsigned long v = std::stoul(env);
      if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for Lie-like algebras and superalgebras", "liekit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false, strict = false;
  unsigned threads = default_threads();
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "Emit the JSON report");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", seed, "Reserved; no computation depends on it");
  app.add_flag("--strict-alternating", strict, "In characteristic 2 also require [x,x]_k = 0");

  std::string file, which, by, alg_file, mod_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check every defining identity");
  verify_cmd->add_option("FILE", file)->required();

  auto* ann_cmd = app.add_subcommand("annihilator", "Span of the annihilator generators");
  ann_cmd->add_option("FILE", file)->required();
  ann_cmd->add_option("--which", which)->required();

  auto* quot_cmd = app.add_subcommand("quotient", "Factor algebra by an ideal");
  quot_cmd->add_option("FILE", file)->required();
  quot_cmd->add_option("--by", by, "annihilator:W or a subspace file")->required();

  auto* simple_cmd = app.add_subcommand("simple", "Classify i-simplicity");
  simple_cmd->add_option("FILE", file)->required();

  auto* trivial_cmd = app.add_subcommand("trivial", "Decide whether all products are proportional");
  trivial_cmd->add_option("FILE", file)->required();

  auto* module_cmd = app.add_subcommand("module", "Module operations");
  module_cmd->require_subcommand(1);
  auto* mod_verify = module_cmd->add_subcommand("verify", "Check the module identities");
  mod_verify->add_option("ALG", alg_file)->required();
  mod_verify->add_option("MOD", mod_file)->required();
  bool adjoint_check = false;
  auto* mod_adjoint = module_cmd->add_subcommand("adjoint", "Adjoint module of an algebra");
  mod_adjoint->add_option("ALG", alg_file)->required();
  mod_adjoint->add_flag("--check", adjoint_check, "Also check the module identities");
  auto* mod_irr = module_cmd->add_subcommand("irreducible", "Classify i-irreducibility");
  mod_irr->add_option("ALG", alg_file)->required();
  mod_irr->add_option("MOD", mod_file)->required();

  std::string kind_text, field_text, grading_text;
  std::size_t dim = 0, labels = 2, samples = 8;
  bool alternating = false, prefilter = false;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive census over a small prime field");
  search_cmd->add_option("--kind", kind_text)->required();
  search_cmd->add_option("--dim", dim)->required();
  search_cmd->add_option("--field", field_text)->required();
  search_cmd->add_option("--labels", labels);
  search_cmd->add_flag("--alternating", alternating);
  search_cmd->add_flag("--prefilter", prefilter, "Enumerate only tuples of individually admissible products");
  search_cmd->add_option("--grading", grading_text, "Comma-separated parities, e.g. 0,1");
  search_cmd->add_option("--samples", samples, "Stored examples and negatives per census");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CheckOptions opts{strict};
  Output o;
  try {
    if (*verify_cmd) {
      o.command = "verify";
      o.digest_input = read_file(file);
      MultiAlgebra a = load_algebra(file);
      verify_input(o, a, opts);
      o.result = json{{"kind", kind_name(a.kind())}, {"dim", a.dim()}, {"labels", a.labels().names()},
                      {"field", a.field().name()}, {"all_pass", !o.failed}};
      if (kind_family(a.kind()) == 3) {
        bool anti = check_antisymmetry(a).pass;
        o.result["anti_symmetric"] = anti;
        o.note("anti-symmetry of a 3rd-kind algebra is reported for information only");
      }
    } else if (*ann_cmd) {
      o.command = "annihilator";
      o.digest_input = read_file(file);
      MultiAlgebra a = load_algebra(file);
      verify_input(o, a, opts);
      AnnihilatorKind w = parse_annihilator(which);
      Subspace s = annihilator_span(a, w);
      auto closure = check_ideal(a, s);
      o.add_flag(fmt::format("{}_closure", annihilator_name(w)), closure.ideal);
      o.result = json{{"which", annihilator_name(w)}, {"subspace", subspace_to_json(s)}, {"is_ideal", closure.ideal}};
      auto ws = annihilators_for(a.kind());
      if (ws.size() == 2) {
        Subspace minus = annihilator_span(a, ws[0]), plus = annihilator_span(a, ws[1]);
        bool contained = plus.contains(minus);
        o.add_flag("minus_in_plus", contained);
        o.result["minus_in_plus"] = contained;
      }
    } else if (*quot_cmd) {
      o.command = "quotient";
      o.digest_input = read_file(file);
      MultiAlgebra a = load_algebra(file);
      verify_input(o, a, opts);
      std::optional<AnnihilatorKind> w;
      Subspace s = Subspace::zero(a.dim(), a.field());
      if (by.rfind("annihilator:", 0) == 0) {
        w = parse_annihilator(by.substr(12));
        s = annihilator_span(a, *w);
      } else {
        o.digest_input += read_file(by);
        s = subspace_from_json(parse_json(read_file(by), by), a.field());
        if (s.ambient_dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
      }
      auto ideal = check_ideal(a, s);
      o.add_flag("is_ideal", ideal.ideal);
      o.result["ideal"] = subspace_to_json(s);
      o.result["is_ideal"] = ideal.ideal;
      if (ideal.ideal) {
        FactorAlgebra f = factor_algebra(a, s);
        o.result["quotient_dim"] = f.quotient.dim();
        o.result["representatives"] = f.quotient.free_columns();
        o.result["well_defined"] = f.well_defined;
        o.result["label_independent"] = f.label_independent;
        o.result["factor"] = algebra_to_json(f.algebra);
        o.add_flag("well_defined", f.well_defined);
        if (f.dependence)
          o.result["dependence"] = json{{"labels", {a.labels().name(f.dependence->h), a.labels().name(f.dependence->k)}},
                                        {"basis", {f.dependence->i, f.dependence->j}},
                                        {"difference", vector_to_json(f.dependence->difference)}};
        if (w) {
          o.add_flag("label_independent", f.label_independent);
          if (f.label_independent) {
            MultiAlgebra single = named_factor(a, *w);
            o.result["named_factor"] = algebra_to_json(single);
            o.result["named_factor_kind"] = kind_name(single.kind());
            o.add_checks(verify(single, opts), &single.labels(), "factor_");
          }
        }
      }
    } else if (*simple_cmd) {
      o.command = "simple";
      o.digest_input = read_file(file);
      MultiAlgebra a = load_algebra(file);
      verify_input(o, a, opts);
      auto v = classify_simplicity(a, threads);
      o.result = json{{"decision", decision_name(v.decision)},
                      {"i", v.i},
                      {"distinguished", verdict_members(v.distinguished)},
                      {"exhaustive", v.exhaustive},
                      {"subspaces_examined", v.subspaces_examined},
                      {"ideals_found", v.ideals_found}};
      if (v.offending_ideal) o.result["offending_ideal"] = subspace_to_json(*v.offending_ideal);
      if (a.field().is_rational())
        o.note("over Q only ideals generated by basis vectors and annihilator generators are examined");
      if (kind_family(a.kind()) == 2)
        o.note("distinguished set {0, minus annihilator, plus annihilator, L} uses the 2nd-kind annihilators");
    } else if (*trivial_cmd) {
      o.command = "trivial";
      o.digest_input = read_file(file);
      MultiAlgebra a = load_algebra(file);
      verify_input(o, a, opts);
      auto t = triviality_test(a);
      o.result["trivial"] = t.trivial;
      if (t.trivial) {
        o.result["base"] = tensor_to_json(*t.base);
        json phi = json::object();
        for (std::size_t k = 0; k < a.label_count(); ++k) phi[a.labels().name(k)] = format_scalar(t.phi[k]);
        o.result["phi"] = phi;
      }
    } else if (*module_cmd) {
      MultiAlgebra a = load_algebra(alg_file);
      o.digest_input = read_file(alg_file);
      verify_input(o, a, opts);
      if (*mod_adjoint) {
        o.command = "module adjoint";
        ModuleRep ad = adjoint_module(a);
        o.result["module"] = module_to_json(ModuleFile{ad, alg_file});
        if (kind_family(a.kind()) == 2) o.note("adjoint module of a 2nd-kind algebra uses f = -r and g = l");
        if (adjoint_check) {
          auto rep = check_module(ad);
          o.add_checks(rep, &a.labels());
          o.result["module_pass"] = rep.all_pass();
        }
      } else {
        o.command = *mod_verify ? "module verify" : "module irreducible";
        o.digest_input += read_file(mod_file);
        ModuleFile mf = load_module(mod_file);
        if (!(mf.rep.algebra() == a)) throw Error(ErrorCode::Mismatch, "module refers to a different algebra");
        if (a.kind() == Kind::SuperSecond)
          o.note("graded 2nd-kind module identities carry (-1)^(alpha beta) on the first product term");
        if (*mod_verify) {
          auto rep = check_module(mf.rep);
          o.add_checks(rep, &a.labels());
          o.result["module_pass"] = rep.all_pass();
        } else {
          auto v = classify_irreducibility(mf.rep, threads);
          o.result = json{{"decision", decision_name(v.decision)},
                          {"i", v.i},
                          {"distinguished", verdict_members(v.distinguished)},
                          {"exhaustive", v.exhaustive},
                          {"subspaces_examined", v.subspaces_examined},
                          {"submodules_found", v.submodules_found}};
          if (v.offending) o.result["offending_submodule"] = subspace_to_json(*v.offending);
        }
      }
    } else if (*search_cmd) {
      o.command = "search";
      SearchSpec spec;
      spec.field = parse_search_field(field_text);
      spec.dim = dim;
      spec.label_count = labels;
      spec.kind = parse_kind(kind_text);
      spec.alternating = alternating;
      spec.prefilter = prefilter;
      if (!grading_text.empty()) spec.grading = parse_grading_list(grading_text);
      o.digest_input = fmt::format("search kind={} dim={} field={} labels={} alternating={} prefilter={} grading={}",
                                   kind_text, dim, spec.field.name(), labels, alternating, prefilter, grading_text);
      SearchOptions so;
      so.threads = threads;
      so.max_samples = samples;
      so.progress = [&err](std::uint64_t done, std::uint64_t total) {
        err << fmt::format("\rsearch: {}/{}", done, total) << (done == total ? "\n" : "") << std::flush;
      };
      CensusReport r = exhaustive_search(spec, so);
      o.result = census_to_json(r);
      for (const auto& v : r.variants) {
        std::string suffix = r.variants.size() > 1 ? (v.strict_alternating ? "_strict" : "_plain") : "";
        o.add_flag("certification" + suffix, v.certification.ok());
        o.add_flag("annihilator_closure" + suffix, v.closure_violations.empty());
        o.add_flag("minus_in_plus" + suffix, v.containment_violations.empty());
        o.add_flag("factor_axioms" + suffix, v.factor_failures.empty());
        o.add_flag("adjoint_on_trivial" + suffix, v.adjoint_failed_trivial == 0);
      }
      if (r.variants.size() > 1)
        o.note("characteristic 2: census reported without and with the [x,x]_k = 0 requirement");
      if (prefilter) o.note("prefilter: only tuples whose products each pass the single-product identities are enumerated");
      o.note("non-trivial instances whose adjoint module fails are listed under adjoint.failures_nontrivial");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: SchemaError: " << e.what() << "\n";
    return kExitUsage;
  }

  json doc{{"command", o.command},
           {"input_digest", sha256_hex(o.digest_input)},
           {"checks", o.checks},
           {"result", o.result},
           {"notes", o.notes}};
  if (as_json)
    out << dump_json(doc);
  else
    render_text(doc, out);
  return o.failed ? kExitCheckFailed : kExitOk;
}

}  // namespace liekit
