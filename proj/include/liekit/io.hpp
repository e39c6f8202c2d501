#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "liekit/axioms.hpp"
#include "liekit/modules.hpp"
#include "liekit/search.hpp"

namespace liekit {

using json = nlohmann::json;

/// Two-space indentation, sorted keys, trailing newline.
std::string dump_json(const json& j);
/// Throws ParseError with line and column.
json parse_json(const std::string& text, const std::string& source = "<input>");
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

json field_to_json(FieldSpec f);
FieldSpec field_from_json(const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, FieldSpec f, std::size_t n, const std::string& where);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, FieldSpec f, std::size_t rows, std::size_t cols, const std::string& where);

json algebra_to_json(const MultiAlgebra& a);
/// Throws SchemaError on unknown keys or shape violations, and the kernel's
/// construction errors (NotGraded, MissingEndoSets, ...).
MultiAlgebra algebra_from_json(const json& j);
MultiAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const MultiAlgebra& a, const std::filesystem::path& path);

/// A module file keeps the algebra reference it was loaded with.
struct ModuleFile {
  ModuleRep rep;
  std::optional<std::string> algebra_path;  // as written in the file
};

json module_to_json(const ModuleFile& m);
/// Relative algebra paths resolve against `base_dir`.
ModuleFile module_from_json(const json& j, const std::filesystem::path& base_dir);
ModuleFile load_module(const std::filesystem::path& path);
void save_module(const ModuleFile& m, const std::filesystem::path& path);

/// {"ambient_dim": n, "rows": [[scalar, ...], ...]}; rows are spanned.
Subspace subspace_from_json(const json& j, FieldSpec f);
json subspace_to_json(const Subspace& s);

/// Label indices are written as names.
json witness_to_json(const Witness& w, const LabelSet* labels);
json check_to_json(const CheckEntry& c, const LabelSet* labels);
json report_to_json(const VerificationReport& r, const LabelSet* labels);
json census_to_json(const CensusReport& r);

}  // namespace liekit
