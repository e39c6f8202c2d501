#pragma once

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liekit/cli.hpp"
#include "liekit/io.hpp"

namespace support {

inline std::filesystem::path data(const std::string& rel) { return std::filesystem::path(LIEKIT_DATA_DIR) / rel; }

inline liekit::MultiAlgebra corpus(const std::string& name) { return liekit::load_algebra(data("corpus/" + name)); }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

inline CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = liekit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

inline liekit::json cli_json(const std::vector<std::string>& args, int* code = nullptr) {
  std::vector<std::string> full{"--json"};
  full.insert(full.end(), args.begin(), args.end());
  CliRun r = cli(full);
  if (code) *code = r.code;
  return liekit::json::parse(r.out);
}

inline liekit::Scalar random_scalar(std::mt19937& rng, liekit::FieldSpec f) {
  if (f.is_prime()) return liekit::Scalar(static_cast<std::int64_t>(rng() % f.characteristic()), f);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  return liekit::Scalar(liekit::Scalar(num(rng), f).rational() / liekit::Scalar(den(rng), f).rational());
}

inline liekit::Vector random_vector(std::mt19937& rng, std::size_t n, liekit::FieldSpec f) {
  liekit::Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, f));
  return v;
}

inline liekit::Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, liekit::FieldSpec f) {
  liekit::Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, f);
  return m;
}

inline liekit::Matrix random_invertible(std::mt19937& rng, std::size_t n, liekit::FieldSpec f) {
  for (;;) {
    liekit::Matrix m = random_matrix(rng, n, n, f);
    if (liekit::inverse(m)) return m;
  }
}

/// The same algebra written in the basis given by the columns of P.
inline liekit::MultiAlgebra change_basis(const liekit::MultiAlgebra& a, const liekit::Matrix& p) {
  const auto pinv = *liekit::inverse(p);
  std::vector<liekit::BracketTensor> ts;
  for (std::size_t k = 0; k < a.label_count(); ++k) {
    liekit::BracketTensor t(a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        t.set_product(i, j, pinv.apply(liekit::bracket_eval(a, k, p.column(i), p.column(j))));
    ts.push_back(std::move(t));
  }
  return a.with_brackets(std::move(ts));
}

}  // namespace support
