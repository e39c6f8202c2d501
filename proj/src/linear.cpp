#include "liekit/linear.hpp"

#include <algorithm>
#include <functional>

#include <fmt/format.h>

namespace liekit {

Vector zero_vector(std::size_t n, FieldSpec field) { return Vector(n, Scalar(field)); }

Vector unit_vector(std::size_t n, std::size_t i, FieldSpec field) {
  Vector v = zero_vector(n, field);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, fmt::format("vector lengths {} and {}", a.size(), b.size()));
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r;
  r.reserve(a.size());
  for (const auto& s : a) r.push_back(-s);
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  require_same_length(a, b);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldSpec field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("row {} has {} entries, expected {}", r, rows[r].size(), cols));
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw Error(ErrorCode::FieldMismatch, "matrix entry field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{}x{} matrix applied to length-{} vector", rows_, cols_, x.size()));
  Vector y = zero_vector(rows_, field_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) y[r] += a * x[c];
    }
  }
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{}x{} times {}x{}", a.rows_, a.cols_, b.rows_, b.cols_));
  Matrix m(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

// ---------------------------------------------------------------- elimination

namespace {

/// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = -rows[i][c];
      axpy(rows[i], f, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
  auto rows = m.row_vectors();
  eliminate(rows, m.cols());
  return Matrix::from_rows(rows, m.cols(), m.field());
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return m;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n; ++r) {
    Vector v = m.row(r);
    Vector e = unit_vector(n, r, m.field());
    v.insert(v.end(), e.begin(), e.end());
    rows.push_back(std::move(v));
  }
  auto pivots = eliminate(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r)
    for (std::size_t c = 0; c < basis_.cols(); ++c)
      if (!basis_(r, c).is_zero()) {
        pivots_.push_back(c);
        break;
      }
}

Subspace Subspace::zero(std::size_t ambient_dim, FieldSpec field) {
  return Subspace(Matrix(0, ambient_dim, field));
}

Subspace Subspace::full(std::size_t ambient_dim, FieldSpec field) {
  return Subspace(Matrix::identity(ambient_dim, field));
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim, FieldSpec field) {
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("generator of length {} in ambient dimension {}", v.size(), ambient_dim));
    if (!is_zero(v)) rows.push_back(v);
  }
  eliminate(rows, ambient_dim);
  return Subspace(Matrix::from_rows(rows, ambient_dim, field));
}

Subspace Subspace::from_rref(Matrix basis) { return Subspace(std::move(basis)); }

void Subspace::check_compatible(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("ambient dimensions {} and {}", ambient_dim(), other.ambient_dim()));
  if (field() != other.field()) throw Error(ErrorCode::FieldMismatch, "subspaces over different fields");
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("vector of length {} in ambient dimension {}", v.size(), ambient_dim()));
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (!basis_(i, c).is_zero()) r[c] -= f * basis_(i, c);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  check_compatible(other);
  auto rows = basis_.row_vectors();
  auto more = other.basis_.row_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return span(rows, ambient_dim(), field());
}

bool Subspace::is_graded(std::span<const std::uint8_t> parity) const {
  if (parity.size() != ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "grading length differs from ambient dimension");
  for (std::size_t r = 0; r < dim(); ++r) {
    Vector row = basis_.row(r);
    for (std::uint8_t block = 0; block < 2; ++block) {
      Vector part = zero_vector(row.size(), field());
      for (std::size_t c = 0; c < row.size(); ++c)
        if (parity[c] == block) part[c] = row[c];
      if (!contains(part)) return false;
    }
  }
  return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  auto ea = a.basis_.entries();
  auto eb = b.basis_.entries();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

// ---------------------------------------------------------------- Quotient

Quotient::Quotient(Subspace ideal) : ideal_(std::move(ideal)) {
  const auto& piv = ideal_.pivots();
  for (std::size_t c = 0; c < ideal_.ambient_dim(); ++c)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_columns_.push_back(c);
}

std::vector<Vector> Quotient::representatives() const {
  std::vector<Vector> out;
  for (auto c : free_columns_) out.push_back(unit_vector(ideal_.ambient_dim(), c, ideal_.field()));
  return out;
}

Vector Quotient::project(const Vector& v) const {
  Vector r = ideal_.reduce(v);
  Vector coords;
  coords.reserve(free_columns_.size());
  for (auto c : free_columns_) coords.push_back(r[c]);
  return coords;
}

Vector Quotient::lift(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "quotient coordinates");
  Vector v = zero_vector(ideal_.ambient_dim(), ideal_.field());
  for (std::size_t a = 0; a < free_columns_.size(); ++a) v[free_columns_[a]] = coords[a];
  return v;
}

Quotient quotient_basis(std::size_t ambient_dim, const Subspace& i) {
  if (i.ambient_dim() != ambient_dim)
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("subspace of k^{} in k^{}", i.ambient_dim(), ambient_dim));
  return Quotient(i);
}

// ---------------------------------------------------------------- enumeration

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t e = 0; e < n - i; ++e) a *= q;
    for (std::uint64_t e = 0; e < i + 1; ++e) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

namespace {

void for_each_combination(std::size_t n, std::size_t k, std::vector<std::size_t>& current,
                          std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (current.size() == k) {
    fn(current);
    return;
  }
  for (std::size_t c = start; c < n; ++c) {
    current.push_back(c);
    for_each_combination(n, k, current, c + 1, fn);
    current.pop_back();
  }
}

std::vector<Subspace> enumerate_plain(std::size_t n, FieldSpec field) {
  std::vector<Subspace> out;
  const std::uint32_t p = field.characteristic();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pivots;
    for_each_combination(n, k, pivots, 0, [&](const std::vector<std::size_t>& piv) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
      std::uint64_t total = 1;
      for (std::size_t f = 0; f < free.size(); ++f) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        Matrix m(k, n, field);
        for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = Scalar::one(field);
        std::uint64_t rest = code;
        for (const auto& [r, c] : free) {
          m(r, c) = Scalar(static_cast<std::int64_t>(rest % p), field);
          rest /= p;
        }
        out.push_back(Subspace::from_rref(std::move(m)));
      }
    });
  }
  return out;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(std::size_t ambient_dim, FieldSpec field,
                                          std::span<const std::uint8_t> parity) {
  const std::uint32_t p = field.characteristic();
  if (ambient_dim > 4 || !(p == 2 || p == 3 || p == 5))
    throw Error(ErrorCode::BoundsExceeded,
                fmt::format("subspace enumeration needs dim <= 4 over F2, F3 or F5 (got dim {} over {})",
                            ambient_dim, field.name()));
  std::vector<Subspace> out;
  if (parity.empty()) {
    out = enumerate_plain(ambient_dim, field);
  } else {
    if (parity.size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "grading length differs from ambient dimension");
    std::vector<std::size_t> blocks[2];
    for (std::size_t c = 0; c < ambient_dim; ++c) blocks[parity[c] & 1].push_back(c);
    auto even = enumerate_plain(blocks[0].size(), field);
    auto odd = enumerate_plain(blocks[1].size(), field);
    auto embed = [&](const Subspace& s, const std::vector<std::size_t>& coords) {
      std::vector<Vector> rows;
      for (const auto& row : s.basis_vectors()) {
        Vector v = zero_vector(ambient_dim, field);
        for (std::size_t i = 0; i < coords.size(); ++i) v[coords[i]] = row[i];
        rows.push_back(std::move(v));
      }
      return rows;
    };
    for (const auto& a : even)
      for (const auto& b : odd) {
        auto rows = embed(a, blocks[0]);
        auto more = embed(b, blocks[1]);
        rows.insert(rows.end(), more.begin(), more.end());
        out.push_back(Subspace::span(rows, ambient_dim, field));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace invariant_closure(const Subspace& seed, const std::vector<Matrix>& maps) {
  Subspace current = seed;
  while (true) {
    auto rows = current.basis_vectors();
    std::vector<Vector> next = rows;
    for (const auto& m : maps)
      for (const auto& v : rows) next.push_back(m.apply(v));
    Subspace grown = Subspace::span(next, seed.ambient_dim(), seed.field());
    if (grown.dim() == current.dim()) return current;
    current = std::move(grown);
  }
}

}  // namespace liekit
