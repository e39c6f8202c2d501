#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "liekit/field.hpp"

namespace liekit {

/// A coefficient vector; all entries share one field.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, FieldSpec field);
Vector unit_vector(std::size_t n, std::size_t i, FieldSpec field);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

  static Matrix identity(std::size_t n, FieldSpec field);
  /// Throws DimensionMismatch if a row does not have `cols` entries.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldSpec field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  std::span<const Scalar> entries() const { return data_; }

  /// Matrix-vector product M x.
  Vector apply(const Vector& x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

/// Reduced row-echelon form with zero rows removed.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// nullopt when singular. Throws DimensionMismatch for non-square input.
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of k^n identified with the unique RREF basis of its row space,
/// so equality of subspaces is equality of basis matrices.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient_dim, FieldSpec field);
  static Subspace full(std::size_t ambient_dim, FieldSpec field);
  /// Empty list gives the zero subspace. Throws DimensionMismatch.
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim, FieldSpec field);
  /// `basis` must already be RREF without zero rows.
  static Subspace from_rref(Matrix basis);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  FieldSpec field() const noexcept { return basis_.field(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  /// v minus its reduction against the basis; zero iff v is a member.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;

  /// True when the subspace splits along the parity blocks.
  bool is_graded(std::span<const std::uint8_t> parity) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;
  /// Canonical order: dimension first, then the basis entries lexicographically.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix basis);
  void check_compatible(const Subspace& other) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Coset representatives and coordinates for k^n / I. The representatives are
/// the standard basis vectors at the non-pivot columns of I's RREF basis.
class Quotient {
 public:
  explicit Quotient(Subspace ideal);

  std::size_t dim() const noexcept { return free_columns_.size(); }
  const Subspace& subspace() const noexcept { return ideal_; }
  const std::vector<std::size_t>& free_columns() const noexcept { return free_columns_; }
  std::vector<Vector> representatives() const;
  /// Coordinates of v + I in the quotient basis.
  Vector project(const Vector& v) const;
  /// Representative of the coset with the given coordinates.
  Vector lift(const Vector& coords) const;

 private:
  Subspace ideal_;
  std::vector<std::size_t> free_columns_;
};

Quotient quotient_basis(std::size_t ambient_dim, const Subspace& i);

/// Gaussian binomial coefficient [n choose k]_q.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// Every subspace of F_p^n (n <= 4, p in {2,3,5}) exactly once, ordered by
/// dimension then lexicographically by RREF basis. With a parity vector only
/// graded subspaces are produced. Throws BoundsExceeded outside the caps.
std::vector<Subspace> enumerate_subspaces(std::size_t ambient_dim, FieldSpec field,
                                          std::span<const std::uint8_t> parity = {});

/// Closure of `seed` under a family of linear maps.
Subspace invariant_closure(const Subspace& seed, const std::vector<Matrix>& maps);

}  // namespace liekit
