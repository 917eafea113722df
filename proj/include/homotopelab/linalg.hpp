#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homotopelab/scalar.hpp"

namespace homotopelab {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);
/// Adds c*v into acc; the hot loop of most products in this library.
void axpy(Vector& acc, const Scalar& c, const Vector& v);

/// Dense row-major exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const FieldSpec& field, const std::vector<Vector>& columns, std::size_t rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are the first nonzero entry in column
/// order; over Q the forward pass is fraction-free (Bareiss).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);
/// The pivot columns of m.
std::vector<Vector> image_basis(const Matrix& m);

Scalar det(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Throws Errc::not_invertible.
Matrix inverse(const Matrix& m);
/// A particular solution of m x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Invertible left, right with left * m * right = diag(1,...,1,0,...,0).
struct RankNormalForm {
  Matrix left;
  Matrix right;
  std::size_t rank = 0;
};
RankNormalForm rank_normal_form(const Matrix& m);

/// A matrix read as a map between coordinate spaces (codomain x domain).
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {}

  static LinearMap identity(const FieldSpec& field, std::size_t n) {
    return LinearMap(Matrix::identity(field, n));
  }

  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t domain_dim() const noexcept { return matrix_.cols(); }
  std::size_t codomain_dim() const noexcept { return matrix_.rows(); }

  Vector operator()(const Vector& v) const;
  /// (*this) o inner; throws Errc::dimension_mismatch.
  LinearMap after(const LinearMap& inner) const;
  LinearMap inverse() const { return LinearMap(homotopelab::inverse(matrix_)); }

 private:
  Matrix matrix_;
};

/// Incrementally grown basis kept in semi-echelon form.
class SpanBuilder {
 public:
  SpanBuilder(const FieldSpec& field, std::size_t ambient_dim) : field_(field), n_(ambient_dim) {}

  /// Returns true when v enlarged the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }

 private:
  Vector reduce(Vector v) const;

  FieldSpec field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a fixed linearly independent family.
class Coordinates {
 public:
  /// Throws Errc::dependent_basis.
  Coordinates(const FieldSpec& field, std::vector<Vector> basis, std::size_t ambient_dim);

  /// nullopt when v is outside the span.
  std::optional<Vector> of(const Vector& v) const;
  Vector combine(const Vector& coords) const;
  const std::vector<Vector>& basis() const noexcept { return basis_; }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> selected_rows_;
  Matrix selected_inverse_;
};

}  // namespace homotopelab
