#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homotopelab/linalg.hpp"
#include "homotopelab/scalar.hpp"

namespace homotopelab {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order, t1 most significant; "greater" so that map
/// iteration runs from the leading term down.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial in t1..tn. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Scalar, GrlexGreater>;

  Polynomial(const FieldSpec& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(const FieldSpec& field, std::size_t nvars, const Scalar& c);
  static Polynomial variable(const FieldSpec& field, std::size_t nvars, std::size_t i);
  static Polynomial monomial(const FieldSpec& field, const Exponent& e, const Scalar& c);
  /// sum_i coeffs[i] * t_{i+1}
  static Polynomial linear_form(const FieldSpec& field, const Vector& coeffs);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Scalar coefficient(const Exponent& e) const;
  const Exponent& leading_exponent() const;
  const Scalar& leading_coefficient() const;

  void add_term(const Exponent& e, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  Scalar evaluate(const Vector& point) const;
  /// t_i -> images[i]; all images share one arity, which becomes the result's.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// t_i -> sum_j s(i,j) u_j; s has nvars rows and the new arity as columns.
  Polynomial substitute_linear(const Matrix& s) const;
  /// Scaled so the grlex-leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  /// Coefficient of t_var^power, as a polynomial in the same variables.
  Polynomial coefficient_in(std::size_t var, std::uint32_t power) const;
  Polynomial derivative(std::size_t var) const;

  /// Canonical text, e.g. "t1^2*t2 + 2/3*t2^3". Names default to t1..tn.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const Polynomial& other) const;

  FieldSpec field_;
  std::size_t nvars_;
  Terms terms_;
};

/// True iff p = c*q for some nonzero scalar c (two zero polynomials qualify).
bool proportional(const Polynomial& p, const Polynomial& q);

/// Square or rectangular matrix of polynomials sharing field and arity.
class PolyMatrix {
 public:
  PolyMatrix(const FieldSpec& field, std::size_t nvars, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Evaluates every entry at a point.
  Matrix evaluate(const Vector& point) const;

 private:
  FieldSpec field_;
  std::size_t nvars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

inline constexpr std::size_t max_symbolic_det_size = 8;

/// Cofactor expansion memoized over column subsets; any entry degree.
/// Throws Errc::non_square, or Errc::too_large above max_symbolic_det_size.
Polynomial determinant(const PolyMatrix& m);
/// As determinant(), but every entry must have degree <= 1.
Polynomial det_linear_matrix(const PolyMatrix& m);

}  // namespace homotopelab
