#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homotopelab/algebra.hpp"

namespace homotopelab {

/// The base field as a 1-dimensional unital algebra.
Algebra field_algebra(const FieldSpec& field);
/// All products zero.
Algebra zero_algebra(const FieldSpec& field, std::size_t dim);

/// Non-associative 2-dim algebra: e1e1 = e1, e2e1 = e2, e1e2 = e1, e2e2 = e1.
Algebra two_dim_A(const FieldSpec& field);
/// e1 + lambda e2 in two_dim_A.
Element delta_b(const Scalar& lambda);
/// Left (e1 + lambda e2)-homotope of two_dim_A.
Algebra B_lambda(const Scalar& lambda);

/// k<x,y>/(x^2, y^2, xy - lambda yx) on the basis [1, x, y, xy]. Throws
/// Errc::zero_lambda.
Algebra R_lambda(const Scalar& lambda);

/// Basis positions of B16.
namespace b16 {
enum : std::size_t { one = 0, x, y, h1, h2, xy, yx, xh1, xh2, yh1, yh2, h1x, h1y, h2x, h2y, w, dim };
}

/// k<x,y,h1,h2>/I on the fixed basis
/// [1, x, y, h1, h2, xy, yx, xh1, xh2, yh1, yh2, h1x, h1y, h2x, h2y, w],
/// w = xh1y = yh2x.
Algebra B16(const FieldSpec& field);
/// lambda h1 + h2 in B16.
Element delta16(const Scalar& lambda);
/// The unit-augmented delta16(lambda)-homotope of B16; the adjoined unit is
/// the last coordinate.
Algebra B16_hat(const Scalar& lambda);

struct Arrow {
  std::size_t source;
  std::size_t target;
  std::string label;
};

struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
};

/// Two vertices joined by two parallel arrows.
Quiver kronecker_quiver();
/// Vertices 1..n with two arrows i -> i+1 for each i.
Quiver doubled_chain_quiver(std::size_t vertices);

/// Basis of paths ordered by length, then lexicographically by arrow
/// sequence; p * q is "p then q" when p ends where q starts. Paths longer
/// than max_len are dropped. Throws Errc::cyclic_quiver.
Algebra path_algebra(const Quiver& q, const FieldSpec& field, std::optional<std::size_t> max_len = std::nullopt);

/// n x n matrices over A. Coordinate of E_rs (x) a_i is (r n + s) dim A + i.
/// Throws Errc::not_unital and Errc::invalid_argument (non-associative A).
Algebra mat_over(const Algebra& A, std::size_t n);
Algebra matrix_algebra(const FieldSpec& field, std::size_t n);

/// Element of mat_over(A, n) with A-entries given row-major.
Element matrix_element(const Algebra& A, std::size_t n, const std::vector<Element>& entries);
/// diag(a, b) in mat_over(A, 2).
Element diag2(const Algebra& A, const Element& a, const Element& b);
/// diag(1, delta) in mat_over(A, 2); A must be unital.
Element Lambda(const Algebra& A, const Element& delta);

/// (5, 4, 2) tensor with slices (I4; 0) and (diag(bhat); b).
Trilinear tensor_522(const Vector& bhat_diag, const Vector& b);

}  // namespace homotopelab
