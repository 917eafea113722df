#pragma once

#include <array>
#include <optional>

#include "homotopelab/poly.hpp"

namespace homotopelab {

/// a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4
struct BinaryQuartic {
  std::array<Scalar, 5> a;

  const FieldSpec& field() const { return a[0].field(); }
  bool is_zero() const;

  /// Throws unless p is a binary form of degree 4 (or zero) in two variables.
  static BinaryQuartic from_polynomial(const Polynomial& p);
  Polynomial to_polynomial() const;
  /// q(m00 x + m01 y, m10 x + m11 y)
  BinaryQuartic substitute(const Matrix& m) const;
  BinaryQuartic scaled(const Scalar& mu) const;
};

struct QuarticInvariants {
  Scalar delta0;
  Scalar delta1;
  /// (4 delta0^3 - delta1^2) / 27
  Scalar disc;
  /// delta0^3 / disc; absent when disc = 0 (repeated root).
  std::optional<Scalar> j;
};

/// Throws Errc::zero_quartic or Errc::bad_characteristic (char 2 or 3).
QuarticInvariants quartic_invariants(const BinaryQuartic& q);

}  // namespace homotopelab
