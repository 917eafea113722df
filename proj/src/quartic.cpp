#include "homotopelab/quartic.hpp"

namespace homotopelab {

bool BinaryQuartic::is_zero() const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

BinaryQuartic BinaryQuartic::from_polynomial(const Polynomial& p) {
  if (p.nvars() != 2) throw Error(Errc::arity_mismatch, "binary quartic needs 2 variables");
  BinaryQuartic q{{Scalar::zero(p.field()), Scalar::zero(p.field()), Scalar::zero(p.field()),
                   Scalar::zero(p.field()), Scalar::zero(p.field())}};
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != 4) throw Error(Errc::invalid_argument, "not a binary form of degree 4: " + p.to_string());
    q.a[4 - e[0]] = c;
  }
  return q;
}

Polynomial BinaryQuartic::to_polynomial() const {
  Polynomial p(field(), 2);
  for (std::uint32_t i = 0; i <= 4; ++i) p.add_term({4 - i, i}, a[i]);
  return p;
}

BinaryQuartic BinaryQuartic::substitute(const Matrix& m) const {
  if (m.rows() != 2 || m.cols() != 2) throw Error(Errc::dimension_mismatch, "quartic substitution needs 2x2");
  return from_polynomial(to_polynomial().substitute_linear(m));
}

BinaryQuartic BinaryQuartic::scaled(const Scalar& mu) const {
  BinaryQuartic q = *this;
  for (auto& c : q.a) c *= mu;
  return q;
}

QuarticInvariants quartic_invariants(const BinaryQuartic& q) {
  const auto& f = q.field();
  if (f.characteristic() == 2 || f.characteristic() == 3) {
    throw Error(Errc::bad_characteristic, "quartic invariants need characteristic other than 2, 3");
  }
  if (q.is_zero()) throw Error(Errc::zero_quartic, "quartic invariants of the zero form");
  const auto& [a0, a1, a2, a3, a4] = q.a;
  auto k = [&](long long v) { return Scalar::from_int(f, v); };
  QuarticInvariants inv;
  inv.delta0 = a2 * a2 - k(3) * a1 * a3 + k(12) * a0 * a4;
  inv.delta1 = k(2) * a2 * a2 * a2 - k(9) * a1 * a2 * a3 + k(27) * a1 * a1 * a4 + k(27) * a0 * a3 * a3 -
               k(72) * a0 * a2 * a4;
  const Scalar cube = inv.delta0 * inv.delta0 * inv.delta0;
  inv.disc = (k(4) * cube - inv.delta1 * inv.delta1) / k(27);
  if (!inv.disc.is_zero()) inv.j = cube / inv.disc;
  return inv;
}

}  // namespace homotopelab
