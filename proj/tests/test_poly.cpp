#include <doctest.h>

#include "homotopelab/poly.hpp"
#include "homotopelab/quartic.hpp"
#include "oracles.hpp"

using namespace homotopelab;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Polynomial var(std::size_t i, std::size_t n = 2, const FieldSpec& f = Q) { return Polynomial::variable(f, n, i); }
Scalar q(long long v) { return Scalar::from_int(Q, v); }

BinaryQuartic quartic(std::initializer_list<long long> coeffs) {
  BinaryQuartic out;
  std::size_t i = 0;
  for (auto c : coeffs) out.a[i++] = q(c);
  return out;
}

// Res(q_x, q_y) by a 6x6 Sylvester determinant.
Scalar derivative_resultant(const BinaryQuartic& qt) {
  Matrix syl(Q, 6, 6);
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 4; ++k) {
      syl(r, r + k) = q(4 - k) * qt.a[k];
      syl(3 + r, r + k) = q(k + 1) * qt.a[k + 1];
    }
  }
  return oracle::det(syl);
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("arithmetic examples") {
    const auto x = var(0), y = var(1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * x * y).evaluate({q(2), q(3)}).to_string() == "12");
    CHECK((x * y).substitute({x + y, y}) == x * y + y * y);
    CHECK((x * y).substitute_linear(Matrix::from_rows(Q, {{q(1), q(1)}, {q(0), q(1)}}, 2)) == x * y + y * y);
    CHECK(Polynomial(Q, 2).to_string() == "0");
    CHECK(Polynomial(Q, 2).total_degree() == -1);
    CHECK_THROWS_AS(x + var(0, 3), Error);
  }

  TEST_CASE("canonical string uses graded order with t1 leading") {
    const auto t1 = var(0), t2 = var(1);
    const auto p = Scalar::parse(Q, "2/3") * t2.pow(3) + t1 * t1 * t2;
    CHECK(p.to_string() == "t1^2*t2 + 2/3*t2^3");
    CHECK((t1 - q(2) * t2).to_string() == "t1 - 2*t2");
    CHECK((q(-1) * t1 * t2 + t1).to_string({"x", "y"}) == "-x*y + x");
  }

  TEST_CASE("proportional") {
    const auto x = var(0), y = var(1);
    CHECK(proportional(q(2) * x * x, x * x));
    CHECK_FALSE(proportional(x * x, y * y));
    CHECK(proportional(Polynomial(Q, 2), Polynomial(Q, 2)));
    CHECK_FALSE(proportional(x, Polynomial(Q, 2)));
  }

  TEST_CASE("symbolic determinants") {
    const auto t1 = var(0), t2 = var(1);
    PolyMatrix d(Q, 2, 2, 2);
    d(0, 0) = t1;
    d(1, 1) = t2;
    CHECK(det_linear_matrix(d) == t1 * t2);

    PolyMatrix pencil(Q, 2, 4, 4);
    Polynomial expected = Polynomial::constant(Q, 2, q(1));
    for (int i = 0; i < 4; ++i) {
      pencil(i, i) = t1 + q(i + 1) * t2;
      expected = expected * (t1 + q(i + 1) * t2);
    }
    CHECK(det_linear_matrix(pencil) == expected);

    PolyMatrix quad(Q, 2, 2, 2);
    quad(0, 0) = t1 * t1;
    CHECK_THROWS_AS(det_linear_matrix(quad), Error);
    CHECK_THROWS_AS(determinant(PolyMatrix(Q, 1, 2, 3)), Error);
    CHECK_THROWS_AS(determinant(PolyMatrix(Q, 1, 9, 9)), Error);
  }

  TEST_CASE("determinant matches permutation expansion") {
    oracle::Rng rng(19);
    for (const auto& f : {FieldSpec::prime(13), Q}) {
      for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
          PolyMatrix m(f, 3, n, n);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              Vector coeffs;
              for (int k = 0; k < 3; ++k) coeffs.push_back(oracle::random_scalar(rng, f));
              m(i, j) = Polynomial::linear_form(f, coeffs) + Polynomial::constant(f, 3, oracle::random_scalar(rng, f));
            }
          }
          CHECK(determinant(m) == oracle::det(m));
        }
      }
    }
  }

  TEST_CASE("quartic invariants") {
    // x^3 y has a triple root.
    auto inv = quartic_invariants(quartic({0, 1, 0, 0, 0}));
    CHECK(inv.disc.is_zero());
    CHECK_FALSE(inv.j.has_value());
    // x y (x + y)(x - y) = x^3 y - x y^3
    const auto square = quartic({0, 1, 0, -1, 0});
    inv = quartic_invariants(square);
    CHECK_FALSE(inv.disc.is_zero());
    CHECK(inv.delta0 == q(3));
    CHECK(inv.disc == (q(4) * inv.delta0 * inv.delta0 * inv.delta0 - inv.delta1 * inv.delta1) / q(27));
    CHECK_FALSE(derivative_resultant(square).is_zero());
    const auto moved = quartic_invariants(square.substitute(Matrix::from_rows(Q, {{q(2), q(1)}, {q(1), q(1)}}, 2)));
    CHECK(*moved.j == *inv.j);

    CHECK_THROWS_AS(quartic_invariants(quartic({0, 0, 0, 0, 0})), Error);
    BinaryQuartic mod3;
    for (auto& c : mod3.a) c = Scalar::one(FieldSpec::prime(3));
    try {
      quartic_invariants(mod3);
      FAIL("characteristic 3 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::bad_characteristic);
    }
  }

  TEST_CASE("quartic round trip through polynomials") {
    const auto qt = quartic({1, -2, 3, 0, 5});
    const auto p = qt.to_polynomial();
    CHECK(p.to_string({"x", "y"}) == "x^4 - 2*x^3*y + 3*x^2*y^2 + 5*y^4");
    const auto back = BinaryQuartic::from_polynomial(p);
    for (int i = 0; i < 5; ++i) CHECK(back.a[i] == qt.a[i]);
  }

  TEST_CASE("j invariance and discriminant oracle on random quartics") {
    for (const auto& f : {Q, FieldSpec::prime(101)}) {
      oracle::Rng rng(23);
      for (int t = 0; t < 100; ++t) {
        BinaryQuartic qt;
        do {
          for (auto& c : qt.a) c = oracle::random_scalar(rng, f);
        } while (qt.is_zero());
        if (t % 5 == 4) {
          // Force a repeated root at (1 : 0): a0 = a1 = 0.
          qt.a[0] = Scalar::zero(f);
          qt.a[1] = Scalar::zero(f);
          if (qt.is_zero()) qt.a[4] = Scalar::one(f);
        }
        const auto inv = quartic_invariants(qt);
        if (f.is_rational()) CHECK(inv.disc.is_zero() == derivative_resultant(qt).is_zero());
        const auto g = oracle::random_invertible(rng, f, 2);
        Scalar mu;
        do {
          mu = oracle::random_scalar(rng, f);
        } while (mu.is_zero());
        const auto moved = quartic_invariants(qt.substitute(g).scaled(mu));
        CHECK(moved.disc.is_zero() == inv.disc.is_zero());
        if (inv.j) CHECK(*moved.j == *inv.j);
      }
    }
  }
}
