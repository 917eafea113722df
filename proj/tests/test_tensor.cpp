#include <doctest.h>

#include "homotopelab/algebra.hpp"
#include "homotopelab/constructions.hpp"
#include "homotopelab/tensor.hpp"
#include "oracles.hpp"

using namespace homotopelab;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Trilinear diagonal(const FieldSpec& f, std::size_t n) {
  Trilinear t(f, {n, n, n});
  for (std::size_t i = 0; i < n; ++i) t.set(i, i, i, Scalar::one(f));
  return t;
}

Trilinear random_tensor(oracle::Rng& rng, const FieldSpec& f, Trilinear::Index dims) {
  Trilinear t(f, dims);
  for (std::size_t i = 0; i < dims[0]; ++i)
    for (std::size_t j = 0; j < dims[1]; ++j)
      for (std::size_t k = 0; k < dims[2]; ++k) t.set(i, j, k, oracle::random_scalar(rng, f));
  return t;
}

Vector point(const FieldSpec& f, std::uint64_t index, std::size_t d) {
  Vector v(d);
  for (std::size_t i = d; i-- > 0;) {
    v[i] = Scalar::from_int(f, static_cast<long long>(index % f.modulus()));
    index /= f.modulus();
  }
  return v;
}

}  // namespace

TEST_SUITE("tensor") {
  TEST_CASE("entries stay sparse and in range") {
    Trilinear t(Q, {2, 3, 4});
    t.set(1, 2, 3, Scalar::from_int(Q, 5));
    CHECK(t.nnz() == 1);
    t.add(1, 2, 3, Scalar::from_int(Q, -5));
    CHECK(t.nnz() == 0);
    CHECK_THROWS_AS(t.set(2, 0, 0, Scalar::one(Q)), Error);
    CHECK_THROWS_AS(t.set(0, 0, 0, Scalar::one(FieldSpec::prime(5))), Error);
  }

  TEST_CASE("contractions") {
    const auto sym = contract_slot_symbolic(diagonal(Q, 2), Slot::first);
    CHECK(sym(0, 0) == Polynomial::variable(Q, 2, 0));
    CHECK(sym(1, 1) == Polynomial::variable(Q, 2, 1));
    CHECK(sym(0, 1).is_zero());

    oracle::Rng rng(29);
    const auto m = random_tensor(rng, Q, {2, 3, 4});
    CHECK(contract_slot(m, Slot::second, zero_vector(Q, 3)) == Matrix(Q, 2, 4));
    CHECK_THROWS_AS(contract_slot(m, Slot::second, zero_vector(Q, 2)), Error);

    // Coefficients of e1 in the products of the 2-dim algebra.
    const auto A = two_dim_A(Q);
    const auto c = contract_slot(A.structure(), Slot::third, unit_vector(Q, 2, 0));
    CHECK(c(0, 0).is_one());
    CHECK(c(0, 1).is_one());
    CHECK(c(1, 0).is_zero());
    CHECK(c(1, 1).is_one());
  }

  TEST_CASE("actions") {
    oracle::Rng rng(31);
    const auto m = random_tensor(rng, Q, {3, 2, 4});
    CHECK(act(m, HomotopyTriple::identity(Q, m.dims())) == m);

    auto t = HomotopyTriple::identity(Q, m.dims());
    const Scalar c = Scalar::from_int(Q, 7);
    Matrix scaled = Matrix::identity(Q, 3);
    for (std::size_t i = 0; i < 3; ++i) scaled(i, i) = c;
    t.f1 = LinearMap(scaled);
    const auto moved = act(m, t);
    for (const auto& [idx, v] : m.entries()) CHECK(moved.at(idx[0], idx[1], idx[2]) == c * v);
    CHECK(moved.nnz() == m.nnz());
  }

  TEST_CASE("slot action by the transpose of right multiplication is the left Delta-homotope") {
    oracle::Rng rng(37);
    for (const auto& f : {Q, FieldSpec::prime(5)}) {
      for (int trial = 0; trial < 5; ++trial) {
        const Algebra A(random_tensor(rng, f, {3, 3, 3}));
        Vector delta;
        for (int i = 0; i < 3; ++i) delta.push_back(oracle::random_scalar(rng, f));
        auto t = HomotopyTriple::identity(f, A.structure().dims());
        t.f1 = LinearMap(right_multiplication(A, delta).transpose());
        CHECK(act(A.structure(), t) == left_delta_homotope(A, delta).structure());
      }
    }
  }

  TEST_CASE("determinantal polynomials") {
    CHECK(det_poly(diagonal(Q, 2), Slot::first) == Polynomial::variable(Q, 2, 0) * Polynomial::variable(Q, 2, 1));
    try {
      det_poly(Trilinear(Q, {2, 2, 3}), Slot::first);
      FAIL("non-square slots accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::non_square);
    }

    // Left-multiplication determinant of the 2-dim algebra.
    const auto A = two_dim_A(Q);
    PolyMatrix left(Q, 2, 2, 2);
    for (const auto& [idx, c] : A.structure().entries()) left(idx[1], idx[2]) += c * Polynomial::variable(Q, 2, idx[0]);
    CHECK(proportional(det_poly(A.structure(), Slot::first), oracle::det(left)));
    CHECK(det_poly(A.structure(), Slot::first).is_homogeneous());

    // Zero set equals the rank-drop locus on F_7^4.
    const auto F7 = FieldSpec::prime(7);
    oracle::Rng rng(41);
    const auto m = random_tensor(rng, F7, {4, 4, 4});
    const auto p = det_poly(m, Slot::first);
    CHECK(p.total_degree() == 4);
    std::uint64_t mismatches = 0, zeros = 0;
    for (std::uint64_t i = 0; i < 2401; ++i) {
      const auto v = point(F7, i, 4);
      const bool vanishes = p.evaluate(v).is_zero();
      zeros += vanishes;
      mismatches += vanishes != (oracle::rank(contract_slot(m, Slot::first, v)) < 4);
    }
    CHECK(mismatches == 0);
    CHECK(rank_stratum_count(m, Slot::first, 3) == zeros);
  }

  TEST_CASE("rank strata") {
    const auto F5 = FieldSpec::prime(5);
    CHECK(rank_stratum_count(Trilinear(F5, {3, 2, 2}), Slot::first, 0) == 125);
    CHECK(rank_stratum_count(diagonal(F5, 2), Slot::first, 1) == 9);
    CHECK(rank_stratum_count(diagonal(F5, 2), Slot::first, 1, default_stratum_budget, 1) == 9);
    CHECK_THROWS_AS(rank_stratum_count(diagonal(F5, 2), Slot::first, 1, 10), Error);
    CHECK_THROWS_AS(rank_stratum_count(diagonal(Q, 2), Slot::first, 1), Error);

    const auto F7 = FieldSpec::prime(7);
    oracle::Rng rng(43);
    const auto m = random_tensor(rng, F7, {4, 3, 3});
    const auto p = det_poly(m, Slot::first);
    std::uint64_t zeros = 0, brute = 0;
    for (std::uint64_t i = 0; i < 2401; ++i) {
      const auto v = point(F7, i, 4);
      zeros += p.evaluate(v).is_zero();
      brute += oracle::rank(contract_slot(m, Slot::first, v)) <= 2;
    }
    CHECK(rank_stratum_count(m, Slot::first, 2) == zeros);
    CHECK(zeros == brute);
  }

  TEST_CASE("restriction to a subspace of a slot") {
    oracle::Rng rng(47);
    const auto m = random_tensor(rng, Q, {5, 3, 3});
    std::vector<Vector> full;
    for (std::size_t i = 0; i < 5; ++i) full.push_back(unit_vector(Q, 5, i));
    CHECK(restrict_slot(m, Slot::first, full) == m);

    const std::vector<Vector> w = {oracle::random_matrix(rng, Q, 5, 1).column(0),
                                   oracle::random_matrix(rng, Q, 5, 1).column(0)};
    const auto r = restrict_slot(m, Slot::first, w);
    CHECK(r.dims() == Trilinear::Index{2, 3, 3});
    CHECK(proportional(det_poly(r, Slot::first),
                       det_poly(m, Slot::first).substitute_linear(Matrix::from_columns(Q, w, 5))));

    const auto one = restrict_slot(m, Slot::first, {w[0]});
    const auto form = det_poly(one, Slot::first);
    const auto value = det(contract_slot(m, Slot::first, w[0]));
    CHECK(proportional(form, Polynomial::constant(Q, 1, value) * Polynomial::variable(Q, 1, 0).pow(3)));

    try {
      restrict_slot(m, Slot::first, {w[0], w[0]});
      FAIL("dependent basis accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::dependent_basis);
    }
  }

  TEST_CASE("cone check") {
    oracle::Rng rng(53);
    const auto F = FieldSpec::prime(101);
    for (int trial = 0; trial < 5; ++trial) {
      const auto m = random_tensor(rng, F, {4, 4, 4});
      for (std::size_t r = 0; r <= 4; ++r) {
        Matrix f = r == 0 ? Matrix(F, 4, 4) : oracle::random_matrix(rng, F, 4, r) * oracle::random_matrix(rng, F, r, 4);
        const auto report = cone_check(m, LinearMap(f));
        CHECK(report.passed);
        CHECK(report.apex_dim == 4 - rank(f));
        if (r == 0) CHECK(report.homotope_poly.is_zero());
      }
    }
  }

  TEST_CASE("(5,4,2) pencil") {
    auto qs = [](std::initializer_list<long long> v) {
      Vector out;
      for (auto x : v) out.push_back(Scalar::from_int(Q, x));
      return out;
    };
    const auto bhat = qs({1, 2, 3, 4}), b = qs({1, 1, 1, 1});
    const auto x = Polynomial::variable(Q, 2, 0), y = Polynomial::variable(Q, 2, 1);
    auto prod = Polynomial::constant(Q, 2, Scalar::one(Q));
    for (int j = 0; j < 4; ++j) prod = prod * (x + bhat[j] * y);
    CHECK(pencil_522(bhat, b, qs({0, 0, 0, 0})).to_polynomial() == prod);

    PolyMatrix oracle_pencil(Q, 2, 4, 4);
    const auto u = qs({1, 0, 0, 0});
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) oracle_pencil(i, j) = x + bhat[i] * y;
        oracle_pencil(i, j) += (u[i] * b[j]) * y;
      }
    }
    const auto quartic = pencil_522(bhat, b, u);
    CHECK(quartic.to_polynomial() == oracle::det(oracle_pencil));
    CHECK(quartic.a[0].is_one());

    // The pencil is the slot-3 contraction of the normal-form tensor with
    // the rank-one correction folded into its top block.
    const auto t = tensor_522(bhat, b);
    const auto slice = contract_slot(t, Slot::third, {Scalar::zero(Q), Scalar::one(Q)});
    CHECK(slice(4, 2) == b[2]);
    CHECK(slice(1, 1) == bhat[1]);

    CHECK_THROWS_AS(pencil_522(Vector(4, Scalar::one(FieldSpec::prime(3))), Vector(4, Scalar::one(FieldSpec::prime(3))),
                               Vector(4, Scalar::one(FieldSpec::prime(3)))),
                    Error);
  }

  TEST_CASE("hyperplane-section criterion for curves") {
    CHECK_FALSE(pihs_curve_criterion(4, 2));
    CHECK(pihs_curve_criterion(3, 2));
    for (unsigned n = 1; n < 10; ++n) CHECK(pihs_curve_criterion(n + 1, n));
    CHECK_THROWS_AS(pihs_curve_criterion(0, 2), Error);
  }
}
