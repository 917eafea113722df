#include <doctest.h>

#include "homotopelab/constructions.hpp"
#include "homotopelab/enumerate.hpp"
#include "homotopelab/fingerprints.hpp"
#include "oracles.hpp"

using namespace homotopelab;

namespace {

const FieldSpec Q = FieldSpec::rationals();
Scalar q(const char* s) { return Scalar::parse(Q, s); }

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("two-dimensional algebra and B_lambda") {
    const auto A = two_dim_A(Q);
    CHECK(A.basis_product(1, 1) == A.basis(0));
    CHECK_FALSE(is_associative(A));
    CHECK(commutator(A, A.basis(0), A.basis(1)) == Element{q("1"), q("-1")});

    const auto B0 = B_lambda(q("0"));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(B0.basis_product(i, j) == A.mul(A.mul(A.basis(i), A.basis(0)), A.basis(j)));

    for (const char* l : {"2", "-1/3", "7"}) {
      const Scalar lambda = q(l);
      const auto B = B_lambda(lambda);
      const Scalar one_plus = q("1") + lambda;
      CHECK(B.basis_product(0, 0) == Element{one_plus, q("0")});
      CHECK(B.basis_product(0, 1) == Element{one_plus, q("0")});
      CHECK(B.basis_product(1, 0) == Element{lambda, q("1")});
      CHECK(B.basis_product(1, 1) == Element{one_plus, q("0")});
      CHECK(is_idempotent(B, Element{q("1"), q("-1")}));
      CHECK(is_idempotent(B, Element{one_plus.inv(), q("0")}));
      // Third idempotent: e1 - lambda/(1+lambda) e2.
      CHECK(is_idempotent(B, Element{q("1"), -lambda / one_plus}));
      CHECK_FALSE(is_idempotent(B, Element{q("1"), lambda / one_plus}));
    }
  }

  TEST_CASE("commutators of the B_lambda idempotents") {
    // With x3 = e1 - lambda/(1+lambda) e2 and [e1, e2] = e1 - e2.
    for (const char* l : {"2", "5/3"}) {
      const Scalar lambda = q(l);
      const auto B = B_lambda(lambda);
      const Scalar s = q("1") + lambda;
      const Element x1 = {q("1"), q("-1")}, x2 = {s.inv(), q("0")}, x3 = {q("1"), -lambda / s};
      CHECK(commutator(B, x1, x2) == s.inv() * x1);
      CHECK(commutator(B, x1, x3) == s.inv() * x1);
      CHECK(commutator(B, x2, x3) == (-lambda / (s * s)) * x1);
    }
  }

  TEST_CASE("R_lambda") {
    const auto R = R_lambda(q("3"));
    CHECK(R.dim() == 4);
    CHECK(is_associative(R));
    const auto x = R.basis(1), y = R.basis(2);
    CHECK(is_zero(R.mul(x, x)));
    CHECK(is_zero(R.mul(y, y)));
    CHECK(is_zero(R.mul(x, y) - q("3") * R.mul(y, x)));
    try {
      R_lambda(q("0"));
      FAIL("lambda = 0 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::zero_lambda);
    }
  }

  TEST_CASE("R_lambda square-zero census") {
    for (std::uint64_t p : {3, 5, 7}) {
      const auto F = FieldSpec::prime(p);
      for (std::uint64_t l = 1; l < p; ++l) {
        const auto R = R_lambda(Scalar::from_int(F, static_cast<long long>(l)));
        const auto count = enumerate_square_zero(R).size();
        CHECK(count == (l == p - 1 ? p * p * p : 2 * p * p - p));
      }
    }
  }

  TEST_CASE("B16") {
    const auto B = B16(Q);
    CHECK(B.dim() == 16);
    CHECK(B.labels()[b16::w] == "w");
    CHECK(is_associative(B));
    auto e = [&](std::size_t i) { return B.basis(i); };
    CHECK(B.mul(e(b16::x), B.mul(e(b16::h1), e(b16::y))) == e(b16::w));
    CHECK(B.mul(B.mul(e(b16::y), e(b16::h2)), e(b16::x)) == e(b16::w));
    CHECK(is_zero(B.mul(e(b16::h1), e(b16::h2))));
    CHECK(is_zero(B.mul(e(b16::x), e(b16::yh1))));
    CHECK(B.mul(e(b16::x), e(b16::h2)) == e(b16::xh2));
    CHECK(is_zero(B.mul(e(b16::w), e(b16::x))));
    CHECK(delta16(q("0")) == e(b16::h2));
    CHECK(delta16(q("1")) == e(b16::h1) + e(b16::h2));
  }

  TEST_CASE("B16 homotope relations") {
    for (const auto& F : {Q, FieldSpec::prime(5)}) {
      for (long long l : {0, 1, 2, 3}) {
        const Scalar lambda = Scalar::from_int(F, l);
        const auto H = B16_hat(lambda);
        CHECK(H.dim() == 17);
        CHECK(is_associative(H));
        const auto x = H.basis(b16::x), y = H.basis(b16::y);
        CHECK(is_zero(H.mul(x, x)));
        CHECK(is_zero(H.mul(y, y)));
        CHECK(is_zero(H.mul(x, y) - lambda * H.mul(y, x)));
        CHECK(H.mul(y, x) == H.basis(b16::w));
      }
    }
  }

  TEST_CASE("path algebras") {
    const auto K = path_algebra(kronecker_quiver(), Q);
    CHECK(K.dim() == 4);
    CHECK(is_associative(K));
    // e1 * a = a, a * e1 = 0, a * b = 0.
    CHECK(K.basis_product(0, 2) == K.basis(2));
    CHECK(is_zero(K.basis_product(2, 0)));
    CHECK(K.basis_product(2, 1) == K.basis(2));
    CHECK(is_zero(K.basis_product(2, 3)));

    const auto D = path_algebra(doubled_chain_quiver(6), FieldSpec::prime(7));
    CHECK(D.dim() == 120);
    std::size_t length5 = 0;
    for (const auto& l : D.labels()) length5 += std::count(l.begin(), l.end(), '.') == 4;
    CHECK(length5 == 32);
    CHECK(D.unit().has_value());

    CHECK(path_algebra(Quiver{1, {}}, Q).dim() == 1);
    CHECK(path_algebra(doubled_chain_quiver(6), Q, 1).dim() == 16);
    try {
      path_algebra(Quiver{2, {{0, 1, "a"}, {1, 0, "b"}}}, Q);
      FAIL("cyclic quiver accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::cyclic_quiver);
    }
  }

  TEST_CASE("matrix algebras") {
    const auto M = mat_over(field_algebra(Q), 2);
    CHECK(M.structure() == matrix_algebra(Q, 2).structure());
    CHECK(*M.unit() == Element{q("1"), q("0"), q("0"), q("1")});
    // det(XY) = det X det Y on random 2 x 2 matrices.
    oracle::Rng rng(83);
    for (int t = 0; t < 10; ++t) {
      const auto a = oracle::random_matrix(rng, Q, 2, 2), b = oracle::random_matrix(rng, Q, 2, 2);
      const Element ea = {a(0, 0), a(0, 1), a(1, 0), a(1, 1)}, eb = {b(0, 0), b(0, 1), b(1, 0), b(1, 1)};
      const auto prod = a * b;
      CHECK(M.mul(ea, eb) == Element{prod(0, 0), prod(0, 1), prod(1, 0), prod(1, 1)});
    }
    const auto F5 = FieldSpec::prime(5);
    const auto B = B16(F5);
    const auto MB = mat_over(B, 2);
    CHECK(MB.dim() == 64);
    CHECK(*MB.unit() == diag2(B, *B.unit(), *B.unit()));
    CHECK(is_associative(MB));
    try {
      mat_over(zero_algebra(Q, 2), 2);
      FAIL("non-unital base accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_unital);
    }

    const Element e = diag2(B, *B.unit(), B.zero());
    const Element L = Lambda(B, delta16(Scalar::one(F5)));
    CHECK(MB.mul(MB.mul(e, L), e) == e);
  }

  TEST_CASE("(5,4,2) normal form tensor") {
    Vector bhat, b;
    for (long long v : {1, 2, 3, 4}) bhat.push_back(Scalar::from_int(Q, v));
    for (long long v : {5, 6, 7, 8}) b.push_back(Scalar::from_int(Q, v));
    const auto t = tensor_522(bhat, b);
    CHECK(t.dims() == Trilinear::Index{5, 4, 2});
    const auto a = contract_slot(t, Slot::third, {q("1"), q("0")});
    Matrix want(Q, 5, 4);
    for (std::size_t i = 0; i < 4; ++i) want(i, i) = q("1");
    CHECK(a == want);
    const auto xy = contract_slot(t, Slot::third, {q("2"), q("3")});
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Scalar bij = i < 4 ? (i == j ? bhat[i] : q("0")) : b[j];
        CHECK(xy(i, j) == q("2") * want(i, j) + q("3") * bij);
      }
    const auto zero = tensor_522(Vector(4, q("0")), Vector(4, q("0")));
    CHECK(zero.nnz() == 4);
  }
}
