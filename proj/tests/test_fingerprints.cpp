#include <doctest.h>

#include <set>

#include "homotopelab/constructions.hpp"
#include "homotopelab/enumerate.hpp"
#include "homotopelab/fingerprints.hpp"
#include "oracles.hpp"

using namespace homotopelab;

namespace {

std::vector<Scalar> residues(const FieldSpec& f, std::initializer_list<long long> v) {
  std::vector<Scalar> out;
  for (auto x : v) out.push_back(Scalar::from_int(f, x));
  return out;
}

// Reverse-order scan with plain Element arithmetic.
template <class Pred>
std::vector<Element> reverse_scan(const Algebra& A, Pred keep) {
  const auto p = A.field().modulus();
  std::vector<Element> found;
  const std::uint64_t total = point_count(p, A.dim());
  for (std::uint64_t idx = total; idx-- > 0;) {
    Element a(A.dim());
    std::uint64_t rest = idx;
    for (std::size_t i = A.dim(); i-- > 0;) {
      a[i] = Scalar::from_int(A.field(), static_cast<long long>(rest % p));
      rest /= p;
    }
    if (keep(a, A.mul(a, a))) found.push_back(a);
  }
  std::reverse(found.begin(), found.end());
  return found;
}

Algebra random_algebra(oracle::Rng& rng, const FieldSpec& f, std::size_t n) {
  Trilinear t(f, {n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rng() % 3 == 0) t.set(i, j, k, oracle::random_scalar(rng, f));
  return Algebra(t);
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_SUITE("fingerprints") {
  TEST_CASE("idempotent census") {
    const auto F7 = FieldSpec::prime(7);
    const auto zero = enumerate_idempotents(zero_algebra(F7, 3));
    REQUIRE(zero.size() == 1);
    CHECK(is_zero(zero[0]));

    const auto B2 = B_lambda(Scalar::from_int(F7, 2));
    const auto idem = enumerate_idempotents(B2);
    std::vector<std::string> shown;
    for (const auto& e : idem) shown.push_back(B2.format(e));
    CHECK(shown == std::vector<std::string>{"0", "e1 + 4*e2", "e1 + 6*e2", "5*e1"});

    // lambda = 0 merges two idempotents; lambda = -1 kills two.
    for (long long l = 0; l < 7; ++l) {
      CHECK(enumerate_idempotents(B_lambda(Scalar::from_int(F7, l))).size() == (l == 6 ? 2u : l == 0 ? 3u : 4u));
    }
  }

  TEST_CASE("censuses agree with an independent reverse-order scan") {
    oracle::Rng rng(89);
    for (int t = 0; t < 6; ++t) {
      const auto F = FieldSpec::prime(t % 2 ? 3 : 5);
      const auto A = random_algebra(rng, F, 3 + t % 2);
      const auto idem = enumerate_idempotents(A);
      CHECK(idem == reverse_scan(A, [](const Element& a, const Element& sq) { return a == sq; }));
      for (const auto& e : idem) CHECK(is_idempotent(A, e));
      const auto sqz = enumerate_square_zero(A, default_enumeration_budget, 1);
      CHECK(sqz == reverse_scan(A, [](const Element&, const Element& sq) { return is_zero(sq); }));
    }
  }

  TEST_CASE("threaded scans match single-threaded scans") {
    const auto F3 = FieldSpec::prime(3);
    const auto A = mat_over(field_algebra(F3), 3);  // 3^9 points
    const auto one = enumerate_idempotents(A, default_enumeration_budget, 1);
    CHECK(one == enumerate_idempotents(A, default_enumeration_budget, 4));
    CHECK(enumerate_square_zero(A, default_enumeration_budget, 1) ==
          enumerate_square_zero(A, default_enumeration_budget, 3));
  }

  TEST_CASE("square-zero census") {
    const auto F5 = FieldSpec::prime(5);
    CHECK(enumerate_square_zero(R_lambda(Scalar::from_int(F5, 2))).size() == 45);
    CHECK(enumerate_square_zero(R_lambda(Scalar::from_int(F5, -1))).size() == 125);
    CHECK(enumerate_square_zero(zero_algebra(F5, 3)).size() == 125);
  }

  TEST_CASE("budgets refuse before scanning") {
    const auto F7 = FieldSpec::prime(7);
    CHECK(code_of([&] { enumerate_idempotents(zero_algebra(F7, 30)); }) == Errc::budget_exceeded);
    CHECK(code_of([&] { enumerate_square_zero(zero_algebra(F7, 3), 100); }) == Errc::budget_exceeded);
    CHECK(enumerate_square_zero(zero_algebra(F7, 3), 343).size() == 343);
    CHECK(code_of([&] { mu_spectrum(zero_algebra(F7, 2), 1000); }) == Errc::budget_exceeded);
    CHECK(code_of([] { enumerate_idempotents(zero_algebra(FieldSpec::rationals(), 1)); }) == Errc::invalid_argument);
    CHECK(point_count(2, 64) == UINT64_MAX);
  }

  TEST_CASE("mu spectrum") {
    const auto F11 = FieldSpec::prime(11);
    CHECK(mu_spectrum(R_lambda(Scalar::from_int(F11, 2))) == residues(F11, {2, 6}));
    const auto F5 = FieldSpec::prime(5);
    CHECK(mu_spectrum(R_lambda(Scalar::one(F5))) == residues(F5, {1}));
    // R_1 = k[x, y]/(x^2, y^2) is commutative.
    const auto comm = mu_spectrum(R_lambda(Scalar::one(F5)));
    CHECK(std::find(comm.begin(), comm.end(), Scalar::one(F5)) != comm.end());
  }

  TEST_CASE("idempotent commutator fingerprint") {
    const auto F7 = FieldSpec::prime(7);
    CHECK(idempotent_commutator_fingerprint(mat_over(field_algebra(F7), 1)).empty());
    CHECK(idempotent_commutator_fingerprint(R_lambda(Scalar::one(F7))).empty());
    const auto f2 = idempotent_commutator_fingerprint(B_lambda(Scalar::from_int(F7, 2)));
    CHECK(std::find(f2.begin(), f2.end(), Scalar::from_int(F7, 2)) != f2.end());
    CHECK(f2 != idempotent_commutator_fingerprint(B_lambda(Scalar::from_int(F7, 3))));
    CHECK(std::is_sorted(f2.begin(), f2.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); }));
  }

  TEST_CASE("fingerprints are preserved by conjugation isomorphisms") {
    const auto F3 = FieldSpec::prime(3);
    const auto M = matrix_algebra(F3, 2);
    oracle::Rng rng(97);
    auto random_element = [&] {
      Element e;
      for (int i = 0; i < 4; ++i) e.push_back(oracle::random_scalar(rng, F3));
      return e;
    };
    auto random_unit = [&] {
      for (;;) {
        auto e = random_element();
        if (try_invert_element(M, e)) return e;
      }
    };
    for (int t = 0; t < 4; ++t) {
      const auto d = random_element();
      const auto c = conjugation_isomorphism(M, d, random_unit(), random_unit());
      const auto A = augment_unit(left_delta_homotope(M, d));
      const auto B = augment_unit(left_delta_homotope(M, c.delta_prime));
      CHECK(enumerate_idempotents(A).size() == enumerate_idempotents(B).size());
      CHECK(enumerate_square_zero(A).size() == enumerate_square_zero(B).size());
      CHECK(mu_spectrum(A) == mu_spectrum(B));
      CHECK(idempotent_commutator_fingerprint(A) == idempotent_commutator_fingerprint(B));
    }
  }

  TEST_CASE("graded splitting") {
    CHECK(verify_graded_splitting(Scalar::one(FieldSpec::rationals())).passed());
    CHECK(verify_graded_splitting(Scalar::zero(FieldSpec::prime(5))).passed());
    const auto report = verify_graded_splitting(Scalar::from_int(FieldSpec::prime(5), 2));
    CHECK(report.clauses.size() == 8);

    const auto B = B16_hat(Scalar::one(FieldSpec::rationals()));
    std::vector<Element> R = {B.basis(b16::dim), B.basis(b16::x), B.basis(b16::y), B.basis(b16::w)};
    std::vector<Element> N;
    for (std::size_t i = b16::h1; i < b16::w; ++i) N.push_back(B.basis(i));
    CHECK(check_graded_splitting(B, R, N).passed());
    // Wrong spans are rejected.
    N.push_back(B.basis(b16::one));
    CHECK_FALSE(check_graded_splitting(B, R, N).clauses[1].passed);
    N.pop_back();
    N.push_back(B.basis(b16::x));
    CHECK_FALSE(check_graded_splitting(B, R, N).clauses[4].passed);
  }
}
