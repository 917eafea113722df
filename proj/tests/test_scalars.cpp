#include <doctest.h>

#include "homotopelab/scalar.hpp"
#include "oracles.hpp"

using namespace homotopelab;

namespace {

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

TEST_SUITE("scalars") {
  TEST_CASE("rational arithmetic is exact and canonical") {
    const auto Q = FieldSpec::rationals();
    CHECK((Scalar::parse(Q, "2/3") + Scalar::parse(Q, "1/6")).to_string() == "5/6");
    CHECK(Scalar::parse(Q, "-6/4").to_string() == "-3/2");
    CHECK(Scalar::parse(Q, "-6/4").to_string() == "-3/2");
    CHECK(Scalar::parse(Q, "-0/5").to_string() == "0");
    CHECK(Scalar::parse(Q, "12345678901234567890123/1").to_string() == "12345678901234567890123");
    CHECK(code_of([&] { Scalar::zero(Q).inv(); }) == Errc::division_by_zero);
    CHECK(code_of([&] { Scalar::parse(Q, "1/0"); }) == Errc::division_by_zero);
    CHECK(code_of([&] { Scalar::parse(Q, "1.5"); }) == Errc::parse_error);
  }

  TEST_CASE("prime field arithmetic") {
    const auto F7 = FieldSpec::prime(7);
    CHECK(Scalar::from_int(F7, 3).inv().to_string() == "5");
    CHECK(Scalar::from_int(F7, -1).to_string() == "6");
    CHECK(Scalar::from_rational(F7, mpq_class(1, 3)).to_string() == "5");
    CHECK(code_of([&] { Scalar::from_rational(F7, mpq_class(1, 7)); }) == Errc::division_by_zero);
    CHECK(code_of([&] { Scalar::zero(F7).inv(); }) == Errc::division_by_zero);
  }

  TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("F7") == FieldSpec::prime(7));
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::prime(2305843009213693951ull).modulus() == 2305843009213693951ull);
    CHECK(code_of([] { FieldSpec::prime(9); }) == Errc::not_prime);
    CHECK(code_of([] { FieldSpec::prime(1); }) == Errc::not_prime);
    CHECK(code_of([] { FieldSpec::parse("G7"); }) == Errc::parse_error);
    CHECK(FieldSpec::prime(101).to_string() == "F101");
  }

  TEST_CASE("mixing fields is rejected") {
    const auto a = Scalar::one(FieldSpec::rationals());
    const auto b = Scalar::one(FieldSpec::prime(5));
    CHECK(code_of([&] { (void)(a + b); }) == Errc::field_mismatch);
    CHECK(code_of([&] { (void)(Scalar::one(FieldSpec::prime(3)) * b); }) == Errc::field_mismatch);
  }

  TEST_CASE("large-modulus residues match 128-bit reference arithmetic") {
    const std::uint64_t p = 2305843009213693951ull;  // 2^61 - 1
    const auto F = FieldSpec::prime(p);
    oracle::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
      const auto a = oracle::random_scalar(rng, F), b = oracle::random_scalar(rng, F);
      const unsigned __int128 ra = a.residue(), rb = b.residue();
      CHECK((a * b).residue() == static_cast<std::uint64_t>(ra * rb % p));
      CHECK((a + b).residue() == static_cast<std::uint64_t>((ra + rb) % p));
      CHECK((a - b).residue() == static_cast<std::uint64_t>((ra + p - rb) % p));
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }

  TEST_CASE("field axioms on random triples") {
    for (const auto& F : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
      oracle::Rng rng(11);
      for (int i = 0; i < 1000; ++i) {
        const auto a = oracle::random_scalar(rng, F, 50) / Scalar::from_int(F, 1 + i % 7);
        const auto b = oracle::random_scalar(rng, F, 50);
        const auto c = oracle::random_scalar(rng, F, 50);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Scalar::parse(F, a.to_string()) == a);
        if (!a.is_zero()) CHECK((a.inv() * a).is_one());
      }
    }
  }

  TEST_CASE("canonical order") {
    const auto Q = FieldSpec::rationals();
    CHECK(canonical_less(Scalar::parse(Q, "-1/2"), Scalar::parse(Q, "1/3")));
    CHECK(canonical_less(Scalar::parse(Q, "1/2"), Scalar::parse(Q, "1/3")));  // (numerator, denominator) order
    const auto F = FieldSpec::prime(7);
    CHECK(canonical_less(Scalar::from_int(F, 2), Scalar::from_int(F, 6)));
  }
}
