#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "homotopelab/error.hpp"

namespace homotopelab {

/// The base field: the rationals, or a prime field F_p with p below 2^63.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws Errc::not_prime unless p passes the deterministic 64-bit Miller-Rabin test.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>", e.g. "F7".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::prime_field; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t modulus() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element tagged with its field. Rationals are kept reduced
/// with positive denominator; residues live in [0, p).
class Scalar {
 public:
  /// The rational zero.
  Scalar() : field_(), value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long long value);
  static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
  /// Parses "num", "-num" or "num/den"; over F_p the fraction is reduced mod p.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Prime-field residue; only valid when field().is_prime_field().
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Rational value; only valid when field().is_rational().
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar inv() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Field-aware equality; scalars of different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical total order: residue value over F_p, (numerator, denominator)
  /// lexicographic over Q.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  /// "num/den" (den omitted when 1) or the decimal residue.
  std::string to_string() const;

 private:
  Scalar(FieldSpec field, std::uint64_t residue) : field_(field), value_(residue) {}
  Scalar(FieldSpec field, mpq_class q) : field_(field), value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue modulo a prime p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

}  // namespace homotopelab
