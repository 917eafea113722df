#include "homotopelab/scalar.hpp"

#include <array>
#include <charconv>
#include <limits>

namespace homotopelab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::not_prime: return "NotPrime";
    case Errc::parse_error: return "ParseError";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::non_square: return "NonSquare";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::no_solution: return "NoSolution";
    case Errc::dependent_basis: return "DependentBasis";
    case Errc::too_large: return "TooLarge";
    case Errc::zero_quartic: return "ZeroQuartic";
    case Errc::bad_characteristic: return "BadCharacteristic";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_unital: return "NotUnital";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::cyclic_quiver: return "CyclicQuiver";
    case Errc::zero_lambda: return "ZeroLambda";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(Errc::division_by_zero, "inverse of 0 mod " + std::to_string(p));
  return powmod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 63) || !is_prime_u64(p)) {
    throw Error(Errc::not_prime, std::to_string(p) + " is not a supported prime modulus");
  }
  FieldSpec f;
  f.kind_ = Kind::prime_field;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw Error(Errc::parse_error, "bad field spec '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& field) {
  if (field.is_prime_field()) return Scalar(field, std::uint64_t{0});
  return Scalar(field, mpq_class(0));
}

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  if (field.is_prime_field()) {
    const auto p = field.modulus();
    std::uint64_t r;
    if (value >= 0) {
      r = static_cast<std::uint64_t>(value) % p;
    } else {
      // -(value+1) avoids overflow at LLONG_MIN.
      const std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
      r = (p - mag % p) % p;
    }
    return Scalar(field, r);
  }
  return Scalar(field, mpq_class(mpz_class(static_cast<long>(value))));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    return Scalar(field, std::move(q));
  }
  const mpz_class p(std::to_string(field.modulus()));
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) {
    throw Error(Errc::division_by_zero,
                "denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  const auto n = std::stoull(num.get_str());
  const auto d = std::stoull(den.get_str());
  return Scalar(field, mulmod(n, invmod(d, field.modulus()), field.modulus()));
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::parse_error, "empty scalar");
  if (text.front() == '+') text.remove_prefix(1);
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num_text) || !valid_integer(den_text) || den_text.front() == '-') {
    throw Error(Errc::parse_error, "bad scalar '" + std::string(text) + "'");
  }
  mpz_class num{std::string(num_text)};
  mpz_class den{std::string(den_text)};
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(field, q);
}

bool Scalar::is_zero() const noexcept {
  if (field_.is_prime_field()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (field_.is_prime_field()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(Errc::field_mismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (field_.is_prime_field()) return Scalar(field_, invmod(residue(), field_.modulus()));
  mpq_class q;
  mpq_inv(q.get_mpq_t(), rational().get_mpq_t());
  return Scalar(field_, std::move(q));
}

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) {
    const auto r = residue();
    return Scalar(field_, r == 0 ? 0 : field_.modulus() - r);
  }
  return Scalar(field_, mpq_class(-rational()));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    const auto p = field_.modulus();
    auto& r = std::get<std::uint64_t>(value_);
    const auto s = rhs.residue();
    r = (r >= p - s) ? r - (p - s) : r + s;
  } else {
    std::get<mpq_class>(value_) += rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    const auto p = field_.modulus();
    auto& r = std::get<std::uint64_t>(value_);
    const auto s = rhs.residue();
    r = (r >= s) ? r - s : r + (p - s);
  } else {
    std::get<mpq_class>(value_) -= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    auto& r = std::get<std::uint64_t>(value_);
    r = mulmod(r, rhs.residue(), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  if (field_.is_prime_field()) {
    auto& r = std::get<std::uint64_t>(value_);
    r = mulmod(r, invmod(rhs.residue(), field_.modulus()), field_.modulus());
  } else {
    std::get<mpq_class>(value_) /= rhs.rational();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_prime_field()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_prime_field()) return a.residue() < b.residue();
  const auto c = cmp(a.rational().get_num(), b.rational().get_num());
  if (c != 0) return c < 0;
  return cmp(a.rational().get_den(), b.rational().get_den()) < 0;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(residue());
  return rational().get_str();
}

}  // namespace homotopelab
