#include "homotopelab/poly.hpp"

#include <bit>
#include <numeric>
#include <sstream>

namespace homotopelab {

namespace {

std::uint64_t degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(const FieldSpec& field, std::size_t nvars, const Scalar& c) {
  Polynomial p(field, nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(const FieldSpec& field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(Errc::arity_mismatch, "variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(field, e, Scalar::one(field));
}

Polynomial Polynomial::monomial(const FieldSpec& field, const Exponent& e, const Scalar& c) {
  Polynomial p(field, e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear_form(const FieldSpec& field, const Vector& coeffs) {
  Polynomial p(field, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = degree_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) != d) return false;
  }
  return true;
}

Scalar Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

const Exponent& Polynomial::leading_exponent() const {
  if (terms_.empty()) throw Error(Errc::invalid_argument, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(Errc::invalid_argument, "leading term of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw Error(Errc::arity_mismatch, "exponent length");
  if (!(c.field() == field_)) throw Error(Errc::field_mismatch, "polynomial coefficient");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(field_ == other.field_)) throw Error(Errc::field_mismatch, "polynomial arithmetic");
  if (nvars_ != other.nvars_) {
    throw Error(Errc::arity_mismatch, std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + " variables");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.field_, a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  if (!(c.field() == p.field_)) throw Error(Errc::field_mismatch, "scalar times polynomial");
  Polynomial out(p.field_, p.nvars_);
  if (c.is_zero()) return out;
  out.terms_ = p.terms_;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_, nvars_, Scalar::one(field_));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Scalar Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw Error(Errc::arity_mismatch, "evaluation point length");
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw Error(Errc::arity_mismatch, "substitution needs one image per variable");
  const std::size_t new_nvars = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != new_nvars) throw Error(Errc::arity_mismatch, "substitution images differ in arity");
    if (!(img.field() == field_)) throw Error(Errc::field_mismatch, "substitution image field");
  }
  // powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(field_, new_nvars, Scalar::one(field_)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial out(field_, new_nvars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(field_, new_nvars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::substitute_linear(const Matrix& s) const {
  if (s.rows() != nvars_) throw Error(Errc::arity_mismatch, "substitution matrix rows must equal arity");
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) images.push_back(linear_form(field_, s.row(i)));
  if (nvars_ == 0) return constant(field_, s.cols(), coefficient(Exponent{}));
  return substitute(images);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return leading_coefficient().inv() * *this;
}

Polynomial Polynomial::coefficient_in(std::size_t var, std::uint32_t power) const {
  if (var >= nvars_) throw Error(Errc::arity_mismatch, "variable index out of range");
  Polynomial out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponent reduced = e;
    reduced[var] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw Error(Errc::arity_mismatch, "variable index out of range");
  Polynomial out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent lowered = e;
    lowered[var] -= 1;
    out.add_term(lowered, Scalar::from_int(field_, e[var]) * c);
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "t" + std::to_string(i + 1); };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << '*' << mono;
    }
  }
  return os.str();
}

bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.monic() == q.monic();
}

PolyMatrix::PolyMatrix(const FieldSpec& field, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(field, nvars)) {}

Matrix PolyMatrix::evaluate(const Vector& point) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
  return m;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::non_square, "symbolic determinant");
  const std::size_t n = m.rows();
  if (n > max_symbolic_det_size) {
    throw Error(Errc::too_large, "symbolic determinant of size " + std::to_string(n) + " exceeds " +
                                     std::to_string(max_symbolic_det_size));
  }
  const FieldSpec& field = m.field();
  const std::size_t full = (std::size_t{1} << n) - 1;
  // minors[mask]: signed sum over assignments of the first popcount(mask)
  // rows to the columns in mask.
  std::vector<Polynomial> minors(full + 1, Polynomial(field, m.nvars()));
  minors[0] = Polynomial::constant(field, m.nvars(), Scalar::one(field));
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (minors[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t bit = std::size_t{1} << col;
      if ((mask & bit) != 0 || m(row, col).is_zero()) continue;
      // Columns already used by earlier rows that exceed col are inversions.
      const int inversions = std::popcount(mask & ~((bit << 1) - 1));
      Polynomial term = minors[mask] * m(row, col);
      if (inversions % 2 == 0) {
        minors[mask | bit] += term;
      } else {
        minors[mask | bit] -= term;
      }
    }
  }
  return minors[full];
}

Polynomial det_linear_matrix(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).total_degree() > 1) throw Error(Errc::invalid_argument, "entry of degree > 1 in linear matrix");
  return determinant(m);
}

}  // namespace homotopelab
