#include "homotopelab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace homotopelab {

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  auto v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "vector sum");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "vector difference");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vector& acc, const Scalar& c, const Vector& v) {
  if (acc.size() != v.size()) throw Error(Errc::dimension_mismatch, "axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += c * v[i];
  }
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(Errc::dimension_mismatch, "ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product");
  if (!(a.field_ == b.field_)) throw Error(Errc::field_mismatch, "matrix product");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(Errc::dimension_mismatch, "matrix-vector product");
  auto out = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::dimension_mismatch, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::dimension_mismatch, "matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  int sign = 1;  // parity of the row swaps
};

// Gauss-Jordan over F_p on raw residues; pivots only in columns < pivot_limit.
Echelon gauss_jordan_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                           std::size_t pivot_limit, std::uint64_t p) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
      e.sign = -e.sign;
    }
    const std::uint64_t inv = invmod(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = mulmod(a[r * cols + j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t x = a[r * cols + j];
        if (x != 0) a[i * cols + j] = (a[i * cols + j] + mulmod(nf, x, p)) % p;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

// Fraction-free forward elimination; every entry stays an integer minor.
Echelon bareiss_forward(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols, std::size_t pivot_limit) {
  Echelon e;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
      e.sign = -e.sign;
    }
    const mpz_class& pv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = pv * a[i * cols + j] - f * a[r * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = pv;
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::vector<std::uint64_t> residues_of(const Matrix& m) {
  std::vector<std::uint64_t> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j).residue();
  return a;
}

// Scales each row by the lcm of its denominators. Returns the integer matrix
// and the product of the scale factors.
std::vector<mpz_class> integer_rows(const Matrix& m, mpz_class& scale_product) {
  std::vector<mpz_class> a(m.rows() * m.cols());
  scale_product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i * m.cols() + j] = q.get_num() * (l / q.get_den());
    }
    scale_product *= l;
  }
  return a;
}

// RREF restricted to pivots in columns < pivot_limit.
RrefResult rref_limited(const Matrix& m, std::size_t pivot_limit) {
  const auto& field = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RrefResult out;
  out.reduced = Matrix(field, rows, cols);
  if (field.is_prime_field()) {
    auto a = residues_of(m);
    const auto e = gauss_jordan_mod_p(a, rows, cols, pivot_limit, field.modulus());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        out.reduced(i, j) = Scalar::from_int(field, static_cast<long long>(a[i * cols + j]));
    out.rank = e.rank;
    out.pivots = e.pivots;
    return out;
  }
  mpz_class scale;
  auto a = integer_rows(m, scale);
  const auto e = bareiss_forward(a, rows, cols, pivot_limit);
  // Back substitution over Q on the rank rows.
  std::vector<std::vector<mpq_class>> q(e.rank, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < e.rank; ++i) {
    const mpz_class& pv = a[i * cols + e.pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      q[i][j] = mpq_class(a[i * cols + j], pv);
      q[i][j].canonicalize();
    }
  }
  for (std::size_t i = e.rank; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (sgn(q[k][pc]) == 0) continue;
      const mpq_class f = q[k][pc];
      for (std::size_t j = pc; j < cols; ++j) q[k][j] -= f * q[i][j];
    }
  }
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.reduced(i, j) = Scalar::from_rational(field, q[i][j]);
  // Rows past the rank vanish before pivot_limit but may not after it.
  for (std::size_t i = e.rank; i < rows; ++i)
    for (std::size_t j = pivot_limit; j < cols; ++j) out.reduced(i, j) = Scalar::from_rational(field, mpq_class(a[i * cols + j]));
  out.rank = e.rank;
  out.pivots = e.pivots;
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(Errc::dimension_mismatch, "hstack");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix right_block(const Matrix& m, std::size_t first_col) {
  Matrix out(m.field(), m.rows(), m.cols() - first_col);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = first_col; j < m.cols(); ++j) out(i, j - first_col) = m(i, j);
  return out;
}

// left * m = rref(m)
Matrix left_reducer(const Matrix& m) {
  const auto r = rref_limited(hstack(m, Matrix::identity(m.field(), m.rows())), m.cols());
  return right_block(r.reduced, m.cols());
}

}  // namespace

RrefResult rref(const Matrix& m) { return rref_limited(m, m.cols()); }

std::size_t rank(const Matrix& m) {
  if (m.field().is_prime_field()) {
    auto a = residues_of(m);
    return gauss_jordan_mod_p(a, m.rows(), m.cols(), m.cols(), m.field().modulus()).rank;
  }
  mpz_class scale;
  auto a = integer_rows(m, scale);
  return bareiss_forward(a, m.rows(), m.cols(), m.cols()).rank;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    auto v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const Matrix& m) {
  const auto r = rref(m);
  std::vector<Vector> basis;
  for (auto c : r.pivots) basis.push_back(m.column(c));
  return basis;
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::non_square, "det of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const auto& field = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(field);
  if (field.is_prime_field()) {
    // Forward elimination only; determinant is the signed product of pivots.
    auto a = residues_of(m);
    const auto p = field.modulus();
    std::uint64_t d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv * n + c] == 0) ++piv;
      if (piv == n) return Scalar::zero(field);
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
        d = (p - d) % p;
      }
      d = mulmod(d, a[c * n + c], p);
      const auto inv = invmod(a[c * n + c], p);
      for (std::size_t i = c + 1; i < n; ++i) {
        const auto f = mulmod(a[i * n + c], inv, p);
        if (f == 0) continue;
        for (std::size_t j = c; j < n; ++j) a[i * n + j] = (a[i * n + j] + mulmod(p - f, a[c * n + j], p)) % p;
      }
    }
    return Scalar::from_int(field, static_cast<long long>(d));
  }
  mpz_class scale;
  auto a = integer_rows(m, scale);
  const auto e = bareiss_forward(a, n, n, n);
  if (e.rank < n) return Scalar::zero(field);
  mpq_class value(a[n * n - 1] * e.sign, scale);
  value.canonicalize();
  return Scalar::from_rational(field, value);
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::non_square, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto r = rref_limited(hstack(m, Matrix::identity(m.field(), n)), n);
  if (r.rank < n || (n > 0 && r.pivots.back() >= n)) return std::nullopt;
  return right_block(r.reduced, n);
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error(Errc::not_invertible, "singular matrix");
  return *std::move(inv);
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::dimension_mismatch, "solve: rhs length");
  const auto r = rref(hstack(m, Matrix::from_columns(m.field(), {rhs}, m.rows())));
  if (r.rank > 0 && r.pivots.back() == m.cols()) return std::nullopt;
  auto x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

RankNormalForm rank_normal_form(const Matrix& m) {
  RankNormalForm out;
  out.left = left_reducer(m);
  const Matrix echelon = out.left * m;
  out.right = left_reducer(echelon.transpose()).transpose();
  out.rank = rank(m);
  return out;
}

Vector LinearMap::operator()(const Vector& v) const { return matrix_ * v; }

LinearMap LinearMap::after(const LinearMap& inner) const {
  if (inner.codomain_dim() != domain_dim()) {
    throw Error(Errc::dimension_mismatch, "composition of " + std::to_string(codomain_dim()) + "x" +
                                              std::to_string(domain_dim()) + " after " +
                                              std::to_string(inner.codomain_dim()) + "x" +
                                              std::to_string(inner.domain_dim()));
  }
  return LinearMap(matrix_ * inner.matrix_);
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (!f.is_zero()) axpy(v, -f, rows_[i]);
  }
  return v;
}

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != n_) throw Error(Errc::dimension_mismatch, "SpanBuilder::add");
  if (rows_.size() == n_) return false;
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == r.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - r.begin());
  const Scalar inv = it->inv();
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool SpanBuilder::contains(const Vector& v) const {
  if (v.size() != n_) throw Error(Errc::dimension_mismatch, "SpanBuilder::contains");
  return is_zero(reduce(v));
}

Coordinates::Coordinates(const FieldSpec& field, std::vector<Vector> basis, std::size_t ambient_dim)
    : field_(field), n_(ambient_dim), basis_(std::move(basis)) {
  const std::size_t k = basis_.size();
  if (k == 0) return;
  const Matrix bt = Matrix::from_rows(field_, basis_, n_);
  const auto r = rref(bt);
  if (r.rank < k) throw Error(Errc::dependent_basis, "basis vectors are linearly dependent");
  selected_rows_ = r.pivots;
  Matrix square(field_, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) square(i, j) = basis_[j][selected_rows_[i]];
  selected_inverse_ = inverse(square);
}

std::optional<Vector> Coordinates::of(const Vector& v) const {
  if (v.size() != n_) throw Error(Errc::dimension_mismatch, "Coordinates::of");
  const std::size_t k = basis_.size();
  Vector picked;
  picked.reserve(k);
  for (auto r : selected_rows_) picked.push_back(v[r]);
  Vector coords = k == 0 ? Vector{} : selected_inverse_ * picked;
  if (!(combine(coords) == v)) return std::nullopt;
  return coords;
}

Vector Coordinates::combine(const Vector& coords) const {
  auto v = zero_vector(field_, n_);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], basis_.at(i));
  return v;
}

}  // namespace homotopelab
