#include "homotopelab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "homotopelab/enumerate.hpp"

namespace homotopelab {

Algebra::Algebra(Trilinear structure, std::optional<Element> unit, std::vector<std::string> labels)
    : structure_(std::move(structure)), unit_(std::move(unit)), labels_(std::move(labels)) {
  const auto& d = structure_.dims();
  if (d[0] != d[1] || d[1] != d[2]) {
    throw Error(Errc::dimension_mismatch, "structure tensor of an algebra must be (n, n, n)");
  }
  dim_ = d[0];
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  } else if (labels_.size() != dim_) {
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(dim_) + " basis labels");
  }
  rows_.assign(dim_, {});
  for (const auto& [idx, c] : structure_.entries()) rows_[idx[0]].push_back({idx[1], idx[2], c});
  if (unit_) {
    check(*unit_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto e = basis(i);
      if (!(mul(*unit_, e) == e) || !(mul(e, *unit_) == e)) {
        throw Error(Errc::not_unital, "claimed unit fails on basis vector " + labels_[i]);
      }
    }
  }
}

Algebra Algebra::from_products(const FieldSpec& field, std::size_t dim,
                               const std::function<Element(std::size_t, std::size_t)>& product,
                               std::optional<Element> unit, std::vector<std::string> labels) {
  Trilinear t(field, {dim, dim, dim});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Element p = product(i, j);
      if (p.size() != dim) throw Error(Errc::dimension_mismatch, "product table entry length");
      for (std::size_t k = 0; k < dim; ++k) t.set(i, j, k, p[k]);
    }
  }
  return Algebra(std::move(t), std::move(unit), std::move(labels));
}

std::string Algebra::label(std::size_t i) const { return labels_.at(i); }

Element Algebra::element(const std::vector<long long>& coords) const {
  if (coords.size() != dim_) throw Error(Errc::dimension_mismatch, "element coordinates");
  Element e;
  e.reserve(dim_);
  for (auto c : coords) e.push_back(Scalar::from_int(field(), c));
  return e;
}

void Algebra::check(const Element& a) const {
  if (a.size() != dim_) {
    throw Error(Errc::dimension_mismatch, "element of length " + std::to_string(a.size()) + " in a " +
                                              std::to_string(dim_) + "-dimensional algebra");
  }
  for (const auto& c : a)
    if (!(c.field() == field())) throw Error(Errc::field_mismatch, "element coordinate field");
}

Element Algebra::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : rows_[i]) {
      if (b[t.j].is_zero()) continue;
      out[t.k] += a[i] * b[t.j] * t.c;
    }
  }
  return out;
}

Element Algebra::basis_product(std::size_t i, std::size_t j) const {
  Element out = zero();
  for (const auto& t : rows_.at(i))
    if (t.j == j) out[t.k] += t.c;
  return out;
}

std::string Algebra::format(const Element& a) const {
  check(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    std::string c = a[i].to_string();
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != "1") os << c << '*';
    os << labels_[i];
  }
  return first ? "0" : os.str();
}

std::optional<Element> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  // Unknown u: u e_j = e_j gives sum_i u_i c_{ijk} = delta_jk; e_j u = e_j
  // gives sum_i u_i c_{jik} = delta_jk.
  Matrix system(f, 2 * n * n, n);
  Vector rhs = zero_vector(f, 2 * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t left = j * n + k;
      const std::size_t right = n * n + j * n + k;
      if (j == k) {
        rhs[left] = Scalar::one(f);
        rhs[right] = Scalar::one(f);
      }
    }
  }
  for (const auto& [idx, c] : a.structure().entries()) {
    const auto [i, j, k] = idx;
    system(j * n + k, i) += c;          // u_i e_i e_j
    system(n * n + i * n + k, j) += c;  // e_i u_j e_j
  }
  return solve(system, rhs);
}

Algebra with_unit(const Algebra& a, std::optional<Element> unit) {
  if (!unit) unit = find_unit(a);
  if (!unit) throw Error(Errc::not_unital, "algebra has no two-sided unit");
  return Algebra(a.structure(), std::move(unit), a.labels());
}

namespace {

Scalar convert(const Scalar& s, const FieldSpec& field) {
  if (s.field() == field) return s;
  if (s.field().is_rational()) return Scalar::from_rational(field, s.rational());
  throw Error(Errc::field_mismatch, "cannot move " + s.field().to_string() + " scalars into " + field.to_string());
}

}  // namespace

Element change_field(const Element& a, const FieldSpec& field) {
  Element out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(convert(c, field));
  return out;
}

Algebra change_field(const Algebra& a, const FieldSpec& field) {
  Trilinear t(field, a.structure().dims());
  for (const auto& [idx, c] : a.structure().entries()) t.set(idx[0], idx[1], idx[2], convert(c, field));
  std::optional<Element> unit;
  if (a.unit()) unit = change_field(*a.unit(), field);
  return Algebra(std::move(t), std::move(unit), a.labels());
}

Matrix left_multiplication(const Algebra& A, const Element& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < A.dim(); ++j) cols.push_back(A.mul(a, A.basis(j)));
  return Matrix::from_columns(A.field(), cols, A.dim());
}

Matrix right_multiplication(const Algebra& A, const Element& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < A.dim(); ++j) cols.push_back(A.mul(A.basis(j), a));
  return Matrix::from_columns(A.field(), cols, A.dim());
}

Algebra homotope(const Algebra& A, const LinearMap& f1, const LinearMap& f2, const LinearMap& g) {
  const std::size_t n = A.dim();
  for (const auto* m : {&f1, &f2, &g}) {
    if (m->domain_dim() != n || m->codomain_dim() != n) {
      throw Error(Errc::dimension_mismatch, "homotope maps must be " + std::to_string(n) + "x" + std::to_string(n));
    }
  }
  std::vector<Element> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = f1.matrix().column(i);
    right[i] = f2.matrix().column(i);
  }
  return Algebra::from_products(A.field(), n, [&](std::size_t i, std::size_t j) { return g(A.mul(left[i], right[j])); },
                                std::nullopt, A.labels());
}

Algebra left_delta_homotope(const Algebra& A, const Element& delta) {
  const auto id = LinearMap::identity(A.field(), A.dim());
  return homotope(A, LinearMap(right_multiplication(A, delta)), id, id);
}

Algebra right_delta_homotope(const Algebra& A, const Element& delta) {
  const auto id = LinearMap::identity(A.field(), A.dim());
  return homotope(A, id, LinearMap(left_multiplication(A, delta)), id);
}

Algebra augment_unit(const Algebra& A) {
  const std::size_t n = A.dim();
  const FieldSpec& f = A.field();
  Trilinear t(f, {n + 1, n + 1, n + 1});
  for (const auto& [idx, c] : A.structure().entries()) t.set(idx[0], idx[1], idx[2], c);
  const auto one = Scalar::one(f);
  for (std::size_t i = 0; i <= n; ++i) {
    t.set(n, i, i, one);
    t.set(i, n, i, one);
  }
  auto labels = A.labels();
  labels.push_back("1^");
  return Algebra(std::move(t), unit_vector(f, n + 1, n), std::move(labels));
}

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

// Merges duplicate indices and drops zeros; the result is sorted.
Sparse normalize(Sparse s) {
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Sparse out;
  for (auto& [k, c] : s) {
    if (!out.empty() && out.back().first == k) {
      out.back().second += c;
    } else {
      out.emplace_back(k, std::move(c));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

}  // namespace

bool is_associative(const Algebra& A) {
  const std::size_t n = A.dim();
  std::vector<Sparse> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : A.row(i)) table[i * n + t.j].emplace_back(t.k, t.c);
  for (auto& s : table) s = normalize(std::move(s));
  Sparse lhs, rhs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        lhs.clear();
        rhs.clear();
        for (const auto& [m, c] : table[i * n + j])
          for (const auto& [r, d] : table[m * n + k]) lhs.emplace_back(r, c * d);
        for (const auto& [m, c] : table[j * n + k])
          for (const auto& [r, d] : table[i * n + m]) rhs.emplace_back(r, c * d);
        if (lhs.empty() && rhs.empty()) continue;
        if (normalize(lhs) != normalize(rhs)) return false;
      }
    }
  }
  return true;
}

bool is_commutative(const Algebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j)
      if (!(A.basis_product(i, j) == A.basis_product(j, i))) return false;
  return true;
}

Element commutator(const Algebra& A, const Element& a, const Element& b) { return A.mul(a, b) - A.mul(b, a); }

bool is_idempotent(const Algebra& A, const Element& a) { return A.mul(a, a) == a; }

bool is_square_zero(const Algebra& A, const Element& a) { return is_zero(A.mul(a, a)); }

std::optional<Element> try_invert_element(const Algebra& A, const Element& a) {
  if (!A.unit()) throw Error(Errc::not_unital, "inverting elements needs a unit");
  auto x = solve(left_multiplication(A, a), *A.unit());
  if (!x) return std::nullopt;
  if (!(A.mul(*x, a) == *A.unit())) return std::nullopt;
  return x;
}

Element invert_element(const Algebra& A, const Element& a) {
  auto x = try_invert_element(A, a);
  if (!x) throw Error(Errc::not_a_unit, A.format(a) + " is not invertible");
  return *std::move(x);
}

ConjugationIsomorphism conjugation_isomorphism(const Algebra& A, const Element& delta, const Element& u,
                                               const Element& v) {
  const Element u_inv = invert_element(A, u);
  const Element v_inv = invert_element(A, v);
  ConjugationIsomorphism out;
  out.delta_prime = A.mul(A.mul(u, delta), v);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < A.dim(); ++i) cols.push_back(A.mul(A.mul(v_inv, A.basis(i)), u_inv));
  out.psi = LinearMap(Matrix::from_columns(A.field(), cols, A.dim()));
  return out;
}

bool is_isomorphism_witness(const Algebra& A, const Algebra& B, const LinearMap& phi) {
  if (A.dim() != B.dim() || !(A.field() == B.field())) return false;
  if (phi.domain_dim() != A.dim() || phi.codomain_dim() != B.dim()) return false;
  if (rank(phi.matrix()) != A.dim()) return false;
  std::vector<Element> images(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) images[i] = phi.matrix().column(i);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (!(phi(A.basis_product(i, j)) == B.mul(images[i], images[j]))) return false;
  if (A.unit() && B.unit() && !(phi(*A.unit()) == *B.unit())) return false;
  return true;
}

bool is_well_tempered(const Algebra& A, const Element& delta) {
  if (!A.unit()) throw Error(Errc::not_unital, "well-tempered test needs a unital algebra");
  SpanBuilder span(A.field(), A.dim());
  std::vector<Element> delta_right(A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) delta_right[j] = A.mul(delta, A.basis(j));
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Element ei = A.basis(i);
    for (std::size_t j = 0; j < A.dim(); ++j) {
      span.add(A.mul(ei, delta_right[j]));
      if (span.dim() == A.dim()) return true;
    }
  }
  return false;
}

Corner corner_subalgebra(const Algebra& A, const Element& e) {
  if (!is_idempotent(A, e)) throw Error(Errc::not_idempotent, A.format(e) + " is not idempotent");
  const FieldSpec& f = A.field();
  std::vector<Vector> spanning;
  for (std::size_t i = 0; i < A.dim(); ++i) spanning.push_back(A.mul(A.mul(e, A.basis(i)), e));
  const auto reduced = rref(Matrix::from_rows(f, spanning, A.dim()));
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < reduced.rank; ++r) basis.push_back(reduced.reduced.row(r));
  Coordinates coords(f, basis, A.dim());
  const std::size_t k = basis.size();
  auto product = [&](std::size_t a, std::size_t b) {
    auto c = coords.of(A.mul(basis[a], basis[b]));
    if (!c) throw Error(Errc::invalid_argument, "corner is not closed under multiplication");
    return *c;
  };
  auto unit = coords.of(e);
  Algebra corner = Algebra::from_products(f, k, product, unit);
  LinearMap embedding(Matrix::from_columns(f, basis, A.dim()));
  return Corner{std::move(corner), std::move(embedding), std::move(coords)};
}

ProbeResult idempotent_decomposition_probe(const Algebra& A, const Element& eps, std::uint64_t budget,
                                           const std::vector<Element>& ansatz) {
  if (!A.field().is_prime_field()) throw Error(Errc::invalid_argument, "idempotent probe runs over F_p only");
  if (!is_idempotent(A, eps)) throw Error(Errc::not_idempotent, A.format(eps) + " is not idempotent");
  const std::uint64_t p = A.field().modulus();
  ProbeResult result;

  if (ansatz.empty()) {
    result.search = "corner";
    const Corner corner = corner_subalgebra(A, eps);
    const std::size_t k = corner.algebra.dim();
    require_budget(p, k, budget, "corner idempotent scan");
    result.candidates = point_count(p, k);
    const ResidueAlgebra R(corner.algebra);
    const auto unit = R.from_element(*corner.algebra.unit());
    auto found = parallel_collect<std::vector<std::uint64_t>>(
        result.candidates, 0, [&](std::uint64_t begin, std::uint64_t end) {
          std::vector<std::vector<std::uint64_t>> hits;
          std::vector<std::uint64_t> a(k), sq(k);
          for (std::uint64_t idx = begin; idx < end && hits.empty(); ++idx) {
            decode_point(idx, p, a);
            if (a == unit || std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue;
            R.mul(a.data(), a.data(), sq.data());
            if (sq == a) hits.push_back(a);
          }
          return hits;
        });
    if (!found.empty()) {
      const Element a = corner.embedding(R.to_element(found.front().data()));
      result.outcome = ProbeResult::Outcome::split;
      result.split = std::make_pair(a, eps - a);
    }
    return result;
  }

  result.search = "ansatz";
  const std::size_t k = ansatz.size();
  require_budget(p, k, budget, "ansatz idempotent scan");
  result.candidates = point_count(p, k);
  const ResidueAlgebra R(A);
  const std::size_t n = A.dim();
  std::vector<std::vector<std::uint64_t>> gens;
  for (const auto& g : ansatz) gens.push_back(R.from_element(g));
  const auto e = R.from_element(eps);
  auto found = parallel_collect<std::vector<std::uint64_t>>(
      result.candidates, 0, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::vector<std::uint64_t>> hits;
        std::vector<std::uint64_t> c(k), a(n), b(n), t(n);
        auto equal_to = [&](const std::vector<std::uint64_t>& x) { return t == x; };
        auto vanishes = [&] { return std::all_of(t.begin(), t.end(), [](auto x) { return x == 0; }); };
        for (std::uint64_t idx = begin; idx < end && hits.empty(); ++idx) {
          decode_point(idx, p, c);
          std::fill(a.begin(), a.end(), 0);
          for (std::size_t g = 0; g < k; ++g) {
            if (c[g] == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
              if (gens[g][i] != 0) a[i] = (a[i] + mulmod(c[g], gens[g][i], p)) % p;
          }
          if (a == e || std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue;
          R.mul(a.data(), a.data(), t.data());
          if (!equal_to(a)) continue;
          R.mul(a.data(), e.data(), t.data());
          if (!equal_to(a)) continue;
          R.mul(e.data(), a.data(), t.data());
          if (!equal_to(a)) continue;
          for (std::size_t i = 0; i < n; ++i) b[i] = (e[i] + p - a[i]) % p;
          R.mul(b.data(), b.data(), t.data());
          if (!equal_to(b)) continue;
          R.mul(a.data(), b.data(), t.data());
          if (!vanishes()) continue;
          R.mul(b.data(), a.data(), t.data());
          if (!vanishes()) continue;
          hits.push_back(a);
        }
        return hits;
      });
  if (!found.empty()) {
    const Element a = R.to_element(found.front().data());
    result.outcome = ProbeResult::Outcome::split;
    result.split = std::make_pair(a, eps - a);
  }
  return result;
}

}  // namespace homotopelab
