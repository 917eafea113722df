#include "homotopelab/fingerprints.hpp"

#include <algorithm>
#include <set>

#include "homotopelab/constructions.hpp"
#include "homotopelab/enumerate.hpp"

namespace homotopelab {

namespace {

using Residues = std::vector<std::uint64_t>;

void require_prime_field(const Algebra& A) {
  if (!A.field().is_prime_field()) throw Error(Errc::invalid_argument, "censuses run over F_p; reduce the algebra first");
}

bool all_zero(const Residues& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// Scans F_p^dim keeping points whose square satisfies keep(a, a*a).
template <class Keep>
std::vector<Residues> scan_squares(const ResidueAlgebra& R, unsigned threads, Keep keep) {
  const std::uint64_t total = point_count(R.modulus(), R.dim());
  return parallel_collect<Residues>(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Residues> hits;
    Residues a(R.dim()), sq(R.dim());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      decode_point(idx, R.modulus(), a);
      R.mul(a.data(), a.data(), sq.data());
      if (keep(a, sq)) hits.push_back(a);
    }
    return hits;
  });
}

std::vector<Residues> idempotent_residues(const Algebra& A, std::uint64_t budget, unsigned threads) {
  require_prime_field(A);
  require_budget(A.field().modulus(), A.dim(), budget, "idempotent enumeration");
  const ResidueAlgebra R(A);
  return scan_squares(R, threads, [](const Residues& a, const Residues& sq) { return a == sq; });
}

std::vector<Residues> square_zero_residues(const Algebra& A, std::uint64_t budget, unsigned threads) {
  require_prime_field(A);
  require_budget(A.field().modulus(), A.dim(), budget, "square-zero enumeration");
  const ResidueAlgebra R(A);
  return scan_squares(R, threads, [](const Residues&, const Residues& sq) { return all_zero(sq); });
}

std::vector<Element> to_elements(const ResidueAlgebra& R, const std::vector<Residues>& rs) {
  std::vector<Element> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(R.to_element(r.data()));
  return out;
}

// alpha with v = alpha t, if any.
std::optional<std::uint64_t> ratio(const Residues& v, const Residues& t, std::uint64_t p) {
  std::size_t k = 0;
  while (k < t.size() && t[k] == 0) ++k;
  if (k == t.size()) return std::nullopt;
  const std::uint64_t alpha = mulmod(v[k], invmod(t[k], p), p);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (v[i] != mulmod(alpha, t[i], p)) return std::nullopt;
  return alpha;
}

std::vector<Scalar> to_scalars(const FieldSpec& field, const std::vector<std::uint64_t>& values) {
  std::vector<Scalar> out;
  for (auto v : values) out.push_back(Scalar::from_int(field, static_cast<long long>(v)));
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace

std::vector<Element> enumerate_idempotents(const Algebra& A, std::uint64_t budget, unsigned threads) {
  auto rs = idempotent_residues(A, budget, threads);
  return to_elements(ResidueAlgebra(A), rs);
}

std::vector<Element> enumerate_square_zero(const Algebra& A, std::uint64_t budget, unsigned threads) {
  auto rs = square_zero_residues(A, budget, threads);
  return to_elements(ResidueAlgebra(A), rs);
}

std::vector<Scalar> mu_spectrum(const Algebra& A, std::uint64_t budget) {
  const auto zs = square_zero_residues(A, budget, 0);
  const std::uint64_t n = zs.size();
  if (n != 0 && n > budget / n) {
    throw Error(Errc::budget_exceeded, "mu spectrum: " + std::to_string(n) + "^2 square-zero pairs exceed budget " +
                                           std::to_string(budget));
  }
  const ResidueAlgebra R(A);
  const std::uint64_t p = R.modulus();
  std::set<std::uint64_t> mus;
  Residues ab(R.dim()), ba(R.dim());
  for (const auto& z1 : zs) {
    if (all_zero(z1)) continue;
    for (const auto& z2 : zs) {
      R.mul(z1.data(), z2.data(), ab.data());
      if (all_zero(ab)) continue;
      R.mul(z2.data(), z1.data(), ba.data());
      if (auto mu = ratio(ab, ba, p)) mus.insert(*mu);
    }
  }
  return to_scalars(A.field(), {mus.begin(), mus.end()});
}

std::vector<Scalar> idempotent_commutator_fingerprint(const Algebra& A, std::uint64_t budget) {
  auto idem = idempotent_residues(A, budget, 0);
  std::erase_if(idem, all_zero);
  const ResidueAlgebra R(A);
  const std::uint64_t p = R.modulus();
  std::vector<std::uint64_t> alphas;
  Residues uv(R.dim()), vu(R.dim()), c(R.dim());
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = 0; j < idem.size(); ++j) {
      if (i == j) continue;
      R.mul(idem[i].data(), idem[j].data(), uv.data());
      R.mul(idem[j].data(), idem[i].data(), vu.data());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = (uv[k] + p - vu[k]) % p;
      if (all_zero(c)) continue;
      for (const auto& t : idem) {
        if (auto alpha = ratio(c, t, p)) {
          alphas.push_back(*alpha);
          break;
        }
      }
    }
  }
  return to_scalars(A.field(), alphas);
}

bool SplittingReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.passed; });
}

SplittingReport check_graded_splitting(const Algebra& A, const std::vector<Element>& R,
                                       const std::vector<Element>& N) {
  auto span_of = [&](const std::vector<Element>& vs) {
    SpanBuilder s(A.field(), A.dim());
    for (const auto& v : vs) s.add(v);
    return s;
  };
  const SpanBuilder r_span = span_of(R);
  const SpanBuilder n_span = span_of(N);
  auto products_in = [&](const std::vector<Element>& left, const std::vector<Element>& right, auto&& accept) {
    for (const auto& a : left)
      for (const auto& b : right)
        if (!accept(A.mul(a, b))) return false;
    return true;
  };
  auto in_r = [&](const Element& v) { return r_span.contains(v); };
  auto in_n = [&](const Element& v) { return n_span.contains(v); };
  auto vanishes = [](const Element& v) { return is_zero(v); };

  SplittingReport report;
  report.clauses.push_back({"R*R in R", products_in(R, R, in_r)});
  report.clauses.push_back({"N*N = 0", products_in(N, N, vanishes)});
  report.clauses.push_back({"R*N in N", products_in(R, N, in_n)});
  report.clauses.push_back({"N*R in N", products_in(N, R, in_n)});
  std::vector<Element> both = R;
  both.insert(both.end(), N.begin(), N.end());
  report.clauses.push_back({"R meet N = 0", span_of(both).dim() == r_span.dim() + n_span.dim()});
  return report;
}

SplittingReport verify_graded_splitting(const Scalar& lambda) {
  const Algebra B = B16_hat(lambda);
  const std::size_t hat = b16::dim;  // adjoined unit
  auto e = [&](std::size_t i) { return B.basis(i); };
  std::vector<Element> R = {e(hat), e(b16::x), e(b16::y), e(b16::w)};
  std::vector<Element> N;
  for (std::size_t i = b16::h1; i < b16::w; ++i) N.push_back(e(i));
  SplittingReport report = check_graded_splitting(B, R, N);
  const Element x = e(b16::x), y = e(b16::y);
  report.clauses.push_back({"x*x = 0", is_zero(B.mul(x, x))});
  report.clauses.push_back({"y*y = 0", is_zero(B.mul(y, y))});
  report.clauses.push_back({"x*y - lambda y*x = 0", is_zero(B.mul(x, y) - lambda * B.mul(y, x))});
  return report;
}

}  // namespace homotopelab
