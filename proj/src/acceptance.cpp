#include "homotopelab/acceptance.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "homotopelab/constructions.hpp"
#include "homotopelab/fingerprints.hpp"
#include "homotopelab/quartic.hpp"
#include "homotopelab/tensor.hpp"

namespace homotopelab {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Context {
  const AcceptanceOptions& options;
  Rng rng;
  std::size_t samples(std::size_t full, std::size_t quick) const { return options.quick ? quick : full; }
};

long long random_int(Rng& rng, long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

Scalar random_scalar(Rng& rng, const FieldSpec& field, long long bound = 9) {
  if (field.is_prime_field()) {
    return Scalar::from_int(field, random_int(rng, 0, static_cast<long long>(field.modulus()) - 1));
  }
  return Scalar::from_int(field, random_int(rng, -bound, bound));
}

Scalar nonzero_scalar(Rng& rng, const FieldSpec& field, long long bound = 9) {
  for (;;) {
    auto s = random_scalar(rng, field, bound);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(Rng& rng, const FieldSpec& field, std::size_t rows, std::size_t cols) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, field);
  return m;
}

Matrix random_invertible(Rng& rng, const FieldSpec& field, std::size_t n) {
  for (;;) {
    auto m = random_matrix(rng, field, n, n);
    if (rank(m) == n) return m;
  }
}

Trilinear random_tensor(Rng& rng, const FieldSpec& field, Trilinear::Index dims) {
  Trilinear t(field, dims);
  for (std::size_t i = 0; i < dims[0]; ++i)
    for (std::size_t j = 0; j < dims[1]; ++j)
      for (std::size_t k = 0; k < dims[2]; ++k) t.set(i, j, k, random_scalar(rng, field));
  return t;
}

std::string join(const std::vector<Scalar>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].to_string();
  return out + "}";
}

std::vector<Scalar> scalars(const FieldSpec& field, std::initializer_list<long long> values) {
  std::vector<Scalar> out;
  for (auto v : values) out.push_back(Scalar::from_int(field, v));
  return out;
}

std::set<std::vector<std::uint64_t>> residue_set(const std::vector<Element>& elements) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& e : elements) {
    std::vector<std::uint64_t> r;
    for (const auto& c : e) r.push_back(c.residue());
    out.insert(r);
  }
  return out;
}

Element append_zero(Element e) {
  e.push_back(Scalar::zero(e.front().field()));
  return e;
}

Outcome b16_construction(Context&) {
  const FieldSpec Q = FieldSpec::rationals();
  const Algebra B = B16(Q);
  auto e = [&](std::size_t i) { return B.basis(i); };
  const bool dim_ok = B.dim() == 16;
  const bool assoc = is_associative(B);
  const bool relation = B.mul(e(b16::x), B.mul(e(b16::h1), e(b16::y))) == e(b16::w) &&
                        B.mul(e(b16::y), B.mul(e(b16::h2), e(b16::x))) == e(b16::w);
  bool long_words_vanish = true;
  const std::size_t gens[] = {b16::x, b16::y, b16::h1, b16::h2};
  for (int word = 0; word < 256; ++word) {
    Element p = e(gens[word & 3]);
    for (int pos = 1; pos < 4; ++pos) p = B.mul(p, e(gens[(word >> (2 * pos)) & 3]));
    long_words_vanish = long_words_vanish && is_zero(p);
  }
  auto length = [](std::size_t i) -> int {
    if (i == b16::one) return 0;
    if (i <= b16::h2) return 1;
    return i == b16::w ? 3 : 2;
  };
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      if (length(i) + length(j) >= 4) long_words_vanish = long_words_vanish && is_zero(B.basis_product(i, j));
  std::ostringstream os;
  os << "dim=" << B.dim() << " associative=" << assoc << " xh1y=yh2x=" << relation
     << " length>=4 vanish=" << long_words_vanish;
  return {dim_ok && assoc && relation && long_words_vanish, os.str()};
}

Outcome b_lambda_idempotents(Context&) {
  const FieldSpec F7 = FieldSpec::prime(7);
  const Algebra B2 = B_lambda(Scalar::from_int(F7, 2));
  const auto found_two = enumerate_idempotents(B2);
  const auto two = residue_set(found_two);
  const auto minus_one = residue_set(enumerate_idempotents(B_lambda(Scalar::from_int(F7, -1))));
  const std::set<std::vector<std::uint64_t>> want_two = {{0, 0}, {1, 6}, {5, 0}, {1, 3}};
  const std::set<std::vector<std::uint64_t>> want_minus_one = {{0, 0}, {1, 6}};
  std::ostringstream os;
  os << "lambda=2 found {";
  for (std::size_t i = 0; i < found_two.size(); ++i) os << (i ? ", " : "") << B2.format(found_two[i]);
  os << "}";
  for (const auto& w : want_two) {
    if (two.count(w)) continue;
    const Element e = B2.element({static_cast<long long>(w[0]), static_cast<long long>(w[1])});
    os << "; expected " << B2.format(e) << " squares to " << B2.format(B2.mul(e, e));
  }
  os << "; lambda=-1 " << (minus_one == want_minus_one ? "matches" : "differs");
  return {two == want_two && minus_one == want_minus_one, os.str()};
}

Outcome commutator_fingerprints(Context&) {
  const FieldSpec F7 = FieldSpec::prime(7);
  const auto f2 = idempotent_commutator_fingerprint(B_lambda(Scalar::from_int(F7, 2)));
  const auto f3 = idempotent_commutator_fingerprint(B_lambda(Scalar::from_int(F7, 3)));
  return {f2 != f3, "B_2 " + join(f2) + " vs B_3 " + join(f3)};
}

Outcome mu_spectra(Context&) {
  const FieldSpec F11 = FieldSpec::prime(11);
  const auto s2 = mu_spectrum(R_lambda(Scalar::from_int(F11, 2)));
  const auto s3 = mu_spectrum(R_lambda(Scalar::from_int(F11, 3)));
  bool disjoint = true;
  for (const auto& a : s2)
    for (const auto& b : s3) disjoint = disjoint && !(a == b);
  return {s2 == scalars(F11, {2, 6}) && s3 == scalars(F11, {3, 4}) && disjoint,
          "R_2 " + join(s2) + ", R_3 " + join(s3)};
}

Outcome graded_splitting(Context&) {
  bool all = true;
  std::string failures;
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (long long lambda : {0, 1, 2}) {
      const auto report = verify_graded_splitting(Scalar::from_int(field, lambda));
      for (const auto& c : report.clauses) {
        if (!c.passed) failures += " " + field.to_string() + "/" + std::to_string(lambda) + ":" + c.name;
      }
      all = all && report.passed();
    }
  }
  // Negative control: adding the unit of B16 to N breaks N*N = 0.
  const Algebra B = B16_hat(Scalar::from_int(FieldSpec::rationals(), 1));
  std::vector<Element> R = {B.basis(b16::dim), B.basis(b16::x), B.basis(b16::y), B.basis(b16::w)};
  std::vector<Element> N = {B.basis(b16::one)};
  for (std::size_t i = b16::h1; i < b16::w; ++i) N.push_back(B.basis(i));
  const auto control = check_graded_splitting(B, R, N);
  const bool control_fails = !control.clauses[1].passed;
  return {all && control_fails, std::string("6 cases ") + (all ? "pass" : "fail:" + failures) +
                                    (control_fails ? "; control rejected" : "; control accepted")};
}

Outcome b16_homotope_idempotents(Context&) {
  const FieldSpec F2 = FieldSpec::prime(2);
  std::ostringstream os;
  bool ok = true;
  for (long long lambda : {0, 1}) {
    const Algebra A = left_delta_homotope(B16(F2), delta16(Scalar::from_int(F2, lambda)));
    const auto idem = enumerate_idempotents(A, std::uint64_t{1} << 16);
    ok = ok && idem.size() == 1 && is_zero(idem[0]);
    os << "lambda=" << lambda << ": " << idem.size() << " idempotent(s) in 2^16; ";
  }
  return {ok, os.str()};
}

Outcome well_tempered(Context&) {
  const FieldSpec F5 = FieldSpec::prime(5);
  const Algebra B = B16(F5);
  const Algebra M = mat_over(B, 2);
  bool ok = true;
  std::ostringstream os;
  for (long long lambda : {0, 1, 2}) {
    const auto delta = delta16(Scalar::from_int(F5, lambda));
    const bool lam = is_well_tempered(M, Lambda(B, delta));
    const bool del = is_well_tempered(B, delta);
    ok = ok && lam && !del;
    os << "lambda=" << lambda << ": Lambda " << lam << ", Delta " << del << "; ";
  }
  return {ok, os.str()};
}

Outcome corner_theorem(Context&) {
  const FieldSpec F5 = FieldSpec::prime(5);
  const Scalar lambda = Scalar::one(F5);
  const Algebra B = B16(F5);
  const Algebra M = mat_over(B, 2);
  const Algebra Mhat = augment_unit(left_delta_homotope(M, Lambda(B, delta16(lambda))));
  const Element e = append_zero(diag2(B, *B.unit(), B.zero()));
  const Element eps = *Mhat.unit() - e;

  const Corner ce = corner_subalgebra(Mhat, e);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < B.dim(); ++i) cols.push_back(*ce.coordinates.of(append_zero(diag2(B, B.basis(i), B.zero()))));
  const bool e_iso = ce.algebra.dim() == 16 &&
                     is_isomorphism_witness(B, ce.algebra, LinearMap(Matrix::from_columns(F5, cols, 16)));

  const Corner cf = corner_subalgebra(Mhat, eps);
  const Algebra Bhat = B16_hat(lambda);
  bool eps_iso = cf.algebra.dim() == 17;
  if (eps_iso) {
    cols.clear();
    for (std::size_t i = 0; i < B.dim(); ++i) cols.push_back(*cf.coordinates.of(append_zero(diag2(B, B.zero(), B.basis(i)))));
    cols.push_back(*cf.coordinates.of(eps));
    eps_iso = is_isomorphism_witness(Bhat, cf.algebra, LinearMap(Matrix::from_columns(F5, cols, 17)));
  }
  std::ostringstream os;
  os << "dim M^=" << Mhat.dim() << ", e-corner dim " << ce.algebra.dim() << " witness " << e_iso << ", eps-corner dim "
     << cf.algebra.dim() << " witness " << eps_iso;
  return {Mhat.dim() == 65 && e_iso && eps_iso, os.str()};
}

Outcome isotopy_invariance(Context& ctx) {
  const FieldSpec F = FieldSpec::prime(101);
  const std::size_t n = ctx.samples(50, 10);
  std::size_t good = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const Trilinear m = random_tensor(ctx.rng, F, {4, 4, 4});
    const HomotopyTriple t{LinearMap(random_invertible(ctx.rng, F, 4)), LinearMap(random_invertible(ctx.rng, F, 4)),
                           LinearMap(random_invertible(ctx.rng, F, 4))};
    const Trilinear moved = act(m, t);
    bool ok = true;
    for (const auto* f : {&t.f1, &t.f2, &t.f3}) {
      const Slot slot = slot_from_int(static_cast<int>(f - &t.f1) + 1);
      const auto pullback = det_poly(m, slot).substitute_linear(f->matrix().transpose());
      ok = ok && proportional(det_poly(moved, slot), pullback);
    }
    good += ok;
  }
  return {good == n, std::to_string(good) + "/" + std::to_string(n) + " algebras over F_101, all three slots"};
}

Outcome cone_proposition(Context& ctx) {
  const FieldSpec F = FieldSpec::prime(101);
  const std::size_t n = ctx.samples(20, 5);
  std::size_t good = 0, total = 0;
  std::string witness;
  for (std::size_t s = 0; s < n; ++s) {
    const Trilinear m = random_tensor(ctx.rng, F, {4, 4, 4});
    for (std::size_t r = 1; r <= 3; ++r) {
      Matrix f;
      do {
        f = random_matrix(ctx.rng, F, 4, r) * random_matrix(ctx.rng, F, r, 4);
      } while (rank(f) != r);
      const auto report = cone_check(m, LinearMap(f));
      ++total;
      good += report.passed;
      if (!report.passed && witness.empty()) witness = "; " + report.witness;
    }
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " (algebra, rank) cases" + witness};
}

Outcome pencil_derivative(Context& ctx) {
  const FieldSpec Q = FieldSpec::rationals();
  const std::size_t n = ctx.samples(10, 3);
  const auto x = Polynomial::variable(Q, 3, 0);
  const auto y = Polynomial::variable(Q, 3, 1);
  const auto eps = Polynomial::variable(Q, 3, 2);
  std::size_t good = 0;
  for (std::size_t s = 0; s < n; ++s) {
    Vector bhat, b;
    for (int i = 0; i < 4; ++i) {
      bhat.push_back(random_scalar(ctx.rng, Q));
      b.push_back(random_scalar(ctx.rng, Q));
    }
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
      PolyMatrix m(Q, 3, 4, 4);
      for (std::size_t j = 0; j < 4; ++j) m(j, j) = x + bhat[j] * y;
      for (std::size_t k = 0; k < 4; ++k) m(i, k) += b[k] * (eps * y);
      Polynomial expected = b[i] * y;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i) expected = expected * (x + bhat[j] * y);
      ok = ok && determinant(m).coefficient_in(2, 1) == expected;
    }
    good += ok;
  }
  return {good == n, std::to_string(good) + "/" + std::to_string(n) + " random (Bhat, b) over Q, every i"};
}

Outcome infinitude_sample(Context& ctx) {
  const FieldSpec Q = FieldSpec::rationals();
  const Vector bhat = scalars(Q, {1, 2, 3, 4});
  const Vector b = scalars(Q, {1, 1, 1, 1});
  std::set<std::string> js;
  std::size_t singular = 0;
  for (int s = 0; s < 20; ++s) {
    Vector u;
    for (int i = 0; i < 4; ++i) u.push_back(random_scalar(ctx.rng, Q, 50));
    const auto inv = quartic_invariants(pencil_522(bhat, b, u));
    if (inv.j) {
      js.insert(inv.j->to_string());
    } else {
      ++singular;
    }
  }
  std::ostringstream os;
  os << "seed " << ctx.options.seed << ": " << js.size() << " distinct j among 20 samples (" << singular
     << " with disc = 0)";
  return {js.size() >= 15, os.str()};
}

// Determinant by permutation expansion, kept separate from the library's
// elimination routines.
mpq_class permutation_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Res(q_x, q_y) for q = sum_k a_k x^(4-k) y^k, via the Sylvester matrix.
mpq_class derivative_resultant(const BinaryQuartic& q) {
  std::vector<mpq_class> dx(4), dy(4);
  for (int k = 0; k < 4; ++k) dx[k] = (4 - k) * q.a[k].rational();
  for (int k = 1; k <= 4; ++k) dy[k - 1] = k * q.a[k].rational();
  std::vector<std::vector<mpq_class>> syl(6, std::vector<mpq_class>(6, 0));
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 4; ++k) {
      syl[r][r + k] = dx[k];
      syl[3 + r][r + k] = dy[k];
    }
  }
  return permutation_det(syl);
}

Outcome quartic_soundness(Context& ctx) {
  const FieldSpec Q = FieldSpec::rationals();
  const std::size_t n = ctx.samples(100, 25);
  std::size_t good = 0, degenerate = 0;
  std::optional<mpq_class> ratio;
  bool ratio_constant = true;
  for (std::size_t s = 0; s < n; ++s) {
    BinaryQuartic q;
    if (s % 4 == 3) {
      // (alpha x + beta y)^2 times a random quadratic has a repeated root.
      const auto alpha = random_scalar(ctx.rng, Q), beta = nonzero_scalar(ctx.rng, Q);
      const auto l = Polynomial::linear_form(Q, {alpha, beta});
      const auto quad = Polynomial::linear_form(Q, {nonzero_scalar(ctx.rng, Q), random_scalar(ctx.rng, Q)}) *
                        Polynomial::linear_form(Q, {random_scalar(ctx.rng, Q), nonzero_scalar(ctx.rng, Q)});
      q = BinaryQuartic::from_polynomial(l * l * quad);
    } else {
      do {
        for (auto& c : q.a) c = random_scalar(ctx.rng, Q);
      } while (q.is_zero());
    }
    const auto inv = quartic_invariants(q);
    const auto g = random_invertible(ctx.rng, Q, 2);
    const auto c = nonzero_scalar(ctx.rng, Q);
    const auto moved = quartic_invariants(q.substitute(g).scaled(c));
    const mpq_class res = derivative_resultant(q);
    bool ok = inv.disc.is_zero() == (res == 0) && moved.disc.is_zero() == inv.disc.is_zero();
    if (inv.disc.is_zero()) {
      ++degenerate;
    } else {
      ok = ok && inv.j && moved.j && *inv.j == *moved.j;
      const mpq_class r = inv.disc.rational() / res;
      if (!ratio) ratio = r;
      ratio_constant = ratio_constant && *ratio == r;
    }
    good += ok;
  }
  std::ostringstream os;
  os << good << "/" << n << " quartics (" << degenerate << " with disc = 0), disc/Res constant=" << ratio_constant;
  return {good == n && ratio_constant, os.str()};
}

Element matrix_as_element(const Matrix& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

Outcome mat_rank_example(Context& ctx) {
  const FieldSpec Q = FieldSpec::rationals();
  const Algebra A = matrix_algebra(Q, 2);
  auto rank_one = [&] {
    for (;;) {
      const auto m = random_matrix(ctx.rng, Q, 2, 1) * random_matrix(ctx.rng, Q, 1, 2);
      if (rank(m) == 1) return m;
    }
  };
  const Matrix d1 = rank_one(), d2 = rank_one();
  const Element e11 = A.basis(0);
  auto to_e11 = [&](const Matrix& d) {
    const auto nf = rank_normal_form(d);
    return conjugation_isomorphism(A, matrix_as_element(d), matrix_as_element(nf.left), matrix_as_element(nf.right));
  };
  const auto c1 = to_e11(d1);
  const auto c2 = to_e11(d2);
  const Algebra A1 = left_delta_homotope(A, matrix_as_element(d1));
  const Algebra A2 = left_delta_homotope(A, matrix_as_element(d2));
  const Algebra A11 = left_delta_homotope(A, e11);
  const bool normal = c1.delta_prime == e11 && c2.delta_prime == e11;
  const bool halves = is_isomorphism_witness(A1, A11, c1.psi) && is_isomorphism_witness(A2, A11, c2.psi);
  const LinearMap composite = c2.psi.inverse().after(c1.psi);
  const bool witness = is_isomorphism_witness(A1, A2, composite);
  std::ostringstream os;
  os << "Delta=" << A.format(matrix_as_element(d1)) << ", Delta'=" << A.format(matrix_as_element(d2))
     << "; both normalize to E11=" << normal << ", composite witness=" << witness;
  return {normal && halves && witness, os.str()};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)(Context&);
};

const Criterion criteria[] = {
    {1, "B16 construction", 1, b16_construction},
    {2, "B_lambda idempotents over F_7", 1, b_lambda_idempotents},
    {3, "commutator fingerprints separate B_2, B_3", 1, commutator_fingerprints},
    {4, "R_lambda mu-spectra over F_11", 30, mu_spectra},
    {5, "graded splitting of the B16 homotope", 5, graded_splitting},
    {6, "no nonzero idempotents in B16_Delta over F_2", 10, b16_homotope_idempotents},
    {7, "well-tempered Lambda in Mat_2(B16)", 30, well_tempered},
    {8, "corner subalgebras of the augmented homotope", 60, corner_theorem},
    {9, "isotopy invariance of determinantal polynomials", 30, isotopy_invariance},
    {10, "cone check for singular f", 30, cone_proposition},
    {11, "pencil derivative formula", 5, pencil_derivative},
    {12, "(5,4,2) j-invariant sample", 10, infinitude_sample},
    {13, "quartic invariant soundness", 10, quartic_soundness},
    {14, "Mat_2 rank-one homotopes", 1, mat_rank_example},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    Context ctx{options, Rng(options.seed + static_cast<std::uint64_t>(c.id))};
    CriterionResult r{c.id, c.name, false, "", 0, c.limit_seconds};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(ctx);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += "; exceeded time limit";
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace homotopelab
