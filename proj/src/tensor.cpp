#include "homotopelab/tensor.hpp"

#include <algorithm>
#include <thread>

namespace homotopelab {

Slot slot_from_int(int n) {
  if (n < 1 || n > 3) throw Error(Errc::invalid_argument, "slot must be 1, 2 or 3, got " + std::to_string(n));
  return static_cast<Slot>(n);
}

namespace {

std::size_t slot_index(Slot s) { return static_cast<std::size_t>(s) - 1; }

// The two remaining slots, lower index first.
std::array<std::size_t, 2> other_slots(Slot s) {
  switch (s) {
    case Slot::first: return {1, 2};
    case Slot::second: return {0, 2};
    case Slot::third: return {0, 1};
  }
  return {1, 2};
}

// Overflow-safe p^d; saturates at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t p, std::size_t d) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (p != 0 && result > UINT64_MAX / p) return UINT64_MAX;
    result *= p;
  }
  return result;
}

std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const auto inv = invmod(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const auto f = mulmod(a[i * cols + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = (a[i * cols + j] + mulmod(p - f, a[r * cols + j], p)) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

void Trilinear::check_index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dims_[0] || j >= dims_[1] || k >= dims_[2]) {
    throw Error(Errc::dimension_mismatch, "tensor index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                              std::to_string(k) + ") out of range");
  }
}

Scalar Trilinear::at(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, j, k);
  auto it = entries_.find({i, j, k});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

void Trilinear::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  check_index(i, j, k);
  if (!(value.field() == field_)) throw Error(Errc::field_mismatch, "tensor entry");
  if (value.is_zero()) {
    entries_.erase({i, j, k});
  } else {
    entries_[{i, j, k}] = value;
  }
}

void Trilinear::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  check_index(i, j, k);
  if (!(value.field() == field_)) throw Error(Errc::field_mismatch, "tensor entry");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(Index{i, j, k}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

HomotopyTriple HomotopyTriple::identity(const FieldSpec& field, const Trilinear::Index& dims) {
  return {LinearMap::identity(field, dims[0]), LinearMap::identity(field, dims[1]), LinearMap::identity(field, dims[2])};
}

Matrix contract_slot(const Trilinear& m, Slot slot, const Vector& v) {
  const auto s = slot_index(slot);
  if (v.size() != m.dims()[s]) throw Error(Errc::dimension_mismatch, "contraction vector length");
  const auto [ra, rb] = other_slots(slot);
  Matrix out(m.field(), m.dims()[ra], m.dims()[rb]);
  for (const auto& [idx, value] : m.entries()) {
    if (v[idx[s]].is_zero()) continue;
    out(idx[ra], idx[rb]) += v[idx[s]] * value;
  }
  return out;
}

PolyMatrix contract_slot_symbolic(const Trilinear& m, Slot slot) {
  const auto s = slot_index(slot);
  const auto [ra, rb] = other_slots(slot);
  const std::size_t nvars = m.dims()[s];
  PolyMatrix out(m.field(), nvars, m.dims()[ra], m.dims()[rb]);
  for (const auto& [idx, value] : m.entries()) {
    Exponent e(nvars, 0);
    e[idx[s]] = 1;
    out(idx[ra], idx[rb]).add_term(e, value);
  }
  return out;
}

Trilinear act_on_slot(const Trilinear& m, Slot slot, const Matrix& map) {
  const auto s = slot_index(slot);
  if (map.cols() != m.dims()[s]) throw Error(Errc::dimension_mismatch, "slot map domain");
  if (!(map.field() == m.field())) throw Error(Errc::field_mismatch, "slot map field");
  auto dims = m.dims();
  dims[s] = map.rows();
  // Nonzero rows of each column of the map.
  std::vector<std::vector<std::size_t>> support(map.cols());
  for (std::size_t c = 0; c < map.cols(); ++c)
    for (std::size_t r = 0; r < map.rows(); ++r)
      if (!map(r, c).is_zero()) support[c].push_back(r);
  Trilinear out(m.field(), dims);
  for (const auto& [idx, value] : m.entries()) {
    for (auto r : support[idx[s]]) {
      auto target = idx;
      target[s] = r;
      out.add(target[0], target[1], target[2], map(r, idx[s]) * value);
    }
  }
  return out;
}

Trilinear act(const Trilinear& m, const HomotopyTriple& t) {
  const std::array<const LinearMap*, 3> maps{&t.f1, &t.f2, &t.f3};
  for (std::size_t s = 0; s < 3; ++s) {
    const auto& mat = maps[s]->matrix();
    if (!mat.is_square() || mat.rows() != m.dims()[s]) {
      throw Error(Errc::dimension_mismatch, "homotopy map " + std::to_string(s + 1) + " must be " +
                                                std::to_string(m.dims()[s]) + "x" + std::to_string(m.dims()[s]));
    }
  }
  Trilinear out = act_on_slot(m, Slot::first, t.f1.matrix());
  out = act_on_slot(out, Slot::second, t.f2.matrix());
  return act_on_slot(out, Slot::third, t.f3.matrix());
}

Polynomial det_poly(const Trilinear& m, Slot slot) {
  const auto [ra, rb] = other_slots(slot);
  if (m.dims()[ra] != m.dims()[rb]) {
    throw Error(Errc::non_square, "NonSquareSlots: remaining dimensions " + std::to_string(m.dims()[ra]) + " and " +
                                      std::to_string(m.dims()[rb]));
  }
  return det_linear_matrix(contract_slot_symbolic(m, slot)).monic();
}

std::uint64_t rank_stratum_count(const Trilinear& m, Slot slot, std::size_t rank_bound, std::uint64_t budget,
                                 unsigned threads) {
  if (!m.field().is_prime_field()) throw Error(Errc::invalid_argument, "rank strata are counted over F_p only");
  const auto s = slot_index(slot);
  const auto [ra, rb] = other_slots(slot);
  const std::uint64_t p = m.field().modulus();
  const std::size_t d = m.dims()[s];
  const std::size_t rows = m.dims()[ra];
  const std::size_t cols = m.dims()[rb];
  const std::uint64_t total = saturating_power(p, d);
  if (total > budget) {
    throw Error(Errc::budget_exceeded, std::to_string(p) + "^" + std::to_string(d) + " points exceed budget " +
                                           std::to_string(budget));
  }
  // slices[q] is the matrix contributed by coordinate q, as residues.
  std::vector<std::vector<std::uint64_t>> slices(d, std::vector<std::uint64_t>(rows * cols, 0));
  for (const auto& [idx, value] : m.entries()) slices[idx[s]][idx[ra] * cols + idx[rb]] = value.residue();

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> coords(d);
    std::vector<std::uint64_t> work(rows * cols);
    for (std::uint64_t index = begin; index < end; ++index) {
      std::uint64_t rest = index;
      for (std::size_t q = d; q-- > 0;) {
        coords[q] = rest % p;
        rest /= p;
      }
      std::fill(work.begin(), work.end(), 0);
      for (std::size_t q = 0; q < d; ++q) {
        if (coords[q] == 0) continue;
        for (std::size_t e = 0; e < work.size(); ++e)
          if (slices[q][e] != 0) work[e] = (work[e] + mulmod(coords[q], slices[q][e], p)) % p;
      }
      if (rank_mod_p(work, rows, cols, p) <= rank_bound) ++count;
    }
    return count;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  if (threads <= 1) return count_range(0, total);
  std::vector<std::uint64_t> partial(threads, 0);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, t * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, t, begin, end] { partial[t] = count_range(begin, end); });
    }
  }
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

Trilinear restrict_slot(const Trilinear& m, Slot slot, const std::vector<Vector>& basis) {
  const auto s = slot_index(slot);
  for (const auto& w : basis)
    if (w.size() != m.dims()[s]) throw Error(Errc::dimension_mismatch, "restriction vector length");
  const Matrix w = Matrix::from_rows(m.field(), basis, m.dims()[s]);
  if (rank(w) < basis.size()) throw Error(Errc::dependent_basis, "restriction basis is linearly dependent");
  return act_on_slot(m, slot, w);
}

ConeReport cone_check(const Trilinear& m, const LinearMap& f) {
  const std::size_t d = m.dims()[0];
  if (f.matrix().rows() != d || f.matrix().cols() != d) throw Error(Errc::dimension_mismatch, "cone map size");
  const FieldSpec& field = m.field();
  ConeReport report;
  const Trilinear homotope = act_on_slot(m, Slot::first, f.matrix());
  report.homotope_poly = det_poly(homotope, Slot::first);
  const Matrix adjoint = f.matrix().transpose();
  report.pullback_poly = det_poly(m, Slot::first).substitute_linear(adjoint).monic();
  report.pullback_matches = proportional(report.homotope_poly, report.pullback_poly);

  const auto apex = kernel_basis(adjoint);
  report.apex_dim = apex.size();
  report.constant_along_apex = true;
  // Translate t -> t + s*k with a fresh variable s; nothing may depend on s.
  std::vector<Polynomial> embed;
  for (std::size_t i = 0; i < d; ++i) embed.push_back(Polynomial::variable(field, d + 1, i));
  const Polynomial embedded = report.homotope_poly.substitute(embed);
  for (std::size_t a = 0; a < apex.size() && report.constant_along_apex; ++a) {
    std::vector<Polynomial> shifted = embed;
    for (std::size_t i = 0; i < d; ++i) shifted[i] += apex[a][i] * Polynomial::variable(field, d + 1, d);
    if (!(report.homotope_poly.substitute(shifted) == embedded)) {
      report.constant_along_apex = false;
      report.witness = "polynomial varies along apex vector " + std::to_string(a);
    }
  }
  if (!report.pullback_matches) {
    report.witness = "homotope " + report.homotope_poly.to_string() + " vs pullback " + report.pullback_poly.to_string();
  }
  report.passed = report.pullback_matches && report.constant_along_apex;
  return report;
}

BinaryQuartic pencil_522(const Vector& bhat_diag, const Vector& b, const Vector& u) {
  if (bhat_diag.size() != 4 || b.size() != 4 || u.size() != 4) {
    throw Error(Errc::dimension_mismatch, "pencil needs 4 diagonal entries, a 4-row b and a 4-column u");
  }
  const FieldSpec field = bhat_diag[0].field();
  if (field.characteristic() == 2 || field.characteristic() == 3) {
    throw Error(Errc::bad_characteristic, "pencil quartic needs characteristic other than 2, 3");
  }
  PolyMatrix pencil(field, 2, 4, 4);
  const auto x = Polynomial::variable(field, 2, 0);
  const auto y = Polynomial::variable(field, 2, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Scalar entry = u[i] * b[j];
      if (i == j) {
        entry += bhat_diag[i];
        pencil(i, j) = x;
      }
      pencil(i, j) += entry * y;
    }
  }
  return BinaryQuartic::from_polynomial(det_linear_matrix(pencil));
}

bool pihs_curve_criterion(unsigned degree, unsigned ambient_dim) {
  if (degree < 1 || ambient_dim < 1) throw Error(Errc::invalid_argument, "degree and ambient dimension must be >= 1");
  return degree <= ambient_dim + 1;
}

}  // namespace homotopelab
