#include "homotopelab/enumerate.hpp"

namespace homotopelab {

ResidueAlgebra::ResidueAlgebra(const Algebra& A) : field_(A.field()), p_(A.field().modulus()), dim_(A.dim()) {
  if (!field_.is_prime_field()) throw Error(Errc::invalid_argument, "residue kernels need an algebra over F_p");
  rows_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (const auto& t : A.row(i))
      rows_[i].push_back({static_cast<std::uint32_t>(t.j), static_cast<std::uint32_t>(t.k), t.c.residue()});
}

void ResidueAlgebra::mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
  std::fill(out, out + dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (const auto& t : rows_[i]) {
      if (b[t.j] == 0) continue;
      out[t.k] = (out[t.k] + mulmod(mulmod(a[i], b[t.j], p_), t.c, p_)) % p_;
    }
  }
}

Element ResidueAlgebra::to_element(const std::uint64_t* a) const {
  Element e;
  e.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) e.push_back(Scalar::from_int(field_, static_cast<long long>(a[i])));
  return e;
}

std::vector<std::uint64_t> ResidueAlgebra::from_element(const Element& a) const {
  if (a.size() != dim_) throw Error(Errc::dimension_mismatch, "element length");
  std::vector<std::uint64_t> r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = a[i].residue();
  return r;
}

std::uint64_t point_count(std::uint64_t p, std::size_t d) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (result > UINT64_MAX / p) return UINT64_MAX;
    result *= p;
  }
  return result;
}

void require_budget(std::uint64_t p, std::size_t d, std::uint64_t budget, const std::string& what) {
  if (point_count(p, d) > budget) {
    throw Error(Errc::budget_exceeded, what + ": " + std::to_string(p) + "^" + std::to_string(d) +
                                           " points exceed budget " + std::to_string(budget));
  }
}

void decode_point(std::uint64_t index, std::uint64_t p, std::vector<std::uint64_t>& coords) {
  for (std::size_t q = coords.size(); q-- > 0;) {
    coords[q] = index % p;
    index /= p;
  }
}

}  // namespace homotopelab
