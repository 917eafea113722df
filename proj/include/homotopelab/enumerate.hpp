#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "homotopelab/algebra.hpp"

namespace homotopelab {

/// Structure constants of an algebra over F_p as raw residues, for scans.
class ResidueAlgebra {
 public:
  /// Throws Errc::invalid_argument unless A is over a prime field.
  explicit ResidueAlgebra(const Algebra& A);

  std::uint64_t modulus() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }

  /// out = a * b; out must not alias a or b.
  void mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;

  Element to_element(const std::uint64_t* a) const;
  std::vector<std::uint64_t> from_element(const Element& a) const;

 private:
  struct Term {
    std::uint32_t j;
    std::uint32_t k;
    std::uint64_t c;
  };
  FieldSpec field_;
  std::uint64_t p_;
  std::size_t dim_;
  std::vector<std::vector<Term>> rows_;
};

/// p^d, saturating at UINT64_MAX.
std::uint64_t point_count(std::uint64_t p, std::size_t d);
/// Throws Errc::budget_exceeded when p^d > budget.
void require_budget(std::uint64_t p, std::size_t d, std::uint64_t budget, const std::string& what);
/// Writes the base-p digits of index into coords, most significant first, so
/// increasing indices visit F_p^d in lexicographic order.
void decode_point(std::uint64_t index, std::uint64_t p, std::vector<std::uint64_t>& coords);

/// Runs scan(begin, end) over disjoint consecutive ranges of [0, total) on up
/// to `threads` threads and concatenates the per-range results in order.
template <class T, class Scan>
std::vector<T> parallel_collect(std::uint64_t total, unsigned threads, Scan scan) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096 || threads == 1) return scan(std::uint64_t{0}, total);
  std::vector<std::vector<T>> parts(threads);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, t * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&parts, &scan, t, begin, end] { parts[t] = scan(begin, end); });
    }
  }
  std::vector<T> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace homotopelab
