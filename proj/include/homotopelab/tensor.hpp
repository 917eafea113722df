#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homotopelab/linalg.hpp"
#include "homotopelab/poly.hpp"
#include "homotopelab/quartic.hpp"

namespace homotopelab {

enum class Slot : int { first = 1, second = 2, third = 3 };

/// Throws Errc::invalid_argument unless n is 1, 2 or 3.
Slot slot_from_int(int n);

inline constexpr std::uint64_t default_stratum_budget = 100'000'000;

/// A tensor in V1 (x) V2 (x) V3 stored as sparse entries t[i][j][k].
class Trilinear {
 public:
  using Index = std::array<std::size_t, 3>;
  using Entries = std::map<Index, Scalar>;

  Trilinear() = default;
  Trilinear(const FieldSpec& field, Index dims) : field_(field), dims_(dims) {}

  const FieldSpec& field() const noexcept { return field_; }
  const Index& dims() const noexcept { return dims_; }
  std::size_t dim(Slot s) const { return dims_[static_cast<std::size_t>(s) - 1]; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  Scalar at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  friend bool operator==(const Trilinear&, const Trilinear&) = default;

 private:
  void check_index(std::size_t i, std::size_t j, std::size_t k) const;

  FieldSpec field_;
  Index dims_{0, 0, 0};
  Entries entries_;
};

/// Maps f_i : V_i -> V_i acting factor-wise, g.(v1 (x) v2 (x) v3) = g1 v1 (x) g2 v2 (x) g3 v3.
struct HomotopyTriple {
  LinearMap f1;
  LinearMap f2;
  LinearMap f3;

  static HomotopyTriple identity(const FieldSpec& field, const Trilinear::Index& dims);
};

/// sum_s v_s t[..s..] over the other two slots; the lower slot indexes rows.
Matrix contract_slot(const Trilinear& m, Slot slot, const Vector& v);
/// contract_slot with v = (t1, ..., t_d) symbolic.
PolyMatrix contract_slot_symbolic(const Trilinear& m, Slot slot);

/// Applies a square triple; throws Errc::dimension_mismatch.
Trilinear act(const Trilinear& m, const HomotopyTriple& t);
/// Applies one (possibly rectangular) map to one slot; the slot's new
/// dimension is map.rows().
Trilinear act_on_slot(const Trilinear& m, Slot slot, const Matrix& map);

/// Determinant of the symbolic contraction, made monic (zero stays zero).
/// Throws Errc::non_square when the two remaining dimensions differ.
Polynomial det_poly(const Trilinear& m, Slot slot);

/// Number of v in F_p^d with rank(contract_slot(m, slot, v)) <= rank_bound.
/// The coordinate space is split into disjoint index ranges, one per thread
/// (threads = 0 picks the hardware concurrency). Throws Errc::budget_exceeded
/// when p^d > budget and Errc::invalid_argument over Q.
std::uint64_t rank_stratum_count(const Trilinear& m, Slot slot, std::size_t rank_bound,
                                 std::uint64_t budget = default_stratum_budget, unsigned threads = 0);

/// Pulls the slot back along the subspace spanned by `basis` (vectors in the
/// slot's dual coordinates). Throws Errc::dependent_basis.
Trilinear restrict_slot(const Trilinear& m, Slot slot, const std::vector<Vector>& basis);

struct ConeReport {
  bool passed = false;
  /// det_poly of (f, id, id).m equals the pullback of det_poly(m) up to scalar.
  bool pullback_matches = false;
  /// The homotope's polynomial is unchanged by translation along ker(f^T).
  bool constant_along_apex = false;
  std::size_t apex_dim = 0;
  Polynomial homotope_poly{FieldSpec(), 0};
  Polynomial pullback_poly{FieldSpec(), 0};
  std::string witness;
};

/// Checks the cone structure of the slot-1 determinantal polynomial of the
/// homotope (f, id, id).m: it is det_poly(m) pulled back along f^T, hence
/// constant along the apex ker(f^T).
ConeReport cone_check(const Trilinear& m, const LinearMap& f);

/// det(x I4 + y (diag(bhat) + u b)) as a binary quartic in (x, y); u is a
/// column and b a row. Throws Errc::bad_characteristic in characteristic 2, 3.
BinaryQuartic pencil_522(const Vector& bhat_diag, const Vector& b, const Vector& u);

/// An integral non-degenerate curve of the given degree in P^n has
/// projectively isomorphic hyperplane sections iff degree <= n + 1.
bool pihs_curve_criterion(unsigned degree, unsigned ambient_dim);

}  // namespace homotopelab
