#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homotopelab/linalg.hpp"
#include "homotopelab/tensor.hpp"

namespace homotopelab {

using Element = Vector;

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 24;

/// A finite-dimensional algebra given by structure constants
/// e_i e_j = sum_k c_{ijk} e_k, stored as a (dim, dim, dim) trilinear tensor.
class Algebra {
 public:
  /// Throws Errc::dimension_mismatch unless the tensor is cubical, and
  /// Errc::not_unital when a claimed unit fails u e_i = e_i u = e_i.
  explicit Algebra(Trilinear structure, std::optional<Element> unit = std::nullopt,
                   std::vector<std::string> labels = {});

  /// Builds the structure from a product table on basis pairs.
  static Algebra from_products(const FieldSpec& field, std::size_t dim,
                               const std::function<Element(std::size_t, std::size_t)>& product,
                               std::optional<Element> unit = std::nullopt, std::vector<std::string> labels = {});

  const FieldSpec& field() const noexcept { return structure_.field(); }
  std::size_t dim() const noexcept { return dim_; }
  const Trilinear& structure() const noexcept { return structure_; }
  const std::optional<Element>& unit() const noexcept { return unit_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const;

  Element zero() const { return zero_vector(field(), dim_); }
  Element basis(std::size_t i) const { return unit_vector(field(), dim_, i); }
  /// Parses an element from a label-free coordinate list.
  Element element(const std::vector<long long>& coords) const;

  Element mul(const Element& a, const Element& b) const;
  /// e_i * e_j
  Element basis_product(std::size_t i, std::size_t j) const;

  struct Term {
    std::size_t j;
    std::size_t k;
    Scalar c;
  };
  /// Nonzero constants c_{ijk} with first index i.
  const std::vector<Term>& row(std::size_t i) const { return rows_[i]; }

  /// Pretty form "3/2*xy - e2".
  std::string format(const Element& a) const;

 private:
  void check(const Element& a) const;

  Trilinear structure_;
  std::size_t dim_ = 0;
  std::optional<Element> unit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> rows_;
};

/// Solves for a two-sided unit; nullopt when none exists.
std::optional<Element> find_unit(const Algebra& a);
/// The same algebra with a verified unit attached (found or given).
Algebra with_unit(const Algebra& a, std::optional<Element> unit = std::nullopt);
/// Reduces structure constants into another field (Q -> F_p).
Algebra change_field(const Algebra& a, const FieldSpec& field);
Element change_field(const Element& a, const FieldSpec& field);

/// Matrix of x -> a x and of x -> x a.
Matrix left_multiplication(const Algebra& A, const Element& a);
Matrix right_multiplication(const Algebra& A, const Element& a);

/// Law a x a' = g(f1(a) f2(a')); carries no unit metadata.
Algebra homotope(const Algebra& A, const LinearMap& f1, const LinearMap& f2, const LinearMap& g);
/// a x a' = (a delta) a'
Algebra left_delta_homotope(const Algebra& A, const Element& delta);
/// a x a' = a (delta a')
Algebra right_delta_homotope(const Algebra& A, const Element& delta);
/// Adjoins a two-sided unit as the last basis vector.
Algebra augment_unit(const Algebra& A);

bool is_associative(const Algebra& A);
bool is_commutative(const Algebra& A);
Element commutator(const Algebra& A, const Element& a, const Element& b);
bool is_idempotent(const Algebra& A, const Element& a);
bool is_square_zero(const Algebra& A, const Element& a);

/// Two-sided inverse; nullopt when a is not a unit. Throws Errc::not_unital
/// when A has no unit.
std::optional<Element> try_invert_element(const Algebra& A, const Element& a);
/// Throws Errc::not_a_unit.
Element invert_element(const Algebra& A, const Element& a);

struct ConjugationIsomorphism {
  Element delta_prime;  // u delta v
  LinearMap psi;        // x -> v^-1 x u^-1, an isomorphism A_delta -> A_delta'
};
ConjugationIsomorphism conjugation_isomorphism(const Algebra& A, const Element& delta, const Element& u,
                                               const Element& v);

/// phi : A -> B is invertible, multiplicative on basis pairs, and sends unit
/// to unit when both algebras carry one.
bool is_isomorphism_witness(const Algebra& A, const Algebra& B, const LinearMap& phi);

/// span{e_i delta e_j} = A. Throws Errc::not_unital when A has no unit.
bool is_well_tempered(const Algebra& A, const Element& delta);

struct Corner {
  Algebra algebra;
  LinearMap embedding;      // corner coordinates -> ambient coordinates
  Coordinates coordinates;  // ambient -> corner coordinates
};
/// e A e with unit e. Throws Errc::not_idempotent.
Corner corner_subalgebra(const Algebra& A, const Element& e);

struct ProbeResult {
  enum class Outcome { primitive, split };
  Outcome outcome = Outcome::primitive;
  /// "corner" (exhaustive over eps A eps) or "ansatz".
  std::string search;
  std::uint64_t candidates = 0;
  /// a + b = eps with a, b nonzero orthogonal idempotents.
  std::optional<std::pair<Element, Element>> split;
};

/// Looks for eps = a + b with a, b nonzero orthogonal idempotents over F_p.
/// Without an ansatz it scans the whole corner eps A eps (every such a lies
/// there); with one it scans span(ansatz). Throws Errc::budget_exceeded,
/// Errc::not_idempotent.
ProbeResult idempotent_decomposition_probe(const Algebra& A, const Element& eps,
                                           std::uint64_t budget = default_enumeration_budget,
                                           const std::vector<Element>& ansatz = {});

}  // namespace homotopelab
