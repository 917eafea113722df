#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homotopelab/algebra.hpp"

namespace homotopelab {

// Censuses run over the F_p-rational points of an algebra. They are used as
// distinguishing invariants, not as point counts of varieties over the
// algebraic closure. Each throws Errc::budget_exceeded before scanning when
// the search space is larger than the budget, and Errc::invalid_argument for
// algebras over Q.

/// All a with a a = a, in lexicographic coordinate order.
std::vector<Element> enumerate_idempotents(const Algebra& A, std::uint64_t budget = default_enumeration_budget,
                                           unsigned threads = 0);
/// All a with a a = 0, in lexicographic coordinate order.
std::vector<Element> enumerate_square_zero(const Algebra& A, std::uint64_t budget = default_enumeration_budget,
                                           unsigned threads = 0);

/// Sorted set of mu with z1 z2 = mu z2 z1 != 0 over pairs of square-zero
/// elements. The pair scan is budgeted separately by |S|^2.
std::vector<Scalar> mu_spectrum(const Algebra& A, std::uint64_t budget = default_enumeration_budget);

/// Sorted multiset of alpha with [u, v] = alpha t, over ordered pairs of
/// distinct nonzero idempotents u, v and nonzero idempotents t.
std::vector<Scalar> idempotent_commutator_fingerprint(const Algebra& A,
                                                      std::uint64_t budget = default_enumeration_budget);

struct SplittingClause {
  std::string name;
  bool passed = false;
};

struct SplittingReport {
  std::vector<SplittingClause> clauses;
  bool passed() const;
};

/// Subspace clauses for a candidate splitting: R closed under the product,
/// N N = 0, R N in N, N R in N, R meet N = 0.
SplittingReport check_graded_splitting(const Algebra& A, const std::vector<Element>& R,
                                       const std::vector<Element>& N);

/// The splitting of B16_hat(lambda): R = span(1^, x, y, w), N = the other
/// twelve non-unit words, plus x x = 0, y y = 0 and x y - lambda y x = 0.
SplittingReport verify_graded_splitting(const Scalar& lambda);

}  // namespace homotopelab
