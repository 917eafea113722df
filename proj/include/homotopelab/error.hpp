#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homotopelab {

enum class Errc {
  division_by_zero,
  field_mismatch,
  not_prime,
  parse_error,
  dimension_mismatch,
  arity_mismatch,
  non_square,
  not_invertible,
  no_solution,
  dependent_basis,
  too_large,
  zero_quartic,
  bad_characteristic,
  budget_exceeded,
  not_a_unit,
  not_unital,
  not_idempotent,
  cyclic_quiver,
  zero_lambda,
  invalid_argument,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace homotopelab
