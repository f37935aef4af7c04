#pragma once

#include <stdexcept>
#include <string>

namespace adinkra {

enum class Errc {
  dimension_too_large,
  length_mismatch,
  size_guard,
  out_of_range,
  not_doubly_even,
  not_even,
  equal_colors,
  infeasible,
  unknown_vertex,
  color_mismatch,
  degree_mismatch,
  order_bound_exceeded,
  rank_mismatch,
  rank_too_large,
  unsupported_kernel,
  non_integral_genus,
  invalid_adinkra,
  mixed_codes,
  theorem_violation,
  parse_error,
};

const char* to_string(Errc code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace adinkra
