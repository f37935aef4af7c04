#include "adinkra/error.hpp"

namespace adinkra {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_too_large: return "dimension-too-large";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::size_guard: return "size-guard";
    case Errc::out_of_range: return "out-of-range";
    case Errc::not_doubly_even: return "not-doubly-even";
    case Errc::not_even: return "not-even";
    case Errc::equal_colors: return "equal-colors";
    case Errc::infeasible: return "infeasible";
    case Errc::unknown_vertex: return "unknown-vertex";
    case Errc::color_mismatch: return "color-mismatch";
    case Errc::degree_mismatch: return "degree-mismatch";
    case Errc::order_bound_exceeded: return "order-bound-exceeded";
    case Errc::rank_mismatch: return "rank-mismatch";
    case Errc::rank_too_large: return "rank-too-large";
    case Errc::unsupported_kernel: return "unsupported-kernel";
    case Errc::non_integral_genus: return "non-integral-genus";
    case Errc::invalid_adinkra: return "invalid-adinkra";
    case Errc::mixed_codes: return "mixed-codes";
    case Errc::theorem_violation: return "theorem-violation";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace adinkra
