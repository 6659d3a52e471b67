#ifndef STENCILKIT_ERROR_HPP
#define STENCILKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stencilkit {

enum class Errc {
  zero_scale,
  dim_mismatch,
  power_mismatch,
  empty_stencil,
  truncation_too_small,
  not_normalized,
  accuracy_exceeds_truncation,
  mixed_leading_order,
  singular_system,
  unsupported_accuracy,
  stencil_wider_than_grid,
  shape_mismatch,
  no_convergence,
  not_dissipative,
  unstable_for_all_dt,
  non_periodic,
  zero_denominator,
  invalid_argument,
};

const char* errc_name(Errc c);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_scale: return "ZeroScale";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::power_mismatch: return "PowerMismatch";
    case Errc::empty_stencil: return "EmptyStencil";
    case Errc::truncation_too_small: return "TruncationTooSmall";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::accuracy_exceeds_truncation: return "AccuracyExceedsTruncation";
    case Errc::mixed_leading_order: return "MixedLeadingOrder";
    case Errc::singular_system: return "SingularSystem";
    case Errc::unsupported_accuracy: return "UnsupportedAccuracy";
    case Errc::stencil_wider_than_grid: return "StencilWiderThanGrid";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::not_dissipative: return "NotDissipative";
    case Errc::unstable_for_all_dt: return "UnstableForAllDt";
    case Errc::non_periodic: return "NonPeriodic";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace stencilkit

#endif
