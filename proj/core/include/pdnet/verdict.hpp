#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace pdnet {

enum class PdReason {
  positive_definite,
  not_hermitian,
  zero_leading_minor,
  negative_value,
  non_real_value,
};

/// Stable kebab-case name used in JSON reports.
std::string_view reason_name(PdReason reason) noexcept;

/// Common part of every positive-definiteness verdict. `witness` is the
/// 1-based k of the first failing leading minor / line weight / cluster
/// value when the failure is index-specific.
struct Verdict {
  bool is_pd = false;
  PdReason reason = PdReason::not_hermitian;
  std::optional<std::size_t> witness;
};

}  // namespace pdnet
