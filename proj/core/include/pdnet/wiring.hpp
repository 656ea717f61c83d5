#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdnet/matrix.hpp"
#include "pdnet/quiver.hpp"

namespace pdnet {

enum class WireColor { blue, red };

std::string_view color_name(WireColor c) noexcept;  // "b" | "r"
WireColor color_from_name(std::string_view name);

/// Crossing of the two lines of one color at heights row and row + 1.
struct Crossing {
  WireColor color = WireColor::blue;
  std::size_t row = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Two families of n lines. Each color's row word must be a reduced word for
/// the longest permutation. Blue lines are numbered 1..n bottom to top at
/// their right ends, red lines at their left ends.
struct DoubleWiringDiagram {
  std::size_t n = 1;
  std::vector<Crossing> crossings;

  friend bool operator==(const DoubleWiringDiagram&, const DoubleWiringDiagram&) = default;
};

struct DiagramViolation {
  std::size_t index;  ///< offending crossing, or crossings.size() for an incomplete word
  std::string message;
};

std::optional<DiagramViolation> validate_diagram(const DoubleWiringDiagram& d);

/// Region of row `row` (between heights row and row + 1; row n is the top)
/// bounded by the crossings at `left` / `right` of that row.
struct Chamber {
  std::size_t row = 0;
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
  IndexSet blue;  ///< I: blue lines passing below
  IndexSet red;   ///< J: red lines passing below
  bool bounded = false;

  /// Half-open range [begin, end) of crossing positions strictly inside the
  /// chamber.
  [[nodiscard]] std::size_t span_begin() const { return left ? *left + 1 : 0; }
  [[nodiscard]] std::size_t span_end(std::size_t crossing_count) const { return right ? *right : crossing_count; }
  [[nodiscard]] std::string label() const { return index_label(blue, red); }

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// The n^2 chambers with |I| = |J| >= 1, ordered by row and then left to
/// right. The empty bottom chamber (minor 1) is not listed.
std::vector<Chamber> chambers(const DoubleWiringDiagram& d);

struct ChamberValue {
  Chamber chamber;
  GaussianRational value;
};

std::vector<ChamberValue> chamber_minors(const DoubleWiringDiagram& d, const Matrix& m);

struct WiringQuiver {
  std::vector<Chamber> vertices;
  Quiver quiver;  ///< vertex k is vertices[k]; mutable iff bounded
};

/// Quiver of the diagram from the four chamber-adjacency rules. Throws
/// std::logic_error if the rules ever produce a 2-cycle.
WiringQuiver build_quiver(const DoubleWiringDiagram& d);

/// Diagram whose blue crossings precede its red crossings in every row:
/// blue word (1..n-1, 1..n-2, ..., 1), red word its image under i -> n - i.
/// The postcondition (one blue-left/red-right chamber per row,
/// labelled ([1,k],[1,k]); frozen top chamber) is checked on construction.
DoubleWiringDiagram standard_pd_diagram(std::size_t n);

/// Index into the chamber list of the blue-left/red-right chamber of row k,
/// if there is exactly one.
std::optional<std::size_t> blue_red_chamber(const DoubleWiringDiagram& d, const std::vector<Chamber>& ch,
                                            std::size_t row);

/// Frozen vertices boxed, mutable ones oval, labels "I|J".
std::string wiring_to_dot(const WiringQuiver& q);

}  // namespace pdnet
