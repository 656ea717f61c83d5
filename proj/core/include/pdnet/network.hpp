#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdnet/jacobi.hpp"
#include "pdnet/matrix.hpp"
#include "pdnet/verdict.hpp"

namespace pdnet {

/// One column of a planar network. Ascending: slanted edge level -> level+1;
/// descending: slanted edge level+1 -> level; diagonal: the horizontal edge on
/// `level` carries `weight`. Every other edge of the chip has weight 1.
struct Chip {
  FactorKind kind = FactorKind::diagonal;
  std::size_t level = 1;
  GaussianRational weight;

  friend bool operator==(const Chip&, const Chip&) = default;
};

/// A node of the grid DAG: level in [1, n] (bottom to top), column in
/// [0, chip count].
struct GridNode {
  std::size_t level = 1;
  std::size_t column = 0;

  friend bool operator==(const GridNode&, const GridNode&) = default;
};

using GridPath = std::vector<GridNode>;

/// Vertex-disjoint paths; paths[k] runs from source I[k] to sink J[k].
struct PathCollection {
  std::vector<GridPath> paths;
};

/// Chips concatenated left to right on n levels. Chip c spans columns c and
/// c + 1; sources are (k, 0), sinks (k, chips.size()).
class PlanarNetwork {
 public:
  explicit PlanarNetwork(std::size_t n, std::vector<Chip> chips = {});

  [[nodiscard]] std::size_t levels() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Chip>& chips() const noexcept { return chips_; }
  [[nodiscard]] std::size_t columns() const noexcept { return chips_.size() + 1; }

  /// Weight of the grid edge from `from` to `to`; nullopt if no such edge.
  [[nodiscard]] std::optional<GaussianRational> edge_weight(GridNode from, GridNode to) const;

  friend bool operator==(const PlanarNetwork&, const PlanarNetwork&) = default;

 private:
  std::size_t n_;
  std::vector<Chip> chips_;
};

Chip chip_from_factor(const JacobiFactor& f);
JacobiFactor factor_from_chip(const Chip& c);

PlanarNetwork network_from_factors(std::span<const JacobiFactor> factors, std::size_t n);

/// (i, j) entry = sum over source-i to sink-j paths of the product of edge
/// weights, by a left-to-right sweep.
Matrix weight_matrix(const PlanarNetwork& net);

/// Delta_{I,J} as the weighted count of vertex-disjoint path collections
/// from sources I to sinks J, evaluated by a column-synchronized frontier.
GaussianRational minor_lgv(const PlanarNetwork& net, const IndexSet& sources, const IndexSet& sinks);

/// Every vertex-disjoint path collection from sources I to sinks J, found by
/// backtracking. Exponential; for tests and small diagrams.
std::vector<PathCollection> disjoint_path_collections(const PlanarNetwork& net, const IndexSet& sources,
                                                      const IndexSet& sinks);

GaussianRational path_weight(const PlanarNetwork& net, const GridPath& path);

/// Chip kinds read descending*, diagonal*, ascending*.
bool is_ldu_shape(const PlanarNetwork& net);

/// d_k = product of the horizontal weights on level k. ShapeError unless
/// is_ldu_shape(net).
std::vector<GaussianRational> line_weights(const PlanarNetwork& net);

struct NetworkVerdict : Verdict {
  std::optional<std::vector<GaussianRational>> line_weights;
};

/// Hermitian check, LDU-form factorization, network, line weights; PD iff
/// every d_k is a positive real.
NetworkVerdict pd_check_network(const Matrix& m);

/// Full-staircase network with the n^2 essential edges weighted by `params`
/// (descending staircase left to right, diagonals bottom to top, ascending
/// staircase left to right). Throws DomainError for a non-positive parameter.
PlanarNetwork essential_tp_network(std::size_t n, std::span<const Rational> params);

/// Level word of the descending staircase: (n-1..1), (n-1..2), ..., (n-1).
std::vector<std::size_t> staircase_word(std::size_t n);

/// Deterministic Graphviz rendering; weight-1 labels omitted.
std::string network_to_dot(const PlanarNetwork& net);

}  // namespace pdnet
