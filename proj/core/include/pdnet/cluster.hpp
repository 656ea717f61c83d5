#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdnet/gaussian.hpp"
#include "pdnet/matrix.hpp"
#include "pdnet/quiver.hpp"
#include "pdnet/verdict.hpp"
#include "pdnet/wiring.hpp"

namespace pdnet {

/// Quiver plus one value per vertex. Labels name the vertex (the chamber it
/// started as) and never change under mutation.
struct Seed {
  Quiver quiver;
  std::vector<GaussianRational> values;
  std::vector<std::string> labels;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// z z' = prod_{u -> v} z_u + prod_{v -> w} z_w (with multiplicities).
/// Throws FrozenVertexError or ZeroValueError.
Seed mutate_seed(const Seed& t, std::size_t v);

/// Vertices to move from mutable to frozen.
struct SubalgebraSpec {
  std::vector<std::size_t> frozen_extra;
};

/// Same quiver and values, with the vertices of `spec` frozen. Throws
/// SubalgebraSpecError unless spec is a subset of the mutable vertices.
Seed freeze(const Seed& t, const SubalgebraSpec& spec);

/// Initial seed of a diagram evaluated at M: chamber quiver, chamber minors.
Seed wiring_seed(const DoubleWiringDiagram& d, const Matrix& m);

struct ZeroEncounter {
  std::vector<std::size_t> path;  ///< mutation sequence from the initial seed
  std::size_t vertex;             ///< vertex whose value was zero
};

struct ExploredSeed {
  Seed seed;
  std::vector<std::size_t> path;
};

struct ExploreResult {
  std::vector<ExploredSeed> seeds;  ///< breadth-first order, initial seed first
  std::vector<ZeroEncounter> zero_encounters;
};

/// Breadth-first closure of seed mutation up to `depth` steps, deduplicated
/// on (quiver, values) with vertices identified by label.
ExploreResult explore(const Seed& t, std::size_t depth);

struct ClusterVerdict : Verdict {
  /// Delta_[1,1], ..., Delta_[1,n-1] (the mutable values) then det.
  std::vector<GaussianRational> checked_values;
  std::vector<std::string> checked_labels;
  std::size_t explore_depth = 0;
  std::size_t explored_seeds = 0;
  /// Reached mutable values that are not positive reals. Reported only.
  std::size_t explored_non_positive = 0;
  std::size_t zero_encounters = 0;
};

/// Subalgebra seed of the standard diagram for M: every mutable chamber other
/// than the leading principal ones is frozen.
Seed pd_subalgebra_seed(const Matrix& m);

/// PD iff Hermitian and the n-1 mutable values plus the frozen determinant
/// are positive reals. Exploration to `depth` is summarized, not decisive.
ClusterVerdict pd_check_cluster(const Matrix& m, std::size_t depth = 2);

}  // namespace pdnet
