#include "pdnet/network.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pdnet/errors.hpp"
#include "pdnet/linalg.hpp"

namespace pdnet {

PlanarNetwork::PlanarNetwork(std::size_t n, std::vector<Chip> chips) : n_(n), chips_(std::move(chips)) {
  if (n_ == 0) throw LevelRangeError("planar network needs at least one level");
  for (const Chip& c : chips_) validate_factor(factor_from_chip(c), n_);
}

std::optional<GaussianRational> PlanarNetwork::edge_weight(GridNode from, GridNode to) const {
  if (from.column >= chips_.size() || to.column != from.column + 1) return std::nullopt;
  if (from.level < 1 || from.level > n_ || to.level < 1 || to.level > n_) return std::nullopt;
  const Chip& chip = chips_[from.column];
  if (from.level == to.level) {
    if (chip.kind == FactorKind::diagonal && chip.level == from.level) return chip.weight;
    return GaussianRational(1);
  }
  if (chip.kind == FactorKind::ascending && from.level == chip.level && to.level == chip.level + 1) return chip.weight;
  if (chip.kind == FactorKind::descending && from.level == chip.level + 1 && to.level == chip.level) return chip.weight;
  return std::nullopt;
}

Chip chip_from_factor(const JacobiFactor& f) { return {f.kind, f.level, f.param}; }

JacobiFactor factor_from_chip(const Chip& c) { return {c.kind, c.level, c.weight}; }

PlanarNetwork network_from_factors(std::span<const JacobiFactor> factors, std::size_t n) {
  std::vector<Chip> chips;
  chips.reserve(factors.size());
  for (const JacobiFactor& f : factors) chips.push_back(chip_from_factor(f));
  return PlanarNetwork(n, std::move(chips));
}

Matrix weight_matrix(const PlanarNetwork& net) {
  const std::size_t n = net.levels();
  Matrix out(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    // reach[k] = total weight of paths from source s to (k+1, current column)
    std::vector<GaussianRational> reach(n);
    reach[s] = 1;
    for (const Chip& chip : net.chips()) {
      const std::size_t i = chip.level - 1;
      switch (chip.kind) {
        case FactorKind::diagonal: reach[i] *= chip.weight; break;
        case FactorKind::ascending: reach[i + 1] += reach[i] * chip.weight; break;
        case FactorKind::descending: reach[i] += reach[i + 1] * chip.weight; break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) out(s, k) = std::move(reach[k]);
  }
  return out;
}

namespace {

void check_endpoints(const PlanarNetwork& net, const IndexSet& sources, const IndexSet& sinks) {
  if (sources.size() != sinks.size()) throw SizeMismatchError("|I| != |J| for a path collection");
  validate_index_set(sources, net.levels());
  validate_index_set(sinks, net.levels());
}

// Moves of one frontier through `chip`: each entry is (new positions, weight).
// Positions are levels, kept sorted; a move is rejected if two paths land on
// the same node.
template <typename Visit>
void for_each_move(const Chip& chip, const std::vector<std::size_t>& pos, Visit&& visit) {
  std::vector<std::size_t> next = pos;
  GaussianRational w = 1;
  std::size_t mover = pos.size();  // index of the path sitting at the slant source
  const std::size_t slant_from = chip.kind == FactorKind::ascending ? chip.level : chip.level + 1;
  const std::size_t slant_to = chip.kind == FactorKind::ascending ? chip.level + 1 : chip.level;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (chip.kind == FactorKind::diagonal && pos[k] == chip.level) w *= chip.weight;
    if (chip.kind != FactorKind::diagonal && pos[k] == slant_from) mover = k;
  }
  visit(next, w, false);
  if (mover == pos.size()) return;
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (pos[k] == slant_to) return;  // landing node already taken
  next[mover] = slant_to;
  visit(next, w * chip.weight, true);
}

}  // namespace

GaussianRational minor_lgv(const PlanarNetwork& net, const IndexSet& sources, const IndexSet& sinks) {
  check_endpoints(net, sources, sinks);
  if (sources.empty()) return 1;
  std::map<std::vector<std::size_t>, GaussianRational> frontier{{sources, GaussianRational(1)}};
  for (const Chip& chip : net.chips()) {
    std::map<std::vector<std::size_t>, GaussianRational> next;
    for (const auto& [pos, weight] : frontier) {
      for_each_move(chip, pos, [&](const std::vector<std::size_t>& moved, const GaussianRational& w, bool) {
        next[moved] += weight * w;
      });
    }
    frontier = std::move(next);
  }
  const auto it = frontier.find(sinks);
  return it == frontier.end() ? GaussianRational(0) : it->second;
}

namespace {

void collect(const PlanarNetwork& net, std::size_t column, std::vector<std::size_t>& pos,
             std::vector<GridPath>& paths, const IndexSet& sinks, std::vector<PathCollection>& out) {
  if (column == net.chips().size()) {
    if (pos == sinks) out.push_back({paths});
    return;
  }
  for_each_move(net.chips()[column], pos, [&](const std::vector<std::size_t>& moved, const GaussianRational&, bool) {
    std::vector<std::size_t> saved = pos;
    pos = moved;
    for (std::size_t k = 0; k < pos.size(); ++k) paths[k].push_back({pos[k], column + 1});
    collect(net, column + 1, pos, paths, sinks, out);
    for (auto& p : paths) p.pop_back();
    pos = std::move(saved);
  });
}

}  // namespace

std::vector<PathCollection> disjoint_path_collections(const PlanarNetwork& net, const IndexSet& sources,
                                                      const IndexSet& sinks) {
  check_endpoints(net, sources, sinks);
  std::vector<PathCollection> out;
  std::vector<std::size_t> pos = sources;
  std::vector<GridPath> paths(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k) paths[k].push_back({sources[k], 0});
  collect(net, 0, pos, paths, sinks, out);
  return out;
}

GaussianRational path_weight(const PlanarNetwork& net, const GridPath& path) {
  GaussianRational w = 1;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto e = net.edge_weight(path[k - 1], path[k]);
    if (!e) throw IndexError("path uses a missing edge");
    w *= *e;
  }
  return w;
}

bool is_ldu_shape(const PlanarNetwork& net) {
  auto rank = [](FactorKind k) {
    switch (k) {
      case FactorKind::descending: return 0;
      case FactorKind::diagonal: return 1;
      case FactorKind::ascending: return 2;
    }
    return 3;
  };
  int last = 0;
  for (const Chip& c : net.chips()) {
    const int r = rank(c.kind);
    if (r < last) return false;
    last = r;
  }
  return true;
}

std::vector<GaussianRational> line_weights(const PlanarNetwork& net) {
  if (!is_ldu_shape(net)) throw ShapeError("network is not of the form descending*, diagonal*, ascending*");
  std::vector<GaussianRational> d(net.levels(), GaussianRational(1));
  for (const Chip& c : net.chips())
    if (c.kind == FactorKind::diagonal) d[c.level - 1] *= c.weight;
  return d;
}

NetworkVerdict pd_check_network(const Matrix& m) {
  NetworkVerdict v;
  if (!is_hermitian(m)) {
    v.reason = PdReason::not_hermitian;
    return v;
  }
  FactorSequence factors;
  try {
    factors = factorize_ldu_form(m);
  } catch (const NoLduError& e) {
    v.reason = PdReason::zero_leading_minor;
    v.witness = e.k();
    return v;
  }
  const PlanarNetwork net = network_from_factors(factors, m.rows());
  if (weight_matrix(net) != m) throw std::logic_error("LDU-form network does not reproduce the input matrix");
  v.line_weights = line_weights(net);
  const auto& d = *v.line_weights;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!d[k].is_real()) throw std::logic_error("line weight of a Hermitian matrix is not real");
    if (d[k].re().sign() <= 0) {
      v.reason = d[k].is_zero() ? PdReason::zero_leading_minor : PdReason::negative_value;
      v.witness = k + 1;
      return v;
    }
  }
  v.is_pd = true;
  v.reason = PdReason::positive_definite;
  return v;
}

std::vector<std::size_t> staircase_word(std::size_t n) {
  std::vector<std::size_t> word;
  for (std::size_t low = 1; low < n; ++low)
    for (std::size_t level = n - 1; level >= low; --level) word.push_back(level);
  return word;
}

PlanarNetwork essential_tp_network(std::size_t n, std::span<const Rational> params) {
  if (n == 0) throw LevelRangeError("essential network needs n >= 1");
  if (params.size() != n * n) {
    throw SizeMismatchError("essential network for n = " + std::to_string(n) + " needs " + std::to_string(n * n) +
                            " parameters, got " + std::to_string(params.size()));
  }
  for (std::size_t k = 0; k < params.size(); ++k)
    if (params[k].sign() <= 0) throw DomainError("essential parameter " + std::to_string(k) + " is not positive");

  const std::vector<std::size_t> word = staircase_word(n);
  std::vector<Chip> chips;
  chips.reserve(word.size() * 2 + n);
  std::size_t next = 0;
  for (std::size_t level : word) chips.push_back({FactorKind::descending, level, params[next++]});
  for (std::size_t level = 1; level <= n; ++level) chips.push_back({FactorKind::diagonal, level, params[next++]});
  for (auto it = word.rbegin(); it != word.rend(); ++it) chips.push_back({FactorKind::ascending, *it, params[next++]});
  return PlanarNetwork(n, std::move(chips));
}

std::string network_to_dot(const PlanarNetwork& net) {
  const std::size_t n = net.levels();
  // A chipless network is drawn as n bare parallel lines.
  const std::size_t cols = std::max<std::size_t>(net.columns(), 2);
  auto node = [](std::size_t level, std::size_t col) {
    return "\"" + std::to_string(level) + "_" + std::to_string(col) + "\"";
  };
  std::ostringstream os;
  os << "digraph network {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=point];\n";
  for (std::size_t c = 0; c < cols; ++c) {
    os << "  { rank=same;";
    for (std::size_t level = n; level >= 1; --level) os << ' ' << node(level, c) << ';';
    os << " }\n";
  }
  for (std::size_t level = 1; level <= n; ++level) {
    os << "  " << node(level, 0) << " [xlabel=\"source " << level << "\"];\n";
    os << "  " << node(level, cols - 1) << " [xlabel=\"sink " << level << "\"];\n";
  }
  if (net.chips().empty())
    for (std::size_t level = 1; level <= n; ++level) os << "  " << node(level, 0) << " -> " << node(level, 1) << ";\n";
  for (std::size_t c = 0; c + 1 < net.columns(); ++c) {
    for (std::size_t from = 1; from <= n; ++from) {
      for (std::size_t to = from > 1 ? from - 1 : 1; to <= n && to <= from + 1; ++to) {
        const auto w = net.edge_weight({from, c}, {to, c + 1});
        if (!w) continue;
        os << "  " << node(from, c) << " -> " << node(to, c + 1);
        if (*w != GaussianRational(1)) os << " [label=\"" << w->to_string() << "\"]";
        os << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace pdnet
