#include "pdnet/cluster.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "pdnet/errors.hpp"
#include "pdnet/linalg.hpp"

namespace pdnet {

namespace {

GaussianRational power(const GaussianRational& x, int k) {
  GaussianRational out = 1;
  for (int j = 0; j < k; ++j) out *= x;
  return out;
}

}  // namespace

Seed mutate_seed(const Seed& t, std::size_t v) {
  if (t.values.size() != t.quiver.size()) throw SizeMismatchError("seed value count does not match quiver");
  if (v >= t.quiver.size()) throw IndexError("mutation vertex out of range");
  if (!t.quiver.is_mutable(v)) throw FrozenVertexError("cannot mutate at frozen vertex " + std::to_string(v), v);
  if (t.values[v].is_zero()) {
    throw ZeroValueError("cluster value at vertex " + std::to_string(v) + " is zero", v);
  }
  GaussianRational in = 1;
  GaussianRational out = 1;
  for (std::size_t u = 0; u < t.quiver.size(); ++u) {
    if (const int k = t.quiver.arrows(u, v)) in *= power(t.values[u], k);
    if (const int k = t.quiver.arrows(v, u)) out *= power(t.values[u], k);
  }
  Seed next{mutate_quiver(t.quiver, v), t.values, t.labels};
  next.values[v] = (in + out) / t.values[v];
  return next;
}

Seed freeze(const Seed& t, const SubalgebraSpec& spec) {
  Seed out = t;
  for (std::size_t v : spec.frozen_extra) {
    if (v >= t.quiver.size() || !t.quiver.is_mutable(v)) {
      throw SubalgebraSpecError("vertex " + std::to_string(v) + " is not a mutable vertex");
    }
    out.quiver.set_mutable(v, false);
  }
  return out;
}

Seed wiring_seed(const DoubleWiringDiagram& d, const Matrix& m) {
  WiringQuiver wq = build_quiver(d);
  Seed s;
  s.quiver = std::move(wq.quiver);
  for (const Chamber& c : wq.vertices) {
    s.values.push_back(minor(m, c.blue, c.red));
    s.labels.push_back(c.label());
  }
  return s;
}

namespace {

std::string seed_key(const Seed& s) {
  std::string key;
  for (bool f : s.quiver.mutable_flags()) key += f ? 'm' : 'f';
  for (std::size_t u = 0; u < s.quiver.size(); ++u)
    for (std::size_t v = 0; v < s.quiver.size(); ++v) key += ' ' + std::to_string(s.quiver.exchange(u, v));
  for (const auto& z : s.values) key += ';' + z.to_string();
  return key;
}

}  // namespace

ExploreResult explore(const Seed& t, std::size_t depth) {
  ExploreResult result;
  std::set<std::string> seen{seed_key(t)};
  result.seeds.push_back({t, {}});
  std::size_t frontier_begin = 0;
  for (std::size_t level = 0; level < depth; ++level) {
    const std::size_t frontier_end = result.seeds.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
      for (std::size_t v : result.seeds[k].seed.quiver.mutable_vertices()) {
        std::vector<std::size_t> path = result.seeds[k].path;
        if (result.seeds[k].seed.values[v].is_zero()) {
          result.zero_encounters.push_back({std::move(path), v});
          continue;
        }
        Seed next = mutate_seed(result.seeds[k].seed, v);
        if (!seen.insert(seed_key(next)).second) continue;
        path.push_back(v);
        result.seeds.push_back({std::move(next), std::move(path)});
      }
    }
    frontier_begin = frontier_end;
  }
  return result;
}

Seed pd_subalgebra_seed(const Matrix& m) {
  const std::size_t n = m.rows();
  const DoubleWiringDiagram d = standard_pd_diagram(n);
  Seed s = wiring_seed(d, m);
  const std::vector<Chamber> ch = chambers(d);
  std::set<std::size_t> keep;
  for (std::size_t k = 1; k < n; ++k) keep.insert(*blue_red_chamber(d, ch, k));
  SubalgebraSpec spec;
  for (std::size_t v : s.quiver.mutable_vertices())
    if (!keep.count(v)) spec.frozen_extra.push_back(v);
  return freeze(s, spec);
}

ClusterVerdict pd_check_cluster(const Matrix& m, std::size_t depth) {
  ClusterVerdict v;
  v.explore_depth = depth;
  if (!is_hermitian(m)) {
    v.reason = PdReason::not_hermitian;
    return v;
  }
  const std::size_t n = m.rows();
  const Seed seed = pd_subalgebra_seed(m);

  // Mutable vertices are exactly the leading principal chambers; they come
  // out in row order, and the determinant chamber is the last vertex.
  for (std::size_t u : seed.quiver.mutable_vertices()) {
    v.checked_values.push_back(seed.values[u]);
    v.checked_labels.push_back(seed.labels[u]);
  }
  v.checked_values.push_back(seed.values.back());
  v.checked_labels.push_back(seed.labels.back());
  if (v.checked_values.size() != n) throw std::logic_error("subalgebra seed has the wrong number of mutable vertices");

  for (std::size_t k = 0; k < v.checked_values.size(); ++k) {
    const GaussianRational& z = v.checked_values[k];
    if (!z.is_real()) throw std::logic_error("leading principal minor of a Hermitian matrix is not real");
    if (z.re().sign() <= 0) {
      v.reason = z.is_zero() ? PdReason::zero_leading_minor : PdReason::negative_value;
      v.witness = k + 1;
      break;
    }
  }
  if (!v.witness) {
    v.is_pd = true;
    v.reason = PdReason::positive_definite;
  }

  if (depth > 0) {
    const ExploreResult reached = explore(seed, depth);
    v.explored_seeds = reached.seeds.size();
    v.zero_encounters = reached.zero_encounters.size();
    for (const ExploredSeed& s : reached.seeds)
      for (std::size_t u : s.seed.quiver.mutable_vertices())
        if (!s.seed.values[u].is_positive_real()) ++v.explored_non_positive;
  }
  return v;
}

}  // namespace pdnet
