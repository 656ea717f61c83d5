#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pdnet {

/// Cluster quiver: no loops, no 2-cycles, a mutable/frozen split. Stored as
/// the skew-symmetric exchange matrix b(u,v) = #(u -> v) - #(v -> u).
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::vector<bool> mutable_flags);

  [[nodiscard]] std::size_t size() const noexcept { return mutable_.size(); }
  [[nodiscard]] bool is_mutable(std::size_t v) const { return mutable_.at(v); }
  [[nodiscard]] const std::vector<bool>& mutable_flags() const noexcept { return mutable_; }
  [[nodiscard]] std::vector<std::size_t> mutable_vertices() const;

  /// Number of arrows u -> v.
  [[nodiscard]] int arrows(std::size_t u, std::size_t v) const;
  [[nodiscard]] int exchange(std::size_t u, std::size_t v) const { return b_[u * size() + v]; }

  /// Adds `count` arrows u -> v; opposite arrows cancel. Loops are rejected.
  void add_arrows(std::size_t u, std::size_t v, int count = 1);
  void set_mutable(std::size_t v, bool is_mutable) { mutable_.at(v) = is_mutable; }

  /// Arrow multiset as (source, target) pairs, repeated by multiplicity, in
  /// lexicographic order.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> arrow_list() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<bool> mutable_;
  std::vector<int> b_;
};

/// Three-step quiver mutation at a mutable vertex; no arrows are created
/// between two frozen vertices. Throws FrozenVertexError.
Quiver mutate_quiver(const Quiver& q, std::size_t v);

}  // namespace pdnet
