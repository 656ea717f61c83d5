#include "pdnet/quiver.hpp"

#include <string>

#include "pdnet/errors.hpp"

namespace pdnet {

Quiver::Quiver(std::vector<bool> mutable_flags)
    : mutable_(std::move(mutable_flags)), b_(mutable_.size() * mutable_.size(), 0) {}

std::vector<std::size_t> Quiver::mutable_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v)
    if (mutable_[v]) out.push_back(v);
  return out;
}

int Quiver::arrows(std::size_t u, std::size_t v) const {
  const int b = exchange(u, v);
  return b > 0 ? b : 0;
}

void Quiver::add_arrows(std::size_t u, std::size_t v, int count) {
  if (u >= size() || v >= size()) throw IndexError("arrow endpoint out of range");
  if (u == v) throw Error("quiver loops are not allowed (vertex " + std::to_string(u) + ")");
  b_[u * size() + v] += count;
  b_[v * size() + u] -= count;
}

std::vector<std::pair<std::size_t, std::size_t>> Quiver::arrow_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = 0; v < size(); ++v)
      for (int k = 0; k < arrows(u, v); ++k) out.emplace_back(u, v);
  return out;
}

Quiver mutate_quiver(const Quiver& q, std::size_t v) {
  if (v >= q.size()) throw IndexError("mutation vertex out of range");
  if (!q.is_mutable(v)) throw FrozenVertexError("cannot mutate at frozen vertex " + std::to_string(v), v);
  Quiver out = q;
  const std::size_t n = q.size();
  for (std::size_t u = 0; u < n; ++u) {
    const int in = q.arrows(u, v);
    if (in == 0) continue;
    for (std::size_t w = 0; w < n; ++w) {
      const int outgoing = q.arrows(v, w);
      if (outgoing == 0 || u == w) continue;
      if (!q.is_mutable(u) && !q.is_mutable(w)) continue;
      out.add_arrows(u, w, in * outgoing);  // adding also cancels any w -> u arrows
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    const int b = q.exchange(u, v);
    if (b != 0) out.add_arrows(v, u, 2 * b);  // flips b(u,v) to -b(u,v)
  }
  return out;
}

}  // namespace pdnet
