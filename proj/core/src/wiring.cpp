#include "pdnet/wiring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pdnet/errors.hpp"
#include "pdnet/linalg.hpp"

namespace pdnet {

std::string_view color_name(WireColor c) noexcept { return c == WireColor::blue ? "b" : "r"; }

WireColor color_from_name(std::string_view name) {
  if (name == "b") return WireColor::blue;
  if (name == "r") return WireColor::red;
  throw ParseError("unknown crossing color '" + std::string(name) + "'", 0);
}

std::optional<DiagramViolation> validate_diagram(const DoubleWiringDiagram& d) {
  if (d.n == 0) return DiagramViolation{0, "diagram needs n >= 1"};
  // Starting from the identity, a pair crosses twice iff the two lines are
  // already inverted when they meet.
  std::vector<std::size_t> at[2];
  std::size_t length[2] = {0, 0};
  for (auto& a : at) a = leading_set(d.n);
  for (std::size_t idx = 0; idx < d.crossings.size(); ++idx) {
    const Crossing& x = d.crossings[idx];
    if (x.row < 1 || x.row >= d.n) {
      return DiagramViolation{idx, "crossing row " + std::to_string(x.row) + " outside [1," +
                                       std::to_string(d.n - 1) + "]"};
    }
    auto& lines = at[x.color == WireColor::blue ? 0 : 1];
    if (lines[x.row - 1] > lines[x.row]) {
      return DiagramViolation{idx, std::string(x.color == WireColor::blue ? "blue" : "red") + " lines " +
                                       std::to_string(lines[x.row]) + " and " + std::to_string(lines[x.row - 1]) +
                                       " cross twice"};
    }
    std::swap(lines[x.row - 1], lines[x.row]);
    ++length[x.color == WireColor::blue ? 0 : 1];
  }
  const std::size_t full = d.n * (d.n - 1) / 2;
  for (int c = 0; c < 2; ++c) {
    if (length[c] != full) {
      return DiagramViolation{d.crossings.size(), std::string(c == 0 ? "blue" : "red") + " word has length " +
                                                      std::to_string(length[c]) + ", expected " +
                                                      std::to_string(full)};
    }
  }
  return std::nullopt;
}

namespace {

void require_valid(const DoubleWiringDiagram& d) {
  if (auto v = validate_diagram(d)) throw InvalidDiagramError("invalid wiring diagram: " + v->message, v->index);
}

IndexSet below(const std::vector<std::size_t>& at, std::size_t row) {
  IndexSet s(at.begin(), at.begin() + static_cast<std::ptrdiff_t>(row));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<Chamber> chambers(const DoubleWiringDiagram& d) {
  require_valid(d);
  const std::size_t n = d.n;
  // blue lines are numbered at their right ends, so they enter reversed
  std::vector<std::size_t> blue(n), red(n);
  for (std::size_t h = 0; h < n; ++h) {
    blue[h] = n - h;
    red[h] = h + 1;
  }
  std::vector<std::vector<Chamber>> rows(n);
  auto open = [&](std::size_t row, std::optional<std::size_t> left) {
    Chamber c;
    c.row = row;
    c.left = left;
    c.blue = below(blue, row);
    c.red = below(red, row);
    rows[row - 1].push_back(std::move(c));
  };
  for (std::size_t row = 1; row < n; ++row) open(row, std::nullopt);
  for (std::size_t idx = 0; idx < d.crossings.size(); ++idx) {
    const Crossing& x = d.crossings[idx];
    rows[x.row - 1].back().right = idx;
    auto& lines = x.color == WireColor::blue ? blue : red;
    std::swap(lines[x.row - 1], lines[x.row]);
    open(x.row, idx);
  }
  open(n, std::nullopt);

  std::vector<Chamber> out;
  out.reserve(n * n);
  for (auto& row : rows) {
    for (Chamber& c : row) {
      c.bounded = c.left.has_value() && c.right.has_value();
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<ChamberValue> chamber_minors(const DoubleWiringDiagram& d, const Matrix& m) {
  if (!m.is_square() || m.rows() != d.n) {
    throw SizeMismatchError("chamber minors need a " + std::to_string(d.n) + "x" + std::to_string(d.n) + " matrix");
  }
  std::vector<ChamberValue> out;
  for (Chamber& c : chambers(d)) {
    GaussianRational v = minor(m, c.blue, c.red);
    out.push_back({std::move(c), std::move(v)});
  }
  return out;
}

namespace {

// Horizontal extent with -infinity / +infinity for missing boundaries.
struct Extent {
  long long lo;
  long long hi;
};

Extent extent(const Chamber& c, std::size_t m) {
  return {c.left ? static_cast<long long>(*c.left) : -1, c.right ? static_cast<long long>(*c.right)
                                                                 : static_cast<long long>(m)};
}

}  // namespace

WiringQuiver build_quiver(const DoubleWiringDiagram& d) {
  std::vector<Chamber> ch = chambers(d);
  const std::size_t v = ch.size();
  const std::size_t m = d.crossings.size();
  auto color = [&](std::size_t idx) { return d.crossings[idx].color; };

  std::vector<int> raw(v * v, 0);
  auto arrow = [&](std::size_t from, std::size_t to) { ++raw[from * v + to]; };

  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      if (a == b) continue;
      const Chamber& c = ch[a];
      const Chamber& cp = ch[b];  // c' in the rules
      const Extent ec = extent(c, m);
      const Extent ecp = extent(cp, m);

      // (1) neighbours in a row: blue crossing points left, red points right.
      if (c.row == cp.row && c.right && cp.left && *c.right == *cp.left) {
        if (color(*c.right) == WireColor::blue) arrow(b, a);
        else arrow(a, b);
      }

      const bool adjacent_rows = c.row + 1 == cp.row || cp.row + 1 == c.row;
      if (!adjacent_rows) continue;

      // (2) c' has boundaries of different colors and sits directly above or
      // below c, inside its extent.
      if (cp.bounded && color(*cp.left) != color(*cp.right) && ec.lo < ecp.lo && ecp.hi < ec.hi) {
        if (color(*cp.left) == WireColor::blue) arrow(a, b);
        else arrow(b, a);
      }

      if (cp.row != c.row + 1) continue;
      // (3) left boundary of c' above c, right boundary of c below c'.
      if (cp.left && c.right && ec.lo < ecp.lo && ecp.lo < ec.hi && ec.hi < ecp.hi &&
          color(*cp.left) == color(*c.right)) {
        if (color(*cp.left) == WireColor::blue) arrow(a, b);
        else arrow(b, a);
      }
      // (4) right boundary of c' above c, left boundary of c below c'.
      if (cp.right && c.left && ecp.lo < ec.lo && ec.lo < ecp.hi && ecp.hi < ec.hi &&
          color(*cp.right) == color(*c.left)) {
        if (color(*cp.right) == WireColor::blue) arrow(b, a);
        else arrow(a, b);
      }
    }
  }

  std::vector<bool> flags(v);
  for (std::size_t k = 0; k < v; ++k) flags[k] = ch[k].bounded;
  Quiver q(std::move(flags));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (raw[a * v + b] && raw[b * v + a]) {
        throw std::logic_error("quiver rules produced a 2-cycle between " + ch[a].label() + " and " + ch[b].label());
      }
      if (raw[a * v + b]) q.add_arrows(a, b, raw[a * v + b]);
      if (raw[b * v + a]) q.add_arrows(b, a, raw[b * v + a]);
    }
  }
  return {std::move(ch), std::move(q)};
}

std::optional<std::size_t> blue_red_chamber(const DoubleWiringDiagram& d, const std::vector<Chamber>& ch,
                                            std::size_t row) {
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < ch.size(); ++k) {
    const Chamber& c = ch[k];
    if (c.row != row || !c.bounded) continue;
    if (d.crossings[*c.left].color == WireColor::blue && d.crossings[*c.right].color == WireColor::red) {
      if (found) return std::nullopt;
      found = k;
    }
  }
  return found;
}

DoubleWiringDiagram standard_pd_diagram(std::size_t n) {
  if (n == 0) throw LevelRangeError("standard diagram needs n >= 1");
  DoubleWiringDiagram d{n, {}};
  std::vector<std::size_t> word;
  for (std::size_t top = n - 1; top >= 1; --top)
    for (std::size_t row = 1; row <= top; ++row) word.push_back(row);
  for (std::size_t row : word) d.crossings.push_back({WireColor::blue, row});
  for (std::size_t row : word) d.crossings.push_back({WireColor::red, n - row});

  const std::vector<Chamber> ch = chambers(d);
  for (std::size_t k = 1; k < n; ++k) {
    const auto idx = blue_red_chamber(d, ch, k);
    if (!idx || ch[*idx].blue != leading_set(k) || ch[*idx].red != leading_set(k)) {
      throw std::logic_error("standard diagram postcondition failed in row " + std::to_string(k));
    }
  }
  const Chamber& top = ch.back();
  if (top.row != n || top.bounded || top.blue != leading_set(n) || top.red != leading_set(n)) {
    throw std::logic_error("standard diagram top chamber is not the frozen determinant chamber");
  }
  return d;
}

std::string wiring_to_dot(const WiringQuiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (std::size_t k = 0; k < q.vertices.size(); ++k) {
    os << "  v" << k << " [label=\"" << q.vertices[k].label() << "\", shape="
       << (q.quiver.is_mutable(k) ? "oval" : "box") << "];\n";
  }
  for (const auto& [from, to] : q.quiver.arrow_list()) os << "  v" << from << " -> v" << to << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pdnet
