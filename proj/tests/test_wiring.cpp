#include <doctest.h>

#include <set>

#include "support/oracles.hpp"

using namespace pdnet;
using namespace pdnet::testing;

namespace {

using C = WireColor;

std::vector<std::string> labels(const std::vector<Chamber>& ch) {
  std::vector<std::string> out;
  for (const Chamber& c : ch) out.push_back(c.label());
  return out;
}

// Every exchange binomial P + Q of a correct seed vanishes wherever its own
// chamber minor does (the exchanged value is a polynomial in the entries).
// Puts M on the hypersurface {z_k = 0} by solving for one entry, which a
// minor depends on affinely.
bool exchange_binomial_vanishes(const DoubleWiringDiagram& d, const WiringQuiver& wq, std::size_t k, Rng& rng) {
  const Chamber& c = wq.vertices[k];
  const std::size_t r = c.blue[0] - 1, col = c.red[0] - 1;
  Matrix m;
  GaussianRational f0, f1;
  do {
    m = random_matrix(rng, d.n, d.n);
    m(r, col) = 0;
    f0 = leibniz_minor(m, c.blue, c.red);
    m(r, col) = 1;
    f1 = leibniz_minor(m, c.blue, c.red) - f0;
  } while (f1.is_zero());
  m(r, col) = -f0 / f1;
  GaussianRational in = 1, out = 1;
  for (std::size_t u = 0; u < wq.vertices.size(); ++u) {
    const GaussianRational z = leibniz_minor(m, wq.vertices[u].blue, wq.vertices[u].red);
    for (int a = 0; a < wq.quiver.arrows(u, k); ++a) in *= z;
    for (int a = 0; a < wq.quiver.arrows(k, u); ++a) out *= z;
  }
  return (in + out).is_zero();
}

}  // namespace

TEST_CASE("color names") {
  CHECK(color_name(C::blue) == "b");
  CHECK(color_from_name("r") == C::red);
  CHECK_THROWS_AS(color_from_name("g"), ParseError);
}

TEST_CASE("diagram validation") {
  CHECK_FALSE(validate_diagram(standard_pd_diagram(3)).has_value());
  CHECK_FALSE(validate_diagram({1, {}}).has_value());

  const auto twice = validate_diagram({3, {{C::blue, 1}, {C::blue, 1}, {C::red, 1}, {C::red, 2}, {C::red, 1}}});
  REQUIRE(twice.has_value());
  CHECK(twice->index == 1);

  const auto out_of_range = validate_diagram({3, {{C::blue, 3}}});
  REQUIRE(out_of_range.has_value());
  CHECK(out_of_range->index == 0);

  const DoubleWiringDiagram short_word{3, {{C::blue, 1}, {C::blue, 2}, {C::blue, 1}, {C::red, 1}, {C::red, 2}}};
  const auto incomplete = validate_diagram(short_word);
  REQUIRE(incomplete.has_value());
  CHECK(incomplete->index == 5);

  CHECK(validate_diagram({0, {}}).has_value());
  try {
    chambers(short_word);
    FAIL("expected InvalidDiagramError");
  } catch (const InvalidDiagramError& e) {
    CHECK(e.index() == 5);
  }
}

TEST_CASE("random diagrams are valid") {
  Rng rng(31);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 10; ++k) CHECK_FALSE(validate_diagram(random_diagram(rng, n)).has_value());
}

TEST_CASE("standard diagram for n = 3") {
  const DoubleWiringDiagram d = standard_pd_diagram(3);
  const std::vector<Crossing> expected{{C::blue, 1}, {C::blue, 2}, {C::blue, 1},
                                       {C::red, 2},  {C::red, 1},  {C::red, 2}};
  CHECK(d.crossings == expected);
  const auto ch = chambers(d);
  CHECK(labels(ch) == std::vector<std::string>{"3|1", "2|1", "1|1", "1|3", "2,3|1,2", "1,2|1,2", "1,2|1,3",
                                               "1,2|2,3", "1,2,3|1,2,3"});
  std::size_t bounded = 0;
  for (const Chamber& c : ch) bounded += c.bounded ? 1 : 0;
  CHECK(bounded == 4);
  CHECK(blue_red_chamber(d, ch, 1) == std::size_t{2});
  CHECK(blue_red_chamber(d, ch, 2) == std::size_t{5});
}

TEST_CASE("chamber counts and boundary labels") {
  Rng rng(32);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      const DoubleWiringDiagram d = random_diagram(rng, n);
      const auto ch = chambers(d);
      CHECK(ch.size() == n * n);
      std::size_t bounded = 0;
      for (const Chamber& c : ch) bounded += c.bounded ? 1 : 0;
      CHECK(bounded == (n - 1) * (n - 1));
      const auto ls = labels(ch);
      CHECK(std::set<std::string>(ls.begin(), ls.end()).size() == ls.size());
      for (const Chamber& c : ch) {
        CHECK(c.blue.size() == c.row);
        CHECK(c.red.size() == c.row);
        if (!c.left) {  // leftmost: bottom-left corner block
          IndexSet rows;
          for (std::size_t r = n - c.row + 1; r <= n; ++r) rows.push_back(r);
          CHECK(c.blue == rows);
          CHECK(c.red == leading_set(c.row));
        }
        if (!c.right && c.row < n) {  // rightmost: top-right corner block
          IndexSet cols;
          for (std::size_t j = n - c.row + 1; j <= n; ++j) cols.push_back(j);
          CHECK(c.blue == leading_set(c.row));
          CHECK(c.red == cols);
        }
      }
      CHECK(ch.back().blue == leading_set(n));
      CHECK(ch.back().red == leading_set(n));
    }
}

TEST_CASE("standard diagram postcondition for several sizes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const DoubleWiringDiagram d = standard_pd_diagram(n);
    const auto ch = chambers(d);
    for (std::size_t k = 1; k < n; ++k) {
      const auto idx = blue_red_chamber(d, ch, k);
      REQUIRE(idx.has_value());
      CHECK(ch[*idx].blue == leading_set(k));
      CHECK(ch[*idx].red == leading_set(k));
      CHECK(ch[*idx].bounded);
    }
    CHECK_FALSE(ch.back().bounded);
  }
  CHECK_THROWS_AS(standard_pd_diagram(0), LevelRangeError);
}

TEST_CASE("chamber minors") {
  const auto vals = chamber_minors(standard_pd_diagram(3), worked_example());
  REQUIRE(vals.size() == 9);
  CHECK(vals[0].value == GaussianRational(4));  // x_31
  CHECK(vals[5].value == GaussianRational(2));  // Delta_{12,12}
  CHECK(vals[8].value == GaussianRational(4));  // det
  CHECK_THROWS_AS(chamber_minors(standard_pd_diagram(3), Matrix::identity(2)), SizeMismatchError);
}

TEST_CASE("standard quiver for n = 3") {
  const WiringQuiver wq = build_quiver(standard_pd_diagram(3));
  using A = std::pair<std::size_t, std::size_t>;
  const std::vector<A> expected{{1, 0}, {1, 5}, {2, 1}, {2, 3}, {3, 6}, {4, 1},
                                {5, 4}, {5, 6}, {6, 2}, {6, 7}, {8, 5}};
  CHECK(wq.quiver.arrow_list() == expected);
  CHECK(wq.quiver.mutable_vertices() == std::vector<std::size_t>{1, 2, 5, 6});
}

TEST_CASE("diagram quivers give polynomial exchange relations") {
  Rng rng(33);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int k = 0; k < 8; ++k) {
      const DoubleWiringDiagram d = k == 0 ? standard_pd_diagram(n) : random_diagram(rng, n);
      const WiringQuiver wq = build_quiver(d);
      CHECK_FALSE(has_two_cycle_or_loop(wq.quiver));
      for (std::size_t v : wq.quiver.mutable_vertices()) CHECK(exchange_binomial_vanishes(d, wq, v, rng));
    }
}

TEST_CASE("quivers of tiny diagrams") {
  const WiringQuiver one = build_quiver({1, {}});
  CHECK(one.vertices.size() == 1);
  CHECK(one.quiver.arrow_list().empty());
  const WiringQuiver two = build_quiver(standard_pd_diagram(2));
  CHECK(two.vertices.size() == 4);
  CHECK(two.quiver.mutable_vertices().size() == 1);
}

TEST_CASE("quiver dot rendering") {
  const std::string dot = wiring_to_dot(build_quiver(standard_pd_diagram(3)));
  std::size_t boxes = 0, ovals = 0;
  for (std::size_t p = dot.find("shape=box"); p != std::string::npos; p = dot.find("shape=box", p + 1)) ++boxes;
  for (std::size_t p = dot.find("shape=oval"); p != std::string::npos; p = dot.find("shape=oval", p + 1)) ++ovals;
  CHECK(boxes == 5);
  CHECK(ovals == 4);
  CHECK(dot.find("v8 -> v5;") != std::string::npos);
}
