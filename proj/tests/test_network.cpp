#include <doctest.h>

#include <functional>
#include <set>

#include "support/oracles.hpp"

using namespace pdnet;
using namespace pdnet::testing;

namespace {

using K = FactorKind;

PlanarNetwork random_network(Rng& rng, std::size_t n, std::size_t chips, bool complex) {
  std::vector<Chip> cs;
  for (std::size_t k = 0; k < chips; ++k) {
    K kind = static_cast<K>(rng() % 3);
    if (n == 1) kind = K::diagonal;
    const std::size_t top = kind == K::diagonal ? n : n - 1;
    cs.push_back({kind, 1 + rng() % top, random_gaussian(rng, complex)});
  }
  return PlanarNetwork(n, cs);
}

// Independent path-sum oracle: enumerate every source-to-sink path by DFS.
Matrix path_sum_oracle(const PlanarNetwork& net) {
  const std::size_t n = net.levels();
  Matrix out(n, n);
  std::function<void(std::size_t, std::size_t, std::size_t, GaussianRational)> walk =
      [&](std::size_t src, std::size_t level, std::size_t col, GaussianRational w) {
        if (col + 1 == net.columns()) {
          out(src - 1, level - 1) += w;
          return;
        }
        for (std::size_t to = 1; to <= n; ++to)
          if (auto e = net.edge_weight({level, col}, {to, col + 1})) walk(src, to, col + 1, w * *e);
      };
  for (std::size_t s = 1; s <= n; ++s) walk(s, s, 0, 1);
  return out;
}

bool vertex_disjoint(const PathCollection& pc) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const GridPath& p : pc.paths)
    for (const GridNode& v : p)
      if (!seen.insert({v.level, v.column}).second) return false;
  return true;
}

}  // namespace

TEST_CASE("network construction") {
  CHECK_THROWS_AS(PlanarNetwork(0), LevelRangeError);
  CHECK_THROWS_AS(PlanarNetwork(2, {{K::ascending, 2, 1}}), LevelRangeError);
  const PlanarNetwork net(3, {{K::ascending, 1, 5}, {K::diagonal, 3, 2}});
  CHECK(net.columns() == 3);
  CHECK(net.edge_weight({1, 0}, {2, 1}) == GaussianRational(5));
  CHECK(net.edge_weight({1, 0}, {1, 1}) == GaussianRational(1));
  CHECK_FALSE(net.edge_weight({2, 0}, {1, 1}).has_value());
  CHECK(net.edge_weight({3, 1}, {3, 2}) == GaussianRational(2));
  CHECK_FALSE(net.edge_weight({3, 1}, {2, 2}).has_value());
  CHECK_FALSE(net.edge_weight({1, 2}, {1, 3}).has_value());
  CHECK_FALSE(net.edge_weight({1, 0}, {1, 2}).has_value());
}

TEST_CASE("chips and factors convert both ways") {
  const JacobiFactor f{K::descending, 2, GaussianRational(1, -3)};
  CHECK(factor_from_chip(chip_from_factor(f)) == f);
  const auto fs = worked_example_factors();
  const PlanarNetwork net = network_from_factors(fs, 3);
  CHECK(net.chips().size() == fs.size());
  CHECK(net.chips()[5] == Chip{K::diagonal, 2, 2});
}

TEST_CASE("weight matrix of single chips is the factor matrix") {
  Rng rng(21);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      const PlanarNetwork net = random_network(rng, n, 1, true);
      CHECK(weight_matrix(net) == factor_to_matrix(factor_from_chip(net.chips()[0]), n));
    }
  CHECK(weight_matrix(PlanarNetwork(3)) == Matrix::identity(3));
}

TEST_CASE("weight matrix equals the factor product and the path-sum oracle") {
  Rng rng(22);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + k % 4;
    const PlanarNetwork net = random_network(rng, n, static_cast<std::size_t>(k % 9), k % 2 == 0);
    const Matrix w = weight_matrix(net);
    FactorSequence fs;
    for (const Chip& c : net.chips()) fs.push_back(factor_from_chip(c));
    CHECK(w == naive_factor_product(fs, n));
    CHECK(w == path_sum_oracle(net));
  }
}

TEST_CASE("the worked example network reproduces its matrix") {
  const PlanarNetwork net = network_from_factors(worked_example_factors(), 3);
  CHECK(weight_matrix(net) == worked_example());
  CHECK(is_ldu_shape(net));
  CHECK(line_weights(net) == std::vector<GaussianRational>{1, 2, 2});
}

TEST_CASE("all-ones essential network") {
  const std::vector<Rational> ones3(9, Rational(1));
  CHECK(weight_matrix(essential_tp_network(3, ones3)) == Matrix{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}});
  const std::vector<Rational> ones2(4, Rational(1));
  CHECK(weight_matrix(essential_tp_network(2, ones2)) == Matrix{{1, 1}, {1, 2}});
  const std::vector<Rational> one{Rational(7)};
  CHECK(weight_matrix(essential_tp_network(1, one)) == Matrix{{7}});
}

TEST_CASE("essential network layout and errors") {
  CHECK(staircase_word(1).empty());
  CHECK(staircase_word(3) == std::vector<std::size_t>{2, 1, 2});
  CHECK(staircase_word(4) == std::vector<std::size_t>{3, 2, 1, 3, 2, 3});
  const std::vector<Rational> ones(16, Rational(1));
  const PlanarNetwork net = essential_tp_network(4, ones);
  CHECK(net.chips().size() == 16);
  CHECK(is_ldu_shape(net));
  std::vector<Rational> bad(9, Rational(1));
  bad[4] = Rational(0);
  CHECK_THROWS_AS(essential_tp_network(3, bad), DomainError);
  bad[4] = Rational(-1, 2);
  CHECK_THROWS_AS(essential_tp_network(3, bad), DomainError);
  CHECK_THROWS_AS(essential_tp_network(3, std::vector<Rational>(8, Rational(1))), SizeMismatchError);
  CHECK_THROWS_AS(essential_tp_network(0, std::vector<Rational>{}), LevelRangeError);
}

TEST_CASE("the nine-weight network matches its closed form") {
  Rng rng(23);
  for (int k = 0; k < 10; ++k) {
    std::vector<Rational> w;
    for (int j = 0; j < 9; ++j) w.push_back(random_positive_rational(rng));
    CHECK(weight_matrix(nine_weight_network(w)) == nine_weight_closed_form(w));
    CHECK(nine_weight_network(w) == essential_tp_network(3, w));
  }
}

TEST_CASE("LGV minors agree with the determinant") {
  Rng rng(24);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 4;
    const PlanarNetwork net = random_network(rng, n, static_cast<std::size_t>(k % 11), true);
    const Matrix w = weight_matrix(net);
    for (std::size_t s = 1; s <= n; ++s)
      for (const IndexSet& rows : subsets_of_size(n, s))
        for (const IndexSet& cols : subsets_of_size(n, s))
          CHECK(minor_lgv(net, rows, cols) == leibniz_minor(w, rows, cols));
  }
}

TEST_CASE("LGV edge cases") {
  const PlanarNetwork net = network_from_factors(worked_example_factors(), 3);
  CHECK(minor_lgv(net, {}, {}) == GaussianRational(1));
  CHECK_THROWS_AS(minor_lgv(net, {1, 2}, {1}), SizeMismatchError);
  CHECK_THROWS_AS(minor_lgv(net, {4}, {1}), IndexError);
  CHECK_THROWS_AS(minor_lgv(net, {2, 1}, {1, 2}), IndexError);
  // a chipless network only connects k to k
  CHECK(minor_lgv(PlanarNetwork(3), {1, 2}, {1, 3}) == GaussianRational(0));
}

TEST_CASE("path collections sum to the LGV minor") {
  Rng rng(25);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + k % 3;
    const PlanarNetwork net = random_network(rng, n, 6, false);
    for (std::size_t s = 1; s <= n; ++s)
      for (const IndexSet& rows : subsets_of_size(n, s))
        for (const IndexSet& cols : subsets_of_size(n, s)) {
          GaussianRational total;
          for (const PathCollection& pc : disjoint_path_collections(net, rows, cols)) {
            CHECK(vertex_disjoint(pc));
            REQUIRE(pc.paths.size() == s);
            GaussianRational w = 1;
            for (std::size_t p = 0; p < s; ++p) {
              CHECK(pc.paths[p].front() == GridNode{rows[p], 0});
              CHECK(pc.paths[p].back() == GridNode{cols[p], net.chips().size()});
              w *= path_weight(net, pc.paths[p]);
            }
            total += w;
          }
          CHECK(total == minor_lgv(net, rows, cols));
        }
  }
}

TEST_CASE("path weight rejects missing edges") {
  const PlanarNetwork net(2, {{K::ascending, 1, 3}});
  CHECK(path_weight(net, {{1, 0}, {2, 1}}) == GaussianRational(3));
  CHECK_THROWS_AS(path_weight(net, {{2, 0}, {1, 1}}), IndexError);
}

TEST_CASE("line weights need the LDU shape") {
  const PlanarNetwork bad(2, {{K::ascending, 1, 1}, {K::descending, 1, 1}});
  CHECK_FALSE(is_ldu_shape(bad));
  CHECK_THROWS_AS(line_weights(bad), ShapeError);
  CHECK(line_weights(PlanarNetwork(2)) == std::vector<GaussianRational>{1, 1});
  const PlanarNetwork twice(2, {{K::diagonal, 1, 3}, {K::diagonal, 1, 5}});
  CHECK(line_weights(twice) == std::vector<GaussianRational>{15, 1});
}

TEST_CASE("line weights are ratios of leading minors") {
  Rng rng(26);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 1 + k % 5;
    const Matrix m = random_ldu_matrix(rng, n, k % 2 == 0);
    const PlanarNetwork net = network_from_factors(factorize_ldu_form(m), n);
    REQUIRE(is_ldu_shape(net));
    const auto d = line_weights(net);
    GaussianRational prev = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      const GaussianRational lead = leibniz_minor(m, leading_set(j), leading_set(j));
      CHECK(d[j - 1] == lead / prev);
      prev = lead;
    }
  }
}

TEST_CASE("network positive definiteness check") {
  const auto v = pd_check_network(worked_example());
  CHECK(v.is_pd);
  CHECK(v.line_weights == std::vector<GaussianRational>{1, 2, 2});

  const auto neg = pd_check_network(Matrix{{1, 2}, {2, 1}});
  CHECK_FALSE(neg.is_pd);
  CHECK(neg.reason == PdReason::negative_value);
  CHECK(neg.witness == std::size_t{2});
  CHECK(neg.line_weights == std::vector<GaussianRational>{1, -3});

  const GaussianRational i = GaussianRational::i();
  CHECK(pd_check_network(Matrix{{2, i}, {-i, 2}}).is_pd);
  CHECK(pd_check_network(Matrix{{1, 2}, {3, 4}}).reason == PdReason::not_hermitian);

  const auto zero = pd_check_network(Matrix{{0, 1}, {1, 0}});
  CHECK(zero.reason == PdReason::zero_leading_minor);
  CHECK(zero.witness == std::size_t{1});
  CHECK_FALSE(zero.line_weights.has_value());

  const auto singular = pd_check_network(Matrix{{1, 1}, {1, 1}});
  CHECK(singular.reason == PdReason::zero_leading_minor);
  CHECK(singular.witness == std::size_t{2});
}

TEST_CASE("network check agrees with the oracle") {
  Rng rng(27);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 4;
    const Matrix m = k % 2 ? random_pd(rng, n) : random_hermitian(rng, n);
    CHECK(pd_check_network(m).is_pd == pd_oracle(m).is_pd);
  }
}

TEST_CASE("dot rendering") {
  const std::string id = network_to_dot(PlanarNetwork(3));
  CHECK(id.find("\"1_0\" -> \"1_1\";") != std::string::npos);
  CHECK(id.find("\"3_0\" -> \"3_1\";") != std::string::npos);
  const std::string dot = network_to_dot(network_from_factors(worked_example_factors(), 3));
  CHECK(dot.rfind("digraph network {", 0) == 0);
  CHECK(dot.find("label=\"-4\"") != std::string::npos);
  CHECK(dot == network_to_dot(network_from_factors(worked_example_factors(), 3)));
}
