#include <doctest.h>

#include <random>

#include "qng/enumeration.hpp"
#include "qng/graph.hpp"

using namespace qng;

namespace {

// Reference graph6 encoder written from the format description: n+63, then
// the upper triangle column by column, six bits per byte, MSB first.
std::string encode_reference(const Graph& g) {
  std::string out(1, static_cast<char>(g.order() + 63));
  std::vector<int> bits;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    out += static_cast<char>(v + 63);
  }
  return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("complement of named graphs") {
  CHECK(complement(complete_graph(4)) == empty_graph(4));
  CHECK(isomorphic(complement(path_graph(4)), path_graph(4)));
  CHECK(isomorphic(complement(star_graph(6)), disjoint_union(complete_graph(5), empty_graph(1))));
}

TEST_CASE("operators on orders and sizes") {
  const Graph g = join(empty_graph(2), complete_graph(4));
  CHECK(g.degree_sequence() == std::vector<int>{5, 5, 5, 5, 4, 4});
  const Graph u = disjoint_union(complete_graph(2), empty_graph(4));
  CHECK(u.order() == 6);
  CHECK(u.size() == 1);
  const Graph prism = cartesian_product(complete_graph(3), complete_graph(2));
  CHECK(prism.order() == 6);
  CHECK(prism.size() == 9);
  CHECK(prism.is_regular());
  CHECK(prism.degree(0) == 3);
  CHECK_THROWS_AS(join(complete_graph(20), complete_graph(13)), CapacityError);
}

TEST_CASE("H(s0,s1,s2) construction") {
  const Graph h = h_graph({1, 1, 1});
  CHECK(h.order() == 5);
  CHECK(h.size() == 4);
  CHECK(is_connected(h));
  // Layout S0, S1, S2, u, v.
  CHECK(h.neighbors(3) == std::vector<int>{0, 1});
  CHECK(h.neighbors(4) == std::vector<int>{0, 2});
  const Graph h6 = h_graph({2, 1, 1});
  CHECK(h6.size() == 6);
  CHECK(is_bipartite(h6));
  const Graph h301 = h_graph({3, 0, 1});
  CHECK(h301.degree(4) == 3);  // u: n-3
  CHECK(h301.degree(5) == 4);  // v: n-2
  CHECK(isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
}

TEST_CASE("graph6 encoding") {
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(from_graph6("Dhc") == cycle_graph(5));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(1 + trial % 32, rng);
    const std::string s = to_graph6(g);
    CHECK(s == encode_reference(g));
    CHECK(from_graph6(s) == g);
  }
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(from_graph6("C\x7f"), ParseError);
}

TEST_CASE("components and bipartite structure") {
  const Graph g = disjoint_union(complete_graph(2), empty_graph(4));
  CHECK(components(g).size() == 5);
  CHECK(count_bipartite_components(g) == 5);
  CHECK(is_balanced_bipartite_component_present(g));
  const auto parts = bipartition(complete_bipartite(3, 3));
  REQUIRE(parts);
  CHECK(parts->part_a.size() == 3);
  CHECK(parts->part_b.size() == 3);
  const Graph k5k1 = disjoint_union(complete_graph(5), empty_graph(1));
  CHECK(count_bipartite_components(k5k1) == 1);
  CHECK_FALSE(is_balanced_bipartite_component_present(k5k1));
  CHECK_FALSE(bipartition(cycle_graph(5)));
  CHECK(is_semiregular_bipartite(complete_bipartite(2, 4)));
  CHECK_FALSE(is_semiregular_bipartite(path_graph(4)));
}

TEST_CASE("complement and degree invariants on all graphs up to 7") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Graph c = complement(g);
      CHECK(complement(c) == g);
      CHECK(g.size() + c.size() == n * (n - 1) / 2);
      const auto d = g.degree_sequence();
      const auto dc = c.degree_sequence();
      for (int i = 0; i < n; ++i) CHECK(d[i] == n - 1 - dc[n - 1 - i]);
      if (auto b = bipartition(g)) {
        for (int u : b->part_a)
          for (int v : b->part_a) CHECK_FALSE(g.adjacent(u, v));
        for (int u : b->part_b)
          for (int v : b->part_b) CHECK_FALSE(g.adjacent(u, v));
      }
    }
}

TEST_CASE("join size formula") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = random_graph(1 + trial % 8, rng);
    const Graph b = random_graph(1 + trial % 5, rng);
    CHECK(join(a, b).size() == a.size() + b.size() + a.order() * b.order());
    CHECK(disjoint_union(a, b).size() == a.size() + b.size());
  }
}
