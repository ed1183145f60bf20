#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "qng/enumeration.hpp"

using namespace qng;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("canonical form identifies relabeled paths") {
  const Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph b = Graph::from_edges(4, {{1, 3}, {3, 0}, {0, 2}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(cycle_graph(5)) != canonical_form(path_graph(5)));
}

TEST_CASE("canonical form is constant on relabelings of a random graph") {
  std::mt19937_64 rng(7);
  const Graph g = random_graph(7, rng);
  const auto form = canonical_form(g);
  for (int t = 0; t < 100; ++t) CHECK(canonical_form(g.relabeled(random_permutation(7, rng))) == form);
}

TEST_CASE("isomorphism witness maps edges onto edges") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(8, rng);
    const Graph h = g.relabeled(random_permutation(8, rng));
    const auto w = isomorphism(g, h);
    REQUIRE(w.size() == 8);
    CHECK(is_isomorphism(g, h, w));
  }
  CHECK(isomorphism(path_graph(5), star_graph(5)).empty());
}

TEST_CASE("canonical form rejects more than ten vertices") {
  CHECK_THROWS_AS(canonical_form(path_graph(11)), CapacityError);
}

TEST_CASE("class counts match the reference sequence") {
  // Numbers of graphs on n unlabeled vertices, n = 1..8.
  const int expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(expected[n - 1]));
  // Connected graphs on 6 vertices.
  CHECK(enumerate_graphs(6, true).size() == 112);
}

TEST_CASE("enumerated classes are pairwise non-isomorphic") {
  std::set<std::string> forms;
  for (const Graph& g : enumerate_graphs(7)) forms.insert(canonical_form(g).graph6);
  CHECK(forms.size() == 1044);
}

TEST_CASE("canonical form agrees across random relabelings of every 6-vertex class") {
  std::mt19937_64 rng(3);
  for (const Graph& g : enumerate_graphs(6)) {
    const auto form = canonical_form(g);
    for (int t = 0; t < 20; ++t) REQUIRE(canonical_form(g.relabeled(random_permutation(6, rng))) == form);
  }
}

TEST_CASE("graph6 stream reader skips blanks and reports line numbers") {
  std::istringstream in("C~\n\nDhc\n");
  const auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0] == complete_graph(4));
  std::istringstream bad("C~\nC\n");
  CHECK_THROWS_WITH_AS(read_graph6_stream(bad), doctest::Contains("line 2"), ParseError);
}

TEST_CASE("graph filters") {
  const auto f = GraphFilter::parse("connected,bipartite");
  CHECK(f.accepts(cycle_graph(6)));
  CHECK_FALSE(f.accepts(cycle_graph(5)));
  CHECK_FALSE(f.accepts(disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(f.describe() == "connected,bipartite");
  CHECK(GraphFilter::parse("all").describe() == "all");
  CHECK(GraphFilter::parse("cobar-disconnected").accepts(complete_bipartite(3, 3)));
  CHECK_THROWS(GraphFilter::parse("planar"));
}
