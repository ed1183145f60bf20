#include <doctest.h>

#include <cmath>
#include <random>

#include "qng/enumeration.hpp"
#include "qng/partitions.hpp"

using namespace qng;

TEST_CASE("quotient of K_1 v R with two blocks") {
  // n=6, d2=2: K_1 joined to a (d2-1)-regular graph on n-2 vertices.
  const Graph g = join(empty_graph(1), copies(2, complete_graph(2)));
  const VertexPartition p(5, {{0}, {1, 2, 3, 4}});
  const QuotientMatrix b = quotient_matrix(g, p);
  CHECK(b.matrix == RationalMatrix{{4, 4}, {1, 3}});
  CHECK(b.weighted_symmetric());
  CHECK(is_equitable(g, p));
}

TEST_CASE("quotient of H(n-4,1,1)") {
  const int n = 9;
  const long N = n;
  const Graph h = h_graph({n - 4, 1, 1});
  const VertexPartition p(n, h_graph_blocks({n - 4, 1, 1}));
  CHECK(is_equitable(h, p));
  CHECK(quotient_matrix(h, p).matrix ==
        RationalMatrix{{2, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {N - 4, 1, 0, N - 3, 0}, {N - 4, 0, 1, 0, N - 3}});
  CHECK(blowup_quotient(h_pattern({n - 4, 1, 1})) == quotient_matrix(h, p).matrix);
  CHECK(quotient_gcd_degree(h_graph({2, 1, 1}), VertexPartition(6, h_graph_blocks({2, 1, 1}))) == 5);
}

TEST_CASE("single block gives the average row sum") {
  const Graph g = path_graph(5);
  const QuotientMatrix b = quotient_matrix(g, VertexPartition::single_block(5));
  CHECK(b.matrix(0, 0) == Rational(4 * 4, 5));
}

TEST_CASE("equitable detection") {
  CHECK(is_equitable(star_graph(6), VertexPartition(6, {{0}, {1, 2, 3, 4, 5}})));
  CHECK_FALSE(is_equitable(path_graph(4), VertexPartition(4, {{0, 1}, {2, 3}})));
  for (int s0 = 0; s0 <= 3; ++s0)
    for (int s1 = 0; s1 <= 2; ++s1)
      for (int s2 = 0; s2 <= 2; ++s2) {
        const HFamilyParams hp{s0, s1, s2};
        std::vector<std::vector<int>> blocks;
        for (auto& b : h_graph_blocks(hp))
          if (!b.empty()) blocks.push_back(b);
        CHECK(is_equitable(h_graph(hp), VertexPartition(hp.order(), blocks)));
      }
}

TEST_CASE("interlacing") {
  const Spectrum big = eigenvalues_sym(q_matrix(cycle_graph(5)));
  const SymMatrix q = q_matrix(cycle_graph(5));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const std::vector<double> sub{double(q(i, i)), double(q(i, j)), double(q(j, i)), double(q(j, j))};
      CHECK(interlaces(eigenvalues_sym(sub, 2), big));
    }
  CHECK(interlaces(big, big));
  Spectrum small;
  small.values = {10};
  Spectrum two;
  two.values = {5, 1};
  CHECK_FALSE(interlaces(small, two));
}

TEST_CASE("equitable quotients contain their eigenvalues") {
  const VertexPartition star(6, {{0}, {1, 2, 3, 4, 5}});
  const QuotientMatrix b = quotient_matrix(star_graph(6), star);
  CHECK(b.matrix == RationalMatrix{{5, 5}, {1, 1}});
  // Roots of x^2 - 6x by the quadratic formula: 6 and 0.
  const Spectrum s = b.spectrum();
  CHECK(s.value(1) == doctest::Approx(6));
  CHECK(std::abs(s.value(2)) < 1e-12);
  CHECK(verify_quotient_eigen_containment(star_graph(6), star));
  CHECK(verify_quotient_eigen_containment(complete_graph(5), VertexPartition::single_block(5)));
  CHECK_THROWS_AS(verify_quotient_eigen_containment(path_graph(4), VertexPartition(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("random partitions interlace and stay weighted-symmetric") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& all = enumerate_graphs(3 + trial % 6);
    const Graph& g = all[rng() % all.size()];
    const VertexPartition p = VertexPartition::random(g.order(), 1 + static_cast<int>(rng() % g.order()), rng);
    const QuotientMatrix b = quotient_matrix(g, p);
    CHECK(b.weighted_symmetric());
    CHECK(interlaces(b.spectrum(), eigenvalues_sym(q_matrix(g))));
  }
}

TEST_CASE("duplicate classes") {
  const auto star = duplicate_classes(star_graph(6));
  REQUIRE(star.size() == 1);
  CHECK(star[0].vertices.size() == 5);
  CHECK_FALSE(star[0].clique);
  CHECK(star[0].degree == 1);

  const auto j = duplicate_classes(join(empty_graph(2), complete_graph(4)));
  REQUIRE(j.size() == 2);
  CHECK(j[0].vertices == std::vector<int>{0, 1});
  CHECK_FALSE(j[0].clique);
  CHECK(j[0].degree == 4);
  CHECK(j[1].vertices.size() == 4);
  CHECK(j[1].clique);
  CHECK(j[1].degree == 5);

  CHECK(duplicate_classes(cycle_graph(5)).empty());
}

TEST_CASE("duplicate classes give eigenvalue multiplicities") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Polynomial cp = char_poly_exact(q_matrix(g));
      for (const auto& c : duplicate_classes(g)) {
        const Rational at(c.clique ? c.degree - 1 : c.degree);
        CHECK(multiplicity_at(cp, at) >= static_cast<int>(c.vertices.size()) - 1);
      }
    }
}

TEST_CASE("block patterns") {
  const BlockPattern p = h_pattern({3, 0, 1});
  CHECK(p.order() == 6);
  CHECK(without_empty_blocks(p).block_count() == 4);
  const BlockPattern c = complement(p);
  CHECK(blowup_graph(c) == complement(blowup_graph(p)));
  CHECK(blowup_quotient(c) == quotient_matrix(blowup_graph(c), blowup_partition(c)).matrix);
}
