#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qng/enumeration.hpp"
#include "qng/spectra.hpp"

using namespace qng;

namespace {

// det(M) by permutation expansion; oracle for small orders.
long brute_det(const std::vector<long>& m, int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    long term = 1;
    for (int i = 0; i < k && term != 0; ++i) term *= m[i * k + perm[i]];
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
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

TEST_CASE("matrix builders") {
  CHECK(q_matrix(complete_graph(2)).entries == std::vector<long>{1, 1, 1, 1});
  CHECK(q_matrix(path_graph(3)).entries == std::vector<long>{1, 1, 0, 1, 2, 1, 0, 1, 1});
  CHECK(l_matrix(path_graph(3)).entries == std::vector<long>{1, -1, 0, -1, 2, -1, 0, -1, 1});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(1 + trial % 8, rng);
    const SymMatrix a = q_matrix(g);
    const SymMatrix b = q_matrix(complement(g));
    const SymMatrix k = q_matrix(complete_graph(g.order()));
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i] + b.entries[i] == k.entries[i]);
  }
}

TEST_CASE("float eigenvalues of named graphs") {
  const Spectrum k4 = eigenvalues_sym(q_matrix(complete_graph(4)));
  CHECK(k4.value(1) == doctest::Approx(6));
  for (int i = 2; i <= 4; ++i) CHECK(k4.value(i) == doctest::Approx(2));
  CHECK(eigenvalues_sym(q_matrix(path_graph(4))).value(2) == doctest::Approx(2));
  CHECK(eigenvalues_sym(q_matrix(star_graph(6))).value(2) == doctest::Approx(1));
  CHECK_THROWS_AS(eigenvalues_sym(std::vector<double>{0, 1, 2, 0}, 2), std::invalid_argument);
}

TEST_CASE("characteristic polynomials against a determinant oracle") {
  CHECK(char_poly_exact(q_matrix(complete_graph(2))) == Polynomial{0, -2, 1});
  CHECK(char_poly_exact(q_matrix(cycle_graph(4))) == Polynomial{0, -16, 20, -8, 1});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const Graph g = random_graph(n, rng);
    const SymMatrix q = q_matrix(g);
    const Polynomial cp = char_poly_exact(q);
    CHECK(cp.degree() == n);
    for (long x : {-2L, 0L, 1L, 3L}) {
      std::vector<long> m(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i * n + j] = (i == j ? x : 0) - q(i, j);
      CHECK(cp.eval(Rational(x)) == brute_det(m, n));
    }
  }
}

TEST_CASE("quotient B2 at n=9 has root (n-2+sqrt(n^2-8n+20))/2") {
  const long n = 9;
  const RationalMatrix b2{{2, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {n - 4, 1, 0, n - 3, 0}, {n - 4, 0, 1, 0, n - 3}};
  const Polynomial cp = char_poly_exact(b2);
  const Polynomial factor{n - 4, -(n - 2), 1};
  CHECK(divmod(cp, factor).remainder.is_zero());
  const double beta = (n - 2 + std::sqrt(double(n * n - 8 * n + 20))) / 2;
  CHECK(ExactSpectrum(cp).kth(2).to_double() == doctest::Approx(beta).epsilon(1e-12));
}

TEST_CASE("multiplicities and Sturm counts") {
  CHECK(multiplicity_at(char_poly_exact(q_matrix(complete_graph(6))), Rational(4)) == 5);
  CHECK(sturm_count(char_poly_exact(q_matrix(cycle_graph(4))), Rational(3), Rational(5)) == 1);
  CHECK(multiplicity_at(char_poly_exact(q_matrix(star_graph(6))), Rational(1)) == 4);
}

TEST_CASE("exact q_k certification") {
  CHECK(certify_qk(star_graph(6), 2, Rational(1)));
  CHECK(certify_qk(cycle_graph(4), 2, Rational(2)));
  CHECK_FALSE(certify_qk(complete_graph(6), 1, Rational(9)));
  CHECK(certify_qk(complete_graph(6), 1, Rational(10)));
  CHECK(certify_qk(complete_graph(6), 6, Rational(4)));
}

TEST_CASE("Nordhaus-Gaddum sums") {
  CHECK(ng_sum(path_graph(4), MatrixKind::SignlessLaplacian, 2) == doctest::Approx(4));
  CHECK(ng_sum(complete_graph(7), MatrixKind::SignlessLaplacian, 2) == doctest::Approx(5));
  CHECK(ng_sum(complete_bipartite(3, 3), MatrixKind::SignlessLaplacian, 2) == doctest::Approx(7));
}

TEST_CASE("spectral invariants on all graphs up to 7") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Spectrum q = eigenvalues_sym(q_matrix(g));
      const Spectrum l = eigenvalues_sym(l_matrix(g));
      CHECK(q.value(n) >= -1e-9);
      CHECK(l.value(n) >= -1e-9);
      CHECK(std::is_sorted(q.values.rbegin(), q.values.rend()));
      CHECK(std::abs(q.sum() - 2 * g.size()) < n * 1e-9);
      const Polynomial cp = char_poly_exact(q_matrix(g));
      if (n >= 1) CHECK(cp.coeff(n - 1) == -2 * g.size());
    }
}

TEST_CASE("float spectrum agrees with exact isolation") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Spectrum f = eigenvalues_sym(q_matrix(g));
      const ExactSpectrum e(char_poly_exact(q_matrix(g)));
      REQUIRE(e.size() == n);
      for (int k = 1; k <= n; ++k) CHECK(std::abs(f.value(k) - e.kth(k).to_double()) < 1e-8);
    }
}
