#include "qng/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qng {

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition block is empty");
    for (int v : b) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
      if (seen[v]++) throw std::invalid_argument("partition blocks overlap");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("partition does not cover every vertex");
}

VertexPartition VertexPartition::single_block(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return VertexPartition(n, {all});
}

VertexPartition VertexPartition::discrete(int n) {
  std::vector<std::vector<int>> b;
  for (int v = 0; v < n; ++v) b.push_back({v});
  return VertexPartition(n, std::move(b));
}

VertexPartition VertexPartition::random(int n, int max_blocks, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, std::max(1, max_blocks) - 1);
  std::vector<std::vector<int>> b(std::max(1, max_blocks));
  for (int v = 0; v < n; ++v) b[pick(rng)].push_back(v);
  std::erase_if(b, [](const auto& x) { return x.empty(); });
  return VertexPartition(n, std::move(b));
}

bool QuotientMatrix::weighted_symmetric() const {
  for (int i = 0; i < order(); ++i)
    for (int j = 0; j < order(); ++j)
      if (matrix(i, j) * block_sizes[i] != matrix(j, i) * block_sizes[j]) return false;
  return true;
}

Spectrum QuotientMatrix::spectrum() const {
  const int k = order();
  std::vector<double> s(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      s[i * k + j] = matrix(i, j).get_d() *
                     std::sqrt(static_cast<double>(block_sizes[i]) / block_sizes[j]);
  // Symmetrise away rounding so the solver's symmetry check is exact.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) s[j * k + i] = s[i * k + j];
  return eigenvalues_sym(s, k);
}

QuotientMatrix quotient_matrix(const SymMatrix& m, const VertexPartition& p) {
  if (p.order() != m.order) throw std::invalid_argument("partition order mismatch");
  const int k = p.block_count();
  QuotientMatrix q{RationalMatrix(k), {}};
  for (int i = 0; i < k; ++i) {
    q.block_sizes.push_back(static_cast<int>(p.block(i).size()));
    for (int j = 0; j < k; ++j) {
      long sum = 0;
      for (int r : p.block(i))
        for (int c : p.block(j)) sum += m(r, c);
      q.matrix(i, j) = Rational(Integer(sum), Integer(static_cast<long>(p.block(i).size())));
      q.matrix(i, j).canonicalize();
    }
  }
  return q;
}

QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& p) {
  return quotient_matrix(q_matrix(g), p);
}

bool is_equitable(const Graph& g, const VertexPartition& p) {
  const SymMatrix q = q_matrix(g);
  for (const auto& bi : p.blocks())
    for (const auto& bj : p.blocks()) {
      long first = 0;
      for (std::size_t r = 0; r < bi.size(); ++r) {
        long sum = 0;
        for (int c : bj) sum += q(bi[r], c);
        if (r == 0) first = sum;
        else if (sum != first) return false;
      }
    }
  return true;
}

bool interlaces(const Spectrum& small, const Spectrum& big, double tol) {
  const int m = small.size();
  const int n = big.size();
  if (m > n) return false;
  for (int i = 0; i < m; ++i) {
    if (small.values[i] > big.values[i] + tol) return false;
    if (small.values[i] < big.values[n - m + i] - tol) return false;
  }
  return true;
}

int quotient_gcd_degree(const Graph& g, const VertexPartition& p) {
  return gcd(char_poly_exact(quotient_matrix(g, p).matrix),
             char_poly_exact(q_matrix(g)))
      .degree();
}

bool verify_quotient_eigen_containment(const Graph& g, const VertexPartition& p) {
  if (!is_equitable(g, p))
    throw std::invalid_argument("verify_quotient_eigen_containment: partition is not equitable");
  const Polynomial qb = char_poly_exact(quotient_matrix(g, p).matrix);
  return divmod(char_poly_exact(q_matrix(g)), qb).remainder.is_zero();
}

std::vector<DuplicateClass> duplicate_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Graph::Row mask = ~((Graph::Row{1} << u) | (Graph::Row{1} << v));
      if (((g.row(u) ^ g.row(v)) & mask) == 0) parent[find(v)] = find(u);
    }
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<DuplicateClass> out;
  for (auto& grp : groups) {
    if (grp.size() < 2) continue;
    DuplicateClass c;
    c.clique = g.adjacent(grp[0], grp[1]);
    c.degree = g.degree(grp[0]);
    c.vertices = std::move(grp);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

long BlockPattern::order() const { return std::accumulate(sizes.begin(), sizes.end(), 0L); }

RationalMatrix blowup_quotient(const BlockPattern& pattern) {
  const BlockPattern p = without_empty_blocks(pattern);
  const int k = p.block_count();
  RationalMatrix b(k);
  for (int i = 0; i < k; ++i) {
    long inner = p.clique[i] ? p.sizes[i] - 1 : 0;
    long degree = inner;
    for (int j = 0; j < k; ++j)
      if (j != i && p.joined[i][j]) {
        degree += p.sizes[j];
        b(i, j) = p.sizes[j];
      }
    b(i, i) = degree + inner;
  }
  return b;
}

BlockPattern complement(const BlockPattern& pattern) {
  BlockPattern c = pattern;
  for (int i = 0; i < c.block_count(); ++i) {
    c.clique[i] = !c.clique[i];
    for (int j = 0; j < c.block_count(); ++j)
      if (i != j) c.joined[i][j] = !c.joined[i][j];
  }
  return c;
}

BlockPattern without_empty_blocks(const BlockPattern& pattern) {
  BlockPattern out;
  std::vector<int> keep;
  for (int i = 0; i < pattern.block_count(); ++i)
    if (pattern.sizes[i] > 0) keep.push_back(i);
  for (int i : keep) {
    out.sizes.push_back(pattern.sizes[i]);
    out.clique.push_back(pattern.clique[i]);
    std::vector<bool> row;
    for (int j : keep) row.push_back(pattern.joined[i][j]);
    out.joined.push_back(std::move(row));
  }
  return out;
}

Graph blowup_graph(const BlockPattern& pattern) {
  const BlockPattern p = without_empty_blocks(pattern);
  if (p.order() > Graph::kMaxOrder) throw CapacityError("blown-up graph exceeds 32 vertices");
  const auto blocks = blowup_partition(p).blocks();
  std::vector<Edge> e;
  for (int i = 0; i < p.block_count(); ++i)
    for (int j = i; j < p.block_count(); ++j) {
      const bool linked = i == j ? p.clique[i] : p.joined[i][j];
      if (!linked) continue;
      for (int a : blocks[i])
        for (int b : blocks[j])
          if (a < b) e.emplace_back(a, b);
    }
  return Graph::from_edges(static_cast<int>(p.order()), e);
}

VertexPartition blowup_partition(const BlockPattern& pattern) {
  const BlockPattern p = without_empty_blocks(pattern);
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (long s : p.sizes) {
    std::vector<int> b;
    for (long i = 0; i < s; ++i) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return VertexPartition(next, std::move(blocks));
}

BlockPattern h_pattern(const HFamilyParams& p) {
  BlockPattern b;
  b.sizes = {p.s0, p.s1, p.s2, 1, 1};
  b.clique = {false, false, false, false, false};
  b.joined.assign(5, std::vector<bool>(5, false));
  auto link = [&b](int i, int j) { b.joined[i][j] = b.joined[j][i] = true; };
  link(3, 0);
  link(3, 1);
  link(4, 0);
  link(4, 2);
  return b;
}

}  // namespace qng
