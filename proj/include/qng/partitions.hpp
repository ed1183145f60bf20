#ifndef QNG_PARTITIONS_HPP
#define QNG_PARTITIONS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qng/graph.hpp"
#include "qng/spectra.hpp"

namespace qng {

/// Ordered partition of {0..n-1} into nonempty blocks. Block order indexes
/// the rows of the quotient matrix.
class VertexPartition {
 public:
  /// Throws std::invalid_argument unless blocks partition {0..n-1}.
  VertexPartition(int n, std::vector<std::vector<int>> blocks);

  static VertexPartition single_block(int n);
  static VertexPartition discrete(int n);
  /// Uniformly random block assignment into at most max_blocks blocks;
  /// empty blocks are dropped.
  static VertexPartition random(int n, int max_blocks, std::mt19937_64& rng);

  int order() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[i]; }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// B_Pi of a symmetric matrix: b_ij = (sum of block (i,j)) / |X_i|.
struct QuotientMatrix {
  RationalMatrix matrix;
  std::vector<int> block_sizes;

  int order() const { return matrix.order(); }
  /// b_ij |X_i| == b_ji |X_j| for all i, j.
  bool weighted_symmetric() const;
  /// Real eigenvalues via the similar symmetric matrix D^1/2 B D^-1/2.
  Spectrum spectrum() const;
};

QuotientMatrix quotient_matrix(const SymMatrix& m, const VertexPartition& p);
/// Quotient of Q(g).
QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& p);

/// Every vertex of X_i has the same Q-row-sum into X_j, for all i, j.
bool is_equitable(const Graph& g, const VertexPartition& p);

/// alpha_i >= beta_i >= alpha_{n-m+i} within tol, small = beta, big = alpha.
bool interlaces(const Spectrum& small, const Spectrum& big, double tol = 1e-9);

/// Degree of gcd(char poly of B_Pi, char poly of Q(g)).
int quotient_gcd_degree(const Graph& g, const VertexPartition& p);

/// Exact check that char poly of B_Pi divides char poly of Q(g).
/// Throws std::invalid_argument when p is not equitable.
bool verify_quotient_eigen_containment(const Graph& g, const VertexPartition& p);

struct DuplicateClass {
  std::vector<int> vertices;
  bool clique = false;
  int degree = 0;
};

/// Maximal sets (size >= 2) of vertices with identical neighbourhoods outside
/// the set; each is a clique or an independent set. Sorted by first vertex.
std::vector<DuplicateClass> duplicate_classes(const Graph& g);

/// A graph blown up from a small pattern: each block is a clique or an
/// independent set, and each pair of blocks is completely joined or not.
struct BlockPattern {
  std::vector<long> sizes;
  std::vector<bool> clique;
  std::vector<std::vector<bool>> joined;

  int block_count() const { return static_cast<int>(sizes.size()); }
  long order() const;
};

/// Quotient of Q for the blown-up graph under its block partition, computed
/// from the pattern alone (no graph is materialised, so any order works).
RationalMatrix blowup_quotient(const BlockPattern& pattern);
BlockPattern complement(const BlockPattern& pattern);
/// Drops zero-size blocks.
BlockPattern without_empty_blocks(const BlockPattern& pattern);
/// The graph itself, vertices laid out block by block (order <= 32).
Graph blowup_graph(const BlockPattern& pattern);
VertexPartition blowup_partition(const BlockPattern& pattern);

/// Pattern of H(s0,s1,s2) with blocks S0, S1, S2, u, v (empty blocks kept).
BlockPattern h_pattern(const HFamilyParams& p);

}  // namespace qng

#endif  // QNG_PARTITIONS_HPP
