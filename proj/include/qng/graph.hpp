#ifndef QNG_GRAPH_HPP
#define QNG_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qng {

/// Raised when a result would exceed a fixed-size representation.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised on malformed textual input (graph6, family expressions).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, n <= 32.
///
/// Each adjacency row is one 32-bit word. Values are immutable once built;
/// every operator returns a new graph.
class Graph {
 public:
  static constexpr int kMaxOrder = 32;
  using Row = std::uint32_t;

  /// Edgeless graph on n vertices.
  explicit Graph(int n = 1);

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  Row row(int v) const { return rows_[v]; }
  int degree(int v) const;

  /// Degrees sorted descending (d_1 >= d_2 >= ... >= d_n).
  std::vector<int> degree_sequence() const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Relabel: vertex v of this graph becomes vertex map[v] in the result.
  Graph relabeled(const std::vector<int>& map) const;

  Graph induced(const std::vector<int>& vertices) const;

  bool is_regular() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void set_edge(int u, int v, bool present);
  void check_vertex(int v) const;

  int n_ = 1;
  int m_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

// Operators.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
/// k disjoint copies of g.
Graph copies(int k, const Graph& g);

// Named families.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int s, int t);
/// K_{1,n-1}; vertex 0 is the centre.
Graph star_graph(int n);
Graph petersen_graph();

/// Block sizes of H(s0,s1,s2): u is adjacent to S0 and S1, v to S0 and S2,
/// S0 u S1 u S2 is independent and u, v are non-adjacent.
struct HFamilyParams {
  int s0 = 0;
  int s1 = 0;
  int s2 = 0;

  int order() const { return s0 + s1 + s2 + 2; }
};

/// Vertices are laid out as S0, S1, S2, u, v.
Graph h_graph(const HFamilyParams& p);

/// Block vertex lists (S0, S1, S2, {u}, {v}) of h_graph(p).
std::vector<std::vector<int>> h_graph_blocks(const HFamilyParams& p);

// Structure.
std::vector<std::vector<int>> component_vertex_sets(const Graph& g);
std::vector<Graph> components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<int> part_a;
  std::vector<int> part_b;
};

/// Proper 2-colouring by breadth-first search, or nullopt when g has an odd
/// cycle. Each component puts its smallest vertex in part A.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
/// Bipartite components; an isolated vertex counts (with an empty class).
int count_bipartite_components(const Graph& g);
/// True when some component is connected bipartite with equal class sizes.
bool is_balanced_bipartite_component_present(const Graph& g);
/// Connected bipartite graph whose class degrees are constant per class.
bool is_semiregular_bipartite(const Graph& g);

// graph6.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace qng

#endif  // QNG_GRAPH_HPP
