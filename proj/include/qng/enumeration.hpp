#ifndef QNG_ENUMERATION_HPP
#define QNG_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "qng/graph.hpp"

namespace qng {

/// Relabeling-invariant representative of an isomorphism class: the graph6
/// string of the relabeling that minimises the adjacency bit string over all
/// orderings compatible with colour refinement.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  /// position[v] = index of original vertex v in the canonical graph.
  std::vector<int> position;
  Graph graph;
  std::uint64_t key = 0;
};

inline constexpr int kMaxCanonicalOrder = 10;

/// Throws CapacityError for n > 10.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);
/// Vertex bijection w with a.adjacent(u,v) == b.adjacent(w[u],w[v]), or an
/// empty vector when a and b are not isomorphic.
std::vector<int> isomorphism(const Graph& a, const Graph& b);
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& w);

/// One canonical representative per isomorphism class on n vertices
/// (1 <= n <= 8), sorted by canonical graph6. Results are memoised.
const std::vector<Graph>& enumerate_graphs(int n);
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// Graphs read from a graph6 stream (one per line, blank lines skipped).
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Combination of structural filters applied before a predicate.
struct GraphFilter {
  bool connected = false;
  bool bipartite = false;
  bool regular = false;
  bool complement_disconnected = false;

  /// Comma-separated subset of connected, bipartite, regular,
  /// cobar-disconnected, all.
  static GraphFilter parse(const std::string& spec);
  bool accepts(const Graph& g) const;
  std::string describe() const;
};

}  // namespace qng

#endif  // QNG_ENUMERATION_HPP
