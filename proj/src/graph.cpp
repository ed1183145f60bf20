#include "qng/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

namespace qng {

namespace {

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  if (n > Graph::kMaxOrder)
    throw CapacityError("graph order " + std::to_string(n) + " exceeds " +
                        std::to_string(Graph::kMaxOrder));
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    g.set_edge(u, v, true);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::set_edge(int u, int v, bool present) {
  if (adjacent(u, v) == present) return;
  rows_[u] ^= Row{1} << v;
  rows_[v] ^= Row{1} << u;
  m_ += present ? 1 : -1;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (Row r = rows_[v]; r; r &= r - 1) out.push_back(std::countr_zero(r));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  Graph g = *this;
  g.set_edge(u, v, true);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.set_edge(u, v, false);
  return g;
}

Graph Graph::relabeled(const std::vector<int>& map) const {
  if (static_cast<int>(map.size()) != n_)
    throw std::invalid_argument("relabeling has wrong length");
  Row seen = 0;
  for (int x : map) {
    check_vertex(x);
    seen |= Row{1} << x;
  }
  if (std::popcount(seen) != n_)
    throw std::invalid_argument("relabeling is not a permutation");
  Graph g(n_);
  for (auto [u, v] : edges()) g.set_edge(map[u], map[v], true);
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.set_edge(static_cast<int>(i), static_cast<int>(j), true);
  }
  return g;
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  check_order(ng + h.order());
  auto e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + ng, v + ng);
  return Graph::from_edges(ng + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order();
  check_order(ng + h.order());
  auto e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + ng, v + ng);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.order(); ++v) e.emplace_back(u, v + ng);
  return Graph::from_edges(ng + h.order(), e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  check_order(ng * nh);
  auto id = [nh](int a, int b) { return a * nh + b; };
  std::vector<Edge> e;
  for (int a = 0; a < ng; ++a)
    for (auto [b1, b2] : h.edges()) e.emplace_back(id(a, b1), id(a, b2));
  for (auto [a1, a2] : g.edges())
    for (int b = 0; b < nh; ++b) e.emplace_back(id(a1, b), id(a2, b));
  return Graph::from_edges(ng * nh, e);
}

Graph copies(int k, const Graph& g) {
  if (k < 1) throw std::invalid_argument("copy count must be positive");
  Graph out = g;
  for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("complete bipartite parts must be nonempty");
  return join(Graph(s), Graph(t));
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star needs at least 2 vertices");
  return complete_bipartite(1, n - 1);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

std::vector<std::vector<int>> h_graph_blocks(const HFamilyParams& p) {
  if (p.s0 < 0 || p.s1 < 0 || p.s2 < 0)
    throw std::invalid_argument("H-family block sizes must be nonnegative");
  check_order(p.order());
  std::vector<std::vector<int>> blocks(5);
  int next = 0;
  for (int b = 0; b < 3; ++b) {
    const int size = b == 0 ? p.s0 : (b == 1 ? p.s1 : p.s2);
    for (int i = 0; i < size; ++i) blocks[b].push_back(next++);
  }
  blocks[3] = {next++};
  blocks[4] = {next};
  return blocks;
}

Graph h_graph(const HFamilyParams& p) {
  const auto blocks = h_graph_blocks(p);
  const int u = blocks[3][0];
  const int v = blocks[4][0];
  std::vector<Edge> e;
  for (int w : blocks[0]) {
    e.emplace_back(u, w);
    e.emplace_back(v, w);
  }
  for (int w : blocks[1]) e.emplace_back(u, w);
  for (int w : blocks[2]) e.emplace_back(v, w);
  return Graph::from_edges(p.order(), e);
}

std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
  std::vector<std::vector<int>> out;
  Graph::Row unseen = g.order() == 32 ? ~Graph::Row{0}
                                      : (Graph::Row{1} << g.order()) - 1;
  while (unseen) {
    const int start = std::countr_zero(unseen);
    Graph::Row comp = Graph::Row{1} << start;
    Graph::Row frontier = comp;
    while (frontier) {
      Graph::Row next = 0;
      for (Graph::Row f = frontier; f; f &= f - 1)
        next |= g.row(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<int> vs;
    for (Graph::Row c = comp; c; c &= c - 1) vs.push_back(std::countr_zero(c));
    out.push_back(std::move(vs));
  }
  return out;
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& vs : component_vertex_sets(g)) out.push_back(g.induced(vs));
  return out;
}

bool is_connected(const Graph& g) { return component_vertex_sets(g).size() == 1; }

namespace {

// Colour of each vertex (0/1) or nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_colouring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  auto colour = two_colouring(g);
  if (!colour) return std::nullopt;
  Bipartition b;
  for (int v = 0; v < g.order(); ++v)
    ((*colour)[v] == 0 ? b.part_a : b.part_b).push_back(v);
  return b;
}

bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

int count_bipartite_components(const Graph& g) {
  int count = 0;
  for (const auto& c : components(g))
    if (is_bipartite(c)) ++count;
  return count;
}

bool is_balanced_bipartite_component_present(const Graph& g) {
  for (const auto& c : components(g)) {
    auto b = bipartition(c);
    if (b && b->part_a.size() == b->part_b.size()) return true;
  }
  return false;
}

bool is_semiregular_bipartite(const Graph& g) {
  if (!is_connected(g)) return false;
  auto b = bipartition(g);
  if (!b || b->part_b.empty()) return false;
  auto constant_degree = [&g](const std::vector<int>& part) {
    for (int v : part)
      if (g.degree(v) != g.degree(part.front())) return false;
    return true;
  };
  return constant_degree(b->part_a) && constant_degree(b->part_b);
}

// graph6: N(n) as one byte n+63 for n <= 62, then the upper triangle read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per
// byte, most significant first, zero padded, each byte offset by 63.
Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw ParseError("graph6: character out of range in '" +
                       std::string(text) + "'");
  if (text[0] == 126)
    throw CapacityError("graph6: long-form header (n > 62) is not supported");
  const int n = text[0] - 63;
  if (n < 1) throw ParseError("graph6: zero-vertex graph is not supported");
  if (n > Graph::kMaxOrder)
    throw CapacityError("graph6: order " + std::to_string(n) + " exceeds " +
                        std::to_string(Graph::kMaxOrder));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw ParseError("graph6: truncated bit vector");
  if (text.size() - 1 > bytes) throw ParseError("graph6: trailing characters");
  std::vector<Edge> e;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) e.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, e);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace qng
