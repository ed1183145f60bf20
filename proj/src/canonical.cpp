#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "qng/enumeration.hpp"

namespace qng {

namespace {

using Colouring = std::array<int, kMaxCanonicalOrder>;

// Individualisation-refinement search for the lexicographically smallest
// adjacency bit string among leaves of the search tree. Twin vertices
// (identical neighbourhoods apart from each other) are interchangeable by an
// automorphism that fixes the current colouring, so only one per cell is
// branched on.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        const Graph::Row mask = ~((Graph::Row{1} << u) | (Graph::Row{1} << v));
        twin_[u][v] = ((g.row(u) ^ g.row(v)) & mask) == 0;
      }
  }

  CanonicalLabeling run() {
    Colouring c{};
    search(c, 1);
    CanonicalLabeling out;
    out.position.assign(best_position_.begin(), best_position_.begin() + n_);
    out.graph = g_.relabeled(out.position);
    out.key = best_key_;
    return out;
  }

 private:
  // Replace colour values by their rank among distinct values.
  int densify(Colouring& c) const {
    std::array<int, kMaxCanonicalOrder> sorted{};
    std::copy(c.begin(), c.begin() + n_, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n_);
    const auto end = std::unique(sorted.begin(), sorted.begin() + n_);
    for (int v = 0; v < n_; ++v)
      c[v] = static_cast<int>(std::lower_bound(sorted.begin(), end, c[v]) - sorted.begin());
    return static_cast<int>(end - sorted.begin());
  }

  // Colour refinement: split cells by (colour, neighbour counts per colour)
  // until stable. Cell order follows the signature order, which does not
  // depend on vertex labels.
  int refine(Colouring& c, int colours) const {
    while (colours < n_) {
      std::array<std::array<int, kMaxCanonicalOrder + 1>, kMaxCanonicalOrder> sig{};
      for (int v = 0; v < n_; ++v) {
        sig[v][0] = c[v];
        for (Graph::Row r = g_.row(v); r; r &= r - 1) ++sig[v][1 + c[std::countr_zero(r)]];
      }
      std::array<int, kMaxCanonicalOrder> idx{};
      std::iota(idx.begin(), idx.begin() + n_, 0);
      std::sort(idx.begin(), idx.begin() + n_,
                [&sig](int a, int b) { return sig[a] < sig[b]; });
      Colouring next{};
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
        next[idx[i]] = rank;
      }
      if (rank + 1 == colours) break;
      c = next;
      colours = rank + 1;
    }
    return colours;
  }

  std::uint64_t leaf_key(const Colouring& c) const {
    std::array<int, kMaxCanonicalOrder> vertex_at{};
    for (int v = 0; v < n_; ++v) vertex_at[c[v]] = v;
    std::uint64_t key = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        key = (key << 1) | (g_.adjacent(vertex_at[i], vertex_at[j]) ? 1u : 0u);
    return key;
  }

  void search(Colouring c, int colours) {
    colours = refine(c, colours);
    if (colours == n_) {
      const std::uint64_t key = leaf_key(c);
      if (!found_ || key < best_key_) {
        found_ = true;
        best_key_ = key;
        best_position_ = c;
      }
      return;
    }
    // Target: smallest non-singleton cell, lowest colour on ties.
    std::array<int, kMaxCanonicalOrder> cell_size{};
    for (int v = 0; v < n_; ++v) ++cell_size[c[v]];
    int target = -1;
    for (int col = 0; col < colours; ++col)
      if (cell_size[col] > 1 && (target < 0 || cell_size[col] < cell_size[target]))
        target = col;

    std::array<int, kMaxCanonicalOrder> tried{};
    int tried_count = 0;
    for (int v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      bool redundant = false;
      for (int t = 0; t < tried_count && !redundant; ++t) redundant = twin_[tried[t]][v];
      if (redundant) continue;
      tried[tried_count++] = v;
      Colouring child{};
      for (int x = 0; x < n_; ++x) child[x] = 2 * c[x] + ((c[x] == target && x != v) ? 1 : 0);
      search(child, densify(child));
    }
  }

  const Graph& g_;
  int n_;
  std::array<std::array<bool, kMaxCanonicalOrder>, kMaxCanonicalOrder> twin_{};
  bool found_ = false;
  std::uint64_t best_key_ = 0;
  Colouring best_position_{};
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw CapacityError("canonical form supports at most " +
                        std::to_string(kMaxCanonicalOrder) + " vertices");
  return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  return {to_graph6(canonical_labeling(g).graph)};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_labeling(a).key == canonical_labeling(b).key;
}

std::vector<int> isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return {};
  const auto la = canonical_labeling(a);
  const auto lb = canonical_labeling(b);
  if (la.key != lb.key) return {};
  std::vector<int> b_at(b.order());
  for (int v = 0; v < b.order(); ++v) b_at[lb.position[v]] = v;
  std::vector<int> w(a.order());
  for (int u = 0; u < a.order(); ++u) w[u] = b_at[la.position[u]];
  return w;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& w) {
  if (a.order() != b.order() || static_cast<int>(w.size()) != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (int x : w) {
    if (x < 0 || x >= b.order() || hit[x]) return false;
    hit[x] = true;
  }
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(w[u], w[v])) return false;
  return true;
}

}  // namespace qng
