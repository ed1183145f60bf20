#include "qng/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace qng {

namespace {

std::vector<Graph> extend_level(const std::vector<Graph>& previous, int n) {
  std::unordered_map<std::uint64_t, Graph> seen;
  const auto base_edges = [](const Graph& g) { return g.edges(); };
  for (const Graph& g : previous) {
    const auto edges = base_edges(g);
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      auto e = edges;
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1u) e.emplace_back(v, n - 1);
      auto lab = canonical_labeling(Graph::from_edges(n, e));
      seen.try_emplace(lab.key, std::move(lab.graph));
    }
  }
  std::vector<std::pair<std::uint64_t, Graph>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(sorted.size());
  for (auto& [key, g] : sorted) out.push_back(std::move(g));
  return out;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> levels;
  if (n < 1 || n > 8)
    throw CapacityError("built-in enumeration supports 1 <= n <= 8; use a graph6 stream");
  std::lock_guard lock(mutex);
  if (levels.empty()) levels.push_back({Graph(1)});
  while (static_cast<int>(levels.size()) < n)
    levels.push_back(extend_level(levels.back(), static_cast<int>(levels.size()) + 1));
  return levels[n - 1];
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  const auto& all = enumerate_graphs(n);
  if (!connected_only) return all;
  std::vector<Graph> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const Graph& g) { return is_connected(g); });
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

GraphFilter GraphFilter::parse(const std::string& spec) {
  GraphFilter f;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "connected") f.connected = true;
    else if (item == "bipartite") f.bipartite = true;
    else if (item == "regular") f.regular = true;
    else if (item == "cobar-disconnected") f.complement_disconnected = true;
    else if (item == "all" || item.empty()) continue;
    else throw std::invalid_argument("unknown filter '" + item + "'");
  }
  return f;
}

bool GraphFilter::accepts(const Graph& g) const {
  if (connected && !is_connected(g)) return false;
  if (bipartite && !is_bipartite(g)) return false;
  if (regular && !g.is_regular()) return false;
  if (complement_disconnected && is_connected(complement(g))) return false;
  return true;
}

std::string GraphFilter::describe() const {
  std::string out;
  auto add = [&out](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(connected, "connected");
  add(bipartite, "bipartite");
  add(regular, "regular");
  add(complement_disconnected, "cobar-disconnected");
  return out.empty() ? "all" : out;
}

}  // namespace qng
