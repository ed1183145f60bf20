#ifndef QNG_SCAN_HPP
#define QNG_SCAN_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qng/enumeration.hpp"
#include "qng/theorems.hpp"

namespace qng {

struct ScanPredicate {
  std::string name;
  std::function<BoundReport(const Graph&)> evaluate;
  /// Verdict that puts a graph on the member list.
  Verdict member_verdict = Verdict::EqualityCertified;
};

/// A theorem name accepted by check_by_name, or "sum-open-interval a b"
/// with rational endpoints. Throws std::invalid_argument otherwise.
ScanPredicate parse_predicate(const std::string& text);

struct ScanResult {
  int n = 0;  // 0 for streams of mixed order
  std::string filter;
  std::string predicate;
  Verdict member_verdict = Verdict::EqualityCertified;
  std::size_t scanned = 0;  // graphs passing the filter
  std::array<std::size_t, 4> counts{};  // indexed by Verdict
  /// Canonical graph6 strings, sorted and duplicate-free.
  std::vector<std::string> members;
  std::vector<std::string> violations;
  /// One report per scanned graph, sorted by graph6.
  std::vector<BoundReport> reports;

  std::size_t count(Verdict v) const { return counts[static_cast<int>(v)]; }
};

/// Evaluates the predicate on every graph passing the filter. With jobs > 1
/// graphs are split into contiguous chunks evaluated concurrently; the
/// result does not depend on jobs.
ScanResult scan(const std::vector<Graph>& graphs, const GraphFilter& filter,
                const ScanPredicate& predicate, int jobs = 1);
/// All isomorphism classes on n vertices (1 <= n <= 8).
ScanResult scan(int n, const GraphFilter& filter, const ScanPredicate& predicate, int jobs = 1);

/// Canonical graph6 when the order allows it, plain graph6 otherwise.
std::string class_key(const Graph& g);

// Small exhaustive censuses behind case analyses of the lower and bipartite
// upper bounds. Each returns sorted canonical graph6 strings. The first two
// only consider graphs with d2 >= 1 and dc2 >= 1, where d2 and dc2 are the
// second largest degrees of G and of its complement Gc.

/// Graphs on n vertices with d2-1 < q2(G) < d2, dc2-1 <= q2(Gc) < dc2 and
/// q2(G) + q2(Gc) = n-2.
std::vector<std::string> census_between_degrees(int n);
/// Graphs on n vertices with q2(G) = d2, q2(Gc) = dc2-1 and sum n-2.
std::vector<std::string> census_degree_tight(int n);
/// Graphs H on `order` vertices with q1(H) >= threshold.
std::vector<std::string> census_q1_at_least(int order, long threshold);

}  // namespace qng

#endif  // QNG_SCAN_HPP
