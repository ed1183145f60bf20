// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qng/enumeration.hpp"
#include "qng/scan.hpp"
#include "qng/theorems.hpp"

using namespace qng;

namespace {

// Pinned tolerances.
constexpr const char* kScreeningTolerance = "1e-8";
constexpr double kOracleTolerance = 1e-8;
constexpr double kCensusSeconds = 60.0;
constexpr double kProofSeconds = 5.0;
constexpr double kLemmaSeconds = 600.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<std::string> keys_of(const std::vector<NamedGraph>& graphs) {
  std::set<std::string> s;
  for (const NamedGraph& g : graphs) s.insert(class_key(g.graph));
  return {s.begin(), s.end()};
}

std::string join_list(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      detail << " [" << why << "]";
    }
  }
};

Outcome criterion1() {
  Outcome o;
  const ScanPredicate p = parse_predicate("1.2");
  double n8_seconds = 0;
  for (int n = 4; n <= 8; ++n) {
    const auto start = Clock::now();
    const ScanResult r = scan(n, GraphFilter{}, p, 1);
    if (n == 8) n8_seconds = seconds_since(start);
    const auto expected = keys_of(thm12_families(n));
    o.require(r.members == expected, "n=" + std::to_string(n) + " members " + join_list(r.members));
    o.require(r.violations.empty(), "n=" + std::to_string(n) + " violations " + join_list(r.violations));
    o.detail << " n=" << n << ":" << r.members.size();
  }
  o.require(n8_seconds < kCensusSeconds, "n=8 too slow");
  o.detail << " n=8 time " << n8_seconds << "s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const ScanPredicate p = parse_predicate("1.3");
  std::set<std::string> members;
  std::size_t violations = 0;
  for (int n = 2; n <= 8; ++n) {
    const ScanResult r = scan(n, GraphFilter::parse("connected"), p, 1);
    members.insert(r.members.begin(), r.members.end());
    violations += r.violations.size();
  }
  const std::set<std::string> expected{class_key(complete_graph(2)), class_key(path_graph(4)),
                                       class_key(cycle_graph(4))};
  o.require(members == expected, "equality set differs");
  o.require(violations == 0, "violations found");
  o.detail << " equality classes " << members.size() << ", violations " << violations;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const GraphFilter connected = GraphFilter::parse("connected");
  const ScanResult r5 = scan(5, connected, parse_predicate("sum-open-interval 5 6"), 1);
  o.require(r5.members.size() == 8, "n=5 count " + std::to_string(r5.members.size()));
  o.detail << " n=5:" << r5.members.size();
  for (int n = 6; n <= 8; ++n) {
    const std::string pred = "sum-open-interval " + std::to_string(2 * n - 5) + " " + std::to_string(2 * n - 4);
    const ScanResult r = scan(n, connected, parse_predicate(pred), 1);
    o.require(r.members.empty(), "n=" + std::to_string(n) + " nonempty");
    o.detail << " n=" << n << ":" << r.members.size();
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const ScanPredicate p = parse_predicate("problem1.2");
  std::set<std::string> members;
  for (int n = 6; n <= 8; ++n) {
    const ScanResult r = scan(n, GraphFilter::parse("connected,regular"), p, 1);
    members.insert(r.members.begin(), r.members.end());
    o.require(r.count(Verdict::Strict) + r.count(Verdict::EqualityCertified) == r.scanned,
              "n=" + std::to_string(n) + " has non-strict, non-equality graphs");
    o.detail << " n=" << n << ": " << r.count(Verdict::EqualityCertified) << " equal, " << r.count(Verdict::Strict)
             << " strict;";
  }
  const std::set<std::string> expected{
      class_key(cycle_graph(6)), class_key(complete_bipartite(3, 3)),
      class_key(cartesian_product(complete_graph(3), complete_graph(2))),
      class_key(join(copies(2, complete_graph(2)), empty_graph(3)))};
  o.require(members == expected, "regular equality set differs");
  std::set<std::string> listed;
  for (int n = 6; n <= 8; ++n)
    for (const auto& k : keys_of(regular_extremal_graphs(n))) listed.insert(k);
  o.require(listed == expected, "regular_extremal_graphs differs");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const ScanPredicate p = parse_predicate("1.4");
  for (int n = 6; n <= 8; ++n) {
    const ScanResult r = scan(n, GraphFilter::parse("connected,cobar-disconnected"), p, 1);
    o.require(r.violations.empty(), "n=" + std::to_string(n) + " violations");
    o.require(r.members == keys_of(thm14_families(n)), "n=" + std::to_string(n) + " members " + join_list(r.members));
    o.detail << " n=" << n << ":" << r.members.size();
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const ScanPredicate p = parse_predicate("1.5");
  for (int n = 6; n <= 8; ++n) {
    const ScanResult r = scan(n, GraphFilter::parse("connected,bipartite"), p, 1);
    o.require(r.violations.empty(), "n=" + std::to_string(n) + " violations");
    if (n == 6) o.require(r.members == keys_of(bipartite_extremal_catalogue()), "n=6 catalogue differs");
    else o.require(r.members.empty(), "n=" + std::to_string(n) + " has equality classes");
    o.detail << " n=" << n << ":" << r.members.size();
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = Clock::now();
  int checks = 0;
  for (int n = 4; n <= 50; ++n)
    for (int d = 1; d <= n - 2; ++d) {
      const ProofCheck c = proof_check_thm12(n, d);
      ++checks;
      if (!c.ok()) o.require(false, c.subject);
    }
  for (int n = 8; n <= 50; ++n) {
    const ProofCheck c = proof_check_thm15(n);
    ++checks;
    if (!c.ok()) o.require(false, c.subject);
  }
  const double t = seconds_since(start);
  o.require(t < kProofSeconds, "too slow");
  o.detail << " " << checks << " proof checks in " << t << "s";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t evaluated = 0;
  auto tally = [&](const BoundReport& r, const std::string& what) {
    ++evaluated;
    if (r.verdict == Verdict::Violated) o.require(false, what + " on " + r.graph6);
  };
  std::vector<const Graph*> all;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) all.push_back(&g);
  for (const Graph* g : all) {
    for (const char* name : {"2.1", "2.2", "2.4", "2.5", "2.6", "2.8", "2.9"}) tally(check_by_name(name, *g), name);
    if (g->order() == 6 || g->order() == 7) tally(check_lemma210(*g), "2.10");
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const Graph& g = *all[rng() % all.size()];
    const VertexPartition p = VertexPartition::random(g.order(), 1 + static_cast<int>(rng() % g.order()), rng);
    tally(check_lemma23(g, p), "2.3");
  }
  int pairs = 0;
  while (pairs < 500) {
    const Graph& g = *all[rng() % all.size()];
    const auto non_edges = g.non_edges();
    if (non_edges.empty() || !is_connected(g)) continue;
    tally(check_lemma27(g, non_edges[rng() % non_edges.size()]), "2.7");
    ++pairs;
  }
  const double t = seconds_since(start);
  o.require(t < kLemmaSeconds, "too slow");
  o.detail << " " << all.size() << " graphs, " << evaluated << " lemma evaluations in " << t << "s";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t graphs = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      ++graphs;
      const Spectrum f = eigenvalues_sym(q_matrix(g));
      const ExactSpectrum e(char_poly_exact(q_matrix(g)));
      if (e.size() != f.size()) {
        o.require(false, "count mismatch on " + to_graph6(g));
        continue;
      }
      for (int k = 1; k <= n; ++k) {
        AlgebraicReal root = e.kth(k);
        root.refine_to(Rational(Integer(1), Integer("1000000000000")));
        const double lo = root.lower().get_d() - kOracleTolerance;
        const double hi = root.upper().get_d() + kOracleTolerance;
        if (f.value(k) < lo || f.value(k) > hi) o.require(false, "location mismatch on " + to_graph6(g));
      }
    }
  o.detail << " " << graphs << " graphs, tolerance " << kOracleTolerance;
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (int n = 4; n <= 6; ++n)
    o.require(census_between_degrees(n).empty(), "between-degrees census nonempty at n=" + std::to_string(n));
  for (int n = 4; n <= 8; ++n)
    o.require(census_degree_tight(n) == std::vector<std::string>{class_key(star_graph(n))},
              "degree-tight census at n=" + std::to_string(n));
  for (int n : {6, 8, 10}) {
    std::vector<std::string> expected{class_key(complete_graph(n / 2)),
                                      class_key(join(complete_graph(n / 2 - 2), empty_graph(2)))};
    std::sort(expected.begin(), expected.end());
    o.require(census_q1_at_least(n / 2, n - 3) == expected, "q1 census at n=" + std::to_string(n));
  }
  o.detail << " between-degrees n=4..6 empty; degree-tight n=4..8 star only; q1 census n=6,8,10";
  return o;
}

}  // namespace

int main() {
  setenv("QNG_TOL", kScreeningTolerance, 1);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 lower-bound equality census n=4..8", criterion1},
      {"2 connected upper-bound equality census n<=8", criterion2},
      {"3 open-interval scans n=5..8", criterion3},
      {"4 regular extremal set n=6..8", criterion4},
      {"5 disconnected-complement bound n=6..8", criterion5},
      {"6 bipartite bound n=6..8", criterion6},
      {"7 proof algebra n<=50", criterion7},
      {"8 lemma suite n<=7", criterion8},
      {"9 float vs exact spectra n<=6", criterion9},
      {"10 case-analysis censuses", criterion10},
  };
  std::cout << "screening tolerance " << screening_tolerance() << ", escalation window " << kEscalationWindow
            << '\n';
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const Outcome o = run();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS " : "FAIL ") << "criterion " << name << ":" << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
