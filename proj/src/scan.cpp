#include "qng/scan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qng {

namespace {

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

}  // namespace

ScanPredicate parse_predicate(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw std::invalid_argument("empty predicate");
  if (words[0] == "sum-open-interval") {
    if (words.size() != 3) throw std::invalid_argument("usage: sum-open-interval <lo> <hi>");
    const Rational lo = parse_rational(words[1]);
    const Rational hi = parse_rational(words[2]);
    if (lo >= hi) throw std::invalid_argument("sum-open-interval: lo must be below hi");
    return {text, [lo, hi](const Graph& g) { return check_sum_interval(g, lo, hi); },
            Verdict::Strict};
  }
  if (words.size() != 1) throw std::invalid_argument("unknown predicate '" + text + "'");
  const auto names = check_names();
  std::string name = words[0];
  if (name.rfind("thm", 0) == 0) name = name.substr(3);
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown predicate '" + text + "'");
  return {name, [name](const Graph& g) { return check_by_name(name, g); }, Verdict::EqualityCertified};
}

std::string class_key(const Graph& g) {
  return g.order() <= kMaxCanonicalOrder ? canonical_form(g).graph6 : to_graph6(g);
}

ScanResult scan(const std::vector<Graph>& graphs, const GraphFilter& filter,
                const ScanPredicate& predicate, int jobs) {
  ScanResult out;
  out.filter = filter.describe();
  out.predicate = predicate.name;
  out.member_verdict = predicate.member_verdict;
  std::vector<const Graph*> selected;
  for (const Graph& g : graphs)
    if (filter.accepts(g)) selected.push_back(&g);
  if (!graphs.empty()) {
    out.n = graphs.front().order();
    for (const Graph& g : graphs)
      if (g.order() != out.n) out.n = 0;
  }

  std::vector<BoundReport> reports(selected.size());
  std::vector<std::string> keys(selected.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      reports[i] = predicate.evaluate(*selected[i]);
      const Verdict v = reports[i].verdict;
      if (v == predicate.member_verdict || v == Verdict::Violated) keys[i] = class_key(*selected[i]);
    }
  };
  const std::size_t total = selected.size();
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(total, 1));
  if (workers == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  out.scanned = total;
  for (std::size_t i = 0; i < total; ++i) {
    const Verdict v = reports[i].verdict;
    ++out.counts[static_cast<int>(v)];
    if (v == Verdict::Violated) out.violations.push_back(keys[i]);
    else if (v == predicate.member_verdict) out.members.push_back(keys[i]);
  }
  for (auto* list : {&out.members, &out.violations}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const BoundReport& a, const BoundReport& b) { return a.graph6 < b.graph6; });
  out.reports = std::move(reports);
  return out;
}

ScanResult scan(int n, const GraphFilter& filter, const ScanPredicate& predicate, int jobs) {
  ScanResult r = scan(enumerate_graphs(n), filter, predicate, jobs);
  r.n = n;
  return r;
}

namespace {

int second_degree(const Graph& g) { return g.degree_sequence().at(1); }

// Classes on n vertices whose lower-bound sum is exactly n-2, excluding those
// where G or its complement has second largest degree 0.
std::vector<Graph> lower_bound_equality(int n) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_graphs(n)) {
    if (second_degree(g) == 0 || second_degree(complement(g)) == 0) continue;
    const SpectralProfile pg(g);
    const SpectralProfile pc(complement(g));
    if (compare_ng_sum(pg, pc, 2, Rational(n - 2)) == 0) out.push_back(g);
  }
  return out;
}

std::vector<std::string> sorted_keys(const std::vector<Graph>& gs) {
  std::vector<std::string> out;
  for (const Graph& g : gs) out.push_back(class_key(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> census_between_degrees(int n) {
  std::vector<Graph> hits;
  for (const Graph& g : lower_bound_equality(n)) {
    const Graph c = complement(g);
    const SpectralProfile pg(g);
    const SpectralProfile pc(c);
    const int d2 = second_degree(g);
    const int dc2 = second_degree(c);
    if (pg.compare_q(2, Rational(d2 - 1)) > 0 && pg.compare_q(2, Rational(d2)) < 0 &&
        pc.compare_q(2, Rational(dc2 - 1)) >= 0 && pc.compare_q(2, Rational(dc2)) < 0)
      hits.push_back(g);
  }
  return sorted_keys(hits);
}

std::vector<std::string> census_degree_tight(int n) {
  std::vector<Graph> hits;
  for (const Graph& g : lower_bound_equality(n)) {
    const Graph c = complement(g);
    const SpectralProfile pg(g);
    const SpectralProfile pc(c);
    if (pg.compare_q(2, Rational(second_degree(g))) == 0 &&
        pc.compare_q(2, Rational(second_degree(c) - 1)) == 0)
      hits.push_back(g);
  }
  return sorted_keys(hits);
}

std::vector<std::string> census_q1_at_least(int order, long threshold) {
  std::vector<Graph> hits;
  for (const Graph& g : enumerate_graphs(order))
    if (SpectralProfile(g).compare_q(1, Rational(threshold)) >= 0) hits.push_back(g);
  return sorted_keys(hits);
}

}  // namespace qng
