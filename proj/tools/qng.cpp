#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qng/enumeration.hpp"
#include "qng/family.hpp"
#include "qng/report.hpp"
#include "qng/scan.hpp"
#include "qng/theorems.hpp"

using namespace qng;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> graph6;
  std::vector<std::string> family;
  std::string input;
  std::string thm;
  std::string kind = "Q";
  int k = 2;
  int n = 0;
  std::string n_range;
  std::string filter = "all";
  std::string predicate;
  std::string format = "text";
  int jobs = 1;
  std::string output;
  int d2 = 0;
};

struct Range {
  int lo = 0;
  int hi = -1;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad --n-range '" + text + "' (expected N or LO..HI)");
  }
  if (r.lo > r.hi) throw UsageError("empty --n-range '" + text + "'");
  return r;
}

Range orders(const Options& o) {
  if (!o.n_range.empty()) return parse_range(o.n_range);
  if (o.n > 0) return {o.n, o.n};
  throw UsageError("--n or --n-range is required");
}

std::vector<Graph> read_input(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_graph6_stream(in);
}

std::vector<Graph> collect_graphs(const Options& o) {
  std::vector<Graph> out;
  for (const auto& s : o.graph6) out.push_back(from_graph6(s));
  for (const auto& s : o.family) out.push_back(parse_family(s));
  if (!o.input.empty())
    for (Graph& g : read_input(o.input)) out.push_back(std::move(g));
  if (out.empty()) throw UsageError("no graph given (use --graph6, --family or --input)");
  return out;
}

std::string format_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Runs one theorem check; "ng" reports the bare sum for the chosen matrix.
BoundReport run_check(const Options& o, const Graph& g) {
  if (o.thm != "ng") return check_by_name(o.thm, g);
  const MatrixKind kind = parse_kind(o.kind);
  if (kind_letter(kind) == 'Q' && o.k == 1) return check_q1_sum(g);
  if (kind_letter(kind) == 'Q' && o.k == 2) {
    BoundReport r = check_thm12(g);
    r.bound = "q2 sum (lower bound n-2)";
    return r;
  }
  if (o.k < 1 || o.k > g.order()) throw UsageError("--k out of range for order " + std::to_string(g.order()));
  BoundReport r;
  r.graph6 = to_graph6(g);
  r.bound = std::string(1, kind_letter(kind)) + std::to_string(o.k) + " sum";
  r.lhs = ng_sum(g, kind, o.k);
  r.notes = "value only";
  return r;
}

int emit_reports(const Options& o, const std::vector<BoundReport>& reports, std::ostream& out) {
  bool violated = false;
  if (o.format == "csv") out << csv_header() << '\n';
  for (const BoundReport& r : reports) {
    violated = violated || r.verdict == Verdict::Violated;
    if (o.format == "json") out << to_json(r).dump() << '\n';
    else if (o.format == "csv") out << csv_row(r) << '\n';
    else out << text_line(r) << '\n';
  }
  return violated ? kExitViolation : kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const MatrixKind kind = parse_kind(o.kind);
  if (o.format == "csv") out << "graph6,kind,index,eigenvalue\n";
  for (const Graph& g : collect_graphs(o)) {
    if (o.format == "json") {
      out << spectrum_json(g, kind, true).dump() << '\n';
      continue;
    }
    const Spectrum s = eigenvalues_sym(kind_matrix(g, kind));
    if (o.format == "csv") {
      for (int i = 1; i <= s.size(); ++i)
        out << to_graph6(g) << ',' << kind_letter(kind) << ',' << i << ',' << format_double(s.value(i)) << '\n';
    } else {
      out << to_graph6(g) << ' ' << kind_letter(kind) << ':';
      for (double v : s.values) out << ' ' << format_value(v);
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.thm.empty()) throw UsageError("check needs --thm");
  std::vector<BoundReport> reports;
  for (const Graph& g : collect_graphs(o)) reports.push_back(run_check(o, g));
  return emit_reports(o, reports, out);
}

int cmd_report(const Options& o, std::ostream& out) {
  std::vector<BoundReport> reports;
  for (const Graph& g : collect_graphs(o))
    for (const std::string& name : check_names()) reports.push_back(check_by_name(name, g));
  return emit_reports(o, reports, out);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Range r = orders(o);
  if (r.lo < 1 || r.hi > 8) throw UsageError("built-in enumeration supports 1 <= n <= 8");
  const GraphFilter filter = GraphFilter::parse(o.filter);
  if (o.format == "csv") out << "n,graph6\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    std::vector<std::string> codes;
    for (const Graph& g : enumerate_graphs(n))
      if (filter.accepts(g)) codes.push_back(to_graph6(g));
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["filter"] = filter.describe();
      j["count"] = codes.size();
      j["graphs"] = codes;
      out << j.dump() << '\n';
    } else {
      for (const auto& c : codes) out << (o.format == "csv" ? std::to_string(n) + "," : "") << c << '\n';
    }
  }
  return kExitOk;
}

void emit_scan(const Options& o, const ScanResult& s, std::ostream& out) {
  if (o.format == "json") {
    out << to_json(s).dump() << '\n';
    return;
  }
  if (o.format == "csv") {
    for (const BoundReport& r : s.reports)
      if (r.verdict == Verdict::Violated || r.verdict == s.member_verdict) out << csv_row(r) << '\n';
    return;
  }
  out << "n=" << s.n << " filter=" << s.filter << " predicate=" << s.predicate << " scanned=" << s.scanned;
  for (Verdict v : {Verdict::Strict, Verdict::EqualityCertified, Verdict::Violated, Verdict::NotApplicable})
    out << ' ' << to_string(v) << '=' << s.count(v);
  out << '\n';
  out << "members " << s.members.size() << '\n';
  for (const auto& m : s.members) out << "  " << m << '\n';
  if (!s.violations.empty()) {
    out << "violations " << s.violations.size() << '\n';
    for (const auto& m : s.violations) out << "  " << m << '\n';
  }
}

int cmd_scan(const Options& o, std::ostream& out) {
  std::string text = o.predicate;
  if (text.empty()) text = o.thm;
  if (text.empty()) throw UsageError("scan needs --predicate or --thm");
  ScanPredicate pred;
  try {
    pred = parse_predicate(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const GraphFilter filter = GraphFilter::parse(o.filter);
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  if (o.format == "csv") out << csv_header() << '\n';
  bool violated = false;
  if (!o.input.empty()) {
    const ScanResult s = scan(read_input(o.input), filter, pred, o.jobs);
    emit_scan(o, s, out);
    violated = !s.violations.empty();
  } else {
    const Range r = orders(o);
    if (r.lo < 1 || r.hi > 8) throw UsageError("built-in scans support 1 <= n <= 8; use --input for larger orders");
    for (int n = r.lo; n <= r.hi; ++n) {
      const ScanResult s = scan(n, filter, pred, o.jobs);
      emit_scan(o, s, out);
      violated = violated || !s.violations.empty();
    }
  }
  return violated ? kExitViolation : kExitOk;
}

int cmd_proof_check(const Options& o, std::ostream& out) {
  std::string thm = o.thm;
  if (thm.rfind("thm", 0) == 0) thm = thm.substr(3);
  if (thm != "1.2" && thm != "1.5") throw UsageError("proof-check supports --thm 1.2 or 1.5");
  const Range r = orders(o);
  std::vector<ProofCheck> checks;
  try {
    for (int n = r.lo; n <= r.hi; ++n) {
      if (thm == "1.5") {
        checks.push_back(proof_check_thm15(n));
      } else if (o.d2 > 0) {
        checks.push_back(proof_check_thm12(n, o.d2));
      } else {
        for (int d = 1; d <= n - 2; ++d) checks.push_back(proof_check_thm12(n, d));
      }
    }
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  bool all_ok = true;
  if (o.format == "csv") out << "subject,step,ok\n";
  for (const ProofCheck& c : checks) {
    all_ok = all_ok && c.ok();
    if (o.format == "json") {
      out << to_json(c).dump() << '\n';
    } else if (o.format == "csv") {
      for (const ProofStep& s : c.steps)
        out << '"' << c.subject << "\",\"" << s.name << "\"," << (s.ok ? "true" : "false") << '\n';
    } else {
      out << (c.ok() ? "true  " : "false ") << c.subject << " (" << c.steps.size() << " steps)\n";
      for (const ProofStep& s : c.steps)
        if (!s.ok) out << "  failed: " << s.name << ": " << s.detail << '\n';
    }
  }
  return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nordhaus-Gaddum checks for signless Laplacian eigenvalues"};
  app.require_subcommand(1);
  Options o;

  auto graph_opts = [&o](CLI::App* sub) {
    sub->add_option("--graph6", o.graph6, "Graph in graph6 format (repeatable)");
    sub->add_option("--family", o.family, "Constructor expression, e.g. \"join(2K1,K4)\" (repeatable)");
    sub->add_option("--input", o.input, "graph6 file, one graph per line (- for stdin)");
  };
  auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", o.output, "Write output to this path instead of stdout");
  };
  auto range_opts = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "Order");
    sub->add_option("--n-range", o.n_range, "Orders LO..HI");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of A, L or Q");
  graph_opts(spectrum);
  common(spectrum);
  spectrum->add_option("--kind", o.kind, "Matrix kind")->check(CLI::IsMember({"A", "L", "Q"}));

  auto* check = app.add_subcommand("check", "Check one bound or lemma on given graphs");
  graph_opts(check);
  common(check);
  check->add_option("--thm", o.thm, "Bound name (see `report` for the full list), or ng");
  check->add_option("--kind", o.kind, "Matrix kind for --thm ng")->check(CLI::IsMember({"A", "L", "Q"}));
  check->add_option("--k", o.k, "Eigenvalue index for --thm ng");

  auto* report = app.add_subcommand("report", "Run every bound and lemma on given graphs");
  graph_opts(report);
  common(report);

  auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes");
  range_opts(enumerate);
  common(enumerate);
  enumerate->add_option("--filter", o.filter, "connected,bipartite,regular,cobar-disconnected,all");

  auto* scan_cmd = app.add_subcommand("scan", "Evaluate a predicate over all classes or a graph6 stream");
  range_opts(scan_cmd);
  common(scan_cmd);
  scan_cmd->add_option("--filter", o.filter, "connected,bipartite,regular,cobar-disconnected,all");
  scan_cmd->add_option("--predicate", o.predicate, "Bound name or \"sum-open-interval LO HI\"");
  scan_cmd->add_option("--thm", o.thm, "Bound name (alternative to --predicate)");
  scan_cmd->add_option("--input", o.input, "graph6 file to scan instead of enumerating");
  scan_cmd->add_option("--jobs", o.jobs, "Worker threads");

  auto* proof = app.add_subcommand("proof-check", "Verify quotient-matrix algebra of a bound's proof");
  range_opts(proof);
  common(proof);
  proof->add_option("--thm", o.thm, "1.2 or 1.5")->required();
  proof->add_option("--d2", o.d2, "Second largest degree (1.2 only; default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (*spectrum) status = cmd_spectrum(o, buffer);
    else if (*check) status = cmd_check(o, buffer);
    else if (*report) status = cmd_report(o, buffer);
    else if (*enumerate) status = cmd_enumerate(o, buffer);
    else if (*scan_cmd) status = cmd_scan(o, buffer);
    else status = cmd_proof_check(o, buffer);
  } catch (const std::exception& e) {
    std::cerr << "qng: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      std::cerr << "qng: cannot write " << o.output << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return status;
}
