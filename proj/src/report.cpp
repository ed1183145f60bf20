#include "qng/report.hpp"

#include <charconv>
#include <cmath>

namespace qng {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["bound"] = r.bound;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["rhs_value"] = r.rhs_value;
  j["verdict"] = to_string(r.verdict);
  j["certified"] = r.certified;
  if (r.certificate) {
    j["family"] = r.certificate->family;
    j["witness"] = r.certificate->witness;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

nlohmann::ordered_json to_json(const ScanResult& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["filter"] = s.filter;
  j["predicate"] = s.predicate;
  j["scanned"] = s.scanned;
  nlohmann::ordered_json counts;
  for (Verdict v : {Verdict::Strict, Verdict::EqualityCertified, Verdict::Violated, Verdict::NotApplicable})
    counts[to_string(v)] = s.count(v);
  j["counts"] = counts;
  j["members"] = s.members;
  j["violations"] = s.violations;
  auto details = nlohmann::ordered_json::array();
  for (const BoundReport& r : s.reports)
    if (r.verdict == Verdict::Violated || r.verdict == s.member_verdict)
      details.push_back(to_json(r));
  j["reports"] = details;
  return j;
}

nlohmann::ordered_json to_json(const ProofCheck& p) {
  nlohmann::ordered_json j;
  j["subject"] = p.subject;
  j["ok"] = p.ok();
  auto steps = nlohmann::ordered_json::array();
  for (const ProofStep& s : p.steps) {
    nlohmann::ordered_json step;
    step["name"] = s.name;
    step["ok"] = s.ok;
    if (!s.detail.empty()) step["detail"] = s.detail;
    steps.push_back(step);
  }
  j["steps"] = steps;
  return j;
}

nlohmann::ordered_json spectrum_json(const Graph& g, MatrixKind kind, bool exact) {
  nlohmann::ordered_json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["kind"] = std::string(1, kind_letter(kind));
  const SymMatrix m = kind_matrix(g, kind);
  j["eigenvalues"] = eigenvalues_sym(m).values;
  if (exact) {
    const ExactSpectrum spec(char_poly_exact(m));
    j["charpoly"] = spec.charpoly().to_string();
    auto roots = nlohmann::ordered_json::array();
    const Rational width(Integer(1), Integer(1) << 40);
    for (const RealRoot& root : spec.roots()) {
      AlgebraicReal value = root.value;
      value.refine_to(width);
      // Rational eigenvalues of integer matrices are integers.
      const Integer nearest(std::floor(value.to_double() + 0.5));
      if (!value.is_exact() && value.compare(Rational(nearest)) == 0) value = AlgebraicReal(Rational(nearest));
      nlohmann::ordered_json r;
      r["lower"] = to_string(value.lower());
      r["upper"] = to_string(value.upper());
      r["exact"] = value.is_exact();
      r["multiplicity"] = root.multiplicity;
      roots.push_back(r);
    }
    j["roots"] = roots;
  }
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_header() { return "graph6,bound,lhs,rhs,verdict,family"; }

std::string csv_row(const BoundReport& r) {
  return csv_field(r.graph6) + "," + csv_field(r.bound) + "," + format_double(r.lhs) + "," + csv_field(r.rhs) +
         "," + to_string(r.verdict) + "," + csv_field(r.certificate ? r.certificate->family : "");
}

std::string text_line(const BoundReport& r) {
  std::string line = r.graph6 + "  " + r.bound + "  lhs=" + format_double(r.lhs) + "  rhs=" + r.rhs + "  " +
                     to_string(r.verdict) + (r.certified ? " (exact)" : "");
  if (r.certificate) line += "  family=" + r.certificate->family;
  if (!r.notes.empty()) line += "  [" + r.notes + "]";
  return line;
}

}  // namespace qng
