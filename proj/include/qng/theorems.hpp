#ifndef QNG_THEOREMS_HPP
#define QNG_THEOREMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qng/graph.hpp"
#include "qng/partitions.hpp"
#include "qng/spectra.hpp"

namespace qng {

enum class Verdict { Strict, EqualityCertified, Violated, NotApplicable };

std::string to_string(Verdict v);

/// Float screening tolerance: 1e-9, or the value of QNG_TOL when set.
double screening_tolerance();
/// Float gap below which a comparison is decided exactly.
inline constexpr double kEscalationWindow = 1e-6;

struct ExtremalCertificate {
  std::string family;
  /// witness[v] = vertex of the constructed family member that v maps to.
  std::vector<int> witness;
};

struct BoundReport {
  std::string graph6;
  std::string bound;
  double lhs = 0.0;
  double rhs_value = 0.0;
  /// Exact right-hand side, as text (a rational or a closed form).
  std::string rhs;
  /// True when the verdict was decided in exact arithmetic.
  bool certified = false;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<ExtremalCertificate> certificate;
  std::string notes;
};

/// A named graph a bound's equality case is expected to match.
struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Float and (lazily computed) exact Q-spectrum of one graph.
class SpectralProfile {
 public:
  explicit SpectralProfile(const Graph& g);

  const Graph& graph() const { return g_; }
  const Spectrum& floats() const { return floats_; }
  double q(int k) const { return floats_.value(k); }
  const ExactSpectrum& exact() const;
  /// Sign of q_k - r, exact.
  int compare_q(int k, const Rational& r) const;

 private:
  Graph g_;
  Spectrum floats_;
  mutable std::optional<ExactSpectrum> exact_;
};

// Nordhaus-Gaddum bounds on q_2(G) + q_2(complement).
BoundReport check_thm12(const Graph& g);
BoundReport check_thm13(const Graph& g);
BoundReport check_problem12(const Graph& g);
BoundReport check_thm14(const Graph& g);
BoundReport check_thm15(const Graph& g);
BoundReport check_thm16(const Graph& g);
BoundReport check_regular_bound(const Graph& g);
/// q_1(G) + q_1(complement) <= 3n - 4, equality iff G or its complement is a star.
BoundReport check_q1_sum(const Graph& g);
/// Selects G when lo < q_k(G) + q_k(complement) < hi: verdict strict inside,
/// not-applicable outside or on an endpoint.
BoundReport check_sum_interval(const Graph& g, const Rational& lo, const Rational& hi, int k = 2);
/// Sign of q_k(G) + q_k(complement) - r, exact near ties.
int compare_ng_sum(const SpectralProfile& g, const SpectralProfile& c, int k, const Rational& r);

// Lemma predicates.
/// Weyl's inequalities for Q(G) + Q(complement) = Q(K_n), all index pairs.
BoundReport check_lemma21(const Graph& g);
/// Principal submatrix on `vertices` interlaces Q(G).
BoundReport check_lemma22(const Graph& g, const std::vector<int>& vertices);
/// Quotient eigenvalues interlace; equitable partitions also give containment.
BoundReport check_lemma23(const Graph& g, const VertexPartition& p);
/// q_1(G) >= q_1(G-e) >= q_2(G) >= ... >= q_n(G) >= q_n(G-e).
BoundReport check_lemma24(const Graph& g, const Edge& e);
/// Each duplicate class yields eigenvalue d-1 (clique) or d (independent)
/// with multiplicity >= |S| - 1.
BoundReport check_lemma25(const Graph& g);
BoundReport check_lemma26(const Graph& g);
BoundReport check_lemma27(const Graph& g, const Edge& non_edge);
BoundReport check_lemma28(const Graph& g);
BoundReport check_lemma29(const Graph& g);
BoundReport check_lemma210(const Graph& g);

/// Members of each bound's extremal set at order n.
std::vector<NamedGraph> thm12_families(int n);
std::vector<NamedGraph> thm13_families(int n);
std::vector<NamedGraph> thm14_families(int n);
/// The connected bipartite graphs on six vertices with sum 2n-5.
std::vector<NamedGraph> bipartite_extremal_catalogue();
std::vector<NamedGraph> regular_extremal_graphs(int n);

/// Dispatch by name (see check_names()). Lemmas taking an edge, a vertex
/// subset or a partition run over every edge, non-edge or vertex-deleted
/// subgraph and report the worst case. Throws std::invalid_argument on
/// unknown names.
BoundReport check_by_name(const std::string& name, const Graph& g);
std::vector<std::string> check_names();

struct ProofStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ProofCheck {
  std::string subject;
  std::vector<ProofStep> steps;

  bool ok() const;
};

/// Quotient-matrix algebra behind the lower bound n-2, for one (n, d2).
/// Throws std::out_of_range unless n >= 4 and 1 <= d2 <= n-2.
ProofCheck proof_check_thm12(int n, int d2);
/// Quotient-matrix algebra behind the bipartite upper bound 2n-5.
/// Throws std::out_of_range unless n >= 8.
ProofCheck proof_check_thm15(int n);

}  // namespace qng

#endif  // QNG_THEOREMS_HPP
