#ifndef QNG_SPECTRA_HPP
#define QNG_SPECTRA_HPP

#include <string>
#include <vector>

#include "qng/graph.hpp"
#include "qng/polynomial.hpp"

namespace qng {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian, Degree, Other };

char kind_letter(MatrixKind kind);
MatrixKind parse_kind(const std::string& s);

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(int order = 0);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  int order() const { return k_; }
  Rational& operator()(int i, int j) { return a_[i * k_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[i * k_ + j]; }
  Rational trace() const;
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  std::string to_string() const;

 private:
  int k_ = 0;
  std::vector<Rational> a_;
};

/// Symmetric integer matrix attached to a graph (A, L, Q or D).
struct SymMatrix {
  MatrixKind kind = MatrixKind::Other;
  int order = 0;
  std::vector<long> entries;  // row-major

  long operator()(int i, int j) const { return entries[i * order + j]; }
  RationalMatrix to_rational() const;
};

SymMatrix a_matrix(const Graph& g);
SymMatrix l_matrix(const Graph& g);
SymMatrix q_matrix(const Graph& g);
SymMatrix d_matrix(const Graph& g);
SymMatrix kind_matrix(const Graph& g, MatrixKind kind);

/// Eigenvalues in descending order; value(k) is 1-based (q_k, lambda_k, mu_k).
struct Spectrum {
  std::vector<double> values;
  MatrixKind source = MatrixKind::Other;
  double tolerance = 1e-10;

  int size() const { return static_cast<int>(values.size()); }
  double value(int k) const { return values.at(k - 1); }
  double sum() const;
};

/// Dense symmetric eigensolver. Throws std::invalid_argument on asymmetric
/// input. Accuracy is about 1e-10 * ||M|| for integer matrices of order <= 32.
Spectrum eigenvalues_sym(const SymMatrix& m);
/// Same, for a row-major real matrix of the given order.
Spectrum eigenvalues_sym(const std::vector<double>& entries, int order,
                         MatrixKind kind = MatrixKind::Other);

/// det(xI - M) via the Faddeev-LeVerrier recurrence in exact arithmetic.
Polynomial char_poly_exact(const RationalMatrix& m);
Polynomial char_poly_exact(const SymMatrix& m);

/// Exact spectrum: distinct roots of a characteristic polynomial, descending,
/// with multiplicities, plus 1-based access counting multiplicity.
class ExactSpectrum {
 public:
  explicit ExactSpectrum(Polynomial charpoly);

  const Polynomial& charpoly() const { return charpoly_; }
  const std::vector<RealRoot>& roots() const { return roots_; }
  int size() const { return charpoly_.degree(); }
  /// k-th largest eigenvalue counted with multiplicity, 1 <= k <= size().
  const AlgebraicReal& kth(int k) const;
  /// Number of eigenvalues (with multiplicity) strictly above r.
  int count_above(const Rational& r) const;

 private:
  Polynomial charpoly_;
  std::vector<RealRoot> roots_;
};

/// Exact proof that q_k(g) = r. Never consults floating point.
bool certify_qk(const Graph& g, int k, const Rational& r);
/// Same check against an arbitrary characteristic polynomial.
bool certify_kth_root(const Polynomial& charpoly, int k, const Rational& r);

/// k-th eigenvalue of the kind-matrix of g plus the same of its complement.
double ng_sum(const Graph& g, MatrixKind kind, int k);

}  // namespace qng

#endif  // QNG_SPECTRA_HPP
