#include "qng/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qng {

char kind_letter(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return 'A';
    case MatrixKind::Laplacian: return 'L';
    case MatrixKind::SignlessLaplacian: return 'Q';
    case MatrixKind::Degree: return 'D';
    case MatrixKind::Other: break;
  }
  return '?';
}

MatrixKind parse_kind(const std::string& s) {
  if (s == "A") return MatrixKind::Adjacency;
  if (s == "L") return MatrixKind::Laplacian;
  if (s == "Q") return MatrixKind::SignlessLaplacian;
  if (s == "D") return MatrixKind::Degree;
  throw std::invalid_argument("unknown matrix kind '" + s + "' (expected A, L, Q or D)");
}

RationalMatrix::RationalMatrix(int order)
    : k_(order), a_(static_cast<std::size_t>(order) * order) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : RationalMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != k_)
      throw std::invalid_argument("matrix rows must be square");
    int j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < k_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < k_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < k_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

RationalMatrix SymMatrix::to_rational() const {
  RationalMatrix r(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) r(i, j) = (*this)(i, j);
  return r;
}

SymMatrix kind_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  SymMatrix m{kind, n, std::vector<long>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i) {
    const long d = g.degree(i);
    switch (kind) {
      case MatrixKind::Adjacency: break;
      case MatrixKind::Laplacian:
      case MatrixKind::SignlessLaplacian:
      case MatrixKind::Degree: m.entries[i * n + i] = d; break;
      case MatrixKind::Other: throw std::invalid_argument("no graph matrix of kind Other");
    }
    if (kind == MatrixKind::Degree) continue;
    const long off = kind == MatrixKind::Laplacian ? -1 : 1;
    for (int j : g.neighbors(i)) m.entries[i * n + j] = off;
  }
  return m;
}

SymMatrix a_matrix(const Graph& g) { return kind_matrix(g, MatrixKind::Adjacency); }
SymMatrix l_matrix(const Graph& g) { return kind_matrix(g, MatrixKind::Laplacian); }
SymMatrix q_matrix(const Graph& g) { return kind_matrix(g, MatrixKind::SignlessLaplacian); }
SymMatrix d_matrix(const Graph& g) { return kind_matrix(g, MatrixKind::Degree); }

double Spectrum::sum() const {
  double s = 0;
  for (double v : values) s += v;
  return s;
}

Spectrum eigenvalues_sym(const std::vector<double>& entries, int order,
                         MatrixKind kind) {
  if (static_cast<int>(entries.size()) != order * order)
    throw std::invalid_argument("matrix entry count does not match order");
  Eigen::MatrixXd m(order, order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) m(i, j) = entries[i * order + j];
  const double scale = std::max(1.0, m.norm());
  if (order > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric");
  Spectrum s;
  s.source = kind;
  s.tolerance = 1e-10 * scale;
  if (order == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues_sym: solver did not converge");
  s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + order);
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

Spectrum eigenvalues_sym(const SymMatrix& m) {
  std::vector<double> e(m.entries.begin(), m.entries.end());
  return eigenvalues_sym(e, m.order, m.kind);
}

namespace {

// Faddeev-LeVerrier: M_1 = I, c_{k-j} = -tr(A M_j)/j, M_{j+1} = A M_j + c_{k-j} I.
// For integer matrices every division is exact.
template <typename Scalar>
std::vector<Scalar> faddeev_leverrier(const std::vector<Scalar>& a, int k) {
  std::vector<Scalar> coeffs(k + 1);
  coeffs[k] = 1;
  std::vector<Scalar> m(static_cast<std::size_t>(k) * k, Scalar(0));
  for (int i = 0; i < k; ++i) m[i * k + i] = 1;
  std::vector<Scalar> am(m.size());
  for (int j = 1; j <= k; ++j) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        Scalar acc = 0;
        for (int t = 0; t < k; ++t) {
          if (a[r * k + t] == 0) continue;
          acc += a[r * k + t] * m[t * k + c];
        }
        am[r * k + c] = acc;
      }
    Scalar tr = 0;
    for (int i = 0; i < k; ++i) tr += am[i * k + i];
    Scalar c = -tr / j;
    coeffs[k - j] = c;
    m = am;
    for (int i = 0; i < k; ++i) m[i * k + i] += c;
  }
  return coeffs;
}

}  // namespace

Polynomial char_poly_exact(const RationalMatrix& m) {
  const int k = m.order();
  std::vector<Rational> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i * k + j] = m(i, j);
  return Polynomial(faddeev_leverrier(a, k));
}

Polynomial char_poly_exact(const SymMatrix& m) {
  const int k = m.order;
  std::vector<Integer> a(m.entries.begin(), m.entries.end());
  auto c = faddeev_leverrier(a, k);
  return Polynomial(std::vector<Rational>(c.begin(), c.end()));
}

ExactSpectrum::ExactSpectrum(Polynomial charpoly)
    : charpoly_(std::move(charpoly)), roots_(real_roots(charpoly_)) {
  int total = 0;
  for (const auto& r : roots_) total += r.multiplicity;
  if (total != charpoly_.degree())
    throw std::domain_error("characteristic polynomial has non-real roots");
}

const AlgebraicReal& ExactSpectrum::kth(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("eigenvalue index out of range");
  int seen = 0;
  for (const auto& r : roots_) {
    seen += r.multiplicity;
    if (seen >= k) return r.value;
  }
  throw std::logic_error("unreachable: multiplicities do not sum to degree");
}

int ExactSpectrum::count_above(const Rational& r) const {
  int above = 0;
  for (const auto& root : roots_)
    if (root.value.compare(r) > 0) above += root.multiplicity;
  return above;
}

bool certify_kth_root(const Polynomial& charpoly, int k, const Rational& r) {
  if (k < 1 || k > charpoly.degree()) return false;
  const int mult = multiplicity_at(charpoly, r);
  if (mult == 0) return false;
  const Rational bound = root_bound(charpoly);
  int above = 0;
  const auto factors = squarefree_decomposition(charpoly);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].degree() > 0)
      above += static_cast<int>(i + 1) * SturmSequence(factors[i]).count(r, bound);
  return above < k && above + mult >= k;
}

bool certify_qk(const Graph& g, int k, const Rational& r) {
  if (k < 1 || k > g.order()) return false;
  return certify_kth_root(char_poly_exact(q_matrix(g)), k, r);
}

double ng_sum(const Graph& g, MatrixKind kind, int k) {
  if (k < 1 || k > g.order()) throw std::out_of_range("ng_sum: k out of range");
  return eigenvalues_sym(kind_matrix(g, kind)).value(k) +
         eigenvalues_sym(kind_matrix(complement(g), kind)).value(k);
}

}  // namespace qng
