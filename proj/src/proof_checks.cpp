#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qng/theorems.hpp"

namespace qng {

bool ProofCheck::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) { return s.ok; });
}

namespace {

// a + b*sqrt(d) with rational a, b and d >= 0.
struct Surd {
  Rational a, b, d;

  Surd(Rational a_, Rational b_, Rational d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}

  friend Surd operator+(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b, x.d}; }
  friend Surd operator-(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b, x.d}; }
  friend Surd operator*(const Surd& x, const Surd& y) {
    return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
  }

  int sign() const {
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sb == 0 || sgn(d) == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a * a;
    const Rational rhs = b * b * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return a.get_d() + b.get_d() * std::sqrt(d.get_d()); }
};

Surd eval(const Polynomial& p, const Surd& x) {
  Surd acc{Rational(0), Rational(0), x.d};
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Surd{p.coeff(i), Rational(0), x.d};
  return acc;
}

Rational q(long num, long den = 1) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

// Coefficients listed from the leading term down, as displayed.
Polynomial from_leading(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  std::reverse(c.begin(), c.end());
  return Polynomial(std::move(c));
}

RationalMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) { return RationalMatrix(rows); }

Polynomial power(const Polynomial& p, int e) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

class Recorder {
 public:
  explicit Recorder(std::string subject) { check_.subject = std::move(subject); }

  void step(std::string name, bool ok, std::string detail = {}) {
    check_.steps.push_back({std::move(name), ok, std::move(detail)});
  }
  ProofCheck take() { return std::move(check_); }

 private:
  ProofCheck check_;
};

std::string str(const Rational& r) { return to_string(r); }

std::string str(const Polynomial& p) { return p.to_string(); }

// Circulant k-regular graph on m vertices (k even, or m even).
Graph regular_graph(int m, int k) {
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= k / 2; ++j) e.emplace_back(i, (i + j) % m);
    if (k % 2 == 1 && i < m / 2) e.emplace_back(i, i + m / 2);
  }
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Graph::from_edges(m, e);
}

// The smaller root of a 2x2 quotient: returns the closed form's defect
// (zero when it is a root) and checks it is the smaller one.
void check_smaller_root(Recorder& rec, const std::string& label, const RationalMatrix& b, const Surd& closed) {
  const Polynomial cp = char_poly_exact(b);
  const bool root = eval(cp, closed).is_zero();
  const Surd other{b.trace() - closed.a, -closed.b, closed.d};
  const bool smaller = (other - closed).sign() >= 0 && eval(cp, other).is_zero();
  const double isolated = ExactSpectrum(cp).kth(2).to_double();
  std::ostringstream detail;
  detail << "charpoly " << str(cp) << ", closed form " << closed.to_double() << ", isolated " << isolated;
  rec.step(label + " closed form is the smaller root", root && smaller && std::abs(isolated - closed.to_double()) < 1e-8,
           detail.str());
}

}  // namespace

ProofCheck proof_check_thm12(int n, int d2) {
  if (n < 4 || d2 < 1 || d2 > n - 2) throw std::out_of_range("proof_check_thm12 needs n >= 4 and 1 <= d2 <= n-2");
  const long N = n;
  const long d = d2;
  Recorder rec("lower bound n-2: n=" + std::to_string(n) + ", d2=" + std::to_string(d2));

  // Two-block quotients of K_1 v R and of K_1 v (complement of R), R regular.
  const Rational disc(N * N - (4 * d - 2) * N + 4 * d * d + 4 * d - 7);
  const RationalMatrix b1 = matrix({{N - 2, N - 2}, {1, 2 * d - 1}});
  const RationalMatrix b2 = matrix({{N - 2, N - 2}, {1, 2 * N - 2 * d - 3}});
  const Surd lam1{q(N + 2 * d - 3, 2), q(-1, 2), disc};
  const Surd lam2{q(3 * N - 2 * d - 5, 2), q(-1, 2), disc};
  check_smaller_root(rec, "B1", b1, lam1);
  check_smaller_root(rec, "B2", b2, lam2);

  const long inner = d - 1;
  if (n <= Graph::kMaxOrder && ((N - 2) * inner) % 2 == 0 && inner <= N - 3) {
    const Graph r = regular_graph(n - 2, static_cast<int>(inner));
    std::vector<int> rest(n - 2);
    for (int v = 0; v < n - 2; ++v) rest[v] = v + 1;
    const VertexPartition p(n - 1, {{0}, rest});
    const Graph g1 = join(empty_graph(1), r);
    const Graph g2 = join(empty_graph(1), complement(r));
    rec.step("B1 and B2 are quotients of K_1 v R and K_1 v co-R",
             quotient_matrix(g1, p).matrix == b1 && quotient_matrix(g2, p).matrix == b2 &&
                 is_equitable(g1, p) && is_equitable(g2, p),
             "R is " + std::to_string(inner) + "-regular on " + std::to_string(n - 2) + " vertices");
  }

  // Adding the two bounds: sum >= 2n-4-sqrt(disc), so sum = n-2 forces
  // sqrt(disc) >= n-2, i.e. f(d2) >= 0.
  const Surd total = lam1 + lam2;
  const bool sum_ok = total.a == 2 * N - 4 && total.b == -1;
  auto f = [N](long x) { return 4 * x * x - (4 * N - 4) * x + 6 * N - 11; };
  rec.step("lambda2(B1)+lambda2(B2) = 2n-4-sqrt(disc) and disc-(n-2)^2 = f(d2)",
           sum_ok && disc - (N - 2) * (N - 2) == f(d),
           "disc=" + str(disc) + ", f(d2)=" + std::to_string(f(d)));
  rec.step("f(2) = f(n-3) = 13-2n", f(2) == 13 - 2 * N && f(N - 3) == 13 - 2 * N,
           "f(2)=" + std::to_string(f(2)));
  if (n >= 7)
    rec.step("f < 0 on [2, n-3] for n >= 7", f(2) < 0 && f(N - 3) < 0 && (d < 2 || d > N - 3 || f(d) < 0),
             "f(d2)=" + std::to_string(f(d)));

  // Quotient with s edges between the top vertex and the rest, all s.
  auto g = [N](long x) { return (N - 4) * x * x - (N * N - 5 * N + 4) * x + N * N - 4 * N + 4; };
  bool b3_ok = true;
  std::string b3_detail;
  for (long s = std::max(0L, d - 1); s <= N - 2 && b3_ok; ++s) {
    RationalMatrix b3 = matrix({{N - 2, N - 2}, {1, 0}});
    b3(1, 1) = Rational(2 * N - 2 * d - 5) + q(2 * s, N - 2);
    const Rational delta(N * N * N * N - (4 * d + 6) * N * N * N + (4 * d * d + 28 * d + 4 * s + 13) * N * N -
                         (16 * d * d + (8 * s + 64) * d + 20 * s + 12) * N + 16 * d * d + (16 * s + 48) * d +
                         4 * s * s + 24 * s + 4);
    const Rational tr = b3.trace();
    const Rational det = b3(0, 0) * b3(1, 1) - b3(0, 1) * b3(1, 0);
    const bool delta_ok = delta == Rational((N - 2) * (N - 2)) * (tr * tr - 4 * det);
    const Surd lam3{q((3 * N - 7) * (N - 2) - (2 * N - 4) * d + 2 * s, 2 * N - 4), q(-1, 2 * N - 4), delta};
    const bool root_ok = eval(char_poly_exact(b3), lam3).is_zero() && (lam3.b < 0);
    // lambda2(B3) >= n-2-d2 rearranges to sqrt(delta) >= n^2-5n+2s+6.
    const long c = N * N - 5 * N + 2 * s + 6;
    const bool rearrange_ok = (3 * N - 7) * (N - 2) - (2 * N - 4) * d + 2 * s - (2 * N - 4) * (N - 2 - d) == c;
    const long h = (N - 2) * d * d - c * d + N * N - 4 * N + 4;
    const bool square_ok = delta - Rational(c * c) == Rational(4 * (N - 2) * h);
    const long h_low = (N - 2) * d * d - (N * N - 5 * N + 2 * (d - 1) + 6) * d + N * N - 4 * N + 4;
    const bool monotone_ok = h_low - h == 2 * d * (s - d + 1) && h_low == g(d);
    b3_ok = delta_ok && root_ok && rearrange_ok && square_ok && monotone_ok;
    if (!b3_ok)
      b3_detail = "fails at s=" + std::to_string(s) + " (discriminant " + (delta_ok ? "ok" : "bad") + ", root " +
                  (root_ok ? "ok" : "bad") + ", rearrangement " + (rearrange_ok && square_ok ? "ok" : "bad") +
                  ", s-substitution " + (monotone_ok ? "ok" : "bad") + ")";
  }
  rec.step("B3 closed form, discriminant and reduction to g(d2) >= 0 for all s in [d2-1, n-2]", b3_ok,
           b3_ok ? "discriminant = (n-2)^2 (tr^2 - 4 det)" : b3_detail);
  rec.step("g(2) = g(n-3) = -(n-5)^2+5", g(2) == -(N - 5) * (N - 5) + 5 && g(N - 3) == -(N - 5) * (N - 5) + 5,
           "g(2)=" + std::to_string(g(2)));
  if (n >= 8)
    rec.step("g < 0 on [2, n-3] for n >= 8", g(2) < 0 && g(N - 3) < 0 && (d < 2 || d > N - 3 || g(d) < 0),
             "g(d2)=" + std::to_string(g(d)));
  return rec.take();
}

namespace {

// Quotient of the blown-up H(s0,s1,s2) (or its complement) under its blocks,
// checked against the displayed matrix and, when small, against the graph.
RationalMatrix h_quotient(Recorder& rec, const std::string& label, const HFamilyParams& params, bool complemented,
                          const RationalMatrix& displayed) {
  const BlockPattern pattern = complemented ? complement(h_pattern(params)) : h_pattern(params);
  const RationalMatrix b = blowup_quotient(pattern);
  bool ok = b == displayed;
  std::string detail = ok ? "matches display" : "computed " + b.to_string();
  if (params.order() <= Graph::kMaxOrder) {
    const Graph h = complemented ? complement(h_graph(params)) : h_graph(params);
    std::vector<std::vector<int>> blocks;
    for (auto& block : h_graph_blocks(params))
      if (!block.empty()) blocks.push_back(std::move(block));
    const VertexPartition p(h.order(), std::move(blocks));
    const bool graph_ok = is_equitable(h, p) && quotient_matrix(h, p).matrix == b;
    ok = ok && graph_ok;
    detail += graph_ok ? ", equals the graph's equitable quotient" : ", graph quotient differs";
  }
  rec.step(label + " quotient matrix", ok, detail);
  return b;
}

void check_charpoly(Recorder& rec, const std::string& label, const RationalMatrix& b, const Polynomial& expected) {
  const Polynomial cp = char_poly_exact(b);
  rec.step(label + " characteristic polynomial", cp == expected, str(cp));
}

// Full Q spectrum = quotient roots plus the listed extra eigenvalue powers:
// exact up to order 12, by float q_2 up to 32.
void check_full_graph(Recorder& rec, const std::string& label, const Graph& g, const Polynomial& quotient_cp,
                      const std::vector<std::pair<Rational, int>>& extra, double expected_q2) {
  const int n = g.order();
  if (n <= 12) {
    Polynomial expected = quotient_cp;
    for (const auto& [value, mult] : extra) expected = expected * power(Polynomial::linear_root(value), mult);
    rec.step(label + " full Q spectrum = quotient roots + duplicate-class eigenvalues",
             char_poly_exact(q_matrix(g)) == expected, "exact");
  }
  const double q2 = eigenvalues_sym(q_matrix(g)).value(2);
  rec.step(label + " float q_2 agrees", std::abs(q2 - expected_q2) < 1e-8,
           "q_2=" + std::to_string(q2) + ", expected " + std::to_string(expected_q2));
}

AlgebraicReal largest_root(const Polynomial& p) { return real_roots(p).front().value; }

}  // namespace

ProofCheck proof_check_thm15(int n) {
  if (n < 8) throw std::out_of_range("proof_check_thm15 needs n >= 8");
  const long N = n;
  Recorder rec("bipartite upper bound 2n-5: n=" + std::to_string(n));
  const bool small = n <= Graph::kMaxOrder;
  const Rational D(N * N - 8 * N + 20);
  const Polynomial x = Polynomial::identity();

  // Case s1 = 1, s2 >= 2: H(n-5,1,2).
  {
    const RationalMatrix b1 = h_quotient(rec, "H(n-5,1,2)", {n - 5, 1, 2}, false,
                                         matrix({{2, 0, 0, 1, 1},
                                                 {0, 1, 0, 1, 0},
                                                 {0, 0, 1, 0, 1},
                                                 {N - 5, 1, 0, N - 4, 0},
                                                 {N - 5, 0, 2, 0, N - 3}}));
    const Polynomial f = from_leading({1, -(2 * N - 3), N * N - N - 4, -(2 * N * N - 8 * N + 2), N * N - 5 * N});
    check_charpoly(rec, "H(n-5,1,2)", b1, x * f);
    const Rational fn3 = f.eval(Rational(N - 3));
    rec.step("f(n-3) = -(n-5)(n-6) < 0", fn3 == -(N - 5) * (N - 6) && fn3 < 0, str(fn3));
    rec.step("trace = 2n-3 <= 3(n-3)", b1.trace() == 2 * N - 3 && 2 * N - 3 <= 3 * (N - 3), str(b1.trace()));
    if (small) {
      const Graph h = h_graph({n - 5, 1, 2});
      check_full_graph(rec, "H(n-5,1,2)", h, char_poly_exact(b1), {{Rational(2), n - 6}, {Rational(1), 1}},
                       std::max(2.0, ExactSpectrum(char_poly_exact(b1)).kth(2).to_double()));
    }
  }

  // Case s1 = s2 = 1: H(n-4,1,1) and its complement.
  {
    const RationalMatrix b2 = h_quotient(rec, "H(n-4,1,1)", {n - 4, 1, 1}, false,
                                         matrix({{2, 0, 0, 1, 1},
                                                 {0, 1, 0, 1, 0},
                                                 {0, 0, 1, 0, 1},
                                                 {N - 4, 1, 0, N - 3, 0},
                                                 {N - 4, 0, 1, 0, N - 3}}));
    const Polynomial f2 = from_leading({1, -(N - 2), N - 4});
    const Polynomial cp2 = char_poly_exact(b2);
    check_charpoly(rec, "H(n-4,1,1)", b2, x * from_leading({1, -N, N}) * f2);
    const Surd beta2{q(N - 2, 2), q(1, 2), D};
    const AlgebraicReal beta2_alg = largest_root(f2);
    const ExactSpectrum spec2(cp2);
    rec.step("beta_2 = (n-2+sqrt(n^2-8n+20))/2 is the second quotient eigenvalue",
             eval(cp2, beta2).is_zero() && compare(spec2.kth(2), beta2_alg) == 0 && beta2_alg.compare(Rational(2)) > 0,
             "beta_2=" + std::to_string(beta2.to_double()));

    const RationalMatrix b3 = h_quotient(rec, "complement of H(n-4,1,1)", {n - 4, 1, 1}, true,
                                         matrix({{2 * N - 8, 1, 1, 0, 0},
                                                 {N - 4, N - 2, 1, 0, 1},
                                                 {N - 4, 1, N - 2, 1, 0},
                                                 {0, 0, 1, 2, 1},
                                                 {0, 1, 0, 1, 2}}));
    const Polynomial f1 = from_leading({1, -(3 * N - 6), 2 * N * N - 3 * N - 12, -6 * N * N + 38 * N - 56});
    const Polynomial cp3 = char_poly_exact(b3);
    check_charpoly(rec, "complement of H(n-4,1,1)", b3, f1 * f2);
    const Rational f1_top = f1.eval(Rational(2 * N - 6));
    rec.step("f1(2n-6) = -4n+16 < 0", f1_top == -4 * N + 16 && f1_top < 0, str(f1_top));
    const Surd gamma1p = beta2;
    const Surd gamma2p{q(N - 2, 2), q(-1, 2), D};
    rec.step("gamma_1', gamma_2' = (n-2 +- sqrt(n^2-8n+20))/2 are the roots of f2",
             eval(f2, gamma1p).is_zero() && eval(f2, gamma2p).is_zero(), "");
    const Surd f1_at = eval(f1, gamma1p);
    const Surd displayed{Rational(-2 * (N - 4) * (N - 3)), Rational(2 * (N - 4)), D};
    rec.step("f1(gamma_1') = -2(n-4)(n-3-sqrt(n^2-8n+20)) < 0", (f1_at - displayed).is_zero() && f1_at.sign() < 0,
             std::to_string(f1_at.to_double()));
    rec.step("trace = 4n-8 <= 4n-10+sqrt(n^2-8n+20)", b3.trace() == 4 * N - 8 && D >= 4, str(b3.trace()));
    const ExactSpectrum spec3(cp3);
    rec.step("q_2 of the complement is gamma_1' >= n-4",
             compare(spec3.kth(2), beta2_alg) == 0 && beta2_alg.compare(Rational(N - 4)) >= 0, "");
    rec.step("sum n-2+sqrt(n^2-8n+20) < 2n-5", compare_sum(beta2_alg, beta2_alg, Rational(2 * N - 5)) < 0 &&
                                                  D < Rational((N - 3) * (N - 3)),
             std::to_string(N - 2 + std::sqrt(D.get_d())));
    if (small) {
      const Graph h = h_graph({n - 4, 1, 1});
      check_full_graph(rec, "H(n-4,1,1)", h, cp2, {{Rational(2), n - 5}}, beta2.to_double());
      check_full_graph(rec, "complement of H(n-4,1,1)", complement(h), cp3, {{Rational(N - 4), n - 5}},
                       beta2.to_double());
    }
  }

  // Case s1 = 0, s2 >= 2: H(n-4,0,2).
  {
    const RationalMatrix b1 = h_quotient(rec, "H(n-4,0,2)", {n - 4, 0, 2}, false,
                                         matrix({{2, 0, 1, 1}, {0, 1, 0, 1}, {N - 4, 0, N - 4, 0}, {N - 4, 2, 0, N - 2}}));
    const Polynomial f = from_leading({1, -(2 * N - 3), N * N - 2 * N - 2, -N * N + 4 * N});
    check_charpoly(rec, "H(n-4,0,2)", b1, x * f);
    const Rational fn3 = f.eval(Rational(N - 3));
    rec.step("f(n-3) = 6-n <= 0", fn3 == 6 - N && fn3 <= 0, str(fn3));
    rec.step("trace = 2n-3 < 3(n-3)", b1.trace() == 2 * N - 3 && 2 * N - 3 < 3 * (N - 3), str(b1.trace()));
    if (small)
      check_full_graph(rec, "H(n-4,0,2)", h_graph({n - 4, 0, 2}), char_poly_exact(b1),
                       {{Rational(2), n - 5}, {Rational(1), 1}},
                       std::max(2.0, ExactSpectrum(char_poly_exact(b1)).kth(2).to_double()));
  }

  // Case s1 = 0, s2 = 1: H(n-3,0,1) and its complement.
  {
    const RationalMatrix b2 = h_quotient(rec, "H(n-3,0,1)", {n - 3, 0, 1}, false,
                                         matrix({{2, 0, 1, 1}, {0, 1, 0, 1}, {N - 3, 0, N - 3, 0}, {N - 3, 1, 0, N - 2}}));
    const Polynomial g = from_leading({1, -(2 * N - 2), N * N - N - 2, -N * N + 3 * N});
    const Polynomial cp2 = char_poly_exact(b2);
    check_charpoly(rec, "H(n-3,0,1)", b2, x * g);
    const Rational half_point = Rational(N) - q(5, 2);
    const Rational g_half = g.eval(half_point);
    rec.step("g(n-5/2) = (-2n+15)/8 < 0", g_half == q(-2 * N + 15, 8) && g_half < 0, str(g_half));
    const ExactSpectrum spec2(cp2);
    const AlgebraicReal beta2 = spec2.kth(2);
    rec.step("q_2 = beta_2 < n-5/2", beta2.compare(half_point) < 0 && beta2.compare(Rational(2)) >= 0,
             std::to_string(beta2.to_double()));

    const RationalMatrix b3 = h_quotient(rec, "complement of H(n-3,0,1)", {n - 3, 0, 1}, true,
                                         matrix({{2 * N - 7, 1, 0, 0}, {N - 3, N - 2, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, 1}}));
    const Polynomial phi = from_leading(
        {1, -(3 * N - 6), 2 * N * N - 3 * N - 10, -(6 * N * N - 35 * N + 48), 2 * N * N - 14 * N + 24});
    const Polynomial cp3 = char_poly_exact(b3);
    check_charpoly(rec, "complement of H(n-3,0,1)", b3, phi);
    const Rational phi_top = phi.eval(Rational(2 * N - 6));
    rec.step("phi(2n-6) = -4(n-3)(n-4) < 0", phi_top == -4 * (N - 3) * (N - 4) && phi_top < 0, str(phi_top));
    const Rational phi_half = phi.eval(half_point);
    rec.step("phi(n-5/2) = -(2n-11)(4n^2-24n+39)/16 < 0",
             phi_half == q(-(2 * N - 11) * (4 * N * N - 24 * N + 39), 16) && phi_half < 0, str(phi_half));
    const ExactSpectrum spec3(cp3);
    const AlgebraicReal gamma2 = spec3.kth(2);
    const AlgebraicReal q2c = gamma2.compare(Rational(N - 4)) >= 0 ? gamma2 : AlgebraicReal(Rational(N - 4));
    rec.step("gamma_1 > 2n-6, gamma_2 < n-5/2, and the sum is below 2n-5",
             spec3.kth(1).compare(Rational(2 * N - 6)) > 0 && gamma2.compare(half_point) < 0 &&
                 compare_sum(beta2, q2c, Rational(2 * N - 5)) < 0,
             "q_2 sum = " + std::to_string(beta2.to_double() + q2c.to_double()));
    if (small) {
      const Graph h = h_graph({n - 3, 0, 1});
      check_full_graph(rec, "H(n-3,0,1)", h, cp2, {{Rational(2), n - 4}}, beta2.to_double());
      check_full_graph(rec, "complement of H(n-3,0,1)", complement(h), cp3, {{Rational(N - 4), n - 4}},
                       q2c.to_double());
    }
  }
  return rec.take();
}

}  // namespace qng
