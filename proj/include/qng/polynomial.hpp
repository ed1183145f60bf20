#ifndef QNG_POLYNOMIAL_HPP
#define QNG_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qng {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with exact rational coefficients, stored
/// lowest degree first. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  /// The polynomial x.
  static Polynomial identity();
  /// x - r.
  static Polynomial linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i, zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;
  bool has_integer_coefficients() const;

  /// p(a*x + b).
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  /// Human-readable form, highest degree first, e.g. "x^2 - 2*x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Product of the distinct irreducible factors, made primitive.
Polynomial squarefree_part(const Polynomial& p);
/// Yun's decomposition: factors[i] collects roots of multiplicity i+1, so
/// p = c * prod factors[i]^(i+1) with each factor squarefree and coprime.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);
  int sign_changes(const Rational& x) const;
  /// Distinct roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  const Polynomial& base() const { return seq_.front(); }

 private:
  std::vector<Polynomial> seq_;
};

/// Distinct real roots of p in (lo, hi]. Throws when lo > hi.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);
/// Exact multiplicity of r as a root of p (0 when p(r) != 0).
int multiplicity_at(const Polynomial& p, const Rational& r);
/// Every real root of p has absolute value strictly below this bound.
Rational root_bound(const Polynomial& p);

/// A real algebraic number: a root of a squarefree primitive polynomial,
/// known either exactly (rational) or as the unique root in an open interval
/// whose endpoints are not roots.
class AlgebraicReal {
 public:
  explicit AlgebraicReal(const Rational& value);
  AlgebraicReal(Polynomial squarefree, Rational lo, Rational hi);

  bool is_exact() const { return exact_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  const Polynomial& polynomial() const { return poly_; }
  double to_double() const;

  /// Halve the isolating interval (may land on the exact value).
  void refine();
  void refine_to(const Rational& width);

  AlgebraicReal negated() const;
  /// Sign of (this - r), decided exactly.
  int compare(const Rational& r) const;

 private:
  Polynomial poly_;
  Rational lo_;
  Rational hi_;
  bool exact_ = false;
};

/// Sign of (a + b - r), decided exactly.
int compare_sum(AlgebraicReal a, AlgebraicReal b, const Rational& r);
/// Sign of (a - b), decided exactly.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

struct RealRoot {
  AlgebraicReal value;
  int multiplicity;
};

/// Distinct real roots in descending order with their multiplicities.
std::vector<RealRoot> real_roots(const Polynomial& p);

std::string to_string(const Rational& r);

}  // namespace qng

#endif  // QNG_POLYNOMIAL_HPP
