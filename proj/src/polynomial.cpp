#include "qng/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qng {

namespace {

int sgn(const Rational& r) { return ::sgn(r); }

Rational abs_value(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

// Divide by |leading coefficient|; keeps every sign intact.
Polynomial normalize_positive(const Polynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / abs_value(p.leading()) * p;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::linear_root(const Rational& r) {
  return Polynomial(std::vector<Rational>{Rational(-r), Rational(1)});
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[i];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(eval(x)); }

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading() * *this;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                   c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : c_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(leading()) < 0) content = -content;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return Polynomial(std::move(out));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in polynomial arithmetic: p(ax+b).
  const Polynomial inner(std::vector<Rational>{b, a});
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + constant(*it);
  return acc;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.c_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs_value(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {Polynomial(), a};
  std::vector<Rational> q(dq + 1);
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = dq; k >= 0; --k) {
    const Rational t = rem[k + db] * inv_lead;
    q[k] = t;
    if (sgn(t) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.coeff(j);
  }
  rem.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Polynomial{1};
  return divmod(p, gcd(p, p.derivative())).quotient.primitive();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  const Polynomial dp = p.derivative();
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = divmod(p, a0).quotient;
  Polynomial c = divmod(dp, a0).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial a = gcd(b, d);
    out.push_back(a.primitive());
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
  }
  return out;
}

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm sequence of zero");
  seq_.push_back(normalize_positive(squarefree));
  if (squarefree.degree() == 0) return;
  seq_.push_back(normalize_positive(squarefree.derivative()));
  while (seq_.back().degree() > 0) {
    Polynomial r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
    if (r.is_zero()) break;
    seq_.push_back(normalize_positive(-r));
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (lo > hi) throw std::invalid_argument("Sturm count needs lo <= hi");
  return sign_changes(lo) - sign_changes(hi);
}

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("sturm_count: lo > hi");
  if (p.degree() <= 0) return 0;
  return SturmSequence(squarefree_part(p)).count(lo, hi);
}

int multiplicity_at(const Polynomial& p, const Rational& r) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity in zero polynomial");
  int mult = 0;
  Polynomial q = p;
  const Polynomial lin = Polynomial::linear_root(r);
  while (q.degree() >= 1 && q.sign_at(r) == 0) {
    q = divmod(q, lin).quotient;
    ++mult;
  }
  return mult;
}

Rational root_bound(const Polynomial& p) {
  Rational worst = 0;
  for (int i = 0; i < p.degree(); ++i)
    worst = std::max(worst, abs_value(p.coeff(i) / p.leading()));
  return worst + 1;
}

AlgebraicReal::AlgebraicReal(const Rational& value)
    : poly_(Polynomial::linear_root(value).primitive()),
      lo_(value),
      hi_(value),
      exact_(true) {}

AlgebraicReal::AlgebraicReal(Polynomial squarefree, Rational lo, Rational hi)
    : poly_(squarefree.primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval is empty");
  if (poly_.sign_at(lo_) * poly_.sign_at(hi_) >= 0)
    throw std::invalid_argument("isolating interval has no sign change");
}

double AlgebraicReal::to_double() const {
  if (exact_) return lo_.get_d();
  AlgebraicReal tight = *this;
  tight.refine_to(Rational(1) / Rational(Integer(1) << 60));
  return (tight.exact_ ? tight.lo_ : Rational((tight.lo_ + tight.hi_) / 2)).get_d();
}

void AlgebraicReal::refine() {
  if (exact_) return;
  Rational mid = (lo_ + hi_) / 2;
  const int s = poly_.sign_at(mid);
  if (s == 0) {
    lo_ = hi_ = mid;
    exact_ = true;
    poly_ = Polynomial::linear_root(mid).primitive();
  } else if (s != poly_.sign_at(lo_)) {
    hi_ = std::move(mid);
  } else {
    lo_ = std::move(mid);
  }
}

void AlgebraicReal::refine_to(const Rational& width) {
  while (!exact_ && hi_ - lo_ > width) refine();
}

AlgebraicReal AlgebraicReal::negated() const {
  if (exact_) return AlgebraicReal(Rational(-lo_));
  return AlgebraicReal(poly_.compose_affine(-1, 0), -hi_, -lo_);
}

int AlgebraicReal::compare(const Rational& r) const {
  if (exact_) return sgn(lo_ - r);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  const int s = poly_.sign_at(r);
  if (s == 0) return 0;
  // The root lies on the side of r where the sign differs from p(r).
  return s != poly_.sign_at(lo_) ? -1 : 1;
}

int compare_sum(AlgebraicReal a, AlgebraicReal b, const Rational& r) {
  if (a.is_exact()) return b.compare(r - a.lower());
  if (b.is_exact()) return a.compare(r - b.lower());

  // a + b = r holds iff a is a common root of p_a(x) and p_b(r - x) and the
  // partner r - a is the root isolated by b.
  const Polynomial h = gcd(a.polynomial(), b.polynomial().compose_affine(-1, r));
  if (h.degree() >= 1 && h.sign_at(a.lower()) * h.sign_at(a.upper()) < 0) {
    while (true) {
      if (a.is_exact()) return compare_sum(a, b, r);
      const Rational plo = r - a.upper();
      const Rational phi = r - a.lower();
      if (plo > b.lower() && phi < b.upper()) return 0;
      if (phi <= b.lower() || plo >= b.upper()) break;
      a.refine();
    }
  }
  while (true) {
    if (a.is_exact() || b.is_exact()) return compare_sum(a, b, r);
    // Open intervals: a > lower and b > lower strictly.
    if (a.lower() + b.lower() >= r) return 1;
    if (a.upper() + b.upper() <= r) return -1;
    if (a.upper() - a.lower() >= b.upper() - b.lower())
      a.refine();
    else
      b.refine();
  }
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  return compare_sum(a, b.negated(), Rational(0));
}

std::vector<RealRoot> real_roots(const Polynomial& p) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  const Polynomial s = squarefree_part(p);
  const SturmSequence sturm(s);
  const auto factors = squarefree_decomposition(p);
  const Rational bound = root_bound(s);

  auto multiplicity_of = [&](const AlgebraicReal& root) {
    if (root.is_exact()) return multiplicity_at(p, root.lower());
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (factors[i].sign_at(root.lower()) * factors[i].sign_at(root.upper()) < 0)
        return static_cast<int>(i) + 1;
    throw std::logic_error("root not found in squarefree decomposition");
  };

  // Depth-first bisection over (lo, hi] holding `count` distinct roots,
  // visiting the upper half first so roots come out descending.
  struct Frame {
    Rational lo, hi;
    int count;
  };
  std::vector<Frame> stack{{-bound, bound, sturm.count(-bound, bound)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.count == 0) continue;
    if (f.count == 1) {
      if (s.sign_at(f.hi) == 0) {
        AlgebraicReal root(f.hi);
        out.push_back({root, multiplicity_of(root)});
        continue;
      }
      if (s.sign_at(f.lo) != 0) {
        AlgebraicReal root(s, f.lo, f.hi);
        out.push_back({root, multiplicity_of(root)});
        continue;
      }
    }
    Rational mid = (f.lo + f.hi) / 2;
    const int lower = sturm.count(f.lo, mid);
    stack.push_back({f.lo, mid, lower});
    stack.push_back({mid, f.hi, f.count - lower});
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qng
