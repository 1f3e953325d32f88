#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/field.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

/// Exponent vector of a monomial; its length is the ambient variable count.
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lex order, largest first: higher total degree first, then
/// lexicographic with x0 > x1 > ... .
struct DegLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

namespace detail {
inline void enumerate_monomials(Exponent& e, std::size_t i, int left, std::vector<Exponent>& out) {
  if (i + 1 == e.size()) {
    e[i] = left;
    out.push_back(e);
    return;
  }
  for (int k = left; k >= 0; --k) {
    e[i] = k;
    enumerate_monomials(e, i + 1, left - k, out);
  }
}
}  // namespace detail

/// All exponents of total degree `d` in `nvars` variables, in DegLexGreater
/// order (x0^d first).
inline std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (d < 0 || nvars == 0) return out;
  Exponent e(nvars, 0);
  detail::enumerate_monomials(e, 0, d, out);
  return out;
}

/// Number of monomials of degree d in nvars variables, C(nvars - 1 + d, d).
inline std::size_t count_monomials(std::size_t nvars, int d) {
  if (d < 0 || nvars == 0) return 0;
  std::size_t r = 1;
  for (std::size_t k = 1; k < nvars; ++k) r = r * (d + k) / k;
  return r;
}

/// Primal ring S = K[x0..xn] or the dual ring R = K[X0..Xn] acting on it.
enum class Ring { primal, dual };

/// Sparse multivariate polynomial over K in Rat, CycElem or ComplexF.
///
/// Terms are kept in graded-lex order and no stored coefficient is zero. The
/// ring tag distinguishes S from R; arithmetic requires matching tags.
template <class K>
class Poly {
 public:
  using Terms = std::map<Exponent, K, DegLexGreater>;
  using traits = field_traits<K>;

  Poly() = default;
  explicit Poly(std::size_t nvars, Ring ring = Ring::primal) : nvars_(nvars), ring_(ring) {}

  static Poly constant(std::size_t nvars, const K& c, Ring ring = Ring::primal) {
    Poly p(nvars, ring);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i, Ring ring = Ring::primal) {
    if (i >= nvars) throw DimensionError("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e, traits::one(), ring);
  }
  static Poly monomial(const Exponent& e, const K& c, Ring ring = Ring::primal) {
    Poly p(e.size(), ring);
    p.add_term(e, c);
    return p;
  }
  /// Linear form sum_i coeffs[i] * x_i.
  static Poly linear(const std::vector<K>& coeffs, Ring ring = Ring::primal) {
    Poly p(coeffs.size(), ring);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponent e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  Ring ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? traits::zero() : it->second;
  }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const K& c) {
    if (e.size() != nvars_) throw DimensionError("exponent length does not match variable count");
    if (traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Same polynomial read in the other ring (x_i <-> X_i).
  Poly with_ring(Ring ring) const {
    Poly p = *this;
    p.ring_ = ring;
    return p;
  }

  /// Variables that occur with positive exponent.
  std::set<std::size_t> support() const {
    std::set<std::size_t> s;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] > 0) s.insert(i);
    return s;
  }

  /// Largest exponent of variable i.
  int degree_in(std::size_t i) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const K& s) {
    if (traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.nvars_, a.ring_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  void check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomials have different variable counts");
    if (ring_ != o.ring_) throw DimensionError("cannot combine primal and dual polynomials");
  }

 private:
  std::size_t nvars_ = 0;
  Ring ring_ = Ring::primal;
  Terms terms_;
};

template <class K>
Poly<K> pow(const Poly<K>& p, unsigned e) {
  Poly<K> result = Poly<K>::constant(p.nvars(), field_traits<K>::one(), p.ring());
  Poly<K> base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

/// Coefficient-wise conversion to another field.
template <class L, class K, class F>
Poly<L> map_coeffs(const Poly<K>& p, F&& f) {
  Poly<L> r(p.nvars(), p.ring());
  for (const auto& [e, c] : p.terms()) r.add_term(e, f(c));
  return r;
}

/// Complex conjugation of every coefficient.
template <class K>
Poly<K> conj(const Poly<K>& p) {
  return map_coeffs<K>(p, [](const K& c) { return field_traits<K>::conj(c); });
}

/// Numeric image of an exact polynomial under the standard embedding.
template <class K>
Poly<ComplexF> to_complex(const Poly<K>& p) {
  return map_coeffs<ComplexF>(p, [](const K& c) { return embed(c); });
}

/// Exact polynomial with all coefficients in Q; throws DomainError otherwise.
Poly<Rat> to_rational(const Poly<CycElem>& p);
Poly<CycElem> to_cyclotomic(const Poly<Rat>& p);

template <class K>
Poly<K> partial(const Poly<K>& f, std::size_t var) {
  if (var >= f.nvars()) throw DimensionError("partial: variable index out of range");
  Poly<K> r(f.nvars(), f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * field_traits<K>::from_int(e[var]));
  }
  return r;
}

/// Falling factorial b (b-1) ... (b-a+1).
inline long falling_factorial(int b, int a) {
  long r = 1;
  for (int k = 0; k < a; ++k) r *= (b - k);
  return r;
}

/// X^a o x^b for monomials; accumulates into `out`.
template <class K>
void apolar_act_monomial(const Exponent& a, const K& ca, const Exponent& b, const K& cb,
                         Poly<K>& out) {
  long scale = 1;
  Exponent d(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) return;
    d[i] = b[i] - a[i];
    scale *= falling_factorial(b[i], a[i]);
  }
  out.add_term(d, ca * cb * field_traits<K>::from_int(scale));
}

/// Phi o f = Phi(d/dx0, ..., d/dxn) f, for Phi in R and f in S.
template <class K>
Poly<K> apolar_act(const Poly<K>& phi, const Poly<K>& f) {
  if (phi.nvars() != f.nvars()) throw DimensionError("apolar_act: variable counts differ");
  if (phi.ring() != Ring::dual || f.ring() != Ring::primal)
    throw DimensionError("apolar_act expects a dual operator acting on a primal form");
  Poly<K> r(f.nvars(), Ring::primal);
  for (const auto& [a, ca] : phi.terms())
    for (const auto& [b, cb] : f.terms()) apolar_act_monomial(a, ca, b, cb, r);
  return r;
}

/// grad F . grad l for F in R and a linear form l in S; the result is in R.
template <class K>
Poly<K> gradient_dot(const Poly<K>& F, const Poly<K>& l) {
  if (F.nvars() != l.nvars()) throw DimensionError("gradient_dot: variable counts differ");
  if (F.degree() < 1 || !F.is_homogeneous())
    throw DegreeError("gradient_dot needs a homogeneous operator of degree >= 1");
  if (l.degree() != 1 || !l.is_homogeneous()) throw DegreeError("gradient_dot needs a linear form");
  Poly<K> r(F.nvars(), F.ring());
  for (std::size_t i = 0; i < F.nvars(); ++i) {
    Exponent e(F.nvars(), 0);
    e[i] = 1;
    const K a = l.coeff(e);
    if (field_traits<K>::is_zero(a)) continue;
    r += partial(F, i) * a;
  }
  return r;
}

template <class K>
K evaluate(const Poly<K>& p, const std::vector<K>& point) {
  if (point.size() != p.nvars()) throw DimensionError("evaluate: point has wrong length");
  K acc = field_traits<K>::zero();
  for (const auto& [e, c] : p.terms()) {
    K term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

/// Exact quotient f / g by graded-lex leading-term division; nullopt when g
/// does not divide f. Exact fields only.
template <class K>
std::optional<Poly<K>> divide_exact(const Poly<K>& f, const Poly<K>& g) {
  static_assert(field_traits<K>::exact, "divide_exact needs exact arithmetic");
  f.check_compatible(g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  Poly<K> rem = f, quot(f.nvars(), f.ring());
  const auto& [lg, cg] = *g.terms().begin();
  const K inv_cg = field_traits<K>::inv(cg);
  while (!rem.is_zero()) {
    const auto& [lr, cr] = *rem.terms().begin();
    Exponent q(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      q[i] = lr[i] - lg[i];
      if (q[i] < 0) return std::nullopt;
    }
    const Poly<K> t = Poly<K>::monomial(q, cr * inv_cg, f.ring());
    quot += t;
    rem -= t * g;
  }
  return quot;
}

/// Coefficient vector of a linear form (entry i = coefficient of x_i).
template <class K>
std::vector<K> linear_coeffs(const Poly<K>& l) {
  if (!l.is_zero() && (l.degree() != 1 || !l.is_homogeneous()))
    throw DegreeError("not a linear form");
  std::vector<K> a(l.nvars(), field_traits<K>::zero());
  for (const auto& [e, c] : l.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) a[i] = c;
  return a;
}

/// Linear change of variables: every x_j is replaced by sum_i M[i][j] x_i,
/// so f becomes f(M^T x). A linear form with coefficient vector a is sent to
/// the form with coefficient vector M a, and
/// substitute_linear(f, M1 M2) = substitute_linear(substitute_linear(f, M2), M1).
template <class K>
Poly<K> substitute_linear(const Poly<K>& f, const Matrix<K>& m) {
  const std::size_t n = f.nvars();
  if (m.rows() != n || m.cols() != n) throw DimensionError("substitute_linear: matrix size mismatch");
  if (rank(m) != n) throw DomainError("substitute_linear: matrix is singular");

  std::vector<Poly<K>> images;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<K> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = m(i, j);
    images.push_back(Poly<K>::linear(col, f.ring()));
  }
  // Cache of powers per variable.
  std::vector<std::vector<Poly<K>>> powers(n);
  auto power_of = [&](std::size_t j, int k) -> const Poly<K>& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Poly<K>::constant(n, field_traits<K>::one(), f.ring()));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[j]);
    return cache[k];
  };

  Poly<K> r(n, f.ring());
  for (const auto& [e, c] : f.terms()) {
    Poly<K> term = Poly<K>::constant(n, c, f.ring());
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] > 0) term *= power_of(j, e[j]);
    r += term;
  }
  return r;
}

}  // namespace apolar
