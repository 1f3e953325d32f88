#pragma once
// Independent reference computations for tests. Nothing here calls the
// library's catalecticant, kernel or rank code.

#include <algorithm>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "apolar/field.hpp"
#include "apolar/poly.hpp"

namespace oracle {

using apolar::CycElem;
using apolar::Exponent;
using apolar::Poly;
using apolar::Rat;

inline mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline std::vector<Exponent> monomials(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  // Plain odometer over all exponent vectors, filtered by degree.
  Exponent e(nvars, 0);
  while (true) {
    int s = 0;
    for (int v : e) s += v;
    if (s == d) out.push_back(e);
    std::size_t i = 0;
    while (i < nvars && e[i] == d) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  // Within one degree, lex-descending matches the library's row/column layout.
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Coefficient of x^b in X^a o f is f_{a+b} (a+b)!/b!.
template <class K>
std::vector<std::vector<K>> cat_entries(const Poly<K>& f, int t) {
  const int d = f.degree();
  const auto rows = monomials(f.nvars(), d - t), cols = monomials(f.nvars(), t);
  std::vector<std::vector<K>> m(rows.size(), std::vector<K>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Exponent s(f.nvars());
      mpz_class scale = 1;
      for (std::size_t v = 0; v < s.size(); ++v) {
        s[v] = rows[i][v] + cols[j][v];
        scale *= factorial(s[v]);
        scale /= factorial(rows[i][v]);
      }
      m[i][j] = f.coeff(s) * K(Rat(scale));
    }
  return m;
}

/// Rank over Q by Bareiss fraction-free elimination on integer rows.
inline std::size_t bareiss_rank(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (const auto& q : a[i]) l = lcm(l, q.get_den());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
  }
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// Numerical rank of the image of an exact Q(zeta12) matrix under the
/// standard embedding.
inline std::size_t embedded_rank(const std::vector<std::vector<CycElem>>& a) {
  if (a.empty()) return 0;
  Eigen::MatrixXcd m(a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) m(i, j) = apolar::embed(a[i][j]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > 1e-9 * s(0)) ++r;
  return r;
}

inline std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Brute-force h-vector of a rational form from the explicit catalecticant.
inline std::vector<std::size_t> h_vector(const Poly<Rat>& f) {
  std::vector<std::size_t> h;
  for (int k = 0; k <= f.degree(); ++k) h.push_back(bareiss_rank(cat_entries(f, k)));
  return h;
}

inline Rat small_rat(std::mt19937_64& rng, int num = 5, int den = 4) {
  const long p = static_cast<long>(rng() % (2 * num + 1)) - num;
  const long q = 1 + static_cast<long>(rng() % den);
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline CycElem small_cyc(std::mt19937_64& rng) {
  return CycElem({small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng)});
}

/// Random homogeneous form of degree d with about `terms` terms.
template <class K, class Gen>
Poly<K> random_form(std::size_t nvars, int d, std::mt19937_64& rng, Gen gen, std::size_t terms = 6,
                    apolar::Ring ring = apolar::Ring::primal) {
  const auto monos = monomials(nvars, d);
  Poly<K> p(nvars, ring);
  for (std::size_t k = 0; k < terms; ++k) p.add_term(monos[rng() % monos.size()], gen(rng));
  return p;
}

/// Evaluate a complex polynomial directly from its terms.
inline std::complex<double> eval(const Poly<std::complex<double>>& p, const std::vector<std::complex<double>>& x) {
  std::complex<double> acc{};
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(x[i], e[i]);
    acc += t;
  }
  return acc;
}

}  // namespace oracle
