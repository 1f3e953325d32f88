#pragma once

#include <map>
#include <string>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Matrix of Cat_f(t): R_t -> S_{d-t}. Entry (x^b, X^a) is the coefficient of
/// x^b in X^a o f.
template <class K>
struct CatMatrix {
  int t = 0;
  std::vector<Exponent> rows;  // degree d-t monomials of S
  std::vector<Exponent> cols;  // degree t monomials of R
  Matrix<K> entries;
};

/// Homogeneous forms of one degree, linearly independent.
template <class K>
struct GradedBasis {
  int degree = 0;
  std::vector<Poly<K>> basis;
};

struct HilbertData {
  int socle_degree = 0;
  std::vector<std::size_t> h;                 // h_0..h_d
  std::map<int, std::size_t> min_generators;  // k -> mu_k, nonzero entries, k <= d+1
  bool complete_intersection = false;
};

struct CIResult {
  bool complete_intersection = false;
  std::vector<int> degrees;  // each k repeated mu_k times
};

namespace detail {

template <class K>
void require_form(const Poly<K>& f) {
  if (f.ring() != Ring::primal) throw DimensionError("expected a form in the primal ring");
  if (!f.is_homogeneous()) throw DegreeError("expected a homogeneous form");
}

/// Coefficient vector of a homogeneous polynomial over a monomial list.
template <class K>
std::vector<K> coords(const Poly<K>& p, const std::vector<Exponent>& monos,
                      const std::map<Exponent, std::size_t, DegLexGreater>& index) {
  std::vector<K> v(monos.size(), field_traits<K>::zero());
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw DegreeError("term outside the expected degree");
    v[it->second] = c;
  }
  return v;
}

inline std::map<Exponent, std::size_t, DegLexGreater> index_of(const std::vector<Exponent>& monos) {
  std::map<Exponent, std::size_t, DegLexGreater> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

template <class K>
Matrix<K> rows_matrix(const std::vector<Poly<K>>& polys, const std::vector<Exponent>& monos) {
  const auto idx = index_of(monos);
  Matrix<K> m(polys.size(), monos.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    const auto v = coords(polys[r], monos, idx);
    for (std::size_t c = 0; c < monos.size(); ++c) m(r, c) = v[c];
  }
  return m;
}

template <class K>
Poly<K> from_coords(const std::vector<K>& v, const std::vector<Exponent>& monos, Ring ring) {
  Poly<K> p(monos.empty() ? 0 : monos.front().size(), ring);
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], v[i]);
  return p;
}

}  // namespace detail

template <class K>
CatMatrix<K> catalecticant(const Poly<K>& f, int t) {
  detail::require_form(f);
  if (f.is_zero()) throw DegreeError("catalecticant of the zero form");
  const int d = f.degree();
  if (t < 0 || t > d) throw RangeError("catalecticant degree out of range");
  CatMatrix<K> cat;
  cat.t = t;
  cat.rows = monomials_of_degree(f.nvars(), d - t);
  cat.cols = monomials_of_degree(f.nvars(), t);
  cat.entries = Matrix<K>(cat.rows.size(), cat.cols.size());
  const auto row_idx = detail::index_of(cat.rows);
  const K one = field_traits<K>::one();
  for (std::size_t j = 0; j < cat.cols.size(); ++j) {
    Poly<K> image(f.nvars(), Ring::primal);
    for (const auto& [b, cb] : f.terms()) apolar_act_monomial(cat.cols[j], one, b, cb, image);
    for (const auto& [e, c] : image.terms()) cat.entries(row_idx.at(e), j) = c;
  }
  return cat;
}

/// Ann_R(f)_t as the kernel of Cat_f(t). Exact fields give the canonical
/// RREF-derived basis; ComplexF uses singular-value thresholding.
template <class K>
GradedBasis<K> ann_component(const Poly<K>& f, int t) {
  detail::require_form(f);
  GradedBasis<K> out;
  out.degree = t;
  if (t < 0) throw RangeError("negative degree");
  const auto cols = monomials_of_degree(f.nvars(), t);
  if (t > f.degree()) {
    for (const auto& e : cols) out.basis.push_back(Poly<K>::monomial(e, field_traits<K>::one(), Ring::dual));
    return out;
  }
  const CatMatrix<K> cat = catalecticant(f, t);
  std::vector<std::vector<K>> ker;
  if constexpr (field_traits<K>::exact)
    ker = kernel(cat.entries);
  else
    ker = numeric_kernel(cat.entries);
  for (const auto& v : ker) out.basis.push_back(detail::from_coords(v, cols, Ring::dual));
  return out;
}

/// Dimension of R_1 * V inside R_{k}, where V is a basis of forms of degree k-1.
template <class K>
std::size_t dim_linear_multiples(const std::vector<Poly<K>>& v, std::size_t nvars, int k) {
  if (v.empty()) return 0;
  std::vector<Poly<K>> prods;
  for (std::size_t i = 0; i < nvars; ++i) {
    const Poly<K> xi = Poly<K>::variable(nvars, i, Ring::dual);
    for (const auto& p : v) prods.push_back(xi * p);
  }
  return rank(detail::rows_matrix(prods, monomials_of_degree(nvars, k)));
}

template <class K>
HilbertData hilbert(const Poly<K>& f) {
  detail::require_form(f);
  if (f.is_zero()) throw DegreeError("hilbert function of the zero form");
  const int d = f.degree();
  const std::size_t n = f.nvars();
  HilbertData hd;
  hd.socle_degree = d;
  std::vector<Poly<K>> prev;  // Ann_{k-1}
  std::size_t gens = 0;
  for (int k = 0; k <= d + 1; ++k) {
    const GradedBasis<K> ann = ann_component(f, k);
    if (k <= d) hd.h.push_back(count_monomials(n, k) - ann.basis.size());
    const std::size_t from_below = k == 0 ? 0 : dim_linear_multiples(prev, n, k);
    const std::size_t mu = ann.basis.size() - from_below;
    if (mu > 0) hd.min_generators[k] = mu;
    gens += mu;
    prev = ann.basis;
  }
  for (int k = 0; k <= d; ++k)
    if (hd.h[k] != hd.h[d - k]) throw Error("h-vector is not symmetric; arithmetic is inconsistent");
  hd.complete_intersection = gens == n;
  return hd;
}

template <class K>
CIResult is_complete_intersection(const Poly<K>& f) {
  const HilbertData hd = hilbert(f);
  CIResult r;
  r.complete_intersection = hd.complete_intersection;
  for (const auto& [k, mu] : hd.min_generators)
    for (std::size_t j = 0; j < mu; ++j) r.degrees.push_back(k);
  return r;
}

/// f restricted to the listed variables (f must not involve the others).
template <class K>
Poly<K> restrict_vars(const Poly<K>& f, const std::vector<std::size_t>& vars) {
  Poly<K> r(vars.size(), f.ring());
  for (const auto& [e, c] : f.terms()) {
    Exponent s(vars.size());
    int used = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      s[i] = e[vars[i]];
      used += s[i];
    }
    if (used != total_degree(e)) throw DimensionError("form involves variables outside the block");
    r.add_term(s, c);
  }
  return r;
}

/// Inverse of restrict_vars into nvars ambient variables.
template <class K>
Poly<K> extend_vars(const Poly<K>& p, const std::vector<std::size_t>& vars, std::size_t nvars) {
  Poly<K> r(nvars, p.ring());
  for (const auto& [e, c] : p.terms()) {
    Exponent full(nvars, 0);
    for (std::size_t i = 0; i < vars.size(); ++i) full[vars[i]] = e[i];
    r.add_term(full, c);
  }
  return r;
}

struct TensorSplitReport {
  bool passed = true;
  int failing_degree = -1;
  std::vector<std::size_t> ann_dims;    // dim Ann(fg)_k from the combined kernel
  std::vector<std::size_t> split_dims;  // dim of the split ideal in degree k
};

/// Compares Ann(fg)_k with the degree-k part of Ann_{R1}(f) R + Ann_{R2}(g) R for
/// every k <= deg(fg). The first block is the support of f, the second block all
/// remaining variables; g must live in the second block.
template <class K>
TensorSplitReport tensor_split_check(const Poly<K>& f, const Poly<K>& g) {
  detail::require_form(f);
  detail::require_form(g);
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) throw DegreeError("tensor split of a zero form");
  const std::size_t n = f.nvars();
  const auto sf = f.support(), sg = g.support();
  for (auto v : sf)
    if (sg.count(v)) throw DimensionError("variable blocks overlap");
  std::vector<std::size_t> b1(sf.begin(), sf.end()), b2;
  for (std::size_t v = 0; v < n; ++v)
    if (!sf.count(v)) b2.push_back(v);

  const Poly<K> fr = restrict_vars(f, b1), gr = restrict_vars(g, b2);
  const Poly<K> fg = f * g;
  TensorSplitReport rep;
  for (int k = 0; k <= fg.degree(); ++k) {
    const auto monos = monomials_of_degree(n, k);
    std::vector<Poly<K>> split;
    // Ann_{R1}(f) R in degree k is the sum over j of Ann_{R1}(f)_j (R2)_{k-j}.
    auto add_block = [&](const Poly<K>& h, const std::vector<std::size_t>& own,
                         const std::vector<std::size_t>& other) {
      if (own.empty()) return;
      for (int j = 0; j <= k; ++j) {
        const GradedBasis<K> ann = ann_component(h, j);
        if (ann.basis.empty()) continue;
        std::vector<Exponent> mult =
            other.empty() ? (k == j ? std::vector<Exponent>{Exponent{}} : std::vector<Exponent>{})
                          : monomials_of_degree(other.size(), k - j);
        for (const auto& phi : ann.basis) {
          const Poly<K> big = extend_vars(phi, own, n);
          for (const auto& m : mult)
            split.push_back(big * extend_vars(Poly<K>::monomial(m, field_traits<K>::one(), Ring::dual), other, n));
        }
      }
    };
    add_block(fr, b1, b2);
    add_block(gr, b2, b1);

    const GradedBasis<K> ann = ann_component(fg, k);
    const std::size_t split_rank = split.empty() ? 0 : rank(detail::rows_matrix(split, monos));
    std::vector<Poly<K>> both = split;
    both.insert(both.end(), ann.basis.begin(), ann.basis.end());
    const std::size_t union_rank = both.empty() ? 0 : rank(detail::rows_matrix(both, monos));
    bool contained = true;
    for (const auto& phi : split)
      if (!apolar_act(phi, fg).is_zero()) contained = false;
    rep.ann_dims.push_back(ann.basis.size());
    rep.split_dims.push_back(split_rank);
    const bool ok = contained && split_rank == ann.basis.size() && union_rank == split_rank;
    if (!ok && rep.passed) {
      rep.passed = false;
      rep.failing_degree = k;
    }
  }
  return rep;
}

/// Order-k partials X^a o f for |a| = k, zeros and repeats removed.
template <class K>
std::vector<Poly<K>> jacobian_ideal(const Poly<K>& f, int k) {
  detail::require_form(f);
  if (k < 0 || k > f.degree()) throw RangeError("jacobian ideal order out of range");
  std::vector<Poly<K>> gens;
  for (const auto& a : monomials_of_degree(f.nvars(), k)) {
    const Poly<K> p = apolar_act(Poly<K>::monomial(a, field_traits<K>::one(), Ring::dual), f);
    if (p.is_zero()) continue;
    if (std::find(gens.begin(), gens.end(), p) != gens.end()) continue;
    gens.push_back(p);
  }
  return gens;
}

enum class ColonStatus { member, not_member, wrong_degree, gh_not_annihilated, h_annihilated };

inline const char* to_string(ColonStatus s) {
  switch (s) {
    case ColonStatus::member: return "member";
    case ColonStatus::not_member: return "not_member";
    case ColonStatus::wrong_degree: return "precondition: D is not homogeneous of degree k";
    case ColonStatus::gh_not_annihilated: return "precondition: D o (gh) != 0";
    case ColonStatus::h_annihilated: return "precondition: D o h = 0";
  }
  return "?";
}

/// Checks g (D o h) in J^{k-1}(h) in the matching degree, by solving for
/// multipliers of degree deg g - 1 on the generators.
template <class K>
ColonStatus colon_membership_check(const Poly<K>& g, const Poly<K>& h, const Poly<K>& D, int k) {
  detail::require_form(g);
  detail::require_form(h);
  if (D.ring() != Ring::dual || D.is_zero() || !D.is_homogeneous() || D.degree() != k || k < 1)
    return ColonStatus::wrong_degree;
  if (k > h.degree()) return ColonStatus::h_annihilated;
  if (!apolar_act(D, g * h).is_zero()) return ColonStatus::gh_not_annihilated;
  const Poly<K> Dh = apolar_act(D, h);
  if (Dh.is_zero()) return ColonStatus::h_annihilated;
  const Poly<K> target = g * Dh;
  if (target.is_zero()) return ColonStatus::member;
  const int mdeg = g.degree() - 1;
  if (mdeg < 0) return ColonStatus::not_member;
  const auto gens = jacobian_ideal(h, k - 1);
  std::vector<Poly<K>> span;
  for (const auto& j : gens)
    for (const auto& m : monomials_of_degree(h.nvars(), mdeg))
      span.push_back(j * Poly<K>::monomial(m, field_traits<K>::one()));
  const auto monos = monomials_of_degree(h.nvars(), target.degree());
  const Matrix<K> a = detail::rows_matrix(span, monos).transpose();
  const auto b = detail::coords(target, monos, detail::index_of(monos));
  return solve(a, b) ? ColonStatus::member : ColonStatus::not_member;
}

}  // namespace apolar
