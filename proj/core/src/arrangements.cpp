#include "apolar/arrangements.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "apolar/apolarity.hpp"
#include "apolar/poly_io.hpp"

namespace apolar {

namespace {

// Dense univariate polynomials over Q(zeta12), lowest degree first.
using UPoly = std::vector<CycElem>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * CycElem(static_cast<long>(k)));
  trim(d);
  return d;
}

void divmod(UPoly num, const UPoly& den, UPoly& quot, UPoly& rem) {
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, CycElem());
  const CycElem lead_inv = den.back().inv();
  while (num.size() >= den.size() && !num.empty()) {
    const std::size_t shift = num.size() - den.size();
    const CycElem q = num.back() * lead_inv;
    quot[shift] = q;
    for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= q * den[i];
    trim(num);
  }
  trim(quot);
  rem = std::move(num);
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const CycElem inv = a.back().inv();
    for (auto& c : a) c *= inv;
  }
  return a;
}

CycElem eval(const UPoly& p, const CycElem& x) {
  CycElem acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

ComplexF eval(const std::vector<ComplexF>& p, ComplexF x) {
  ComplexF acc{};
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

std::vector<ComplexF> numeric_roots(const UPoly& p, int embedding) {
  std::vector<ComplexF> c;
  for (const auto& a : p) c.push_back(embed(a, embedding));
  const std::size_t deg = c.size() - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<ComplexF> dc;
  for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(c[k] * static_cast<double>(k));
  std::vector<ComplexF> roots;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    ComplexF z = es.eigenvalues()(i);
    for (int it = 0; it < 20; ++it) {
      const ComplexF d = eval(dc, z);
      if (std::abs(d) == 0.0) break;
      const ComplexF step = eval(c, z) / d;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

// Best rational approximation by continued fractions; nullopt when no
// denominator up to 1e7 gets within 1e-9.
std::optional<Rat> rationalize(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    const mpz_class ai(a);
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (k1 > 10000000) return std::nullopt;
    const Rat q(h1, k1);
    if (std::abs(q.get_d() - x) < 1e-9 * std::max(1.0, std::abs(x))) {
      Rat out(q);
      out.canonicalize();
      return out;
    }
    const double frac = r - a;
    if (frac < 1e-15) return std::nullopt;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

// Element with images r1 and r5 under the embeddings zeta -> e^{i pi/6} and
// zeta -> e^{5 i pi/6}.
std::optional<CycElem> from_embeddings(ComplexF r1, ComplexF r5) {
  Eigen::Matrix4d a;
  Eigen::Vector4d b(r1.real(), r1.imag(), r5.real(), r5.imag());
  for (int k = 0; k < 4; ++k) {
    const ComplexF z1 = std::polar(1.0, k * std::numbers::pi / 6.0), z5 = std::polar(1.0, 5 * k * std::numbers::pi / 6.0);
    a(0, k) = z1.real();
    a(1, k) = z1.imag();
    a(2, k) = z5.real();
    a(3, k) = z5.imag();
  }
  const Eigen::Vector4d s = a.fullPivLu().solve(b);
  std::array<Rat, 4> c;
  for (int k = 0; k < 4; ++k) {
    auto q = rationalize(s(k));
    if (!q) return std::nullopt;
    c[k] = *q;
  }
  return CycElem(c);
}

// Distinct roots of p in Q(zeta12), or nullopt if some root lies outside.
std::optional<std::vector<CycElem>> roots_in_field(UPoly p) {
  trim(p);
  if (p.size() <= 1) return std::vector<CycElem>{};
  UPoly sq, rem;
  divmod(p, gcd(p, derivative(p)), sq, rem);
  std::vector<CycElem> roots;
  if (sq.size() == 2) {
    roots.push_back(-sq[0] / sq[1]);
    return roots;
  }
  const auto r1 = numeric_roots(sq, 1), r5 = numeric_roots(sq, 5);
  for (const auto& a : r1) {
    for (const auto& b : r5) {
      auto cand = from_embeddings(a, b);
      if (!cand || !eval(sq, *cand).is_zero()) continue;
      if (std::find(roots.begin(), roots.end(), *cand) == roots.end()) roots.push_back(*cand);
      break;
    }
  }
  if (roots.size() + 1 != sq.size()) return std::nullopt;
  return roots;
}

void for_each_subset(std::size_t t, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > t) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == t - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t rank_of(const std::vector<std::vector<CycElem>>& vecs, const std::vector<std::size_t>& which) {
  if (which.empty()) return 0;
  std::vector<std::vector<CycElem>> rows;
  for (auto i : which) rows.push_back(vecs[i]);
  return rank(Matrix<CycElem>::from_rows(rows));
}

std::vector<std::vector<CycElem>> normals(const MultiArrangement& arr) {
  std::vector<std::vector<CycElem>> v;
  for (const auto& h : arr.hyperplanes) v.push_back(linear_coeffs(h.form));
  return v;
}

// Splits f (homogeneous) into linear factors, appended to `out` with
// repetition. Returns false with a reason when f does not split.
bool split(const Poly<CycElem>& f, std::vector<Poly<CycElem>>& out, CycElem& scalar, std::string& reason) {
  const std::size_t n = f.nvars();
  if (f.degree() == 0) {
    scalar = f.terms().begin()->second;
    return true;
  }
  const int d0 = f.degree_in(0);
  // The coefficient of x0^d0 is, up to a scalar, the product of the factors
  // free of x0; the quotient h is the product of the others, monic in x0.
  Poly<CycElem> g(n, f.ring());
  for (const auto& [e, c] : f.terms())
    if (e[0] == d0) {
      Exponent r = e;
      r[0] = 0;
      g.add_term(r, c);
    }
  auto hq = divide_exact(f, g);
  if (!hq) {
    reason = "leading coefficient in x0 does not divide the form";
    return false;
  }
  Poly<CycElem> h = *hq;
  const Poly<CycElem> x0 = Poly<CycElem>::variable(n, 0, f.ring());
  if (n == 1) {
    for (int k = 0; k < d0; ++k) out.push_back(x0);
  } else if (d0 > 0) {
    std::vector<std::vector<CycElem>> cands(n);
    cands[0] = {CycElem(1L)};
    for (std::size_t j = 1; j < n; ++j) {
      UPoly p(d0 + 1);
      for (const auto& [e, c] : h.terms())
        if (e[0] + e[j] == d0) p[e[0]] += c;
      auto roots = roots_in_field(p);
      if (!roots) {
        reason = "restriction to the x0,x" + std::to_string(j) + " line has roots outside Q(zeta12)";
        return false;
      }
      for (const auto& r : *roots) cands[j].push_back(-r);
    }
    std::vector<std::size_t> pick(n, 0);
    while (h.degree() > 0) {
      std::vector<CycElem> coeffs(n);
      for (std::size_t j = 0; j < n; ++j) coeffs[j] = cands[j][pick[j]];
      const auto l = Poly<CycElem>::linear(coeffs, f.ring());
      while (h.degree() > 0) {
        auto q = divide_exact(h, l);
        if (!q) break;
        out.push_back(l);
        h = *q;
      }
      std::size_t j = 1;
      while (j < n && ++pick[j] == cands[j].size()) pick[j++] = 0;
      if (j == n) break;
    }
    if (h.degree() > 0) {
      reason = "no linear factor accounts for the remaining part";
      return false;
    }
  }
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Poly<CycElem>> sub;
  if (!split(restrict_vars(g, rest), sub, scalar, reason)) return false;
  for (const auto& s : sub) out.push_back(extend_vars(s, rest, n));
  return true;
}

}  // namespace

int MultiArrangement::total_multiplicity() const {
  int m = 0;
  for (const auto& h : hyperplanes) m += h.mult;
  return m;
}

bool MultiArrangement::is_simple() const {
  return std::all_of(hyperplanes.begin(), hyperplanes.end(), [](const auto& h) { return h.mult == 1; });
}

void MultiArrangement::validate() const {
  for (const auto& h : hyperplanes) {
    if (h.form.nvars() != n + 1) throw DimensionError("hyperplane has the wrong variable count");
    if (h.form.is_zero() || h.form.degree() != 1 || !h.form.is_homogeneous())
      throw DomainError("hyperplane is not given by a linear form");
    if (h.mult < 1) throw DomainError("multiplicity must be at least 1");
  }
  const auto v = normals(*this);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (rank_of(v, {i, j}) < 2) throw DomainError("hyperplanes " + std::to_string(i) + " and " +
                                                    std::to_string(j) + " are proportional");
}

MultiArrangement make_arrangement(const std::vector<Poly<CycElem>>& forms) {
  MultiArrangement arr;
  if (forms.empty()) throw DomainError("empty arrangement");
  arr.n = forms.front().nvars() - 1;
  for (const auto& f : forms) arr.hyperplanes.push_back({f, 1});
  arr.validate();
  return arr;
}

Poly<CycElem> defining_poly(const MultiArrangement& arr) {
  Poly<CycElem> q = Poly<CycElem>::constant(arr.n + 1, CycElem(1L));
  for (const auto& h : arr.hyperplanes) q *= pow(h.form, static_cast<unsigned>(h.mult));
  return q;
}

std::vector<CycElem> normalize_first_nonzero(std::vector<CycElem> v) {
  for (const auto& c : v)
    if (!c.is_zero()) {
      const CycElem inv = c.inv();
      for (auto& x : v) x *= inv;
      return v;
    }
  throw DomainError("zero vector");
}

Poly<CycElem> normalize_linear(const Poly<CycElem>& l) {
  return Poly<CycElem>::linear(normalize_first_nonzero(linear_coeffs(l)), l.ring());
}

Factorization factor_product_of_linear(const Poly<CycElem>& f) {
  Factorization res;
  if (f.is_zero()) {
    res.reason = "zero polynomial";
    return res;
  }
  if (!f.is_homogeneous()) {
    res.reason = "not homogeneous";
    return res;
  }
  std::vector<Poly<CycElem>> factors;
  if (!split(f, factors, res.scalar, res.reason)) return res;
  MultiArrangement arr;
  arr.n = f.nvars() - 1;
  for (const auto& l : factors) {
    auto it = std::find_if(arr.hyperplanes.begin(), arr.hyperplanes.end(),
                           [&](const Hyperplane& h) { return h.form == l; });
    if (it == arr.hyperplanes.end())
      arr.hyperplanes.push_back({l, 1});
    else
      ++it->mult;
  }
  if (defining_poly(arr) * res.scalar != f) throw Error("factorization does not reproduce the form");
  res.arrangement = std::move(arr);
  return res;
}

bool is_generic(const MultiArrangement& arr) {
  if (!arr.is_simple()) return false;
  const auto v = normals(arr);
  // Subsets of an independent set are independent, so the largest size suffices.
  const std::size_t k = std::min(v.size(), arr.n + 1);
  bool ok = true;
  for_each_subset(v.size(), k, [&](const std::vector<std::size_t>& s) {
    ok = rank_of(v, s) == k;
    return ok;
  });
  return ok;
}

bool is_irreducible(const MultiArrangement& arr) {
  const auto v = normals(arr);
  const std::size_t t = v.size();
  if (t <= 1) return true;
  if (t > 24) throw RangeError("bipartition search limited to 24 hyperplanes");
  std::vector<std::size_t> all(t);
  std::iota(all.begin(), all.end(), 0);
  const std::size_t r = rank_of(v, all);
  // The last hyperplane always sits in the complement, so each bipartition is visited once.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (t - 1)); ++mask) {
    std::vector<std::size_t> s, c;
    for (std::size_t i = 0; i < t; ++i) ((mask >> i) & 1u ? s : c).push_back(i);
    if (rank_of(v, s) + rank_of(v, c) == r) return false;
  }
  return true;
}

Normalization normalize_six(const MultiArrangement& arr) {
  if (arr.n != 2) throw DimensionError("normalize_six works in P^2");
  if (arr.total_multiplicity() != 6) throw DegreeError("normalize_six needs |m| = 6");
  if (!is_irreducible(arr)) throw DomainError("arrangement is reducible");
  const auto v = normals(arr);
  std::vector<std::size_t> chosen;
  for_each_subset(v.size(), 4, [&](const std::vector<std::size_t>& s) {
    bool ok = true;
    for_each_subset(4, 3, [&](const std::vector<std::size_t>& tri) {
      ok = rank_of(v, {s[tri[0]], s[tri[1]], s[tri[2]]}) == 3;
      return ok;
    });
    if (ok) chosen = s;
    return !ok;
  });
  if (chosen.empty()) throw Error("no four factors with no three dependent");

  Matrix<CycElem> a(3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i) a(i, k) = v[chosen[k]][i];
  const auto c = solve(a, v[chosen[3]]);
  Matrix<CycElem> d(3, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = (*c)[i].inv();

  Normalization out;
  out.chosen = chosen;
  out.m = d * inverse(a);
  const Poly<CycElem> x = Poly<CycElem>::variable(3, 0), y = Poly<CycElem>::variable(3, 1),
                      z = Poly<CycElem>::variable(3, 2);
  out.normalized = x * y * z * (x + y + z);
  for (std::size_t i = 0; i < arr.hyperplanes.size(); ++i) {
    const bool is_ref = std::find(chosen.begin(), chosen.end(), i) != chosen.end();
    const int copies = arr.hyperplanes[i].mult - (is_ref ? 1 : 0);
    if (copies == 0) continue;
    const Poly<CycElem> l = normalize_linear(substitute_linear(arr.hyperplanes[i].form, out.m));
    for (int k = 0; k < copies; ++k) {
      out.extra.push_back(l);
      out.normalized *= l;
    }
  }
  const Poly<CycElem> image = substitute_linear(defining_poly(arr), out.m);
  out.scalar = image.terms().begin()->second / out.normalized.terms().begin()->second;
  if (out.normalized * out.scalar != image) throw Error("normalization does not reproduce the form");
  return out;
}

std::vector<Poly<CycElem>> star_config_generators(const std::vector<Poly<CycElem>>& forms, std::size_t codim) {
  if (forms.empty()) throw DomainError("no forms");
  const std::size_t t = forms.size(), n = forms.front().nvars() - 1;
  if (codim < 1 || codim > n + 1 || codim > t) throw RangeError("codimension out of range");
  std::vector<Poly<CycElem>> gens;
  for_each_subset(t, t - codim + 1, [&](const std::vector<std::size_t>& s) {
    Poly<CycElem> p = Poly<CycElem>::constant(n + 1, CycElem(1L));
    for (auto i : s) p *= forms[i];
    gens.push_back(std::move(p));
    return true;
  });
  return gens;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BoundReport bounds(const MultiArrangement& arr) {
  BoundReport b;
  const long n = static_cast<long>(arr.n), a = static_cast<long>(arr.num_distinct());
  b.alpha_lower = std::min(a - n + 1, n + 1);
  b.ci_min_size = n * (n + 1);
  b.waring_lower = std::min(binomial(a, n), binomial(2 * n, n));
  if (!arr.is_simple())
    b.reason = "arrangement has multiplicities";
  else if (a < n + 1)
    b.reason = "fewer than n+1 hyperplanes";
  else if (!is_generic(arr))
    b.reason = "arrangement is not generic";
  b.applicable = b.reason.empty();
  return b;
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

MultiArrangement random_generic_arrangement(std::size_t n, std::size_t count, std::mt19937_64& rng, long range) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    MultiArrangement arr;
    arr.n = n;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<CycElem> c(n + 1);
      for (auto& x : c) x = CycElem(uniform_int(rng, -range, range));
      arr.hyperplanes.push_back({Poly<CycElem>::linear(c), 1});
    }
    if (is_generic(arr) && (count > 1 || !arr.hyperplanes[0].form.is_zero())) return arr;
  }
  throw Error("could not sample a generic arrangement");
}

std::string arrangement_to_json(const MultiArrangement& arr) {
  nlohmann::json j;
  j["n"] = arr.n;
  j["hyperplanes"] = nlohmann::json::array();
  for (const auto& h : arr.hyperplanes) j["hyperplanes"].push_back({{"form", to_string(h.form)}, {"mult", h.mult}});
  return j.dump();
}

MultiArrangement arrangement_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  MultiArrangement arr;
  try {
    arr.n = j.at("n").get<std::size_t>();
    for (const auto& h : j.at("hyperplanes")) {
      const Poly<CycElem> form = parse_poly(h.at("form").get<std::string>(), ParseOptions{arr.n + 1});
      arr.hyperplanes.push_back({form, h.value("mult", 1)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("arrangement JSON: ") + e.what());
  }
  arr.validate();
  return arr;
}

MultiArrangement parse_arrangement(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return arrangement_from_json(text);
  const auto fac = factor_product_of_linear(parse_poly(text));
  if (!fac.arrangement) throw DomainError("form is not a product of linear forms: " + fac.reason);
  return *fac.arrangement;
}

}  // namespace apolar
