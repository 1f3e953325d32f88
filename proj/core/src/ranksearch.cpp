#include "apolar/ranksearch.hpp"

#include <numeric>

namespace apolar {

SymbolicCat build_symbolic_cat() {
  const auto x = Poly<Rat>::variable(3, 0), y = Poly<Rat>::variable(3, 1), z = Poly<Rat>::variable(3, 2);
  const Poly<Rat> base = x * y * z * (x + y + z);
  const std::vector<Poly<Rat>> vars{x, y, z};
  SymbolicCat cat;
  cat.rows = monomials_of_degree(3, 3);
  cat.cols = monomials_of_degree(3, 3);
  cat.entries.assign(10, std::vector<Poly<Rat>>(10, Poly<Rat>(6)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // Coefficient of a_i d_j in f is base * x_i * x_j.
      const auto part = catalecticant(base * vars[i] * vars[j], 3);
      Exponent e(6, 0);
      e[i] = 1;
      e[3 + j] = 1;
      for (std::size_t r = 0; r < 10; ++r)
        for (std::size_t c = 0; c < 10; ++c) cat.entries[r][c].add_term(e, part.entries(r, c));
    }
  return cat;
}

const std::vector<std::string>& b_variable_names() {
  static const std::vector<std::string> names{"A", "B", "C", "D", "E", "F", "G", "H", "V", "J", "K",
                                              "L", "M", "N", "O", "P", "Q", "R", "S", "T", "U"};
  return names;
}

std::vector<std::string> rank_system_variables() {
  std::vector<std::string> v{"a", "b", "c", "d", "e", "f"};
  const auto& b = b_variable_names();
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

namespace {

void check_rows(const IdentityRows& rows) {
  if (!(rows[0] < rows[1] && rows[1] < rows[2] && rows[2] < 10)) throw RangeError("identity rows must increase and lie in 0..9");
}

std::vector<std::size_t> free_rows(const IdentityRows& rows) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < 10; ++k)
    if (std::find(rows.begin(), rows.end(), k) == rows.end()) out.push_back(k);
  return out;
}

Poly<ComplexF> to_complex_rat(const Poly<Rat>& p) { return to_complex(p); }

std::vector<Poly<ComplexF>> random_combinations(const std::vector<Poly<ComplexF>>& eqs, std::size_t count,
                                                std::mt19937_64& rng) {
  std::vector<Poly<ComplexF>> out;
  for (std::size_t k = 0; k < count; ++k) {
    Poly<ComplexF> s(eqs.front().nvars());
    for (const auto& e : eqs) s += e * random_unit(rng);
    out.push_back(std::move(s));
  }
  return out;
}

const SymbolicCat& cached_cat() {
  static const SymbolicCat cat = build_symbolic_cat();
  return cat;
}

}  // namespace

std::vector<Poly<Rat>> cat_b_equations(const SymbolicCat& cat, IdentityRows rows) {
  check_rows(rows);
  const std::size_t nv = 27;
  const auto fr = free_rows(rows);
  std::vector<std::size_t> params(6);
  std::iota(params.begin(), params.end(), 0);
  std::vector<Poly<Rat>> eqs;
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t j = 0; j < 3; ++j) {
      Poly<Rat> e(nv);
      for (std::size_t k = 0; k < 10; ++k) {
        const Poly<Rat> entry = extend_vars(cat.entries[r][k], params, nv);
        if (entry.is_zero()) continue;
        if (auto it = std::find(rows.begin(), rows.end(), k); it != rows.end()) {
          if (static_cast<std::size_t>(it - rows.begin()) == j) e += entry;
          continue;
        }
        const std::size_t slot = static_cast<std::size_t>(std::find(fr.begin(), fr.end(), k) - fr.begin());
        e += entry * Poly<Rat>::variable(nv, 6 + 3 * slot + j);
      }
      eqs.push_back(std::move(e));
    }
  return eqs;
}

PolySystem build_rank_system(std::uint64_t seed, IdentityRows rows) {
  std::vector<Poly<ComplexF>> raw;
  for (const auto& e : cat_b_equations(cached_cat(), rows)) raw.push_back(to_complex_rat(e));
  std::mt19937_64 rng(seed);
  PolySystem sys;
  sys.seed = seed;
  sys.variables = rank_system_variables();
  sys.equations = random_combinations(raw, 25, rng);
  sys.hom_groups = {{0, 1, 2}, {3, 4, 5}};
  for (std::size_t i = 6; i < 27; ++i) sys.affine.push_back(i);
  sys.checks = std::move(raw);
  sys.param_names = {"a", "b", "c", "d", "e", "f"};
  return sys;
}

PolySystem build_reduced_system(std::uint64_t seed, const std::array<ComplexF, 3>& abc, IdentityRows rows) {
  const std::size_t nv = 24;
  std::vector<Poly<ComplexF>> raw;
  for (const auto& e : cat_b_equations(cached_cat(), rows)) {
    Poly<ComplexF> p(nv);
    for (const auto& [ex, c] : e.terms()) {
      ComplexF v(c.get_d(), 0.0);
      for (std::size_t k = 0; k < 3; ++k)
        for (int q = 0; q < ex[k]; ++q) v *= abc[k];
      p.add_term(Exponent(ex.begin() + 3, ex.end()), v);
    }
    raw.push_back(std::move(p));
  }
  std::mt19937_64 rng(seed);
  PolySystem sys;
  sys.seed = seed;
  sys.variables = {"d", "e", "f"};
  const auto& b = b_variable_names();
  sys.variables.insert(sys.variables.end(), b.begin(), b.end());
  sys.equations = random_combinations(raw, 20, rng);
  for (int s = 0; s < 3; ++s) {
    Poly<ComplexF> slice = Poly<ComplexF>::constant(nv, random_unit(rng));
    for (std::size_t i = 3; i < nv; ++i) {
      Exponent e(nv, 0);
      e[i] = 1;
      slice.add_term(e, random_unit(rng));
    }
    sys.equations.push_back(std::move(slice));
  }
  sys.hom_groups = {{0, 1, 2}};
  for (std::size_t i = 3; i < nv; ++i) sys.affine.push_back(i);
  sys.checks = std::move(raw);
  sys.param_names = {"a", "b", "c", "d", "e", "f"};
  sys.constants = {{"a", abc[0]}, {"b", abc[1]}, {"c", abc[2]}};
  return sys;
}

std::optional<FeasiblePoint> feasible_point(const FactorParams& params) {
  const auto cat = catalecticant(sextic_from_params(params), 3);
  const auto ker = kernel(cat.entries);
  if (ker.size() < 3) return std::nullopt;
  FeasiblePoint fp;
  fp.kernel_dim = ker.size();
  for (std::size_t k = 0; k < 3; ++k) {
    fp.params[k] = params.abc[k];
    fp.params[3 + k] = params.def[k];
  }
  for (std::size_t r0 = 0; r0 < 10; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 10; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < 10; ++r2) {
        const IdentityRows rows{r0, r1, r2};
        Matrix<CycElem> p(3, ker.size());
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t l = 0; l < ker.size(); ++l) p(i, l) = ker[l][rows[i]];
        if (rank(p) < 3) continue;
        fp.rows = rows;
        fp.b = Matrix<CycElem>(10, 3);
        for (std::size_t j = 0; j < 3; ++j) {
          std::vector<CycElem> rhs(3);
          rhs[j] = CycElem(1L);
          const auto w = solve(p, rhs);
          for (std::size_t l = 0; l < ker.size(); ++l)
            for (std::size_t k = 0; k < 10; ++k) fp.b(k, j) += (*w)[l] * ker[l][k];
        }
        for (const auto& v : fp.params) fp.point.push_back(embed(v));
        for (auto k : free_rows(rows))
          for (std::size_t j = 0; j < 3; ++j) fp.point.push_back(embed(fp.b(k, j)));
        return fp;
      }
  return std::nullopt;
}

double param_distance(const std::vector<ComplexF>& p, const std::vector<ComplexF>& q) {
  if (p.size() != 6 || q.size() != 6) throw DimensionError("parameter vectors have length 6");
  auto part = [](const std::vector<ComplexF>& v, std::size_t off, const std::array<std::size_t, 3>& perm) {
    return std::vector<ComplexF>{v[off + perm[0]], v[off + perm[1]], v[off + perm[2]]};
  };
  const std::vector<ComplexF> pa = part(p, 0, {0, 1, 2}), pd = part(p, 3, {0, 1, 2});
  std::array<std::size_t, 3> perm{0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  do {
    for (int swap = 0; swap < 2; ++swap) {
      const auto qa = part(q, swap ? 3 : 0, perm), qd = part(q, swap ? 0 : 3, perm);
      try {
        best = std::min(best, std::max(projective_distance(pa, qa), projective_distance(pd, qd)));
      } catch (const DomainError&) {
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<ParamClass> postprocess(const std::vector<std::vector<ComplexF>>& params, double tol) {
  std::vector<ParamClass> classes;
  for (std::size_t i = 0; i < params.size(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (param_distance(c.representative, params[i]) < tol) {
        c.members.push_back(i);
        placed = true;
        break;
      }
    if (placed) continue;
    ParamClass c;
    // Each factor scaled to unit norm with its largest entry real positive.
    for (std::size_t off : {0u, 3u}) {
      std::size_t big = off;
      double norm = 0.0;
      for (std::size_t k = off; k < off + 3; ++k) {
        norm += std::norm(params[i][k]);
        if (std::abs(params[i][k]) > std::abs(params[i][big])) big = k;
      }
      const ComplexF scale = std::abs(params[i][big]) > 0.0
                                 ? std::conj(params[i][big]) / (std::abs(params[i][big]) * std::sqrt(norm))
                                 : ComplexF(1.0, 0.0);
      for (std::size_t k = off; k < off + 3; ++k) c.representative.push_back(params[i][k] * scale);
    }
    c.members.push_back(i);
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<double> cat_singular_values(const std::vector<ComplexF>& params) {
  if (params.size() != 6) throw DimensionError("parameter vectors have length 6");
  std::array<ComplexF, 6> p;
  std::copy(params.begin(), params.end(), p.begin());
  return singular_values(specialize(cached_cat(), p));
}

}  // namespace apolar
