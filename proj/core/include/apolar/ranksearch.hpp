#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/catalog.hpp"
#include "apolar/homotopy.hpp"

namespace apolar {

/// Cat_f(3) of f = x y z (x+y+z)(a x + b y + c z)(d x + e y + f z) as a 10x10
/// matrix of polynomials in (a,b,c,d,e,f), each of bidegree (1,1).
struct SymbolicCat {
  std::vector<Exponent> rows;  // cubic monomials of S
  std::vector<Exponent> cols;  // cubic monomials of R
  std::vector<std::vector<Poly<Rat>>> entries;
};

SymbolicCat build_symbolic_cat();

template <class K>
Matrix<K> specialize(const SymbolicCat& cat, const std::array<K, 6>& params) {
  Matrix<K> m(cat.rows.size(), cat.cols.size());
  for (std::size_t i = 0; i < cat.rows.size(); ++i)
    for (std::size_t j = 0; j < cat.cols.size(); ++j)
      for (const auto& [e, c] : cat.entries[i][j].terms()) {
        K v = field_traits<K>::one();
        if constexpr (std::is_same_v<K, ComplexF>)
          v = ComplexF(c.get_d(), 0.0);
        else
          v = K(c);
        for (std::size_t k = 0; k < 6; ++k)
          for (int p = 0; p < e[k]; ++p) v *= params[k];
        m(i, j) += v;
      }
  return m;
}

/// Names of the 21 auxiliary entries of B (I is skipped in favour of V).
const std::vector<std::string>& b_variable_names();

/// Rows of B holding the identity block; the remaining 7 rows are free.
using IdentityRows = std::array<std::size_t, 3>;
constexpr IdentityRows kDefaultIdentityRows{0, 1, 2};

/// Variables a,b,c,d,e,f followed by the B entries row by row.
std::vector<std::string> rank_system_variables();

/// The 30 entries of Cat_f(3) B in the 27 variables of rank_system_variables().
std::vector<Poly<Rat>> cat_b_equations(const SymbolicCat& cat, IdentityRows rows = kDefaultIdentityRows);

/// Seeded squaring: 25 random unit-modulus combinations of the 30 equations,
/// groups P^2 x P^2 x C^21.
PolySystem build_rank_system(std::uint64_t seed, IdentityRows rows = kDefaultIdentityRows);

/// The search with (a,b,c) fixed: unknowns d,e,f and B. The 30 equations are
/// squared to 20 and three random affine slices on B are added, leaving a
/// square system once d,e,f is patched. The raw 30 equations become checks.
PolySystem build_reduced_system(std::uint64_t seed, const std::array<ComplexF, 3>& abc,
                                IdentityRows rows = kDefaultIdentityRows);

struct FeasiblePoint {
  IdentityRows rows;                 // identity block actually used
  std::size_t kernel_dim = 0;        // dim Ann(f)_3
  Matrix<CycElem> b;                 // 10 x 3, identity on `rows`
  std::array<CycElem, 6> params;
  std::vector<ComplexF> point;       // values of rank_system_variables() for these rows
};

/// B built from the exact kernel of Cat_f(3): columns in the kernel with an
/// identity block on the first rows triple (lexicographic) where that is
/// possible. nullopt if the kernel has dimension < 3.
std::optional<FeasiblePoint> feasible_point(const FactorParams& params);

/// Classes of parameter pairs modulo projective scaling of each factor, the
/// swap of the two factors, and permutations of x, y, z.
struct ParamClass {
  std::vector<ComplexF> representative;  // a..f, each factor scaled to unit norm
  std::vector<std::size_t> members;      // input indices
};

/// Distance of two parameter pairs after the best symmetry.
double param_distance(const std::vector<ComplexF>& p, const std::vector<ComplexF>& q);

std::vector<ParamClass> postprocess(const std::vector<std::vector<ComplexF>>& params, double tol = 1e-6);

/// Singular values of Cat_f(3) at numeric parameters, largest first.
std::vector<double> cat_singular_values(const std::vector<ComplexF>& params);

}  // namespace apolar
