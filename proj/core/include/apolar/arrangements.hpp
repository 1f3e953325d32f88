#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

struct Hyperplane {
  Poly<CycElem> form;  // linear form in S
  int mult = 1;
};

/// Hyperplanes in P^n with multiplicities; forms pairwise non-proportional.
struct MultiArrangement {
  std::size_t n = 0;
  std::vector<Hyperplane> hyperplanes;

  std::size_t num_distinct() const { return hyperplanes.size(); }
  int total_multiplicity() const;
  bool is_simple() const;
  /// Throws DomainError when a form is not linear, a multiplicity is < 1,
  /// or two forms are proportional.
  void validate() const;
};

/// Builds an arrangement from forms (multiplicity 1 each) and validates it.
MultiArrangement make_arrangement(const std::vector<Poly<CycElem>>& forms);

Poly<CycElem> defining_poly(const MultiArrangement& arr);

/// Scales a nonzero vector so its first nonzero entry is 1.
std::vector<CycElem> normalize_first_nonzero(std::vector<CycElem> v);
Poly<CycElem> normalize_linear(const Poly<CycElem>& l);

struct Factorization {
  std::optional<MultiArrangement> arrangement;  // set iff f splits
  CycElem scalar;                               // f = scalar * defining_poly
  std::string reason;                           // why splitting failed
};

/// Splits a form into linear factors over Q(zeta12). Factors come out with
/// first nonzero coefficient 1; forms that do not split are reported, never
/// misfactored (every factor is confirmed by exact division).
Factorization factor_product_of_linear(const Poly<CycElem>& f);

/// Every k-subset of normals, k <= n+1, has rank min(k, n+1). Non-simple
/// input is not generic.
bool is_generic(const MultiArrangement& arr);

/// False iff the distinct normals split into two nonempty parts whose spans
/// intersect trivially (rank(S) + rank(S^c) = rank(all)).
bool is_irreducible(const MultiArrangement& arr);

struct Normalization {
  Matrix<CycElem> m;                   // substitute_linear(Q(A,m), m) = scalar * normalized
  Poly<CycElem> normalized;            // x y z (x+y+z) l1 l2
  std::vector<Poly<CycElem>> extra;    // l1, l2, first nonzero coefficient 1
  std::vector<std::size_t> chosen;     // indices of the four reference hyperplanes
  CycElem scalar;
};

/// Coordinates in which four factors, no three dependent, become x, y, z and
/// x+y+z. The lexicographically first admissible 4-subset is used.
Normalization normalize_six(const MultiArrangement& arr);

/// All products of t-c+1 distinct forms out of t.
std::vector<Poly<CycElem>> star_config_generators(const std::vector<Poly<CycElem>>& forms,
                                                  std::size_t codim);

struct BoundReport {
  bool applicable = false;
  std::string reason;
  long alpha_lower = 0;
  long ci_min_size = 0;
  long waring_lower = 0;
};

BoundReport bounds(const MultiArrangement& arr);

long binomial(long n, long k);

/// Integer draw in [lo, hi] from a 64-bit engine, identical across platforms.
long uniform_int(std::mt19937_64& rng, long lo, long hi);

/// Random simple generic arrangement of `count` hyperplanes in P^n with
/// integer coefficients in [-range, range], rejection-tested by is_generic.
MultiArrangement random_generic_arrangement(std::size_t n, std::size_t count, std::mt19937_64& rng,
                                            long range = 5);

/// {"n": 2, "hyperplanes": [{"form": "x+y+z", "mult": 1}, ...]}
std::string arrangement_to_json(const MultiArrangement& arr);
MultiArrangement arrangement_from_json(const std::string& text);

/// JSON text (leading '{') or a product expression to be factored.
MultiArrangement parse_arrangement(const std::string& text);

}  // namespace apolar
