#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "apolar/poly.hpp"

namespace apolar {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Square (after patching) polynomial system over complex floats.
struct PolySystem {
  std::vector<Poly<ComplexF>> equations;
  std::vector<std::string> variables;
  std::vector<std::vector<std::size_t>> hom_groups;  // projective groups, by variable index
  std::vector<std::size_t> affine;                   // remaining variables
  std::uint64_t seed = 0;                            // seed used to square the system

  /// Equations an endpoint must also satisfy, e.g. the pre-squaring list.
  std::vector<Poly<ComplexF>> checks;
  /// Values reported per solution: a variable's value, or a fixed constant.
  std::vector<std::string> param_names;
  std::map<std::string, ComplexF> constants;

  std::size_t nvars() const { return variables.size(); }
  /// Throws DimensionError unless #equations + #hom_groups == #variables.
  void check_square() const;
  std::vector<ComplexF> params_of(const std::vector<ComplexF>& x) const;
};

/// Polynomial compiled for fast value/Jacobian evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const Poly<ComplexF>& p);
  ComplexF value(const CVec& x) const;
  /// Value, and gradient accumulated into row `row` of `jac`.
  ComplexF value_grad(const CVec& x, CMat& jac, Eigen::Index row) const;
  int degree() const { return degree_; }
  /// Degree in the variables of each group (groups given as variable lists).
  std::vector<int> group_degrees(const std::vector<std::vector<std::size_t>>& groups) const;

 private:
  struct Term {
    ComplexF c;
    std::vector<std::pair<std::size_t, int>> factors;
  };
  std::vector<Term> terms_;
  int degree_ = 0;
};

struct CompiledSystem {
  std::vector<CompiledPoly> eqs;
  std::size_t nvars = 0;
  explicit CompiledSystem(const std::vector<Poly<ComplexF>>& polys, std::size_t nvars);
  CVec value(const CVec& x) const;
  void eval(const CVec& x, CVec& f, CMat& jac) const;
};

enum class StartKind { total_degree, linear_product };

struct TrackerConfig {
  double initial_step = 0.1;
  double max_step = 0.1;
  double min_step = 1e-14;
  int max_corrector_iters = 3;   // a step needing more Newton iterations is rejected
  int grow_after = 5;            // consecutive successes before doubling the step
  double corrector_tol = 1e-8;   // relative Newton update
  double endgame_tol = 1e-11;    // used once t < endgame_t
  double endgame_t = 0.01;
  double divergence_norm = 1e10;
  double singular_cond = 1e12;
  double success_residual = 1e-8;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  StartKind start = StartKind::total_degree;
};

struct TrackedSolution {
  std::size_t path_index = 0;
  std::vector<ComplexF> x;
  double residual = 0.0;        // max |f_i| over the target (and check) equations
  double check_residual = 0.0;  // max over PolySystem::checks, 0 if none
  double final_step = 0.0;
  double condition = 0.0;       // Jacobian condition number at the endpoint
  bool converged = false;       // residual below threshold and checks satisfied
  bool singular = false;        // condition above the singular threshold
  std::string status;           // converged | singular | spurious | failed | diverged
  int newton_iterations = 0;
};

/// Uniform double in [0,1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);
/// Random complex number of modulus 1.
ComplexF random_unit(std::mt19937_64& rng);

/// Number of start paths track() would follow for this system and config.
std::size_t count_paths(const PolySystem& sys, StartKind start);

/// Follows H(z,t) = (1-t) F(z) + t gamma G(z) from t = 1 to t = 0 for every
/// start solution of G, with random affine patches on the projective groups.
/// Results are ordered by path index and do not depend on the thread count.
std::vector<TrackedSolution> track(const PolySystem& sys, const TrackerConfig& cfg);

struct RefineResult {
  std::vector<ComplexF> x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  bool diverged = false;
};

/// Gauss-Newton with minimum-norm steps (SVD), usable on non-square systems.
/// Stops at residual < tol, or flags divergence on blow-up or stagnation.
RefineResult refine(const std::vector<Poly<ComplexF>>& eqs, std::vector<ComplexF> x, double tol = 1e-12,
                    int max_iters = 50);

/// Refines against sys.checks (or sys.equations when there are no checks).
/// Each projective group is held on the tangent patch through its starting
/// value, so Newton cannot slide along the scaling or collapse a group to 0.
RefineResult refine(const PolySystem& sys, std::vector<ComplexF> x, double tol = 1e-12, int max_iters = 50);

/// min over phases of |u/|u| - phase v/|v||; zero iff u and v are proportional.
double projective_distance(const std::vector<ComplexF>& u, const std::vector<ComplexF>& v);

}  // namespace apolar
