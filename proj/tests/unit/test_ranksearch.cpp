#include <doctest.h>

#include <random>

#include "apolar/bertini.hpp"
#include "apolar/poly_io.hpp"
#include "apolar/ranksearch.hpp"
#include "oracle.hpp"

using namespace apolar;

namespace {

std::vector<ComplexF> embedded(const std::array<CycElem, 6>& p) {
  std::vector<ComplexF> out;
  for (const auto& v : p) out.push_back(embed(v));
  return out;
}

std::vector<ComplexF> params_of_form(int i) {
  const auto fp = form_params(i);
  std::array<CycElem, 6> p{fp.abc[0], fp.abc[1], fp.abc[2], fp.def[0], fp.def[1], fp.def[2]};
  return embedded(p);
}

double max_abs(const std::vector<Poly<ComplexF>>& eqs, const std::vector<ComplexF>& x) {
  double m = 0;
  for (const auto& e : eqs) m = std::max(m, std::abs(oracle::eval(e, x)));
  return m;
}

}  // namespace

TEST_CASE("symbolic catalecticant specializes to the exact one") {
  const auto cat = build_symbolic_cat();
  for (const auto& row : cat.entries)
    for (const auto& e : row) {
      CHECK(e.nvars() == 6);
      if (!e.is_zero()) CHECK(e.degree() == 2);
    }
  std::mt19937_64 rng(10);
  for (int s = 0; s < 60; ++s) {
    FactorParams fp;
    for (auto& v : fp.abc) v = CycElem(oracle::small_rat(rng));
    for (auto& v : fp.def) v = CycElem(oracle::small_rat(rng));
    const std::array<CycElem, 6> p{fp.abc[0], fp.abc[1], fp.abc[2], fp.def[0], fp.def[1], fp.def[2]};
    const auto f = sextic_from_params(fp);
    if (f.is_zero()) continue;
    const auto at = specialize(cat, p);
    const auto o = oracle::cat_entries(f, 3);
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 10; ++j) CHECK(at(i, j) == o[i][j]);
  }
}

TEST_CASE("catalecticant rank at the six forms and at random parameters") {
  const auto cat = build_symbolic_cat();
  for (int i = 1; i <= 6; ++i) {
    const auto fp = form_params(i);
    const std::array<CycElem, 6> p{fp.abc[0], fp.abc[1], fp.abc[2], fp.def[0], fp.def[1], fp.def[2]};
    CHECK(kernel(specialize(cat, p)).size() == 4);
    const auto sv = cat_singular_values(params_of_form(i));
    CHECK(sv[7] / sv[0] < 1e-6);
  }
  std::mt19937_64 rng(3);
  std::vector<ComplexF> r(6);
  for (auto& v : r) v = random_unit(rng);
  const auto sv = cat_singular_values(r);
  CHECK(sv[9] / sv[0] > 1e-6);
}

TEST_CASE("rank system structure") {
  const auto eqs = cat_b_equations(build_symbolic_cat());
  CHECK(eqs.size() == 30);
  for (const auto& e : eqs) {
    CHECK(e.nvars() == 27);
    CHECK(e.degree() <= 3);
  }
  const auto sys = build_rank_system(7);
  CHECK(sys.equations.size() == 25);
  CHECK(sys.checks.size() == 30);
  CHECK(sys.hom_groups == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(sys.affine.size() == 21);
  CHECK(sys.variables.size() == 27);
  CHECK(std::find(sys.variables.begin(), sys.variables.end(), "I") == sys.variables.end());
  CHECK_NOTHROW(sys.check_square());
  for (const auto& e : sys.equations) CHECK(e.degree() == 3);
  CHECK_THROWS_AS(cat_b_equations(build_symbolic_cat(), {2, 1, 5}), RangeError);
}

TEST_CASE("feasible points satisfy every raw equation") {
  for (int i = 1; i <= 6; ++i) {
    const auto fp = feasible_point(form_params(i));
    REQUIRE(fp);
    CHECK(fp->kernel_dim == 4);
    // Columns of B lie in the exact kernel.
    const auto cat = catalecticant(sextic_from_params(form_params(i)), 3).entries;
    const auto prod = cat * fp->b;
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(prod(r, c).is_zero());
    const auto sys = build_rank_system(1, fp->rows);
    CHECK(max_abs(sys.checks, fp->point) < 1e-10);
    CHECK(max_abs(sys.equations, fp->point) < 1e-10);
  }
}

TEST_CASE("Newton refine from perturbed feasible points") {
  std::mt19937_64 rng(2);
  for (int i = 1; i <= 6; ++i) {
    const auto fp = feasible_point(form_params(i));
    REQUIRE(fp);
    const auto sys = build_rank_system(1, fp->rows);
    auto x = fp->point;
    for (auto& v : x) v += 1e-3 * random_unit(rng);
    const auto r = refine(sys, x);
    CHECK(r.converged);
    CHECK(r.residual < 1e-12);
    const std::vector<ComplexF> back(r.x.begin(), r.x.begin() + 6);
    const auto sv = cat_singular_values(back);
    CHECK(sv[7] / sv[0] < 1e-6);
    // f3 comes back to itself; f6 can land on a different nearby rank-deficient point.
    if (i == 3) CHECK(param_distance(back, std::vector<ComplexF>(fp->point.begin(), fp->point.begin() + 6)) < 1e-9);
  }
}

TEST_CASE("parameter classes modulo symmetries") {
  const auto p1 = params_of_form(1);
  CHECK(param_distance(p1, p1) < 1e-12);
  // Swap the two factors and permute x, y, z; rescale projectively.
  std::vector<ComplexF> q{p1[4], p1[5], p1[3], p1[1], p1[2], p1[0]};
  for (std::size_t k = 0; k < 3; ++k) q[k] *= ComplexF(0, 2);
  for (std::size_t k = 3; k < 6; ++k) q[k] *= ComplexF(-3, 1);
  CHECK(param_distance(p1, q) < 1e-12);
  CHECK(param_distance(p1, params_of_form(2)) > 1e-3);
  const auto classes = postprocess({p1, q, params_of_form(2)});
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].members == std::vector<std::size_t>{0, 1});
  double n = 0;
  for (std::size_t k = 0; k < 3; ++k) n += std::norm(classes[0].representative[k]);
  CHECK(std::abs(n - 1.0) < 1e-12);
}

TEST_CASE("reduced system shape") {
  const auto p1 = params_of_form(1);
  const auto sys = build_reduced_system(0, {p1[0], p1[1], p1[2]});
  CHECK(sys.variables.size() == 24);
  CHECK(sys.equations.size() == 23);
  CHECK_NOTHROW(sys.check_square());
  CHECK(count_paths(sys, StartKind::linear_product) == 190);
  // The f1 point is a solution of the raw equations.
  const auto fp = feasible_point(form_params(1));
  std::vector<ComplexF> x(fp->point.begin() + 3, fp->point.end());
  CHECK(max_abs(sys.checks, x) < 1e-10);
}

TEST_CASE("Bertini emission and parsing") {
  const auto sys = build_rank_system(7);
  const auto text = emit_bertini(sys);
  CHECK(text == emit_bertini(build_rank_system(7)));
  CHECK(text != emit_bertini(build_rank_system(8)));
  CHECK(text.find("hom_variable_group a,b,c;") != std::string::npos);
  CHECK(text.find("hom_variable_group d,e,f;") != std::string::npos);
  CHECK(text.find("variable_group A,B,C,D,E,F,G,H,V,J,K,L,M,N,O,P,Q,R,S,T,U;") != std::string::npos);
  const auto back = parse_bertini(text);
  CHECK(back.seed == 7);
  CHECK(back.variables == sys.variables);
  CHECK(back.hom_groups == sys.hom_groups);
  CHECK(back.affine == sys.affine);
  REQUIRE(back.equations.size() == 25);
  for (std::size_t k = 0; k < 25; ++k) CHECK(back.equations[k] == sys.equations[k]);
  CHECK(back.checks.size() == 30);
  CHECK(emit_bertini(back) == text);

  const auto json = system_to_json(sys);
  CHECK(system_to_json(system_from_json(json)) == json);
  CHECK(system_to_json(parse_system(text)) == json);
  CHECK_THROWS_AS(parse_bertini("CONFIG\nEND;\n"), ParseError);
}

TEST_CASE("reduced system with constants survives the round trip") {
  const auto p1 = params_of_form(1);
  const auto sys = build_reduced_system(3, {p1[0], p1[1], p1[2]});
  const auto back = parse_bertini(emit_bertini(sys));
  CHECK(back.constants.size() == 3);
  CHECK(std::abs(back.constants.at("b") - p1[1]) < 1e-15);
  CHECK(back.param_names == sys.param_names);
  CHECK(emit_bertini(back) == emit_bertini(sys));
}
