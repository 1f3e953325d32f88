#include <doctest.h>

#include <random>

#include "apolar/catalog.hpp"
#include "apolar/homotopy.hpp"
#include "apolar/poly_io.hpp"
#include "apolar/waring.hpp"
#include "oracle.hpp"

using namespace apolar;

namespace {

Poly<CycElem> C(const std::string& s) { return parse_poly(s); }

Point pt(std::initializer_list<const char*> c) {
  Point p;
  for (auto s : c) p.push_back(parse_constant(s));
  return p;
}

}  // namespace

TEST_CASE("decomposition of x y") {
  // xy = ((x+y)^2 - (x-y)^2) / 4
  WaringCertificate cert;
  cert.form = parse_poly("x*y", {.nvars = 2});
  cert.degree = 2;
  cert.terms = {{pt({"1", "1"}), CycElem(Rat(1, 4))}, {pt({"1", "-1"}), CycElem(Rat(-1, 4))}};
  CHECK(verify_decomposition(cert));
  cert.terms[1].coeff = CycElem(Rat(1, 4));
  CHECK_FALSE(verify_decomposition(cert));
  cert.degree = 3;
  CHECK_THROWS_AS(verify_decomposition(cert), DegreeError);
}

TEST_CASE("listed decompositions") {
  for (int i = 1; i <= 4; ++i) CHECK(verify_decomposition(decomposition_table(i)));
  // The printed f5 row is off by the sign of its last weight.
  CHECK_FALSE(verify_decomposition(decomposition_table(5)));
  CHECK(verify_decomposition(decomposition_f5_corrected()));
}

TEST_CASE("expansion agrees with numeric evaluation") {
  std::mt19937_64 rng(6);
  for (int i = 1; i <= 4; ++i) {
    const auto cert = decomposition_table(i);
    for (int s = 0; s < 5; ++s) {
      std::vector<ComplexF> x{random_unit(rng), random_unit(rng), random_unit(rng)};
      ComplexF sum{};
      for (const auto& t : cert.terms) {
        ComplexF l{};
        for (std::size_t k = 0; k < 3; ++k) l += embed(t.point[k]) * x[k];
        sum += embed(t.coeff) * std::pow(l, 6);
      }
      CHECK(std::abs(sum - oracle::eval(to_complex(cert.form), x)) < 1e-10);
    }
  }
}

TEST_CASE("ideals of points") {
  const auto i1 = point_ideal_component({pt({"1", "0", "0"})}, 1);
  CHECK(i1.basis.size() == 2);
  for (const auto& l : i1.basis) CHECK(l.coeff({1, 0, 0}).is_zero());
  const auto four = point_ideal_component({pt({"1", "0", "0"}), pt({"0", "1", "0"}), pt({"0", "0", "1"}),
                                           pt({"1", "1", "1"})},
                                          2);
  CHECK(four.basis.size() == 2);
  CHECK_THROWS_AS(point_ideal_component({pt({"0", "0", "0"})}, 1), DomainError);
  CHECK_THROWS_AS(point_ideal_component({pt({"1", "2", "3"}), pt({"2", "4", "6"})}, 1), DomainError);
}

TEST_CASE("apolarity lemma certificates") {
  const auto x2 = apolarity_certificate(C("x^2"), {pt({"1", "0", "0"})});
  CHECK(x2.inclusion);
  REQUIRE(x2.coeffs);
  CHECK((*x2.coeffs)[0] == CycElem(1L));

  const auto f1 = apolarity_certificate(named_form(1), decomposition_table(1).points());
  CHECK(f1.inclusion);
  REQUIRE(f1.coeffs);
  for (std::size_t k = 0; k < 6; ++k) CHECK((*f1.coeffs)[k] == decomposition_table(1).terms[k].coeff);

  // Four points on the coordinate triangle plus [1:1:1] cannot decompose xyz.
  const auto bad = apolarity_certificate(C("x*y*z"), {pt({"1", "0", "0"}), pt({"0", "1", "0"}),
                                                      pt({"0", "0", "1"}), pt({"1", "1", "1"})});
  CHECK_FALSE(bad.inclusion);
  REQUIRE(bad.witness);
  CHECK_FALSE(apolar_act(*bad.witness, C("x*y*z")).is_zero());
}

TEST_CASE("verified decompositions satisfy the apolarity inclusion") {
  for (int i = 1; i <= 4; ++i) {
    const auto cert = decomposition_table(i);
    REQUIRE(verify_decomposition(cert));
    CHECK(apolarity_certificate(cert.form, cert.points()).inclusion);
  }
  CHECK(apolarity_certificate(named_form(5), decomposition_f5_corrected().points()).inclusion);
}

TEST_CASE("lower bounds on rank") {
  for (int i = 1; i <= 6; ++i) CHECK(rank_lower_bound(named_form(i)) == 6);
  CHECK(rank_lower_bound(C("x^5")) == 1);
  CHECK(rank_lower_bound(C("x*y*z")) == 3);
}

TEST_CASE("certificate JSON") {
  const auto cert = decomposition_table(2);
  const auto back = certificate_from_json(certificate_to_json(cert));
  CHECK(back.form == cert.form);
  REQUIRE(back.terms.size() == cert.terms.size());
  for (std::size_t k = 0; k < cert.terms.size(); ++k) {
    CHECK(back.terms[k].point == cert.terms[k].point);
    CHECK(back.terms[k].coeff == cert.terms[k].coeff);
  }
  const auto named = certificate_from_json(
      R"({"form": "f1", "degree": 6, "terms": [{"point": ["a","1","1"], "coeff": "(2*a+1)/270", "sign": -1}]})");
  CHECK(named.form == named_form(1));
  CHECK(named.terms[0].coeff == -(CycElem(2L) * CycElem::alpha() + CycElem(1L)) / CycElem(270L));
  CHECK_THROWS(certificate_from_json("{\"form\": \"x\"}"));
}
