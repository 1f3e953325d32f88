#include <doctest.h>

#include <map>
#include <random>

#include "apolar/catalog.hpp"
#include "apolar/poly.hpp"
#include "apolar/poly_io.hpp"
#include "oracle.hpp"

using namespace apolar;

namespace {

Poly<Rat> P(const char* s) { return parse_rational_poly(s); }

// Dense schoolbook product on exponent triples, independent of Poly::operator*.
using Dense = std::map<std::array<int, 3>, long>;
Dense dense_linear(long a, long b, long c) {
  Dense d;
  if (a) d[{1, 0, 0}] = a;
  if (b) d[{0, 1, 0}] = b;
  if (c) d[{0, 0, 1}] = c;
  return d;
}
Dense dense_mul(const Dense& p, const Dense& q) {
  Dense r;
  for (const auto& [e, c] : p)
    for (const auto& [f, d] : q) r[{e[0] + f[0], e[1] + f[1], e[2] + f[2]}] += c * d;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Poly<Rat> random_rat_form(std::mt19937_64& rng, int d, std::size_t terms = 5) {
  return oracle::random_form<Rat>(3, d, rng, [](auto& g) { return oracle::small_rat(g); }, terms);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
  CHECK(pow(P("x+y+z"), 0) == P("1"));
  CHECK(pow(P("x+y"), 3) == P("x^3+3*x^2*y+3*x*y^2+y^3"));
  CHECK(P("x-x").is_zero());
  CHECK(P("x*y*z").degree() == 3);
  CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("sextic x y z (x+y+z)(x+y)(y+z) matches a dense expansion") {
  const auto f = P("x*y*z*(x+y+z)*(x+y)*(y+z)");
  Dense d = dense_linear(1, 0, 0);
  for (auto l : {std::array<long, 3>{0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}, {0, 1, 1}})
    d = dense_mul(d, dense_linear(l[0], l[1], l[2]));
  CHECK(f.size() == 8);
  REQUIRE(d.size() == f.size());
  for (const auto& [e, c] : d) CHECK(f.coeff({e[0], e[1], e[2]}) == Rat(c));
}

TEST_CASE("ring tags and variable counts are enforced") {
  auto x = Poly<Rat>::variable(3, 0);
  auto X = Poly<Rat>::variable(3, 0, Ring::dual);
  CHECK_THROWS_AS(x + X, DimensionError);
  CHECK_THROWS_AS(x + Poly<Rat>::variable(4, 0), DimensionError);
  CHECK_THROWS_AS(apolar_act(x, x), DimensionError);
}

TEST_CASE("partial derivatives and Euler identity") {
  const auto f = P("x^3*y+2*y*z^2");
  CHECK(partial(f, 0) == P("3*x^2*y"));
  CHECK(partial(f, 2) == P("4*y*z"));
  std::mt19937_64 rng(3);
  for (int s = 0; s < 100; ++s) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const auto g = random_rat_form(rng, d);
    Poly<Rat> euler(3);
    for (std::size_t i = 0; i < 3; ++i) euler += Poly<Rat>::variable(3, i) * partial(g, i);
    CHECK(euler == g * Rat(d));
  }
}

TEST_CASE("apolar action examples") {
  const auto xyz = P("x*y*z");
  CHECK(apolar_act(P("X").with_ring(Ring::dual), xyz) == P("y*z"));
  CHECK(apolar_act(parse_rational_poly("X^2"), xyz).is_zero());
  CHECK(apolar_act(parse_rational_poly("X*Y*Z"), xyz) == P("1"));
  CHECK(apolar_act(parse_rational_poly("X^2"), P("x^3")) == P("6*x"));
  const auto f1 = named_form(1);
  CHECK(apolar_act(parse_poly("X^3-Y^3"), f1).is_zero());
}

TEST_CASE("apolar action against the monomial formula and composition") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 100; ++s) {
    const auto f = random_rat_form(rng, 4, 6);
    const auto phi = oracle::random_form<Rat>(3, 1 + static_cast<int>(rng() % 2), rng,
                                              [](auto& g) { return oracle::small_rat(g); }, 3, Ring::dual);
    const auto psi = oracle::random_form<Rat>(3, 1, rng, [](auto& g) { return oracle::small_rat(g); }, 2, Ring::dual);
    CHECK(apolar_act(phi * psi, f) == apolar_act(phi, apolar_act(psi, f)));
    // Monomial by monomial: X^a o x^b = b!/(b-a)! x^(b-a), via repeated partials.
    Poly<Rat> expect(3);
    for (const auto& [a, ca] : phi.terms()) {
      Poly<Rat> g = f;
      for (std::size_t v = 0; v < 3; ++v)
        for (int k = 0; k < a[v]; ++k) g = partial(g, v);
      expect += g * ca;
    }
    CHECK(apolar_act(phi, f) == expect);
  }
}

TEST_CASE("gradient_dot") {
  CHECK(gradient_dot(P("x*y"), P("x")) == P("y"));
  CHECK(gradient_dot(P("x^2+y^2"), P("x+y")) == P("2*x+2*y"));
  CHECK_THROWS_AS(gradient_dot(P("x*y"), P("x^2")), DegreeError);
  CHECK_THROWS_AS(gradient_dot(P("3"), P("x")), DegreeError);
}

TEST_CASE("product rule: grad(F) . l = F(l-derivative) on random triples") {
  std::mt19937_64 rng(41);
  for (int s = 0; s < 200; ++s) {
    const auto F = random_rat_form(rng, 1 + static_cast<int>(rng() % 4));
    const auto G = random_rat_form(rng, 1 + static_cast<int>(rng() % 3));
    if (F.is_zero() || G.is_zero()) continue;
    Poly<Rat> l(3);
    while (l.is_zero()) l = random_rat_form(rng, 1, 3);
    CHECK(gradient_dot(F * G, l) == gradient_dot(F, l) * G + F * gradient_dot(G, l));
  }
}

TEST_CASE("linear substitution") {
  const auto f = P("x^2*y+z^3");
  CHECK(substitute_linear(f, Matrix<Rat>::identity(3)) == f);
  // f(M^T x) with M the permutation swapping x and y.
  const auto swap = Matrix<Rat>::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(substitute_linear(f, swap) == P("y^2*x+z^3"));
  CHECK_THROWS_AS(substitute_linear(f, Matrix<Rat>::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})), DomainError);

  std::mt19937_64 rng(8);
  for (int s = 0; s < 30; ++s) {
    Matrix<Rat> a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = oracle::small_rat(rng);
        b(i, j) = oracle::small_rat(rng);
      }
    if (rank(a) < 3 || rank(b) < 3) continue;
    const auto g = random_rat_form(rng, 3);
    // (f o A^T) o B^T = f o (B A)^T
    CHECK(substitute_linear(substitute_linear(g, a), b) == substitute_linear(g, b * a));
  }
}

TEST_CASE("A3 braid arrangement is projectively equivalent to the f5 shape") {
  // x = u+v+w, y = v+w, z = w turns x,y,z,x-y,x-z,y-z into
  // u+v+w, v+w, w, u, u+v, v.
  const auto a3 = P("x*y*z*(x-y)*(x-z)*(y-z)");
  const auto target = P("x*y*z*(x+y+z)*(x+y)*(y+z)");
  const auto m = Matrix<Rat>::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  CHECK(substitute_linear(a3, m) == target);
}

TEST_CASE("exact division") {
  const auto f = P("x^3-y^3");
  const auto q = divide_exact(f, P("x-y"));
  REQUIRE(q);
  CHECK(*q == P("x^2+x*y+y^2"));
  CHECK_FALSE(divide_exact(f, P("x+y")));
}

TEST_CASE("printer and parser round trip") {
  CHECK(to_string(P("x^2-x*y")) == "x^2-x*y");
  CHECK(to_string(parse_rational_poly("X^2-X*Y+Y^2-Y*Z+Z^2")) == "X^2-X*Y+Y^2-Y*Z+Z^2");
  CHECK(to_string(P("1/2*x-3*z^2")) == "-3*z^2+1/2*x");
  CHECK(parse_rational_poly("x0*x3").nvars() == 4);
  CHECK(parse_rational_poly("x", {.nvars = 5}).nvars() == 5);

  std::mt19937_64 rng(123);
  for (int s = 0; s < 200; ++s) {
    const auto f = random_rat_form(rng, static_cast<int>(rng() % 6), 6);
    CHECK(parse_rational_poly(to_string(f)) == f);
    const auto g = oracle::random_form<CycElem>(3, static_cast<int>(rng() % 5), rng,
                                                [](auto& r) { return oracle::small_cyc(r); }, 5);
    CHECK(parse_poly(to_string(g)) == g);
    const auto h = oracle::random_form<CycElem>(4, 3, rng, [](auto& r) { return oracle::small_cyc(r); }, 4,
                                                Ring::dual);
    CHECK(parse_poly(to_string(h), {.nvars = 4}) == h);
  }
}

TEST_CASE("complex printer and parser round trip") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> names{"a", "b", "V"};
  for (int s = 0; s < 50; ++s) {
    Poly<ComplexF> p(3);
    for (int k = 0; k < 5; ++k) {
      Exponent e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      p.add_term(e, ComplexF(std::ldexp(static_cast<double>(rng() >> 11), -53) - 0.5, 1e-7 * (rng() % 1000)));
    }
    CHECK(parse_complex_poly(to_string(p, names), names) == p);
  }
  CHECK(parse_complex_poly("1.5e-3*a^2 - I*b", names) ==
        Poly<ComplexF>::monomial({2, 0, 0}, 1.5e-3) - Poly<ComplexF>::monomial({0, 1, 0}, ComplexF(0, 1)));
}

TEST_CASE("constants of the exact grammar") {
  CHECK(parse_constant("(z12^2+1)/3") == CycElem::eta());
  CHECK(parse_constant("alpha") == CycElem::alpha());
  CHECK(parse_constant("a") == CycElem::alpha());
  CHECK(parse_constant("conj(eta)") == CycElem::eta().conj());
  CHECK(parse_constant("i^2") == CycElem(-1L));
  CHECK(parse_constant("beta") == CycElem(1L) + CycElem::imag_unit());
  CHECK(parse_constant("omega^2") == CycElem::alpha());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_poly("x*y+\n  (z^2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 3);
  }
  try {
    parse_poly("x + $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_poly("x*x0"), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y"), ParseError);
  CHECK_THROWS_AS(parse_poly("x/0"), ParseError);
  CHECK_THROWS_AS(parse_rational_poly("i*x"), DomainError);
}
