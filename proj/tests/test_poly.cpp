#include <doctest.h>

#include <random>

#include "absfact/errors.hpp"
#include "absfact/poly.hpp"

using namespace absfact;

namespace {

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

SparsePoly random_poly(std::mt19937_64& rng, int terms, std::int64_t max_exp) {
  std::uniform_int_distribution<std::int64_t> e(0, max_exp);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  SparsePoly f;
  for (int i = 0; i < terms; ++i) f.set(Vec2{e(rng), e(rng)}, Complex(c(rng), c(rng)));
  if (f.is_zero()) f.set(Vec2{0, 0}, 1.0);
  return f;
}

}  // namespace

TEST_CASE("parse simple polynomials") {
  auto f = parse("1 + 2*x + 3*y^2");
  CHECK(f.terms.size() == 3);
  CHECK(close(f.terms.at(Vec2{0, 0}), 1.0));
  CHECK(close(f.terms.at(Vec2{1, 0}), 2.0));
  CHECK(close(f.terms.at(Vec2{0, 2}), 3.0));
}

TEST_CASE("parse products, powers and complex literals") {
  auto f = parse("(1+x+y)*(1+x*y)");
  CHECK(f.terms.size() == 6);
  CHECK(close(f.terms.at(Vec2{2, 1}), 1.0));
  CHECK(close(f.terms.at(Vec2{1, 1}), 1.0));

  auto g = parse("(1+x)^3");
  CHECK(close(g.terms.at(Vec2{2, 0}), 3.0));

  auto h = parse("2i + (1.5 - 2i)*x^2*y");
  CHECK(close(h.terms.at(Vec2{0, 0}), Complex(0.0, 2.0)));
  CHECK(close(h.terms.at(Vec2{2, 1}), Complex(1.5, -2.0)));

  auto k = parse("x - x + 1 + y");  // cancellation is fine, zero is not
  CHECK(k.terms.size() == 2);
  CHECK_THROWS_AS(parse("x - x"), ZeroPolynomial);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x +"), ParseError);
  CHECK_THROWS_AS(parse("z + 1"), ParseError);
  CHECK_THROWS_AS(parse("x^(2)"), ParseError);
  CHECK_THROWS_AS(parse("(1+x"), ParseError);
  CHECK_THROWS_AS(parse("x^-1"), ParseError);
}

TEST_CASE("print/parse roundtrip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, 8, 6);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("newton polytope") {
  auto P = newton_polytope(parse("(1+x+y)*(1+x*y)"));
  CHECK(P.vertices ==
        std::vector<Vec2>{{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}});
}

TEST_CASE("normalize_support is the identity on admissible input") {
  auto f = parse("1 + x + y + x*y^2");
  auto [fn, change] = normalize_support(f);
  CHECK(fn == f);
  CHECK(change.is_identity());
}

TEST_CASE("normalize_support fixes a zero constant term") {
  auto f = parse("x + x^2 + x*y");  // x * (1 + x + y)
  auto [fn, change] = normalize_support(f);
  CHECK(fn.constant_term() != Complex(0.0));
  for (auto& [m, c] : fn.terms) {
    CHECK(m[0] >= 0);
    CHECK(m[1] >= 0);
  }
  CHECK(apply_change_inverse(fn, change) == f);
}

TEST_CASE("normalize_support rejects monomials") {
  CHECK_THROWS_AS(normalize_support(parse("3*x^2*y")), MonomialInput);
}

TEST_CASE("unimodular change roundtrip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(rng, 6, 5);
    UnimodularChange change;
    change.matrix = {{{2, 1}, {1, 1}}};
    change.shift = Vec2{1, 2};
    CHECK(apply_change_inverse(apply_change(f, change), change) == f);
  }
}

TEST_CASE("facet polynomial of the worked example") {
  auto f = parse("(1+x+y)*(1+x*y)");
  auto P = newton_polytope(f);
  for (auto& facet : exterior_facets(P)) {
    auto coeffs = facet_polynomial(f, facet);
    REQUIRE(coeffs.size() == 2);
    CHECK(close(coeffs[0], 1.0));
    CHECK(close(coeffs[1], 1.0));
  }
}

TEST_CASE("facet polynomial pads missing lattice points with zeros") {
  auto f = parse("1 + x^2 + y");  // bottom facet (0,0)-(2,0) misses (1,0)
  auto P = newton_polytope(f);
  for (auto& facet : all_facets(P)) {
    if (facet.eta == Vec2{0, 1}) {
      auto coeffs = facet_polynomial(f, facet);
      REQUIRE(coeffs.size() == 3);
      CHECK(close(coeffs[1], 0.0));
    }
  }
}

TEST_CASE("multiply matches evaluation") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_poly(rng, 5, 4);
    auto g = random_poly(rng, 5, 4);
    auto h = multiply(f, g);
    Complex t1(u(rng), u(rng)), t2(u(rng), u(rng));
    CHECK(close(evaluate(h, t1, t2), evaluate(f, t1, t2) * evaluate(g, t1, t2),
                1e-8));
  }
}
