#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geninv/enumerate.hpp"
#include "geninv/errors.hpp"
#include "geninv/literal.hpp"
#include "geninv/polynomial.hpp"
#include "support/oracle.hpp"

using namespace geninv;

namespace {

long long eval_scalar(const IntPolynomial& p, long long t) {
  long long acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * t + p.coefficient(i).get_si();
  return acc;
}

/// det(tI - A) by cofactor expansion.
long long char_at(const oracle::Mat& a, long long t) {
  oracle::Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? t : 0) - a[i][j];
  return oracle::det_laplace(m);
}

}  // namespace

TEST_CASE("construction trims and prints") {
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0, 2, 1}.to_string() == "t^3 + 2t^2");
  CHECK(IntPolynomial{-1, 0, 1}.to_string('a') == "a^2 - 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial::variable() == IntPolynomial{0, 1});
  CHECK(IntPolynomial::constant(5) == IntPolynomial{5});
}

TEST_CASE("ring operations on polynomials") {
  const IntPolynomial p{1, 1};   // t + 1
  const IntPolynomial q{-1, 1};  // t - 1
  CHECK(p * q == IntPolynomial{-1, 0, 1});
  CHECK(p + q == IntPolynomial{0, 2});
  CHECK(p - p == IntPolynomial{});
  CHECK(BigInt(3) * p == IntPolynomial{3, 3});
  // (t^2)(t+1) composed: p(q(t)) = t
  CHECK(p.compose(q) == IntPolynomial::variable());
  CHECK(IntPolynomial{0, 0, 1}.compose(p) == IntPolynomial{1, 2, 1});
  CHECK(IntPolynomial{-3, 5, 9}.reduced_mod(4) == IntPolynomial{1, 1, 1});
  CHECK(IntPolynomial{4, 8}.reduced_mod(4) == IntPolynomial{});
}

TEST_CASE("composition commutes with evaluation") {
  std::uint64_t state = 11;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 9) - 4;
  };
  const RingSpec r = RingSpec::matrix(RingSpec::modular(6), 2);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial p{next(), next(), next(), next()};
    IntPolynomial q{next(), next(), next()};
    const Element x = element_at(r, static_cast<std::uint64_t>(trial * 13) % enumerable_size(r));
    REQUIRE(p.compose(q).evaluate(x) == p.evaluate(q.evaluate(x)));
    REQUIRE((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    REQUIRE((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    REQUIRE(p.reduced_mod(6).evaluate(x) == p.evaluate(x));
  }
}

TEST_CASE("evaluation at scalars and matrices") {
  const IntPolynomial p{2, 0, 1};  // t^2 + 2
  CHECK(p.evaluate(Element::scalar(RingSpec::modular(7), 3)) == Element::scalar(RingSpec::modular(7), 4));
  const RingSpec m2 = RingSpec::matrix(RingSpec::integers(), 2);
  const Element a = parse_element(m2, "[[0,1],[0,0]]");
  CHECK(p.evaluate(a) == parse_element(m2, "[[2,0],[0,2]]"));
  CHECK(IntPolynomial{}.evaluate(a).is_zero());
}

TEST_CASE("characteristic polynomial of the integer tripotent example") {
  const RingSpec m3 = RingSpec::matrix(RingSpec::integers(), 3);
  const Element a = parse_element(m3, "[[-2,3,2],[-2,3,2],[1,-1,-1]]");
  const Element d = a - a * a;
  CHECK(char_poly(d) == IntPolynomial{0, 0, 2, 1});  // t^2 (t + 2)
  CHECK(char_poly(d).to_string() == "t^3 + 2t^2");
}

TEST_CASE("char_poly matches det(tI - A) at sample points") {
  std::uint64_t state = 3;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 15) - 7;
  };
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 1 + trial % 5;
    const RingSpec r = RingSpec::matrix(RingSpec::integers(), d);
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = next();
    const Element x(r, m);
    const IntPolynomial cp = char_poly(x);
    REQUIRE(cp.degree() == d);
    REQUIRE(cp.coefficient(d) == 1);
    const oracle::Mat a = oracle::from_element(x);
    for (long long t = -3; t <= d + 3; ++t) REQUIRE(eval_scalar(cp, t) == char_at(a, t));
    // Cayley-Hamilton.
    REQUIRE(cp.evaluate(x).is_zero());
  }
}

TEST_CASE("char_poly over Z/n is the reduction of the integer one") {
  const RingSpec r = RingSpec::matrix(RingSpec::modular(4), 2);
  const RingSpec lifted = RingSpec::matrix(RingSpec::integers(), 2);
  for (const Element& x : enumerate(r)) {
    const IntPolynomial cp = char_poly(x);
    REQUIRE(cp == char_poly(Element(lifted, x.to_integer_matrix())).reduced_mod(4));
    REQUIRE(cp.evaluate(x).is_zero());
  }
}

TEST_CASE("char_poly requires a matrix") {
  CHECK_THROWS_AS(char_poly(Element::scalar(RingSpec::modular(5), 2)), PreconditionError);
}
