#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geninv/enumerate.hpp"
#include "geninv/errors.hpp"
#include "geninv/literal.hpp"
#include "geninv/nilpotent.hpp"
#include "geninv/number_theory.hpp"
#include "support/oracle.hpp"

#include <numeric>
#include <unordered_set>

using namespace geninv;

namespace {

Element el(const RingSpec& r, std::string_view text) { return parse_element(r, text); }

std::vector<RingSpec> small_finite_rings() {
  std::vector<RingSpec> out;
  for (std::uint64_t n : {2, 3, 4, 6, 8, 9, 12}) out.push_back(RingSpec::modular(n));
  out.push_back(RingSpec::matrix(RingSpec::modular(2), 2));
  out.push_back(RingSpec::matrix(RingSpec::modular(3), 2));
  out.push_back(RingSpec::matrix(RingSpec::modular(4), 2));
  return out;
}

}  // namespace

TEST_CASE("ring construction and literals") {
  CHECK(RingSpec::integers().to_string() == "Z");
  CHECK(RingSpec::modular(9).to_string() == "Z/9");
  CHECK(RingSpec::matrix(RingSpec::modular(3), 2).to_string() == "M2(Z/3)");
  CHECK(RingSpec::matrix(RingSpec::integers(), 3).to_string() == "M3(Z)");
  CHECK(parse_ring("M2(Z/3)") == RingSpec::matrix(RingSpec::modular(3), 2));
  CHECK(parse_ring(" Z/12 ") == RingSpec::modular(12));
  CHECK(parse_ring("Z") == RingSpec::integers());

  CHECK_THROWS_AS(RingSpec::modular(1), PreconditionError);
  CHECK_THROWS_AS(RingSpec::modular(0), PreconditionError);
  CHECK_THROWS_AS(RingSpec::modular(kMaxModulus + 1), CapExceeded);
  CHECK_NOTHROW(RingSpec::modular(kMaxModulus));
  CHECK_THROWS(RingSpec::matrix(RingSpec::matrix(RingSpec::modular(2), 2), 2));

  CHECK(RingSpec::matrix(RingSpec::modular(3), 2).size() == 81);
  CHECK(RingSpec::modular(12).size() == 12);
  CHECK_THROWS_AS(RingSpec::integers().size(), UnsupportedRing);
}

TEST_CASE("literal parse errors carry positions") {
  for (const char* bad : {"Z/", "M(Z/3)", "Q", "Z/3x", "M2(Z/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_ring(bad), ParseError);
  }
  const RingSpec m2 = RingSpec::matrix(RingSpec::modular(3), 2);
  try {
    parse_element(m2, "[[1,2],[3]]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  CHECK_THROWS_AS(parse_element(m2, "[[1,2],[3,4],[5,6]]"), ParseError);
  CHECK_THROWS_AS(parse_element(m2, "5"), ParseError);
  CHECK_THROWS_AS(parse_element(RingSpec::modular(5), "[[1]]"), ParseError);
}

TEST_CASE("element literals reduce and round-trip") {
  const RingSpec z9 = RingSpec::modular(9);
  CHECK(format_element(el(z9, "-2")) == "7");
  CHECK(format_element(el(z9, "\xE2\x88\x92" "2")) == "7");
  CHECK(format_element(el(z9, "20")) == "2");
  const RingSpec m2z = RingSpec::matrix(RingSpec::integers(), 2);
  CHECK(format_element(el(m2z, "[[-1, 1], [1, 0]]")) == "[[-1,1],[1,0]]");

  for (const RingSpec& r : small_finite_rings()) {
    for (const Element& x : enumerate(r)) {
      const Element back = parse_element(r, format_element(x));
      REQUIRE(back == x);
    }
  }
}

TEST_CASE("arithmetic matches the reference implementation") {
  for (const RingSpec& r : small_finite_rings()) {
    if (enumerable_size(r) > 100) continue;
    const long long n = static_cast<long long>(*r.modulus());
    for (const Element& x : enumerate(r))
      for (const Element& y : enumerate(r)) {
        const auto prod = oracle::mul(oracle::from_element(x), oracle::from_element(y), n);
        REQUIRE(oracle::from_element(x * y) == prod);
        const Element s = x + y;
        for (int i = 0; i < r.dim(); ++i)
          for (int j = 0; j < r.dim(); ++j)
            REQUIRE(s.entry(i, j).get_si() == oracle::mod(x.entry(i, j).get_si() + y.entry(i, j).get_si(), n));
        REQUIRE((x - y) + y == x);
        REQUIRE(x + (-x) == zero(r));
      }
  }
}

TEST_CASE("large moduli do not overflow") {
  const std::uint64_t n = kMaxModulus - 5;  // 4294967291 is prime
  const RingSpec r = RingSpec::modular(n);
  const Element x = Element::scalar(r, to_bigint(n - 1));
  CHECK((x * x).is_one());
  CHECK((x + x) == Element::scalar(r, to_bigint(n - 2)));
  // Fermat: x^(n-1) = 1 for x != 0.
  CHECK(pow(Element::scalar(r, 12345), n - 1).is_one());
}

TEST_CASE("integers use arbitrary precision") {
  const RingSpec z = RingSpec::integers();
  const Element two = Element::scalar(z, 2);
  const Element big = pow(two, 200);
  BigInt expected = 1;
  for (int i = 0; i < 200; ++i) expected *= 2;
  CHECK(big.entry(0, 0) == expected);
  CHECK(divide_exact(big, expected).is_one());
  CHECK_THROWS(divide_exact(Element::scalar(z, 3), 2));
}

TEST_CASE("mixing rings is rejected") {
  const Element a = Element::scalar(RingSpec::modular(3), 1);
  const Element b = Element::scalar(RingSpec::modular(5), 1);
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(a * b, RingMismatch);
  CHECK_THROWS_AS(require_same_ring(a, b), RingMismatch);
}

TEST_CASE("factorization") {
  CHECK(factorize(360) == Factorization{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97) == Factorization{{97, 1}});
  CHECK(factorize(kMaxModulus) == Factorization{{2, 32}});
  for (std::uint64_t n = 2; n < 500; ++n) {
    std::uint64_t product = 1;
    for (const auto& pp : factorize(n)) {
      REQUIRE(is_prime(pp.prime));
      for (unsigned i = 0; i < pp.exponent; ++i) product *= pp.prime;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("nilpotency bound values") {
  CHECK(nilpotency_bound(RingSpec::modular(9)) == 2);
  CHECK(nilpotency_bound(RingSpec::modular(12)) == 2);
  CHECK(nilpotency_bound(RingSpec::modular(7)) == 1);
  CHECK(nilpotency_bound(RingSpec::modular(64)) == 6);
  CHECK(nilpotency_bound(RingSpec::matrix(RingSpec::modular(4), 2)) == 4);
  CHECK(nilpotency_bound(RingSpec::matrix(RingSpec::integers(), 3)) == 3);
}

TEST_CASE("is_nilpotent agrees with the naive power search") {
  for (const RingSpec& r : small_finite_rings()) {
    CAPTURE(r.to_string());
    const long long n = static_cast<long long>(*r.modulus());
    const std::uint64_t size = enumerable_size(r);
    for (const Element& x : enumerate(r)) {
      const bool naive = oracle::nilpotent_naive(oracle::from_element(x), n, size);
      const auto w = is_nilpotent(x);
      REQUIRE(w.has_value() == naive);
      if (w) {
        // The witness is the least vanishing power and fits under the bound.
        REQUIRE(pow(x, w->index).is_zero());
        if (w->index > 1) REQUIRE_FALSE(pow(x, w->index - 1).is_zero());
        REQUIRE(w->index <= nilpotency_bound(r));
      }
    }
  }
}

TEST_CASE("nilpotency bound is sound on M2(Z/9)") {
  const RingSpec r = RingSpec::matrix(RingSpec::modular(9), 2);
  const std::uint64_t size = enumerable_size(r);
  CHECK(size == 6561);
  unsigned longest = 0;
  for (const Element& x : enumerate(r)) {
    Element p = x;
    unsigned k = 1;
    while (!p.is_zero() && k < 16) {
      p = p * x;
      ++k;
    }
    if (p.is_zero()) longest = std::max(longest, k);
  }
  CHECK(longest <= nilpotency_bound(r));
  CHECK(longest == 4);
  // x^2 = 3I, so x^3 = 3x != 0 and x^4 = 0.
  CHECK(is_nilpotent(el(r, "[[0,1],[3,0]]")) == NilpotencyWitness{4});
}

TEST_CASE("integer nilpotents") {
  const RingSpec m3 = RingSpec::matrix(RingSpec::integers(), 3);
  CHECK(is_nilpotent(el(m3, "[[0,1,0],[0,0,1],[0,0,0]]")) == NilpotencyWitness{3});
  CHECK_FALSE(is_nilpotent(el(m3, "[[1,0,0],[0,0,0],[0,0,0]]")));
  CHECK(is_nilpotent(Element::scalar(RingSpec::integers(), 0)));
  CHECK_FALSE(is_nilpotent(Element::scalar(RingSpec::integers(), 3)));
}

TEST_CASE("unipotent inverses") {
  const RingSpec r = RingSpec::matrix(RingSpec::modular(4), 2);
  for (const Element& w : enumerate(r)) {
    const auto wit = is_nilpotent(w);
    if (!wit) continue;
    const Element u = identity(r) + w;
    const Element inv = inverse_of_unipotent(u, *wit);
    REQUIRE((u * inv).is_one());
    REQUIRE((inv * u).is_one());
  }
  const Element u = identity(r) + el(r, "[[0,1],[0,0]]");
  CHECK_THROWS_AS(inverse_of_unipotent(u, NilpotencyWitness{1}), PreconditionError);
  CHECK_THROWS_AS(inverse_of_unipotent(el(r, "[[2,0],[0,1]]")), PreconditionError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  const RingSpec m3 = RingSpec::matrix(RingSpec::integers(), 3);
  const Element a = el(m3, "[[-2,3,2],[-2,3,2],[1,-1,-1]]");
  CHECK(determinant(a).is_zero());
  std::uint64_t state = 7;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 21) - 10;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 4;
    const RingSpec r = RingSpec::matrix(RingSpec::integers(), d);
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = next();
    const Element x(r, m);
    REQUIRE(determinant(x).entry(0, 0).get_si() == oracle::det_laplace(oracle::from_element(x)));
  }
  const RingSpec m2_6 = RingSpec::matrix(RingSpec::modular(6), 2);
  for (const Element& x : enumerate(m2_6))
    REQUIRE(determinant(x).entry(0, 0).get_si() == oracle::mod(oracle::det_laplace(oracle::from_element(x)), 6));
}

TEST_CASE("units") {
  const RingSpec m2 = RingSpec::matrix(RingSpec::modular(2), 2);
  int units = 0;
  for (const Element& x : enumerate(m2)) {
    bool has_inverse = false;
    for (const Element& y : enumerate(m2))
      if ((x * y).is_one()) has_inverse = true;
    REQUIRE(is_unit(x) == has_inverse);
    units += is_unit(x);
  }
  CHECK(units == 6);
  const RingSpec z12 = RingSpec::modular(12);
  int z12_units = 0;
  for (const Element& x : enumerate(z12)) z12_units += is_unit(x);
  CHECK(z12_units == 4);
  CHECK(is_unit(Element::scalar(RingSpec::integers(), -1)));
  CHECK_FALSE(is_unit(Element::scalar(RingSpec::integers(), 2)));
}

TEST_CASE("idempotents and tripotents") {
  const RingSpec z12 = RingSpec::modular(12);
  std::vector<long> idem, trip;
  for (const Element& x : enumerate(z12)) {
    if (is_idempotent(x)) idem.push_back(x.entry(0, 0).get_si());
    if (is_tripotent(x)) trip.push_back(x.entry(0, 0).get_si());
  }
  CHECK(idem == std::vector<long>{0, 1, 4, 9});
  CHECK(trip == std::vector<long>{0, 1, 3, 4, 5, 7, 8, 9, 11});
}

TEST_CASE("enumeration is a bijection onto the ring") {
  for (const RingSpec& r : small_finite_rings()) {
    CAPTURE(r.to_string());
    const std::uint64_t size = enumerable_size(r);
    REQUIRE(BigInt(static_cast<unsigned long>(size)) == r.size());
    std::unordered_set<Element> seen;
    std::uint64_t i = 0;
    for (const Element& x : enumerate(r)) {
      REQUIRE(index_of(x) == i);
      seen.insert(x);
      ++i;
    }
    REQUIRE(i == size);
    REQUIRE(seen.size() == size);
  }
  CHECK(format_element(element_at(RingSpec::matrix(RingSpec::modular(2), 2), 1)) == "[[0,0],[0,1]]");
  CHECK(format_element(element_at(RingSpec::matrix(RingSpec::modular(2), 2), 8)) == "[[1,0],[0,0]]");
  CHECK_THROWS(enumerable_size(RingSpec::integers()));
}
