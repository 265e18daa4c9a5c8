#pragma once

#include "geninv/bigint.hpp"
#include "geninv/element.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace geninv {

/// Dense univariate polynomial with integer coefficients, constant term
/// first. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// The polynomial t.
  static IntPolynomial variable();
  static IntPolynomial constant(const BigInt& c);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  /// Coefficients reduced into [0, n).
  IntPolynomial reduced_mod(std::uint64_t n) const;

  /// Horner evaluation inside x's ring (constant term times the identity).
  Element evaluate(const Element& x) const;

  /// this(inner(t)).
  IntPolynomial compose(const IntPolynomial& inner) const;

  /// Human form in the variable t, highest degree first: `t^3 + 2t^2`.
  std::string to_string(char variable = 't') const;

  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// det(tI - x), computed over Z by Faddeev-LeVerrier on the integer lift of
/// x, with coefficients reduced into the base ring afterwards. Monic of
/// degree k. Throws PreconditionError for non-matrix elements.
IntPolynomial char_poly(const Element& x);

}  // namespace geninv
