#pragma once

// Idempotent lifting modulo nilpotents.
//
// If x - x^2 is nilpotent, the iteration t <- 3t^2 - 2t^3 started at x
// reaches an idempotent e with x - e nilpotent. The defect of the image
// satisfies f(t) - f(t)^2 = (t - t^2)^2 (3 + 4t - 4t^2), so every step at
// least squares the defect and the loop stops after ceil(log2 m) + 1 steps,
// m being the nilpotency index of x - x^2. Each step is an integer
// polynomial in x, so e comes with an explicit polynomial certificate.

#include "geninv/element.hpp"
#include "geninv/polynomial.hpp"

namespace geninv {

/// Evidence that `certified == polynomial(subject) / denominator`.
///
/// The denominator is 1 except for the halved tripotent decomposition over Z,
/// where (a^2 +- a) / 2 has no integer-polynomial form. Division is exact in
/// that case and the certified element still commutes with everything that
/// commutes with the subject.
struct PolynomialCertificate {
  IntPolynomial polynomial;
  Element subject;
  BigInt denominator = 1;

  Element evaluate() const;
  bool certifies(const Element& certified) const;
};

struct IdempotentLift {
  Element idempotent;
  PolynomialCertificate certificate;
  unsigned iterations;
};

/// Iteration cap for rings with nilpotency bound B: ceil(log2 B) + 2.
unsigned lift_iteration_cap(unsigned nilpotency_bound);

/// Throws PreconditionError when x - x^2 is not nilpotent and InternalDefect
/// when the iteration fails to converge within the cap.
IdempotentLift lift_idempotent(const Element& x);

}  // namespace geninv
