#include "geninv/lifting.hpp"

#include "geninv/errors.hpp"
#include "geninv/nilpotent.hpp"

#include <bit>

namespace geninv {

Element PolynomialCertificate::evaluate() const {
  return divide_exact(polynomial.evaluate(subject), denominator);
}

bool PolynomialCertificate::certifies(const Element& certified) const {
  if (!(certified.ring() == subject.ring())) return false;
  if (denominator == 1) return polynomial.evaluate(subject) == certified;
  return polynomial.evaluate(subject) == denominator * certified;
}

unsigned lift_iteration_cap(unsigned nilpotency_bound) {
  const unsigned ceil_log2 = nilpotency_bound <= 1 ? 0 : std::bit_width(nilpotency_bound - 1);
  return ceil_log2 + 2;
}

IdempotentLift lift_idempotent(const Element& x) {
  if (!is_nilpotent(x - x * x))
    throw PreconditionError("x - x^2 is not nilpotent; no idempotent lift exists");

  const auto modulus = x.ring().modulus();
  const IntPolynomial step{0, 0, 3, -2};  // 3t^2 - 2t^3
  const unsigned cap = lift_iteration_cap(nilpotency_bound(x.ring()));

  Element t = x;
  IntPolynomial cert = IntPolynomial::variable();
  unsigned iterations = 0;
  while (!is_idempotent(t)) {
    if (iterations == cap)
      throw InternalDefect("idempotent lift did not converge in " + std::to_string(cap) + " steps");
    const Element t2 = t * t;
    t = BigInt(3) * t2 - BigInt(2) * (t2 * t);
    cert = step.compose(cert);
    if (modulus) cert = cert.reduced_mod(*modulus);
    ++iterations;
  }

  IdempotentLift lift{t, PolynomialCertificate{cert, x}, iterations};
  if (!is_nilpotent(x - t) || !lift.certificate.certifies(t))
    throw InternalDefect("idempotent lift failed its own verification");
  return lift;
}

}  // namespace geninv
