#include "geninv/calculus.hpp"

#include "geninv/enumerate.hpp"
#include "geninv/errors.hpp"
#include "geninv/literal.hpp"

namespace geninv {

namespace {

HiranoCertificate verified(const char* theorem, const Element& a, const Element& candidate) {
  auto cert = check_hirano(a, candidate);
  if (!cert)
    throw TheoremViolation(theorem, "candidate " + format_element(candidate) +
                                        " is not the Hirano inverse of " + format_element(a));
  return *cert;
}

}  // namespace

HiranoCertificate cline(const Element& a, const Element& b, const Element& c,
                        const HiranoCertificate& ac_cert) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  if (!(a * b * a == a * c * a)) throw PreconditionError("cline requires aba = aca");
  if (!(ac_cert.source == a * c)) throw PreconditionError("certificate is not for ac");
  const Element& h = ac_cert.inverse;
  return verified("4.1", b * a, b * h * h * a);
}

bool power_transfer(const Element& a, const Element& b, std::uint64_t k) {
  require_same_ring(a, b);
  if (k == 0) throw PreconditionError("power_transfer needs k >= 1");
  const bool ab_k = has_hirano(pow(a * b, k));
  const bool ba_k = has_hirano(pow(b * a, k));
  if (ab_k && !ba_k)
    throw TheoremViolation("4.3", "(ab)^" + std::to_string(k) + " is Hirano but (ba)^" +
                                      std::to_string(k) + " is not, a = " + format_element(a) +
                                      ", b = " + format_element(b));
  return ba_k;
}

HiranoCertificate commuting_product(const HiranoCertificate& a_cert, const HiranoCertificate& b_cert) {
  const Element& a = a_cert.source;
  const Element& b = b_cert.source;
  require_same_ring(a, b);
  if (!commute(a, b)) throw PreconditionError("commuting_product requires ab = ba");
  return verified("4.4", a * b, a_cert.inverse * b_cert.inverse);
}

HiranoCertificate power_formula(const HiranoCertificate& a_cert, std::uint64_t n) {
  if (n == 0) throw PreconditionError("power_formula needs n >= 1");
  return verified("4.5", pow(a_cert.source, n), pow(a_cert.inverse, n));
}

bool jacobson_transfer(const Element& a, const Element& b, const Element& c) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  if (!(a * b * a == a * c * a)) throw PreconditionError("jacobson_transfer requires aba = aca");
  const Element one = identity(a.ring());
  const bool left = has_hirano(one + a * c);
  const bool right = has_hirano(one + b * a);
  if (left != right)
    throw TheoremViolation("5.1", std::string("1 + ac is ") + (left ? "" : "not ") +
                                      "Hirano but 1 + ba is " + (right ? "" : "not ") +
                                      "Hirano, a = " + format_element(a) + ", b = " +
                                      format_element(b) + ", c = " + format_element(c));
  return right;
}

HiranoCertificate orthogonal_sum(const HiranoCertificate& a_cert, const HiranoCertificate& b_cert) {
  const Element& a = a_cert.source;
  const Element& b = b_cert.source;
  require_same_ring(a, b);
  if (!(a * b).is_zero() || !(b * a).is_zero())
    throw PreconditionError("orthogonal_sum requires ab = ba = 0");
  return verified("5.4", a + b, a_cert.inverse + b_cert.inverse);
}

SquareZeroSum square_zero_sum(const Element& a, const Element& b, const SDrazinCertificate& ab_cert) {
  require_same_ring(a, b);
  if (!(a * a).is_zero() || !(b * b).is_zero())
    throw PreconditionError("square_zero_sum requires a^2 = b^2 = 0");
  const Element ab = a * b;
  const Element ba = b * a;
  if (!(ab_cert.source == ab)) throw PreconditionError("certificate is not for ab");

  // ab strongly Drazin implies ab Hirano, and ba Hirano by Cline's formula;
  // both Drazin inverses coincide with the Hirano ones.
  const Element ab_inv = hirano(ab).inverse;
  const Element ba_inv = hirano(ba).inverse;
  Element statement = a * ba_inv + b * ab_inv;
  Element proof = a * ba_inv + b * ab * ab_inv;

  const Element sum = a + b;
  auto statement_cert = check_hirano(sum, statement);
  auto proof_cert = check_hirano(sum, proof);
  if (!statement_cert && !proof_cert)
    throw TheoremViolation("5.5", "neither candidate is a Hirano inverse of " + format_element(sum));
  return SquareZeroSum{statement_cert ? *statement_cert : *proof_cert, std::move(statement),
                       std::move(proof), statement_cert.has_value(), proof_cert.has_value()};
}

SquareZeroSum square_zero_sum(const Element& a, const Element& b) {
  if (!(a * a).is_zero() || !(b * b).is_zero())
    throw PreconditionError("square_zero_sum requires a^2 = b^2 = 0");
  const Element ab = a * b;
  if (!has_strongly_drazin(ab))
    throw PreconditionError("ab = " + format_element(ab) + " has no strongly Drazin inverse");
  return square_zero_sum(a, b, strongly_drazin(ab));
}

std::pair<RingSpec, Element> one_minus_counterexample() {
  for (std::uint64_t n = 2;; ++n) {
    const RingSpec ring = RingSpec::modular(n);
    const Element one = identity(ring);
    for (const Element& a : enumerate(ring))
      if (has_hirano(a) && !has_hirano(one - a)) return {ring, a};
  }
}

}  // namespace geninv
