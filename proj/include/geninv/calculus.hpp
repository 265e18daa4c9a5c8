#pragma once

// Transfer laws for Hirano inverses: Cline's formula, the Jacobson-type
// existence transfer, and product, power and sum formulas.
//
// Each closed form is treated as a candidate and re-verified against the
// axioms. A candidate that fails raises TheoremViolation naming the result,
// so scans can report the instance instead of losing it.

#include "geninv/element.hpp"
#include "geninv/inverse.hpp"
#include "geninv/ring.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace geninv {

/// (ba)^H = b ((ac)^H)^2 a, given aba = aca and a certificate for ac.
HiranoCertificate cline(const Element& a, const Element& b, const Element& c,
                        const HiranoCertificate& ac_cert);

/// Returns whether (ba)^k is Hirano invertible; throws TheoremViolation when
/// (ab)^k is Hirano invertible but (ba)^k is not.
bool power_transfer(const Element& a, const Element& b, std::uint64_t k);

/// (ab)^H = a^H b^H for commuting a, b.
HiranoCertificate commuting_product(const HiranoCertificate& a_cert, const HiranoCertificate& b_cert);

/// (a^n)^H = (a^H)^n, n >= 1.
HiranoCertificate power_formula(const HiranoCertificate& a_cert, std::uint64_t n);

/// Returns whether 1 + ba is Hirano invertible, given aba = aca; throws
/// TheoremViolation when that disagrees with 1 + ac.
bool jacobson_transfer(const Element& a, const Element& b, const Element& c);

/// (a+b)^H = a^H + b^H when ab = ba = 0.
HiranoCertificate orthogonal_sum(const HiranoCertificate& a_cert, const HiranoCertificate& b_cert);

/// Outcome of the square-zero sum formula. Two candidate forms are checked:
/// the statement form a (ba)^H + b (ab)^H and the form b (ab)(ab)^D used in
/// the original argument, a (ba)^D + b (ab)(ab)^D. `certificate` is the
/// statement form when it verifies, else the other one.
struct SquareZeroSum {
  HiranoCertificate certificate;
  Element statement_candidate;
  Element proof_candidate;
  bool statement_verified;
  bool proof_verified;

  bool forms_differ() const { return !(statement_candidate == proof_candidate); }
};

/// Requires a^2 = b^2 = 0 and a strongly Drazin certificate for ab.
/// Throws TheoremViolation when neither candidate verifies.
SquareZeroSum square_zero_sum(const Element& a, const Element& b, const SDrazinCertificate& ab_cert);

/// Same, constructing the certificate for ab first (PreconditionError when ab
/// has no strongly Drazin inverse).
SquareZeroSum square_zero_sum(const Element& a, const Element& b);

/// A ring and an element a that is Hirano invertible while 1 - a is not,
/// found by scanning Z/n for increasing n.
std::pair<RingSpec, Element> one_minus_counterexample();

}  // namespace geninv
