#include "geninv/inverse.hpp"

#include "geninv/enumerate.hpp"
#include "geninv/errors.hpp"

#include <unordered_map>

namespace geninv {

namespace {

bool commuting_and_reflexive(const Element& a, const Element& b) {
  const Element ab = a * b;
  return ab == b * a && b * ab == b;
}

Element inverse_of_two(const RingSpec& ring) {
  const std::uint64_t n = *ring.modulus();
  return Element::scalar(ring, to_bigint((n + 1) / 2));
}

}  // namespace

std::optional<HiranoCertificate> check_hirano(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (!commuting_and_reflexive(a, b)) return std::nullopt;
  Element defect = a * a - a * b;
  auto witness = is_nilpotent(defect);
  if (!witness) return std::nullopt;
  return HiranoCertificate{a, b, std::move(defect), *witness};
}

std::optional<SDrazinCertificate> check_strongly_drazin(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (!commuting_and_reflexive(a, b)) return std::nullopt;
  Element defect = a - a * b;
  auto witness = is_nilpotent(defect);
  if (!witness) return std::nullopt;
  return SDrazinCertificate{a, b, std::move(defect), *witness};
}

std::optional<DrazinCertificate> check_drazin(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (!commuting_and_reflexive(a, b)) return std::nullopt;
  Element defect = a - a * a * b;
  auto witness = is_nilpotent(defect);
  if (!witness) return std::nullopt;
  // (a - a^2 b)^k = a^k (1 - ab), so the least such k is the defect's index;
  // the search below confirms it against the power form of the axiom.
  Element power = a;
  unsigned k = 1;
  while (!(power == power * a * b)) {
    if (k == witness->index)
      throw InternalDefect("Drazin index search overran the defect nilpotency index");
    power = power * a;
    ++k;
  }
  return DrazinCertificate{a, b, std::move(defect), *witness, k};
}

std::optional<NilpotencyWitness> hirano_witness(const Element& a) {
  return is_nilpotent(a - a * a * a);
}

bool has_strongly_drazin(const Element& a) { return is_nilpotent(a - a * a).has_value(); }

HiranoCertificate hirano(const Element& a) {
  if (!has_hirano(a)) throw PreconditionError("a - a^3 is not nilpotent; no Hirano inverse");
  const Element a2 = a * a;
  const Element e = lift_idempotent(a2).idempotent;
  const Element w = a2 - e;
  const Element c = inverse_of_unipotent(identity(a.ring()) + w) * e;
  auto cert = check_hirano(a, a * c);
  if (!cert) throw InternalDefect("constructed Hirano inverse failed the axioms");
  return *cert;
}

SDrazinCertificate strongly_drazin(const Element& a) {
  if (!has_strongly_drazin(a))
    throw PreconditionError("a - a^2 is not nilpotent; no strongly Drazin inverse");
  const Element e = lift_idempotent(a).idempotent;
  const Element u = identity(a.ring()) + (e * a - e);
  auto cert = check_strongly_drazin(a, e * inverse_of_unipotent(u));
  if (!cert) throw InternalDefect("constructed strongly Drazin inverse failed the axioms");
  return *cert;
}

SemigroupProfile semigroup_profile(const Element& a) {
  if (!a.ring().is_finite()) throw UnsupportedRing(a.ring().to_string() + " is infinite");
  std::unordered_map<Element, std::uint64_t> seen;
  Element power = a;
  for (std::uint64_t j = 1;; ++j) {
    auto [it, inserted] = seen.emplace(power, j);
    if (!inserted) return {it->second, j - it->second};
    power = power * a;
  }
}

DrazinCertificate drazin_finite(const Element& a) {
  const SemigroupProfile profile = semigroup_profile(a);
  const std::uint64_t m = profile.period * ((profile.index + profile.period) / profile.period);
  auto cert = check_drazin(a, pow(a, m - 1));
  if (!cert || cert->index != profile.index)
    throw InternalDefect("power-formula Drazin inverse failed the axioms");
  return *cert;
}

std::optional<DrazinCertificate> drazin(const Element& a) {
  if (a.ring().is_finite()) return drazin_finite(a);
  if (!has_hirano(a)) return std::nullopt;
  auto cert = check_drazin(a, hirano(a).inverse);
  if (!cert) throw InternalDefect("Hirano inverse is not a Drazin inverse");
  return cert;
}

TripotentDecomposition tripotent_decomposition(const Element& a) {
  if (!has_hirano(a)) throw PreconditionError("a - a^3 is not nilpotent; no tripotent decomposition");
  const RingSpec& ring = a.ring();
  const Element a2 = a * a;

  IntPolynomial half_sum;   // numerator of (a^2 + a)/2 as a polynomial in a
  IntPolynomial half_diff;  // numerator of (a^2 - a)/2
  BigInt denominator = 1;
  Element g = a2, h = a2;
  if (auto n = ring.modulus()) {
    if (*n % 2 == 0)
      throw PreconditionError("2 is not a unit in " + ring.scalar_ring().to_string());
    const BigInt half = to_bigint((*n + 1) / 2);
    half_sum = IntPolynomial(std::vector<BigInt>{0, half, half});
    half_diff = IntPolynomial(std::vector<BigInt>{0, to_bigint(*n - to_u64(half)), half});
    const Element inv2 = inverse_of_two(ring);
    g = inv2 * (a2 + a);
    h = inv2 * (a2 - a);
  } else {
    if (!(a * a2 == a))
      throw PreconditionError("2 is not a unit in Z; only a = a^3 can be decomposed");
    denominator = 2;
    half_sum = IntPolynomial{0, 1, 1};
    half_diff = IntPolynomial{0, -1, 1};
    g = divide_exact(a2 + a, 2);
    h = divide_exact(a2 - a, 2);
  }

  const IdempotentLift lift_e = lift_idempotent(g);
  const IdempotentLift lift_f = lift_idempotent(h);
  const auto reduce = [&ring](const IntPolynomial& p) {
    return ring.modulus() ? p.reduced_mod(*ring.modulus()) : p;
  };
  // Over Z both g and h are already idempotent (a = a^3), so the lifts make
  // no steps and the certificates are the halved numerators themselves.
  PolynomialCertificate e_cert{reduce(lift_e.certificate.polynomial.compose(half_sum)), a, denominator};
  PolynomialCertificate f_cert{reduce(lift_f.certificate.polynomial.compose(half_diff)), a, denominator};
  if (denominator != 1 && (lift_e.iterations != 0 || lift_f.iterations != 0))
    throw InternalDefect("halved idempotents over Z needed lifting steps");

  const Element& e = lift_e.idempotent;
  const Element& f = lift_f.idempotent;
  const Element p = e - f;
  const Element w = a - p;
  PolynomialCertificate p_cert{reduce(e_cert.polynomial - f_cert.polynomial), a, denominator};

  auto witness = is_nilpotent(w);
  if (!witness || !is_tripotent(p) || !commute(p, w) || !commute(e, f) || !e_cert.certifies(e) ||
      !f_cert.certifies(f) || !p_cert.certifies(p))
    throw InternalDefect("tripotent decomposition failed its own verification");
  return TripotentDecomposition{a, p, w, *witness, e, f, p_cert, e_cert, f_cert};
}

std::pair<Element, Element> sd_difference_decomposition(const Element& a) {
  const TripotentDecomposition d = tripotent_decomposition(a);
  Element b = d.e;
  Element c = d.f - d.nilpotent_part;
  if (!(b - c == a) || !commute(b, c) || !has_strongly_drazin(b) || !has_strongly_drazin(c))
    throw InternalDefect("strongly Drazin difference decomposition failed verification");
  return {std::move(b), std::move(c)};
}

HiranoCertificate hirano_via_square(const Element& a) {
  const Element a2 = a * a;
  if (!has_strongly_drazin(a2))
    throw PreconditionError("a^2 has no strongly Drazin inverse");
  auto cert = check_hirano(a, a * strongly_drazin(a2).inverse);
  if (!cert) throw TheoremViolation("2.4", "a (a^2)^sD is not a Hirano inverse of a");
  return *cert;
}

Element hirano_of_hirano(const HiranoCertificate& cert) {
  const Element& a = cert.source;
  const Element& b = cert.inverse;
  Element predicted = a * a * b;
  if (!has_hirano(b)) throw TheoremViolation("3.2", "a^H has no Hirano inverse");
  if (!(hirano(b).inverse == predicted))
    throw TheoremViolation("3.2", "(a^H)^H differs from a^2 a^H");
  return predicted;
}

InverseReport classify(const Element& a) {
  InverseReport report{a, std::nullopt};
  report.has_hirano = has_hirano(a);
  report.has_strongly_drazin = has_strongly_drazin(a);
  if (report.has_hirano) report.hirano = hirano(a);
  if (report.has_strongly_drazin) report.strongly_drazin = strongly_drazin(a);
  report.drazin = drazin(a);
  if (report.drazin)
    report.has_drazin = true;
  else if (!a.ring().is_matrix())
    report.has_drazin = false;  // in Z only 0 and +-1 are Drazin invertible, all Hirano
  return report;
}

BruteForceInverses brute_force_inverses(const Element& a) {
  BruteForceInverses out;
  const Element a2 = a * a;
  for (const Element& b : enumerate(a.ring())) {
    const Element ab = a * b;
    if (!(ab == b * a) || !(b * ab == b)) continue;
    if (is_nilpotent(a2 - ab)) out.hirano.push_back(b);
    if (is_nilpotent(a - ab)) out.strongly_drazin.push_back(b);
    if (is_nilpotent(a - a2 * b)) out.drazin.push_back(b);
  }
  return out;
}

std::vector<Element> brute_force_hirano(const Element& a) { return brute_force_inverses(a).hirano; }

std::vector<Element> brute_force_strongly_drazin(const Element& a) {
  return brute_force_inverses(a).strongly_drazin;
}

std::vector<Element> brute_force_drazin(const Element& a) { return brute_force_inverses(a).drazin; }

std::vector<Element> brute_force_tripotent_parts(const Element& a) {
  std::vector<Element> out;
  for (const Element& p : enumerate(a.ring()))
    if (is_tripotent(p) && commute(a, p) && is_nilpotent(a - p)) out.push_back(p);
  return out;
}

}  // namespace geninv
