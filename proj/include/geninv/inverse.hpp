#pragma once

// Drazin, strongly Drazin and Hirano inverses.
//
// For b to be an inverse of a the three axioms are always ab = ba, bab = b,
// and a nilpotency condition on a defect:
//
//   strongly Drazin : a   - ab    nilpotent
//   Hirano          : a^2 - ab    nilpotent
//   Drazin          : a   - a^2 b nilpotent
//
// Existence is decided by nilpotency tests (a - a^2 for strongly Drazin,
// a - a^3 for Hirano); constructions go through idempotent lifting and the
// finite unipotent series. Every certificate is re-checked before it is
// returned, and `brute_force_*` scans a finite ring against the axioms as
// written, independently of the constructions.

#include "geninv/element.hpp"
#include "geninv/lifting.hpp"
#include "geninv/nilpotent.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace geninv {

struct HiranoCertificate {
  Element source;
  Element inverse;
  Element defect;  // a^2 - ab
  NilpotencyWitness defect_witness;
};

struct SDrazinCertificate {
  Element source;
  Element inverse;
  Element defect;  // a - ab
  NilpotencyWitness defect_witness;
};

struct DrazinCertificate {
  Element source;
  Element inverse;
  Element defect;  // a - a^2 b
  NilpotencyWitness defect_witness;
  unsigned index;  // a^k = a^(k+1) b
};

/// Minimal (i, p) with a^(i+p) = a^i, i >= 1.
struct SemigroupProfile {
  std::uint64_t index;
  std::uint64_t period;

  friend bool operator==(const SemigroupProfile&, const SemigroupProfile&) = default;
};

/// a = p + w with p^3 = p, w nilpotent, pw = wp and p = e - f for commuting
/// idempotents e, f. All of p, e, f carry polynomial certificates in a.
struct TripotentDecomposition {
  Element subject;
  Element tripotent;
  Element nilpotent_part;
  NilpotencyWitness nilpotent_witness;
  Element e;
  Element f;
  PolynomialCertificate tripotent_certificate;
  PolynomialCertificate e_certificate;
  PolynomialCertificate f_certificate;
};

/// Everything known about one element.
///
/// `has_drazin` is empty when the question is not decided by this library:
/// integer matrices outside the Hirano case.
struct InverseReport {
  Element element;
  std::optional<bool> has_drazin;
  bool has_strongly_drazin = false;
  bool has_hirano = false;
  std::optional<DrazinCertificate> drazin;
  std::optional<SDrazinCertificate> strongly_drazin;
  std::optional<HiranoCertificate> hirano;
};

// -- axiom checks ------------------------------------------------------------

std::optional<HiranoCertificate> check_hirano(const Element& a, const Element& b);
std::optional<SDrazinCertificate> check_strongly_drazin(const Element& a, const Element& b);
/// The index is the least k >= 1 with a^k = a^(k+1) b.
std::optional<DrazinCertificate> check_drazin(const Element& a, const Element& b);

// -- existence ---------------------------------------------------------------

/// Witness for the nilpotency of a - a^3, if any.
std::optional<NilpotencyWitness> hirano_witness(const Element& a);
inline bool has_hirano(const Element& a) { return hirano_witness(a).has_value(); }

/// a - a^2 nilpotent.
bool has_strongly_drazin(const Element& a);

// -- constructions -----------------------------------------------------------

/// e = lift(a^2), w = a^2 - e, c = (1 + w)^-1 e, b = ac.
HiranoCertificate hirano(const Element& a);

/// e = lift(a), b = e (1 + ea - e)^-1.
SDrazinCertificate strongly_drazin(const Element& a);

SemigroupProfile semigroup_profile(const Element& a);

/// b = a^(m-1) where m is the least multiple of the period with m >= i + 1.
DrazinCertificate drazin_finite(const Element& a);

/// Drazin inverse wherever this library decides it: finite rings always,
/// otherwise through the Hirano path. Empty when undecided or absent.
std::optional<DrazinCertificate> drazin(const Element& a);

/// Requires a Hirano and 2 invertible (odd modulus), or over Z a = a^3 with
/// a^2 +- a even. e lifts (a^2 + a)/2, f lifts (a^2 - a)/2, p = e - f.
TripotentDecomposition tripotent_decomposition(const Element& a);

/// a = b - c with b, c commuting and strongly Drazin invertible:
/// b = e, c = f - w from the tripotent decomposition.
std::pair<Element, Element> sd_difference_decomposition(const Element& a);

/// b = a (a^2)^sD.
HiranoCertificate hirano_via_square(const Element& a);

/// (a^H)^H = a^2 a^H, cross-checked against hirano(a^H). Throws
/// TheoremViolation on disagreement.
Element hirano_of_hirano(const HiranoCertificate& cert);

InverseReport classify(const Element& a);

// -- brute-force oracles (finite rings) --------------------------------------

std::vector<Element> brute_force_hirano(const Element& a);
std::vector<Element> brute_force_strongly_drazin(const Element& a);
std::vector<Element> brute_force_drazin(const Element& a);

/// All three solution sets in one scan of the ring.
struct BruteForceInverses {
  std::vector<Element> hirano;
  std::vector<Element> strongly_drazin;
  std::vector<Element> drazin;
};
BruteForceInverses brute_force_inverses(const Element& a);

/// Tripotents p with pa = ap and a - p nilpotent.
std::vector<Element> brute_force_tripotent_parts(const Element& a);

}  // namespace geninv
