#include "geninv/nilpotent.hpp"

#include "geninv/errors.hpp"
#include "geninv/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace geninv {

unsigned nilpotency_bound(const RingSpec& ring) {
  const auto k = static_cast<unsigned>(ring.dim());
  if (auto n = ring.modulus()) {
    unsigned e = 0;
    for (const auto& pp : factorize(*n)) e = std::max(e, pp.exponent);
    return k * e;
  }
  return k;
}

std::optional<NilpotencyWitness> is_nilpotent(const Element& x) {
  const unsigned bound = nilpotency_bound(x.ring());
  Element power = x;
  for (unsigned m = 1; m <= bound; ++m) {
    if (power.is_zero()) return NilpotencyWitness{m};
    if (m < bound) power = power * x;
  }
  return std::nullopt;
}

Element inverse_of_unipotent(const Element& u, const NilpotencyWitness& w_witness) {
  const Element one = identity(u.ring());
  const Element minus_w = one - u;
  Element term = one;
  Element sum = one;
  for (unsigned j = 1; j < w_witness.index; ++j) {
    term = term * minus_w;
    sum = sum + term;
  }
  if (!(u * sum).is_one() || !(sum * u).is_one())
    throw PreconditionError("unipotent inverse check failed; witness index " +
                            std::to_string(w_witness.index) + " is wrong");
  return sum;
}

Element inverse_of_unipotent(const Element& u) {
  auto witness = is_nilpotent(u - identity(u.ring()));
  if (!witness) throw PreconditionError("u - 1 is not nilpotent");
  return inverse_of_unipotent(u, *witness);
}

bool is_idempotent(const Element& x) { return x * x == x; }

bool is_tripotent(const Element& x) { return x * x * x == x; }

namespace {

// Fraction-free Gaussian elimination (Bareiss); exact over Z.
BigInt bareiss_determinant(IntMatrix m) {
  const Eigen::Index k = m.rows();
  BigInt sign = 1;
  BigInt prev = 1;
  for (Eigen::Index p = 0; p < k; ++p) {
    if (sgn(m(p, p)) == 0) {
      Eigen::Index swap = p + 1;
      while (swap < k && sgn(m(swap, p)) == 0) ++swap;
      if (swap == k) return 0;
      m.row(p).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = p + 1; i < k; ++i) {
      for (Eigen::Index j = p + 1; j < k; ++j) {
        BigInt v = m(i, j) * m(p, p) - m(i, p) * m(p, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(p, p);
  }
  return sign * m(k - 1, k - 1);
}

}  // namespace

Element determinant(const Element& x) {
  return Element::scalar(x.ring().scalar_ring(), bareiss_determinant(x.to_integer_matrix()));
}

bool is_unit(const Element& x) {
  const Element det = determinant(x);
  const BigInt d = det.entry(0, 0);
  if (auto n = x.ring().modulus()) return std::gcd(to_u64(d), *n) == 1;
  return d == 1 || d == -1;
}

}  // namespace geninv
