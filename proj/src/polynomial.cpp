#include "geninv/polynomial.hpp"

#include "geninv/errors.hpp"

#include <sstream>
#include <utility>

namespace geninv {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::variable() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::reduced_mod(std::uint64_t n) const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_bigint(residue(c, n)));
  return IntPolynomial(std::move(out));
}

Element IntPolynomial::evaluate(const Element& x) const {
  Element acc = zero(x.ring());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Element::scalar(x.ring(), *it);
  return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coefficient(i) + q.coefficient(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coefficient(i) - q.coefficient(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.coeffs_.empty() || q.coeffs_.empty()) return {};
  std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (sgn(p.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> out = p.coeffs_;
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const BigInt mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << variable;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPolynomial char_poly(const Element& x) {
  if (!x.ring().is_matrix()) throw PreconditionError("char_poly needs a matrix element");
  const IntMatrix a = x.to_integer_matrix();
  const int k = x.dim();
  const IntMatrix id = IntMatrix::Identity(k, k);

  // c[k] = 1; M_j = A M_{j-1} + c[k-j+1] I; c[k-j] = -tr(A M_j) / j.
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
  c[static_cast<std::size_t>(k)] = 1;
  IntMatrix m = IntMatrix::Zero(k, k);
  for (int j = 1; j <= k; ++j) {
    m = IntMatrix(a * m) + id * c[static_cast<std::size_t>(k - j + 1)];
    const IntMatrix am = a * m;
    BigInt trace = 0;
    for (int i = 0; i < k; ++i) trace += am(i, i);
    BigInt q = -trace;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(j));
    c[static_cast<std::size_t>(k - j)] = q;
  }
  IntPolynomial poly(std::move(c));
  if (auto n = x.ring().modulus()) return poly.reduced_mod(*n);
  return poly;
}

}  // namespace geninv
