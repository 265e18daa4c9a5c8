#include "geninv/literal.hpp"

#include "geninv/errors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace geninv {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_minus() {
    skip_space();
    if (accept('-')) return true;
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  BigInt integer() {
    const bool negative = accept_minus();
    BigInt v(digits());
    return negative ? BigInt(-v) : v;
  }

  std::uint64_t small_unsigned(const char* what) {
    const std::size_t start = pos_;
    BigInt v(digits());
    if (!fits_u64(v)) {
      pos_ = start;
      fail(std::string(what) + " is too large");
    }
    return to_u64(v);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

RingSpec parse_scalar_ring(Cursor& in) {
  in.expect('Z');
  if (!in.accept('/')) return RingSpec::integers();
  const std::size_t at = in.position();
  const std::uint64_t n = in.small_unsigned("modulus");
  try {
    return RingSpec::modular(n);
  } catch (const Error& e) {
    throw ParseError(at, e.what());
  }
}

}  // namespace

RingSpec parse_ring(std::string_view text) {
  Cursor in(text);
  RingSpec ring = RingSpec::integers();
  if (in.accept('M')) {
    const std::size_t at = in.position();
    const std::uint64_t k = in.small_unsigned("dimension");
    if (k < 1 || k > 1024) throw ParseError(at, "matrix dimension out of range");
    in.expect('(');
    const RingSpec base = parse_scalar_ring(in);
    in.expect(')');
    ring = RingSpec::matrix(base, static_cast<int>(k));
  } else {
    ring = parse_scalar_ring(in);
  }
  if (!in.at_end()) in.fail("trailing characters after ring literal");
  return ring;
}

Element parse_element(const RingSpec& ring, std::string_view text) {
  Cursor in(text);
  const int k = ring.dim();
  IntMatrix m(k, k);
  if (!ring.is_matrix()) {
    m(0, 0) = in.integer();
  } else {
    in.expect('[');
    for (int r = 0; r < k; ++r) {
      if (r > 0) in.expect(',');
      in.expect('[');
      for (int c = 0; c < k; ++c) {
        if (c > 0) in.expect(',');
        m(r, c) = in.integer();
      }
      if (!in.accept(']')) in.fail("row " + std::to_string(r) + " must have " + std::to_string(k) + " entries");
    }
    if (!in.accept(']')) in.fail("matrix must have " + std::to_string(k) + " rows");
  }
  if (!in.at_end()) in.fail("trailing characters after element literal");
  return Element(ring, m);
}

std::string format_element(const Element& x) {
  if (!x.ring().is_matrix()) return x.entry(0, 0).get_str();
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < x.dim(); ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < x.dim(); ++c) os << (c ? "," : "") << x.entry(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace geninv
