#include "bseq/bigint.hpp"

#include <utility>

namespace bseq {

namespace {

// values up to this many bits are kept as exact integers (256 KiB)
constexpr unsigned kExactBits = 1u << 21;

unsigned bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

}  // namespace

BigVal BigVal::geometric(BigInt m, BigInt k, BigInt c) {
  BigVal v;
  v.m_ = std::move(m);
  v.k_ = std::move(k);
  v.c_ = std::move(c);
  v.normalize();
  return v;
}

void BigVal::normalize() {
  if (m_ == 0) {
    k_ = 0;
    return;
  }
  if (k_ < 0) throw std::invalid_argument("BigVal: negative exponent");
  if (k_ <= kExactBits) {
    c_ += m_ << static_cast<unsigned>(k_);
    m_ = 0;
    k_ = 0;
    return;
  }
  // canonical form: odd scale, so equality is structural
  while ((m_ & 1) == 0) {
    m_ >>= 1;
    ++k_;
  }
}

BigVal BigVal::operator+(const BigVal& o) const {
  if (is_exact() && o.is_exact()) return BigVal(c_ + o.c_);
  if (o.is_exact()) return geometric(m_, k_, c_ + o.c_);
  if (is_exact()) return geometric(o.m_, o.k_, o.c_ + c_);
  if (k_ == o.k_) return geometric(m_ + o.m_, k_, c_ + o.c_);
  const BigVal& hi = k_ > o.k_ ? *this : o;
  const BigVal& lo = k_ > o.k_ ? o : *this;
  BigInt d = hi.k_ - lo.k_;
  if (d <= 64) return geometric((hi.m_ << static_cast<unsigned>(d)) + lo.m_, lo.k_, c_ + o.c_);
  throw std::overflow_error("BigVal: sum of incommensurate huge terms");
}

bool BigVal::operator==(const BigVal& o) const {
  // normalized: a lazy value exceeds 2^kExactBits, an exact one never does
  return m_ == o.m_ && k_ == o.k_ && c_ == o.c_;
}

int BigVal::cmp(const BigInt& n) const {
  if (is_exact()) return c_ < n ? -1 : (c_ == n ? 0 : 1);
  // |m * 2^k| >= 2^k with k > kExactBits; n and c are comparatively tiny
  // unless n itself is enormous, in which case k is still materializable.
  BigInt guard = BigInt(bit_length(n)) + bit_length(c_) + 2;
  if (k_ > guard) return m_ > 0 ? 1 : -1;
  BigInt value = (m_ << static_cast<unsigned>(k_)) + c_;
  return value < n ? -1 : (value == n ? 0 : 1);
}

bool BigVal::cmp_val_less(const BigVal& o) const {
  if (o.is_exact()) return cmp(o.c_) < 0;
  if (is_exact()) return o.cmp(c_) > 0;
  if (m_ > 0 && o.m_ < 0) return false;
  if (m_ < 0 && o.m_ > 0) return true;
  bool neg = m_ < 0;
  // both same sign; compare magnitudes of the geometric parts
  BigInt d = k_ - o.k_;
  if (d > 64 || d < -64) {
    bool mag_less = d < 0;
    return neg ? !mag_less : mag_less;
  }
  BigInt lhs = m_, rhs = o.m_;
  if (d >= 0)
    lhs <<= static_cast<unsigned>(d);
  else
    rhs <<= static_cast<unsigned>(-d);
  if (lhs != rhs) return lhs < rhs;
  return c_ < o.c_;
}

std::string BigVal::str() const {
  if (is_exact()) return c_.str();
  std::string s = m_.str() + "*2^" + k_.str();
  if (c_ > 0) s += "+" + c_.str();
  if (c_ < 0) s += c_.str();
  return s;
}

}  // namespace bseq
