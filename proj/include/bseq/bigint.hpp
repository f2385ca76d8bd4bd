#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bseq {

using BigInt = boost::multiprecision::cpp_int;

// Values of the form m * 2^k + c where the exponent k may itself be a big
// integer far too large for the value to be materialized.  Doubling patterns
// produce terms like mu * 2^(84975*2^560362/16) whose *indices* are
// representable but whose values are not; only comparisons against indices
// and exact sums are ever needed for those.
class BigVal {
 public:
  BigVal() : c_(0) {}
  BigVal(long long v) : c_(v) {}
  BigVal(BigInt v) : c_(std::move(v)) {}

  // m * 2^k + c; normalizes to an exact integer when small enough.
  static BigVal geometric(BigInt m, BigInt k, BigInt c);

  bool is_exact() const { return m_ == 0; }
  const BigInt& exact() const {
    if (!is_exact()) throw std::overflow_error("BigVal: value too large to materialize");
    return c_;
  }
  const BigInt& scale() const { return m_; }
  const BigInt& exponent() const { return k_; }
  const BigInt& addend() const { return c_; }

  BigVal operator+(const BigVal& o) const;
  bool operator==(const BigVal& o) const;
  bool operator!=(const BigVal& o) const { return !(*this == o); }

  // three-way comparison against an exact integer
  int cmp(const BigInt& n) const;
  bool operator<(const BigInt& n) const { return cmp(n) < 0; }
  bool operator<=(const BigInt& n) const { return cmp(n) <= 0; }
  bool operator>(const BigInt& n) const { return cmp(n) > 0; }
  bool operator>=(const BigInt& n) const { return cmp(n) >= 0; }

  bool cmp_val_less(const BigVal& o) const;  // *this < o, exact

  std::string str() const;

 private:
  void normalize();

  BigInt m_ = 0;  // 0 means exact value c_
  BigInt k_ = 0;
  BigInt c_;
};

}  // namespace bseq
