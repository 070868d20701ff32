#pragma once

#include <cstdint>
#include <vector>

namespace ivq {

/// Small finite field with precomputed operation tables. Prime orders use
/// residues; F4 is F2[x]/(x^2+x+1) and F9 is F3[x]/(x^2+1), with element
/// a + b*x stored as a + p*b.
class FiniteField {
public:
  using Value = std::uint32_t;

  /// q in {2, 3, 4, 5, 7, 9}; anything else throws ivq::Error.
  explicit FiniteField(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }

  Value add(Value a, Value b) const noexcept { return add_[a * q_ + b]; }
  Value mul(Value a, Value b) const noexcept { return mul_[a * q_ + b]; }
  Value neg(Value a) const noexcept { return neg_[a]; }
  Value sub(Value a, Value b) const noexcept { return add(a, neg(b)); }
  /// Inverse of a nonzero element; 0 maps to 0.
  Value inv(Value a) const noexcept { return inv_[a]; }
  /// Image of an integer under Z -> F.
  Value from_int(long long v) const noexcept;

private:
  unsigned q_;
  unsigned p_;
  std::vector<Value> add_, mul_, neg_, inv_;
};

}  // namespace ivq
