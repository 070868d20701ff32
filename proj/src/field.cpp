#include "ivq/field.hpp"

#include <string>

#include "ivq/error.hpp"

namespace ivq {

FiniteField::FiniteField(unsigned q) : q_(q) {
  // (characteristic, degree, c0, c1) with modulus x^2 = -(c1 x + c0)
  unsigned degree = 1, c0 = 0, c1 = 0;
  switch (q) {
    case 2: case 3: case 5: case 7: p_ = q; break;
    case 4: p_ = 2; degree = 2; c0 = 1; c1 = 1; break;  // x^2 + x + 1
    case 9: p_ = 3; degree = 2; c0 = 1; c1 = 0; break;  // x^2 + 1
    default: throw Error("unsupported field order " + std::to_string(q));
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  auto lo = [&](Value v) { return v % p_; };
  auto hi = [&](Value v) { return degree == 2 ? v / p_ : 0u; };
  auto pack = [&](unsigned a, unsigned b) { return static_cast<Value>(a % p_ + p_ * (b % p_)); };
  for (Value a = 0; a < q; ++a) {
    neg_[a] = pack(p_ - lo(a), p_ - hi(a));
    for (Value b = 0; b < q; ++b) {
      add_[a * q + b] = pack(lo(a) + lo(b), hi(a) + hi(b));
      // (a0 + a1 x)(b0 + b1 x) = a0b0 + (a0b1 + a1b0) x + a1b1 x^2
      unsigned r0 = lo(a) * lo(b), r1 = lo(a) * hi(b) + hi(a) * lo(b), r2 = hi(a) * hi(b);
      // x^2 = -c1 x - c0
      r0 += r2 * (p_ - c0);
      r1 += r2 * (p_ - c1);
      mul_[a * q + b] = pack(r0, r1);
    }
  }
  for (Value a = 1; a < q; ++a)
    for (Value b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
}

FiniteField::Value FiniteField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Value>(r);
}

}  // namespace ivq
