#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace mols {

// Finite field GF(q) for prime powers q <= 256. Elements are integer codes
// 0..q-1. For prime q the code is the residue itself; for q = p^e the code
// packs polynomial coefficients in base p (code = sum c_i p^i) and arithmetic
// is carried out modulo a fixed Conway polynomial, so element codes are
// stable across runs and machines.
//
// All operations are table lookups after construction; a Field instance is
// immutable and safe to share across threads.
class Field {
public:
  explicit Field(int q); // throws Errc::NotPrimePower

  int q() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int exponent() const noexcept { return e_; }
  bool prime() const noexcept { return e_ == 1; }

  // Packed modulus polynomial (leading coefficient included); 0 for prime q.
  int modulus() const noexcept { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[check(b)])]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  int inv(int a) const; // throws Errc::DivisionByZero for a == 0
  int pow(int a, long long n) const;

  static bool is_prime_power(int q) noexcept;

private:
  int idx(int a, int b) const { return check(a) * q_ + check(b); }
  int check(int a) const;

  int q_ = 0, p_ = 0, e_ = 0;
  int modulus_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

std::shared_ptr<const Field> make_field(int q);

} // namespace mols
