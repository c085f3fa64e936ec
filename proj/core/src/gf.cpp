#include "mols/gf.hpp"

#include <array>
#include <string>

#include "mols/error.hpp"

namespace mols {

namespace {

struct Factorization {
  int p = 0, e = 0;
};

// Returns {0,0} unless q is a prime power p^e with q in [2, 256].
Factorization prime_power(int q) noexcept {
  if (q < 2 || q > 256) return {};
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q; // q itself prime
  int e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) return {};
  return {p, e};
}

// Conway polynomials, packed in base p with the leading term included.
// Primitivity of every entry is enforced by the unit tests: the element x
// (code p) must have multiplicative order q-1.
struct ModulusEntry {
  int q;
  int packed;
};

constexpr std::array<ModulusEntry, 16> kModuli = {{
    {4, 7},     // x^2+x+1
    {8, 11},    // x^3+x+1
    {9, 17},    // x^2+2x+2
    {16, 19},   // x^4+x+1
    {25, 47},   // x^2+4x+2
    {27, 34},   // x^3+2x+1
    {32, 37},   // x^5+x^2+1
    {49, 94},   // x^2+6x+3
    {64, 91},   // x^6+x^4+x^3+x+1
    {81, 137},  // x^4+2x^3+2
    {121, 200}, // x^2+7x+2
    {125, 143}, // x^3+3x+3
    {128, 131}, // x^7+x+1
    {169, 327}, // x^2+12x+2
    {243, 250}, // x^5+2x+1
    {256, 285}, // x^8+x^4+x^3+x^2+1
}};

int lookup_modulus(int q) {
  for (const auto& m : kModuli)
    if (m.q == q) return m.packed;
  fail(Errc::NotPrimePower, "no modulus polynomial for q=" + std::to_string(q));
}

void unpack(int code, int p, int* digits, int n) {
  for (int i = 0; i < n; ++i) {
    digits[i] = code % p;
    code /= p;
  }
}

int pack(const int* digits, int p, int n) {
  int code = 0;
  for (int i = n - 1; i >= 0; --i) code = code * p + digits[i];
  return code;
}

// Product of packed polynomials a, b reduced modulo the packed monic
// polynomial f of degree e, coefficients mod p.
int poly_mul_mod(int a, int b, int f, int p, int e) {
  int da[8], db[8], df[9], prod[16] = {0};
  unpack(a, p, da, e);
  unpack(b, p, db, e);
  unpack(f, p, df, e + 1);
  for (int i = 0; i < e; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (int d = 2 * e - 2; d >= e; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // subtract c * x^(d-e) * f; f is monic so the degree-d term cancels
    for (int i = 0; i < e; ++i) {
      int k = d - e + i;
      prod[k] = (prod[k] - c * df[i]) % p;
      if (prod[k] < 0) prod[k] += p;
    }
  }
  return pack(prod, p, e);
}

} // namespace

bool Field::is_prime_power(int q) noexcept { return prime_power(q).p != 0; }

Field::Field(int q) {
  auto f = prime_power(q);
  if (f.p == 0)
    fail(Errc::NotPrimePower, "q=" + std::to_string(q) + " is not a prime power in [2,256]");
  q_ = q;
  p_ = f.p;
  e_ = f.e;
  add_.resize(static_cast<size_t>(q) * q);
  mul_.resize(static_cast<size_t>(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  if (e_ == 1) {
    for (int a = 0; a < q; ++a) {
      neg_[a] = static_cast<std::uint8_t>((q - a) % q);
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
        mul_[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
      }
    }
  } else {
    modulus_ = lookup_modulus(q);
    for (int a = 0; a < q; ++a) {
      int da[8], db[8], out[8];
      unpack(a, p_, da, e_);
      for (int i = 0; i < e_; ++i) out[i] = (p_ - da[i]) % p_;
      neg_[a] = static_cast<std::uint8_t>(pack(out, p_, e_));
      for (int b = 0; b < q; ++b) {
        unpack(b, p_, db, e_);
        for (int i = 0; i < e_; ++i) out[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = static_cast<std::uint8_t>(pack(out, p_, e_));
        mul_[a * q + b] = static_cast<std::uint8_t>(poly_mul_mod(a, b, modulus_, p_, e_));
      }
    }
  }

  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
}

int Field::check(int a) const {
  if (a < 0 || a >= q_)
    throw std::out_of_range("element code " + std::to_string(a) + " out of range for GF(" +
                            std::to_string(q_) + ")");
  return a;
}

int Field::inv(int a) const {
  check(a);
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

int Field::pow(int a, long long n) const {
  check(a);
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  int r = 1;
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::shared_ptr<const Field> make_field(int q) { return std::make_shared<const Field>(q); }

} // namespace mols
