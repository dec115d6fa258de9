#ifndef UDIAM_FP_HPP
#define UDIAM_FP_HPP

// Arithmetic in Z/pZ for odd primes p, plus signed dyadic scalars
// (sign * 2^exp) used for commutator constants and their prefix products.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace udiam {

using u8  = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define UDIAM_CHECK(cond, msg) \
  do { if (!(cond)) throw std::logic_error(std::string("internal check failed: ") + (msg)); } while (0)

inline bool is_prime(u64 v) {
  if (v < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull})
    if (v % d == 0) return v == d;
  for (u64 d = 11; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

// Moduli are capped below 2^31 so that products of reduced values fit in u64.
struct Fp {
  u64 p;

  explicit Fp(u64 p_) : p(p_) {
    if (p < 3 || p % 2 == 0 || p >= (1ull << 31) || !is_prime(p))
      throw validation_error("modulus must be an odd prime below 2^31, got " + std::to_string(p_));
  }

  u64 reduce(i64 v) const {
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return static_cast<u64>(r);
  }
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw validation_error("division by zero mod " + std::to_string(p));
    return pow(a, p - 2);
  }
  // representative of smallest magnitude, in (-p/2, p/2)
  i64 lift(u64 a) const {
    a %= p;
    return a <= p / 2 ? static_cast<i64>(a) : static_cast<i64>(a) - static_cast<i64>(p);
  }
};

// sign * 2^e with sign in {-1, 0, +1}; e may be negative since 2 is a unit mod odd p.
struct Dyadic {
  int sg = 0;
  int e = 0;

  static Dyadic zero() { return {0, 0}; }
  static Dyadic one() { return {1, 0}; }
  static Dyadic of(int sign, int exp) { return {sign, sign == 0 ? 0 : exp}; }

  Dyadic times(Dyadic o) const { return of(sg * o.sg, e + o.e); }
  Dyadic inverse() const {
    if (sg == 0) throw validation_error("inverting dyadic zero");
    return {sg, -e};
  }
  bool operator==(const Dyadic&) const = default;

  u64 mod(const Fp& fp) const {
    if (sg == 0) return 0;
    u64 v = e >= 0 ? fp.pow(2, static_cast<u64>(e)) : fp.inv(fp.pow(2, static_cast<u64>(-e)));
    return sg > 0 ? v : fp.neg(v);
  }
  std::string str() const {
    if (sg == 0) return "0";
    std::string s = sg < 0 ? "-" : "";
    if (e == 0) return s + "1";
    if (e == 1) return s + "2";
    if (e == -1) return s + "1/2";
    return s + "2^" + std::to_string(e);
  }
};

// Recognize a mod-p value as a small dyadic: an integer lift of magnitude <= 2,
// or a half-integer (2v = +-1 mod p). Anything larger is rejected.
inline std::optional<Dyadic> recognize_dyadic(const Fp& fp, u64 v) {
  i64 l = fp.lift(v);
  if (l == 0) return Dyadic::zero();
  if (l == 1) return Dyadic::of(1, 0);
  if (l == -1) return Dyadic::of(-1, 0);
  if (l == 2) return Dyadic::of(1, 1);
  if (l == -2) return Dyadic::of(-1, 1);
  i64 twice = fp.lift(fp.mul(v, 2));
  if (twice == 1) return Dyadic::of(1, -1);
  if (twice == -1) return Dyadic::of(-1, -1);
  return std::nullopt;
}

inline u64 isqrt_u64(u64 v) {
  if (v == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline int floor_log2(u64 v) {
  UDIAM_CHECK(v > 0, "floor_log2 of zero");
  int k = 0;
  while (v >>= 1) ++k;
  return k;
}

}  // namespace udiam

#endif
