#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace g11 {

using Scalar = std::uint32_t;

/// Prime field GF(p) for a word-sized odd prime p < 2^31.
///
/// Elements are plain residues in [0, p); the field object only carries p and
/// does the reductions. Primality is checked once at construction.
class Field {
public:
  static constexpr Scalar kDefaultPrime = 12347;

  explicit Field(Scalar p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("field characteristic must be an odd prime below 2^31, got " +
                                  std::to_string(p));
  }

  Scalar prime() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar inv(Scalar a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a % p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Scalar>(r);
  }
  /// Residue of a signed integer.
  Scalar from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2], used for printing.
  long long to_signed(Scalar a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  bool operator==(const Field&) const = default;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  Scalar p_;
};

/// Uniform residue drawn from a 64-bit engine (portable across standard libraries).
template <class Rng>
Scalar random_scalar(const Field& F, Rng& rng) {
  return static_cast<Scalar>(rng() % F.prime());
}
template <class Rng>
Scalar random_nonzero(const Field& F, Rng& rng) {
  return static_cast<Scalar>(1 + rng() % (F.prime() - 1));
}

/// Element of the dual numbers GF(p)[eps]/(eps^2).
struct Dual {
  Scalar re = 0;
  Scalar eps = 0;
};

inline Dual dual_add(const Field& F, Dual a, Dual b) { return {F.add(a.re, b.re), F.add(a.eps, b.eps)}; }
inline Dual dual_sub(const Field& F, Dual a, Dual b) { return {F.sub(a.re, b.re), F.sub(a.eps, b.eps)}; }
inline Dual dual_mul(const Field& F, Dual a, Dual b) {
  return {F.mul(a.re, b.re), F.add(F.mul(a.re, b.eps), F.mul(a.eps, b.re))};
}

}  // namespace g11
