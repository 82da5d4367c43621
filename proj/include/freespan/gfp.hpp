#pragma once

#include <cstdint>
#include <string>

#include "freespan/errors.hpp"

namespace freespan {

/// A prime modulus in [2, 2^16].  Primality is checked at construction, so a
/// live Prime value is always a valid modulus.
class Prime {
 public:
  explicit Prime(std::uint32_t value);
  std::uint32_t value() const { return value_; }

  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }
  friend bool operator!=(Prime a, Prime b) { return a.value_ != b.value_; }

 private:
  std::uint32_t value_;
};

/// An element of GF(p).  The residue is kept reduced into [0, p).
/// Arithmetic between elements of different primes is a usage_error.
class Fp {
 public:
  Fp(Prime p, std::int64_t value);

  static Fp zero(Prime p) { return Fp(p, 0); }
  static Fp one(Prime p) { return Fp(p, 1); }

  std::uint32_t residue() const { return residue_; }
  Prime prime() const { return p_; }
  bool is_zero() const { return residue_ == 0; }

  Fp operator-() const;
  Fp operator+(Fp rhs) const;
  Fp operator-(Fp rhs) const;
  Fp operator*(Fp rhs) const;

  /// Multiplicative inverse; inverting zero is a usage_error.
  Fp inv() const;
  Fp pow(std::uint64_t e) const;

  friend bool operator==(Fp a, Fp b) {
    return a.p_ == b.p_ && a.residue_ == b.residue_;
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

 private:
  void check_same_prime(Fp rhs) const;

  Prime p_;
  std::uint32_t residue_;
};

/// n! mod p (zero as soon as n >= p).
Fp factorial_mod(std::uint64_t n, Prime p);

/// Binomial coefficient C(n, k) mod p, computed by the Pascal recurrence so
/// no division is involved.  C(n, k) = 0 for k > n.
Fp binomial_mod(std::uint64_t n, std::uint64_t k, Prime p);

/// Inverse of a raw residue; helper shared with the dense elimination code.
std::uint32_t inverse_mod(std::uint32_t value, std::uint32_t p);

}  // namespace freespan
