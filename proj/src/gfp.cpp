#include "freespan/gfp.hpp"

#include <vector>

namespace freespan {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Prime::Prime(std::uint32_t value) : value_(value) {
  if (value < 2 || value > 65536 || !is_prime(value)) {
    throw usage_error("modulus must be a prime in [2, 2^16], got " +
                      std::to_string(value));
  }
}

Fp::Fp(Prime p, std::int64_t value) : p_(p) {
  const std::int64_t m = static_cast<std::int64_t>(p.value());
  std::int64_t r = value % m;
  if (r < 0) r += m;
  residue_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same_prime(Fp rhs) const {
  if (p_ != rhs.p_) {
    throw usage_error("mixed moduli: GF(" + std::to_string(p_.value()) +
                      ") vs GF(" + std::to_string(rhs.p_.value()) + ")");
  }
}

Fp Fp::operator-() const {
  return Fp(p_, residue_ == 0 ? 0 : static_cast<std::int64_t>(p_.value()) - residue_);
}

Fp Fp::operator+(Fp rhs) const {
  check_same_prime(rhs);
  return Fp(p_, static_cast<std::int64_t>(residue_) + rhs.residue_);
}

Fp Fp::operator-(Fp rhs) const {
  check_same_prime(rhs);
  return Fp(p_, static_cast<std::int64_t>(residue_) - rhs.residue_);
}

Fp Fp::operator*(Fp rhs) const {
  check_same_prime(rhs);
  return Fp(p_, static_cast<std::int64_t>(residue_) * rhs.residue_);
}

Fp Fp::inv() const {
  return Fp(p_, inverse_mod(residue_, p_.value()));
}

Fp Fp::pow(std::uint64_t e) const {
  std::uint64_t base = residue_;
  std::uint64_t acc = 1;
  const std::uint64_t m = p_.value();
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return Fp(p_, static_cast<std::int64_t>(acc));
}

std::uint32_t inverse_mod(std::uint32_t value, std::uint32_t p) {
  if (value % p == 0) throw usage_error("zero has no inverse");
  // Extended Euclid on (value, p).
  std::int64_t a = value % p, b = p;
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  x0 %= static_cast<std::int64_t>(p);
  if (x0 < 0) x0 += p;
  return static_cast<std::uint32_t>(x0);
}

Fp factorial_mod(std::uint64_t n, Prime p) {
  if (n >= p.value()) return Fp::zero(p);  // the product contains p
  std::uint64_t acc = 1;
  const std::uint64_t m = p.value();
  for (std::uint64_t i = 2; i <= n; ++i) acc = acc * i % m;
  return Fp(p, static_cast<std::int64_t>(acc));
}

Fp binomial_mod(std::uint64_t n, std::uint64_t k, Prime p) {
  if (k > n) return Fp::zero(p);
  if (k > n - k) k = n - k;
  const std::uint64_t m = p.value();
  // Row of Pascal's triangle mod p, built additively.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t top = std::min(i, k);
    for (std::uint64_t j = top; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          (row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1]) % m;
    }
  }
  return Fp(p, static_cast<std::int64_t>(row[static_cast<std::size_t>(k)]));
}

}  // namespace freespan
