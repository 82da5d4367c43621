#include "freespan/symmetric.hpp"

#include <algorithm>
#include <numeric>

namespace freespan {

Polynomial s_d(std::span<const Polynomial> args, std::size_t cap) {
  const std::size_t d = args.size();
  if (d == 0) throw usage_error("S_d needs at least one argument");
  if (d > cap) {
    throw budget_error("S_" + std::to_string(d) + " exceeds the expansion cap of " +
                       std::to_string(cap));
  }
  const Prime p = args[0].prime();
  for (const Polynomial& a : args) {
    if (a.prime() != p) throw usage_error("S_d arguments over mixed moduli");
  }
  Polynomial out(p);
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    Polynomial prod = args[idx[0]];
    for (std::size_t k = 1; k < d; ++k) prod *= args[idx[k]];
    out += prod;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

Polynomial s_d(const std::vector<Polynomial>& args, std::size_t cap) {
  return s_d(std::span<const Polynomial>(args.data(), args.size()), cap);
}

Polynomial s_partial(const Polynomial& u, const Polynomial& v, std::uint32_t i,
                     Prime p, std::size_t cap) {
  if (i > p.value()) throw usage_error("s_partial needs 0 <= i <= p");
  std::vector<Polynomial> args;
  args.reserve(p.value());
  for (std::uint32_t k = 0; k < i; ++k) args.push_back(u);
  for (std::uint32_t k = i; k < p.value(); ++k) args.push_back(v);
  return s_d(args, cap);
}

Word m_word(std::uint32_t i, std::uint32_t n, std::uint32_t x, std::uint32_t y) {
  if (i < 1 || i > n + 1) throw usage_error("slot index out of range");
  std::vector<std::uint32_t> letters(n + 1, y);
  letters[i - 1] = x;
  return Word(std::move(letters));
}

Word x_subset_word(std::uint32_t n, const std::set<std::uint32_t>& U,
                   std::uint32_t z1, std::uint32_t z2) {
  std::vector<std::uint32_t> letters(n, z2);
  for (std::uint32_t slot : U) {
    if (slot < 1 || slot > n) throw usage_error("subset slot out of range");
    letters[slot - 1] = z1;
  }
  return Word(std::move(letters));
}

Polynomial witness_w(Prime p, std::uint32_t x, std::uint32_t y, std::size_t cap) {
  if (p.value() == 2) throw usage_error("the witness product needs an odd prime");
  if (x == y) throw usage_error("the witness product needs two distinct variables");
  const std::uint32_t half_up = (p.value() + 1) / 2;
  const Polynomial xv = Polynomial::variable(p, x);
  const Polynomial yv = Polynomial::variable(p, y);
  return s_partial(xv, yv, half_up, p, cap) * s_partial(yv, xv, half_up, p, cap);
}

Polynomial frobenius_expand(const Polynomial& u, const Polynomial& v, Prime p,
                            std::size_t cap) {
  if (u.prime() != p || v.prime() != p) {
    throw usage_error("frobenius_expand arguments over wrong modulus");
  }
  if (p.value() > cap) {
    throw budget_error("frobenius expansion of degree " +
                       std::to_string(p.value()) + " exceeds the cap of " +
                       std::to_string(cap));
  }
  Polynomial out = u.pow(p.value()) + v.pow(p.value());
  for (std::uint32_t i = 1; i < p.value(); ++i) {
    const Fp denom = factorial_mod(i, p) * factorial_mod(p.value() - i, p);
    out.add_scaled(denom.inv().residue(), s_partial(u, v, i, p, cap));
  }
  return out;
}

Polynomial linearize_inclusion_exclusion(std::span<const Polynomial> args,
                                         std::size_t cap) {
  const std::size_t d = args.size();
  if (d == 0) throw usage_error("linearization needs at least one argument");
  if (d > cap) {
    throw budget_error("linearization of degree " + std::to_string(d) +
                       " exceeds the expansion cap of " + std::to_string(cap));
  }
  const Prime p = args[0].prime();
  Polynomial out(p);
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    Polynomial base(p);
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (1u << i)) base += args[i];
    }
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    const std::int64_t sign = ((d - size) % 2 == 0) ? 1 : -1;
    out.add_scaled(sign, base.pow(static_cast<std::uint32_t>(d)));
  }
  return out;
}

Polynomial linearize_inclusion_exclusion(const std::vector<Polynomial>& args,
                                         std::size_t cap) {
  return linearize_inclusion_exclusion(
      std::span<const Polynomial>(args.data(), args.size()), cap);
}

Polynomial polarize_full(const Polynomial& g, std::uint32_t var,
                         const std::vector<std::uint32_t>& fresh) {
  const std::size_t m = fresh.size();
  if (m == 0) throw usage_error("polarization needs at least one fresh variable");
  const Prime p = g.prime();
  Polynomial out(p);
  std::vector<std::size_t> assignment(m);
  for (const auto& [w, c] : g.terms()) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == var) positions.push_back(i);
    }
    if (positions.size() != m) {
      throw usage_error("polarization: term does not contain x" +
                        std::to_string(var) + " exactly " + std::to_string(m) +
                        " times");
    }
    std::iota(assignment.begin(), assignment.end(), 0);
    do {
      std::vector<std::uint32_t> letters = w.letters();
      for (std::size_t j = 0; j < m; ++j) {
        letters[positions[j]] = fresh[assignment[j]];
      }
      out.add_term(Word(std::move(letters)), c);
    } while (std::next_permutation(assignment.begin(), assignment.end()));
  }
  return out;
}

}  // namespace freespan
