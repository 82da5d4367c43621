#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "freespan/poly.hpp"

namespace freespan {

/// Expanding S_d sums over all d! argument orders, so the degree is capped;
/// raise the cap explicitly if you really want a bigger expansion.
inline constexpr std::size_t kDefaultSdCap = 8;

/// S_d(a1, ..., ad) = sum over all permutations s of a_{s(1)} * ... * a_{s(d)}.
/// Multilinear and symmetric in its arguments; d = args.size() must satisfy
/// 1 <= d <= cap (a budget_error otherwise).
Polynomial s_d(std::span<const Polynomial> args, std::size_t cap = kDefaultSdCap);
Polynomial s_d(const std::vector<Polynomial>& args, std::size_t cap = kDefaultSdCap);

/// S_p(u, ..., u, v, ..., v) with i copies of u and p - i copies of v,
/// 0 <= i <= p.
Polynomial s_partial(const Polynomial& u, const Polynomial& v, std::uint32_t i,
                     Prime p, std::size_t cap = kDefaultSdCap);

/// The word of length n + 1 that is y everywhere except x in slot i
/// (1 <= i <= n + 1).
Word m_word(std::uint32_t i, std::uint32_t n, std::uint32_t x, std::uint32_t y);

/// The word of length n with z1 in the slots listed in U (a subset of
/// {1..n}) and z2 elsewhere.
Word x_subset_word(std::uint32_t n, const std::set<std::uint32_t>& U,
                   std::uint32_t z1, std::uint32_t z2);

/// The separating product
///   S_p(x,...,x,y,...,y) * S_p(y,...,y,x,...,x)
/// with (p+1)/2 leading copies of the first variable in each factor.
/// Defined for odd p only.
Polynomial witness_w(Prime p, std::uint32_t x = 1, std::uint32_t y = 2,
                     std::size_t cap = kDefaultSdCap);

/// u^p + v^p + sum_{i=1}^{p-1} (i! (p-i)!)^{-1} S_p(u, v; i); equal to
/// (u + v)^p as polynomials over GF(p).
Polynomial frobenius_expand(const Polynomial& u, const Polynomial& v, Prime p,
                            std::size_t cap = kDefaultSdCap);

/// sum over nonempty subsets T of {1..d} of (-1)^(d-|T|) (sum_{i in T} a_i)^d.
/// This inclusion-exclusion sum equals S_d(a1, ..., ad): it isolates the
/// multilinear part of the d-th power without dividing by anything.
Polynomial linearize_inclusion_exclusion(std::span<const Polynomial> args,
                                         std::size_t cap = kDefaultSdCap);
Polynomial linearize_inclusion_exclusion(const std::vector<Polynomial>& args,
                                         std::size_t cap = kDefaultSdCap);

/// Full multilinearization of `g` in `var`: every term of g must contain
/// `var` exactly fresh.size() times, and each occurrence is relabelled with
/// the fresh variables in every possible way.  The result is multilinear in
/// the fresh variables and equals the iterated inclusion-exclusion sum
///   sum_{nonempty T subset of fresh} (-1)^(|fresh|-|T|) g(var -> sum of T),
/// so it is an honest element of the T-space generated by g.
Polynomial polarize_full(const Polynomial& g, std::uint32_t var,
                         const std::vector<std::uint32_t>& fresh);

}  // namespace freespan
