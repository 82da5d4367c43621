#include "freespan/suite.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "freespan/expr.hpp"
#include "freespan/parse.hpp"
#include "freespan/symmetric.hpp"

namespace freespan {

namespace {

using nlohmann::ordered_json;

// Shared state while one check runs: the run functions below fill details /
// failures / memberships and the driver turns that into a report record.
struct CheckRun {
  const SuiteOptions& opt;
  std::string check_id;
  ordered_json parameters = ordered_json::object();
  std::vector<std::string> details;
  std::vector<std::string> failures;
  std::vector<std::string> labels;
  ordered_json memberships = ordered_json::array();
  std::vector<MembershipRecord>* records = nullptr;
  bool budget_hit = false;

  bool prime_selected(std::uint32_t p) const {
    return !opt.p_override || *opt.p_override == p;
  }

  void identity(const std::string& name, const Polynomial& lhs,
                const Polynomial& rhs) {
    if (lhs == rhs) {
      details.push_back(name + ": equal");
    } else {
      failures.push_back(name + ": residue " + format(lhs - rhs));
    }
  }

  void property(const std::string& name, bool ok,
                const std::string& counterexample) {
    if (ok) {
      details.push_back(name + ": ok");
    } else {
      failures.push_back(name + ": " + counterexample);
    }
  }

  void membership_check(const std::string& name, const Polynomial& target,
                        const GeneratorFamily& family,
                        MembershipStatus expected) {
    MembershipVerdict verdict =
        membership(target, family, opt.budget, opt.certificates);

    bool cert_ok = false;
    if (opt.certificates && verdict.status == MembershipStatus::Member &&
        verdict.certificate) {
      Polynomial rebuilt = Polynomial::zero(target.prime());
      for (const CertificateEntry& e : *verdict.certificate) {
        rebuilt.add_scaled(static_cast<std::int64_t>(e.coefficient.residue()),
                           parse_expression(e.generator, target.prime()));
      }
      cert_ok = rebuilt == target;
    }

    ordered_json rec;
    rec["name"] = name;
    rec["target"] = format(target);
    rec["family"] = family.to_string();
    rec["slice"] = verdict.slice.to_string();
    rec["expected"] = to_string(expected);
    rec["status"] = to_string(verdict.status);
    rec["semantics"] = to_string(verdict.semantics);
    rec["dimension"] = verdict.dimension;
    rec["generators_used"] = verdict.generators_used;
    if (verdict.status == MembershipStatus::NotMember && verdict.residue) {
      rec["residue"] = format(*verdict.residue);
    }
    if (opt.certificates && verdict.certificate) {
      ordered_json cert = ordered_json::array();
      for (const CertificateEntry& e : *verdict.certificate) {
        cert.push_back(ordered_json::array(
            {e.coefficient.residue(), e.generator}));
      }
      rec["certificate"] = std::move(cert);
      if (verdict.status == MembershipStatus::Member) {
        rec["certificate_verified"] = cert_ok;
      }
    }
    memberships.push_back(rec);

    if (records) {
      records->push_back(MembershipRecord{check_id, name, target,
                                          family.to_string(), expected, verdict,
                                          cert_ok});
    }

    if (verdict.status == expected) {
      details.push_back(name + ": " + to_string(verdict.status));
      if (opt.certificates && verdict.status == MembershipStatus::Member &&
          !cert_ok) {
        failures.push_back(name + ": certificate did not re-expand to the target");
      }
    } else if (verdict.status == MembershipStatus::BudgetExceeded) {
      budget_hit = true;
      details.push_back(name + ": budget exceeded before a verdict");
    } else {
      std::string what = name + ": expected " + to_string(expected) + ", got " +
                         to_string(verdict.status);
      if (verdict.residue && !verdict.residue->is_zero()) {
        what += "; residue " + format(*verdict.residue);
      }
      failures.push_back(what);
    }
  }
};

Polynomial var(Prime p, std::uint32_t i) { return Polynomial::variable(p, i); }

std::vector<Polynomial> first_vars(Prime p, std::uint32_t count,
                                   std::uint32_t start = 1) {
  std::vector<Polynomial> out;
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(var(p, start + i));
  return out;
}

MultiDegree all_ones(std::uint32_t count) {
  MultiDegree d;
  for (std::uint32_t i = 1; i <= count; ++i) d.add(i, 1);
  return d;
}

// Deterministic generator: the standard library shuffles and distributions
// are implementation-defined, so randomized checks roll their own.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t below(std::uint64_t n) { return gen() % n; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }
};

Word random_word(Rng& rng, std::size_t length, std::uint32_t num_vars) {
  std::vector<std::uint32_t> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back(1 + static_cast<std::uint32_t>(rng.below(num_vars)));
  }
  return Word(letters);
}

// ---- section 2: recursions and one-factor membership ----------------------

void run_c21(CheckRun& c, int which) {
  c.parameters["p"] = {2, 3, 5};
  c.parameters["d"] = {1, 2, 3, 4, 5};
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    for (std::uint32_t d = 1; d <= 5; ++d) {
      const std::vector<Polynomial> xs = first_vars(p, d + 1);
      const Polynomial lhs = s_d(xs);
      Polynomial rhs = Polynomial::zero(p);
      if (which == 0) {
        // S_{d+1} = sum_i S_d(..., ^x_i, ...) * x_i
        for (std::uint32_t i = 0; i < d + 1; ++i) {
          std::vector<Polynomial> args = xs;
          args.erase(args.begin() + i);
          rhs += s_d(args) * xs[i];
        }
      } else if (which == 1) {
        // S_{d+1} = S_d * x_{d+1} + sum_i S_d(..., x_{d+1}*x_i, ...)
        std::vector<Polynomial> head(xs.begin(), xs.end() - 1);
        rhs = s_d(head) * xs[d];
        for (std::uint32_t i = 0; i < d; ++i) {
          std::vector<Polynomial> args = head;
          args[i] = xs[d] * xs[i];
          rhs += s_d(args);
        }
      } else {
        // S_{d+1} = x_{d+1} * S_d + sum_i S_d(..., x_i*x_{d+1}, ...)
        std::vector<Polynomial> head(xs.begin(), xs.end() - 1);
        rhs = xs[d] * s_d(head);
        for (std::uint32_t i = 0; i < d; ++i) {
          std::vector<Polynomial> args = head;
          args[i] = xs[i] * xs[d];
          rhs += s_d(args);
        }
      }
      c.identity("p=" + std::to_string(pv) + " d=" + std::to_string(d), lhs, rhs);
    }
  }
}

void run_c22(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["d"] = {2, 3};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  for (std::uint32_t d : {2u, 3u}) {
    const Polynomial sd = s_d(first_vars(p, d));
    const Word x1{1};
    const Word fresh1{d + 1};
    const Word fresh2{d + 2};
    const std::vector<Word> us = {x1,          fresh1,          x1 * x1,
                                  x1 * fresh1, fresh1 * x1,     fresh1 * fresh2};
    for (const Word& u : us) {
      const Polynomial target = commutator(sd, Polynomial::monomial(p, u));
      c.membership_check("d=" + std::to_string(d) + " u=" + format(u), target,
                         GeneratorFamily::r_family(1, d),
                         MembershipStatus::Member);
    }
  }
}

void run_c23(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["d"] = {2, 3};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  for (std::uint32_t d : {2u, 3u}) {
    const Polynomial target =
        s_d(first_vars(p, d + 1)) - s_d(first_vars(p, d)) * var(p, d + 1);
    c.membership_check("d=" + std::to_string(d), target,
                       GeneratorFamily::r_family(1, d), MembershipStatus::Member);
  }
}

void run_c24(CheckRun& c) {
  c.parameters["instances"] = {"d=2,p=3", "d=3,p=2", "d=2,p=5"};
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> pins = {
      {2, 3}, {3, 2}, {2, 5}};
  for (const auto& [d, pv] : pins) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    const Polynomial target =
        s_d(first_vars(p, d + 1)).times(static_cast<std::int64_t>(d));
    c.membership_check("d=" + std::to_string(d) + " p=" + std::to_string(pv),
                       target, GeneratorFamily::r_family(1, d),
                       MembershipStatus::Member);
  }
}

void run_c25(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["d"] = {2};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const Polynomial s2 = s_d(first_vars(p, 2));
  c.membership_check("x3*S_2", var(p, 3) * s2, GeneratorFamily::r_family(1, 2),
                     MembershipStatus::Member);
  c.membership_check("S_2*x3", s2 * var(p, 3), GeneratorFamily::r_family(1, 2),
                     MembershipStatus::Member);
}

void run_c26(CheckRun& c) {
  c.parameters["p"] = {2};
  c.parameters["d"] = {2};
  c.parameters["slice"] = all_ones(6).to_string();
  if (!c.prime_selected(2)) return;
  const Prime p(2);
  const Polynomial target = s_d(first_vars(p, 2)) * s_d(first_vars(p, 2, 3)) *
                            s_d(first_vars(p, 2, 5));
  c.membership_check("three-factor product", target,
                     GeneratorFamily::r_family(2, 2), MembershipStatus::Member);
}

void run_c26_stretch(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["d"] = {3};
  c.parameters["slice"] = all_ones(9).to_string();
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const Polynomial target = s_d(first_vars(p, 3)) * s_d(first_vars(p, 3, 4)) *
                            s_d(first_vars(p, 3, 7));
  c.membership_check("three-factor product (stretch)", target,
                     GeneratorFamily::r_family(2, 3), MembershipStatus::Member);
}

// ---- section 3: subset words, linearization, power families ---------------

Polynomial subset_sum(Prime p, std::uint32_t n, std::uint32_t size,
                      std::uint32_t z1, std::uint32_t z2) {
  Polynomial out = Polynomial::zero(p);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != size) continue;
    std::set<std::uint32_t> slots;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) slots.insert(i + 1);
    }
    out.add_term(x_subset_word(n, slots, z1, z2), 1);
  }
  return out;
}

void run_c31a(CheckRun& c) {
  c.parameters["p"] = {3};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const std::uint32_t pv = 3;
  const Polynomial lhs = subset_sum(p, 2 * pv, pv, 1, 2);
  Polynomial rhs = Polynomial::monomial(p, Word{1}.pow(pv) * Word{2}.pow(pv)) +
                   Polynomial::monomial(p, Word{2}.pow(pv) * Word{1}.pow(pv));
  for (std::uint32_t j = 1; j < pv; ++j) {
    rhs += subset_sum(p, pv, j, 1, 2) * subset_sum(p, pv, pv - j, 1, 2);
  }
  c.identity("p=3 split of the half-size subset sum", lhs, rhs);
}

void run_c31b(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["j"] = {1, 2};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const std::uint32_t pv = 3;
  for (std::uint32_t j = 1; j < pv; ++j) {
    const Polynomial lhs = s_partial(var(p, 1), var(p, 2), j, p);
    const Fp scale = factorial_mod(j, p) * factorial_mod(pv - j, p);
    const Polynomial rhs =
        subset_sum(p, pv, j, 1, 2).times(static_cast<std::int64_t>(scale.residue()));
    c.identity("j=" + std::to_string(j), lhs, rhs);
  }
}

void run_c32(CheckRun& c) {
  c.parameters["p"] = {2, 3, 5};
  c.parameters["d"] = {2, 3, 4};
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    for (std::uint32_t d : {2u, 3u, 4u}) {
      const std::vector<Polynomial> xs = first_vars(p, d);
      c.identity("p=" + std::to_string(pv) + " d=" + std::to_string(d),
                 linearize_inclusion_exclusion(xs), s_d(xs));
    }
  }
}

void run_c33(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["slices"] = {"{x1:1, x2:2}", all_ones(3).to_string()};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  std::vector<MultiDegree> slices;
  {
    MultiDegree s;
    s.add(1, 1);
    s.add(2, 2);
    slices.push_back(s);
  }
  slices.push_back(all_ones(3));
  for (const MultiDegree& slice : slices) {
    std::vector<Polynomial> gens;
    family_generators(GeneratorFamily::r_family(1, 3), slice, p, c.opt.budget,
                      [&](std::uint64_t, const Polynomial& g, const GenInfo&) {
                        gens.push_back(g);
                        return true;
                      });
    std::size_t index = 0;
    for (const Polynomial& g : gens) {
      c.membership_check(
          "slice " + slice.to_string() + " generator " + std::to_string(index++),
          g, GeneratorFamily::l_family(1), MembershipStatus::Member);
    }
  }
}

void run_c34(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["slice"] = "{x1:3, x2:3, x3:3}";
  c.labels.push_back("derived-expectation");
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const Polynomial target = Polynomial::monomial(
      p, Word{1}.pow(3) * Word{2}.pow(3) * Word{3}.pow(3));
  c.membership_check("x1^3*x2^3*x3^3", target, GeneratorFamily::l_family(2),
                     MembershipStatus::Member);
}

// ---- section 4: commutator expansions --------------------------------------

void run_c41(CheckRun& c) {
  c.parameters["p"] = {2, 3, 5};
  c.parameters["n"] = {1, 2, 3, 4, 5, 6, 7, 8};
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const Polynomial lhs = left_normed_commutator(var(p, 1), var(p, 2), n);
      Polynomial rhs = Polynomial::zero(p);
      for (std::uint32_t i = 1; i <= n + 1; ++i) {
        const std::int64_t sign = (i % 2 == 1) ? 1 : -1;
        const Fp coeff = binomial_mod(n, i - 1, p);
        rhs.add_scaled(sign * static_cast<std::int64_t>(coeff.residue()),
                       Polynomial::monomial(p, m_word(i, n, 1, 2)));
      }
      c.identity("p=" + std::to_string(pv) + " n=" + std::to_string(n), lhs, rhs);
    }
  }
}

void run_c42(CheckRun& c) {
  c.parameters["p"] = {2, 3, 5, 7, 11};
  for (std::uint32_t pv : {2u, 3u, 5u, 7u, 11u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    bool ok = true;
    std::string bad;
    for (std::uint64_t i = 0; i <= pv - 1; ++i) {
      const Fp expected = Fp(p, (i % 2 == 0) ? 1 : -1);
      if (binomial_mod(pv - 1, i, p) != expected) {
        ok = false;
        bad = "i=" + std::to_string(i) + ": C(p-1,i)=" +
              std::to_string(binomial_mod(pv - 1, i, p).residue());
        break;
      }
    }
    c.property("p=" + std::to_string(pv) + " C(p-1,i)=(-1)^i for all i", ok, bad);
  }
}

void run_c43(CheckRun& c) {
  c.parameters["p"] = {3, 5};
  for (std::uint32_t pv : {3u, 5u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    const Polynomial lhs = left_normed_commutator(var(p, 1), var(p, 2), pv - 1);
    Polynomial rhs = Polynomial::zero(p);
    for (std::uint32_t i = 1; i <= pv; ++i) {
      rhs.add_term(m_word(i, pv - 1, 1, 2), 1);
    }
    c.identity("p=" + std::to_string(pv), lhs, rhs);
  }
}

void run_c44(CheckRun& c) {
  c.parameters["p"] = {3, 5, 7};
  for (std::uint32_t pv : {3u, 5u, 7u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    const Polynomial lhs = s_partial(var(p, 1), var(p, 2), 1, p);
    const Polynomial rhs = -left_normed_commutator(var(p, 1), var(p, 2), pv - 1);
    c.identity("p=" + std::to_string(pv), lhs, rhs);
  }
}

void run_c45(CheckRun& c) {
  c.parameters["p"] = {3, 5};
  for (std::uint32_t pv : {3u, 5u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    const Polynomial lhs = s_d(first_vars(p, pv));
    Polynomial rhs = Polynomial::zero(p);
    std::vector<std::uint32_t> tail;
    for (std::uint32_t i = 2; i <= pv; ++i) tail.push_back(i);
    do {
      std::vector<Polynomial> entries;
      entries.push_back(var(p, 1));
      for (std::uint32_t i : tail) entries.push_back(var(p, i));
      rhs += left_normed_commutator(entries);
    } while (std::next_permutation(tail.begin(), tail.end()));
    c.identity("p=" + std::to_string(pv), lhs, rhs);
  }
}

void run_c46(CheckRun& c) {
  c.parameters["p"] = {3};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const Polynomial comm = left_normed_commutator(var(p, 1), var(p, 2), 2);
  c.membership_check("[x1,x2,x2] in R(1,3)", comm,
                     GeneratorFamily::r_family(1, 3), MembershipStatus::Member);
  c.membership_check("S_3(x1,x2,x3) in T[[x1,x2,x2]]", s_d(first_vars(p, 3)),
                     GeneratorFamily::t_space_of({comm}),
                     MembershipStatus::Member);
}

// ---- section 5: the witness and the separations ----------------------------

void run_c51(CheckRun& c) {
  c.parameters["p"] = {3, 5};
  c.parameters["tuples_per_prime"] = 200;
  c.parameters["seed"] = c.opt.seed;
  for (std::uint32_t pv : {3u, 5u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    Rng rng(c.opt.seed * 1000003ull + pv);
    const Word xy = Word{1, 2}.pow(pv);
    const Word yx = Word{2, 1}.pow(pv);
    bool ok = true;
    std::string bad;
    for (int t = 0; t < 200 && ok; ++t) {
      // Distribute p copies of x1 and p copies of x2 over p nonempty words.
      std::vector<std::uint32_t> letters;
      for (std::uint32_t i = 0; i < pv; ++i) letters.push_back(1);
      for (std::uint32_t i = 0; i < pv; ++i) letters.push_back(2);
      rng.shuffle(letters);
      std::vector<std::vector<std::uint32_t>> slots;
      while (true) {
        slots.assign(pv, {});
        for (const std::uint32_t letter : letters) {
          slots[rng.below(pv)].push_back(letter);
        }
        if (std::none_of(slots.begin(), slots.end(),
                         [](const auto& s) { return s.empty(); })) {
          break;
        }
      }
      std::vector<Polynomial> args;
      std::string tuple;
      for (const auto& s : slots) {
        const Word w{std::vector<std::uint32_t>(s)};
        args.push_back(Polynomial::monomial(p, w));
        tuple += (tuple.empty() ? "" : ", ") + format(w);
      }
      const Polynomial f = s_d(args);
      if (!(f.coeff(xy) + f.coeff(yx)).is_zero()) {
        ok = false;
        bad = "tuple (" + tuple + "): coefficient sum " +
              std::to_string((f.coeff(xy) + f.coeff(yx)).residue());
      }
    }
    c.property("p=" + std::to_string(pv) + ": 200 tuples", ok, bad);
  }
}

void run_c52(CheckRun& c) {
  c.parameters["p"] = {3};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  c.membership_check("witness in R(1,3)", witness_w(p),
                     GeneratorFamily::r_family(1, 3),
                     MembershipStatus::NotMember);
}

void run_c53(CheckRun& c) {
  c.parameters["p"] = {3};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const Polynomial target = Polynomial::monomial(p, Word{1, 2}.pow(3));
  c.membership_check("(x1*x2)^3 in R(1,3)", target,
                     GeneratorFamily::r_family(1, 3),
                     MembershipStatus::NotMember);
  c.membership_check("(x1*x2)^3 in L(1)", target, GeneratorFamily::l_family(1),
                     MembershipStatus::Member);
}

void run_c54(CheckRun& c) {
  c.parameters["p"] = {3, 5};
  c.parameters["random_pairs_per_prime"] = 3;
  c.parameters["seed"] = c.opt.seed;
  for (std::uint32_t pv : {3u, 5u}) {
    if (!c.prime_selected(pv)) continue;
    const Prime p(pv);
    c.identity("p=" + std::to_string(pv) + " u=x1 v=x2",
               frobenius_expand(var(p, 1), var(p, 2), p),
               (var(p, 1) + var(p, 2)).pow(pv));
    Rng rng(c.opt.seed * 7919ull + pv);
    for (int t = 0; t < 3; ++t) {
      const auto random_poly = [&]() {
        Polynomial f = Polynomial::zero(p);
        const std::size_t terms = 1 + rng.below(2);
        for (std::size_t k = 0; k < terms; ++k) {
          const Word w = random_word(rng, 1 + rng.below(2), 2);
          f.add_term(w, 1 + static_cast<std::int64_t>(rng.below(pv - 1)));
        }
        return f;
      };
      const Polynomial u = random_poly();
      const Polynomial v = random_poly();
      c.identity("p=" + std::to_string(pv) + " random pair " + std::to_string(t) +
                     " (u=" + format(u) + ", v=" + format(v) + ")",
                 frobenius_expand(u, v, p), (u + v).pow(pv));
    }
  }
}

void run_c55(CheckRun& c) {
  c.parameters["p"] = {3};
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  c.membership_check("witness in L(1)", witness_w(p),
                     GeneratorFamily::l_family(1), MembershipStatus::NotMember);
  c.membership_check("witness in R(2,3)", witness_w(p),
                     GeneratorFamily::r_family(2, 3), MembershipStatus::Member);
}

void run_c56(CheckRun& c) {
  c.parameters["p"] = {3};
  c.parameters["tuples"] = 200;
  c.parameters["seed"] = c.opt.seed;
  if (!c.prime_selected(3)) return;
  const Prime p(3);
  const Substitution alpha(
      p, {{1, var(p, 1)}, {2, Polynomial::one(p)}}, /*unital_allowed=*/true);
  Rng rng(c.opt.seed * 6007ull + 3);
  bool ok = true;
  std::string bad;
  for (int t = 0; t < 200 && ok; ++t) {
    std::vector<Polynomial> args;
    std::string tuple;
    for (int k = 0; k < 3; ++k) {
      const Word w = random_word(rng, 1 + rng.below(4), 2);
      args.push_back(Polynomial::monomial(p, w));
      tuple += (tuple.empty() ? "" : ", ") + format(w);
    }
    const Polynomial image = substitute(s_d(args), alpha);
    if (!image.is_zero()) {
      ok = false;
      bad = "tuple (" + tuple + "): image " + format(image);
    }
  }
  c.property("p=3: 200 tuples map to zero", ok, bad);
}

// ---- roster -----------------------------------------------------------------

struct CheckDef {
  const char* id;
  const char* kind;
  const char* statement;
  void (*run)(CheckRun&);
};

void run_c21a(CheckRun& c) { run_c21(c, 0); }
void run_c21b(CheckRun& c) { run_c21(c, 1); }
void run_c21c(CheckRun& c) { run_c21(c, 2); }

const CheckDef kChecks[] = {
    {"C2.1a", "identity",
     "S_{d+1}(x1..x_{d+1}) equals the sum over i of S_d with slot i removed, "
     "multiplied by x_i on the right",
     run_c21a},
    {"C2.1b", "identity",
     "S_{d+1} equals S_d(x1..xd)*x_{d+1} plus the sum over i of S_d with slot "
     "i replaced by x_{d+1}*x_i",
     run_c21b},
    {"C2.1c", "identity",
     "S_{d+1} equals x_{d+1}*S_d(x1..xd) plus the sum over i of S_d with slot "
     "i replaced by x_i*x_{d+1}",
     run_c21c},
    {"C2.2", "membership",
     "[S_d(x1..xd), u] lies in the one-factor span R(1,d) for monomials u of "
     "degree at most 2",
     run_c22},
    {"C2.3", "membership",
     "S_{d+1} - S_d*x_{d+1} lies in the one-factor span R(1,d)", run_c23},
    {"C2.4", "membership", "d*S_{d+1} lies in the one-factor span R(1,d)",
     run_c24},
    {"C2.5", "membership",
     "x3*S_2(x1,x2) and S_2(x1,x2)*x3 lie in R(1,2) when the modulus does not "
     "divide d",
     run_c25},
    {"C2.6", "membership",
     "the three-factor product S_2(x1,x2)*S_2(x3,x4)*S_2(x5,x6) lies in the "
     "two-factor span R(2,2)",
     run_c26},
    {"C3.1a", "identity",
     "the sum of X_{2p}(U) over half-size subsets splits as x1^p*x2^p + "
     "x2^p*x1^p plus products of complementary subset sums",
     run_c31a},
    {"C3.1b", "identity",
     "S_p(x1 repeated j times, x2 repeated p-j times) equals j!(p-j)! times "
     "the sum of X_p(U) over size-j subsets",
     run_c31b},
    {"C3.2", "identity",
     "the inclusion-exclusion linearization of the d-th power equals S_d",
     run_c32},
    {"C3.3", "membership",
     "every one-factor R(1,3) generator lies in the span of L(1) at its slice",
     run_c33},
    {"C3.4", "membership",
     "x1^3*x2^3*x3^3 lies in the two-factor span L(2) at slice {x1:3, x2:3, "
     "x3:3}",
     run_c34},
    {"C4.1", "identity",
     "[x1, x2 repeated n times] equals the alternating binomial combination "
     "of the words M_i^{n+1}",
     run_c41},
    {"C4.2", "coefficient",
     "C(p-1, i) is congruent to (-1)^i for every 0 <= i <= p-1", run_c42},
    {"C4.3", "identity",
     "[x1, x2 repeated p-1 times] equals the plain sum of the words M_i^p",
     run_c43},
    {"C4.4", "identity",
     "S_p(x1, x2 repeated p-1 times) equals minus the left-normed commutator "
     "[x1, x2 repeated p-1 times]",
     run_c44},
    {"C4.5", "identity",
     "S_p(x1..xp) equals the sum of left-normed commutators [x1, "
     "x_{s(2)}, ..., x_{s(p)}] over permutations s of {2..p}",
     run_c45},
    {"C4.6", "membership",
     "[x1,x2,x2] lies in R(1,3), and S_3(x1,x2,x3) lies in the polarized span "
     "of the subspace generated by [x1,x2,x2]",
     run_c46},
    {"C5.1", "coefficient",
     "in S_p(u1..up), for word tuples of total multidegree {x1:p, x2:p}, the "
     "coefficients of (x1*x2)^p and (x2*x1)^p sum to zero",
     run_c51},
    {"C5.2", "non-membership",
     "the witness S_3(x1,x1,x2)*S_3(x2,x2,x1) is not in the one-factor span "
     "R(1,3)",
     run_c52},
    {"C5.3", "non-membership",
     "(x1*x2)^3 is not in R(1,3) but is a listed generator of L(1)", run_c53},
    {"C5.4", "identity",
     "(u+v)^p equals u^p + v^p plus the sum of (i!(p-i)!)^{-1} S_p(u "
     "repeated i times, v repeated p-i times)",
     run_c54},
    {"C5.5", "non-membership",
     "the witness is not in the span of L(1) but is in the span of R(2,3)",
     run_c55},
    {"C5.6", "identity",
     "the unital substitution x1 -> x1, x2 -> 1 maps every S_3(u1,u2,u3) to "
     "zero",
     run_c56},
    {"C2.6-stretch", "membership",
     "the three-factor product S_3(x1,x2,x3)*S_3(x4,x5,x6)*S_3(x7,x8,x9) lies "
     "in the two-factor span R(2,3); the slice has 9! words, so this usually "
     "exhausts the budget",
     run_c26_stretch},
};

const CheckDef* find_check(const std::string& id) {
  for (const CheckDef& def : kChecks) {
    if (id == def.id) return &def;
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> all_check_ids(bool include_stretch) {
  std::vector<std::string> out;
  for (const CheckDef& def : kChecks) {
    if (!include_stretch && std::string(def.id) == "C2.6-stretch") continue;
    out.push_back(def.id);
  }
  return out;
}

SuiteResult run_suite(const std::vector<std::string>& selection,
                      const SuiteOptions& options) {
  std::vector<std::string> ids =
      selection.empty() ? all_check_ids(options.stretch) : selection;
  for (const std::string& id : ids) {
    if (!find_check(id)) throw usage_error("unknown check id: " + id);
  }

  SuiteResult result;
  result.report["suite"] = "free-algebra verification suite";
  result.report["report_version"] = 1;
  ordered_json opts;
  opts["seed"] = options.seed;
  opts["stretch"] = options.stretch;
  opts["certificates"] = options.certificates;
  if (options.p_override) {
    opts["p"] = *options.p_override;
  } else {
    opts["p"] = nullptr;
  }
  ordered_json budget;
  budget["max_generators"] = options.budget.max_generators;
  budget["max_dimension"] = options.budget.max_dimension;
  budget["time_limit_ms"] = options.budget.time_limit.count();
  opts["budget"] = std::move(budget);
  result.report["options"] = std::move(opts);

  ordered_json checks = ordered_json::array();
  std::uint64_t passed = 0, failed = 0, skipped = 0;
  for (const std::string& id : ids) {
    const CheckDef& def = *find_check(id);
    CheckRun run{options};
    run.check_id = id;
    run.records = &result.records;
    const auto start = std::chrono::steady_clock::now();
    def.run(run);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    result.timings_ms[id] = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());

    std::string status;
    if (!run.failures.empty()) {
      status = "fail";
      ++failed;
    } else if (run.budget_hit) {
      status = "skipped-budget";
      ++skipped;
    } else {
      status = "pass";
      ++passed;
      if (run.details.empty()) {
        run.details.push_back("no pinned instance matches the prime filter");
      }
    }

    ordered_json rec;
    rec["id"] = id;
    rec["kind"] = def.kind;
    rec["statement"] = def.statement;
    rec["parameters"] = run.parameters;
    rec["status"] = status;
    if (!run.labels.empty()) rec["labels"] = run.labels;
    rec["details"] = run.details;
    if (!run.failures.empty()) rec["failures"] = run.failures;
    if (!run.memberships.empty()) rec["memberships"] = run.memberships;
    checks.push_back(std::move(rec));
  }
  result.report["checks"] = std::move(checks);

  ordered_json summary;
  summary["total"] = ids.size();
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["skipped_budget"] = skipped;
  result.report["summary"] = std::move(summary);

  result.all_passed = failed == 0 && skipped == 0;
  result.any_budget_skipped = skipped > 0;
  return result;
}

std::string report_table(const nlohmann::ordered_json& report) {
  std::ostringstream out;
  std::size_t id_width = 2;
  for (const auto& rec : report.at("checks")) {
    id_width = std::max(id_width, rec.at("id").get<std::string>().size());
  }
  for (const auto& rec : report.at("checks")) {
    const std::string id = rec.at("id").get<std::string>();
    const std::string status = rec.at("status").get<std::string>();
    out << id << std::string(id_width - id.size() + 2, ' ')
        << (status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "SKIP")
        << "  " << rec.at("statement").get<std::string>() << "\n";
    if (rec.contains("failures")) {
      for (const auto& f : rec.at("failures")) {
        out << std::string(id_width + 2, ' ') << "! " << f.get<std::string>()
            << "\n";
      }
    }
  }
  const auto& summary = report.at("summary");
  out << summary.at("passed").get<std::uint64_t>() << " passed, "
      << summary.at("failed").get<std::uint64_t>() << " failed, "
      << summary.at("skipped_budget").get<std::uint64_t>() << " budget-skipped of "
      << summary.at("total").get<std::uint64_t>() << " checks\n";
  return out.str();
}

}  // namespace freespan
