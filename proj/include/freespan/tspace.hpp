#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freespan/poly.hpp"
#include "freespan/symmetric.hpp"

namespace freespan {

/// Caps on the exhaustive enumerations.  A truncated enumeration never turns
/// into a wrong answer: membership reports BudgetExceeded and dimension
/// queries raise budget_error instead.
struct Budget {
  std::uint64_t max_generators = 5'000'000;
  std::uint64_t max_dimension = 1'000'000;
  std::chrono::milliseconds time_limit = std::chrono::milliseconds(600'000);
};

/// A substitution-closed subspace, described by one of three generator
/// recipes.  What a family spans inside one multidegree slice:
///
///  * R(n, d): products of j <= n factors, each factor an instance
///    S_d(m1, ..., md) with monomial (nonempty word) arguments.
///  * L(n):    products of j <= n factors, each factor either a p-th power
///    m^p of a word or an instance S_p(m1, ..., mp).
///  * T[g1; ...]: monomial-substitution instances of the generators and of
///    their full multilinearizations in every subset of repeated variables.
///
/// For R and L these spanning sets are exact: expanding polynomial
/// substitutions multilinearly (for S_d) or via the Frobenius/multinomial
/// expansion (for p-th powers) rewrites every element of the subspace as a
/// combination of the listed generators, so Member and NotMember verdicts
/// both hold over GF(p).  For T[...] the multilinearizations are honest
/// members (each one is an integer inclusion-exclusion sum of instances), so
/// Member verdicts are sound; NotMember verdicts are relative to this
/// polarized span, which coincides with the slice of the subspace over an
/// infinite extension field whenever each generator's variable degrees are
/// all below p.  Families whose generators are all multilinear and
/// multihomogeneous need no polarization and stay exact.
struct GeneratorFamily {
  enum class Kind { R, L, TSpace };

  Kind kind = Kind::R;
  std::uint32_t n = 1;                  // R, L: number of factors allowed
  std::uint32_t d = 1;                  // R: the symmetric degree
  std::vector<Polynomial> generators;   // TSpace only

  static GeneratorFamily r_family(std::uint32_t n, std::uint32_t d);
  static GeneratorFamily l_family(std::uint32_t n);
  /// Generators must be nonzero and constant-free.
  static GeneratorFamily t_space_of(std::vector<Polynomial> generators);

  /// True when slice membership against this family is exact over GF(p)
  /// (always for R and L; for TSpace when no polarization is needed).
  bool exact_semantics() const;
  std::string to_string() const;  // "R(n=2,d=3)" form
};

/// All words of the given multidegree, in ascending deg-lex order.  The
/// count (a multinomial coefficient) is checked against max_count first.
std::vector<Word> enumerate_words(const MultiDegree& d,
                                  std::uint64_t max_count = Budget{}.max_dimension);

/// Number of words of the given multidegree, saturated at 2^63 on overflow.
std::uint64_t count_words(const MultiDegree& d);

/// All ordered tuples of `parts` nonzero multidegrees summing componentwise
/// to `target`, in a fixed deterministic order.
std::vector<std::vector<MultiDegree>> split_multidegree(const MultiDegree& target,
                                                        std::uint32_t parts);

/// How one generator was produced; `describe()` renders it in the expression
/// syntax, so `parse_expression(describe(), p)` reproduces the polynomial.
class GenInfo {
 public:
  struct Factor {
    bool is_power = false;        // m^e rather than an S_d instance
    Word base;                    // is_power: the word m
    std::uint32_t exponent = 0;   // is_power: e
    std::vector<Word> args;       // !is_power: S_{args.size()}(args)
  };

  static GenInfo product(std::vector<Factor> factors);
  static GenInfo instance(const Polynomial* poly);

  std::string describe() const;

 private:
  std::vector<Factor> factors_;
  const Polynomial* instance_ = nullptr;  // borrowed; valid during the callback
};

/// Receives (running index, generator, provenance); return false to stop.
using GenSink =
    std::function<bool(std::uint64_t, const Polynomial&, const GenInfo&)>;

struct StreamResult {
  std::uint64_t emitted = 0;
  bool complete = true;  // false when a budget stopped the stream
};

/// Streams the family's spanning set for one slice in a deterministic order.
/// Zero polynomials are skipped.  Stops early when the sink returns false
/// (still reported as complete) or when the budget runs out (complete =
/// false).
StreamResult family_generators(const GeneratorFamily& family,
                               const MultiDegree& slice, Prime p,
                               const Budget& budget, const GenSink& sink);

/// Row-reduced spanning basis of a subspace of one slice.  Pivots are
/// deg-lex greatest words; each row is monic at its pivot and every pivot
/// word appears in exactly one row, so reduction against the basis has a
/// unique result.
class SpanBasis {
 public:
  SpanBasis(Prime p, const MultiDegree& slice,
            std::uint64_t max_dimension = Budget{}.max_dimension);
  ~SpanBasis();
  SpanBasis(SpanBasis&&) noexcept;
  SpanBasis& operator=(SpanBasis&&) noexcept;

  Prime prime() const { return p_; }
  const MultiDegree& slice() const { return slice_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t dimension() const;

  /// Reduces g against the basis and, if a nonzero remainder is left,
  /// normalizes it and adds it as a new row.  Returns the new monic row
  /// (zero iff g was already in the span).  g must be zero or
  /// multihomogeneous of the basis slice.
  Polynomial insert(const Polynomial& g);

  /// Reduction without insertion.
  Polynomial reduce(const Polynomial& g) const;

  /// The rows, keyed by pivot word.
  std::map<Word, Polynomial> rows() const;

 private:
  friend struct SpanBasisAccess;
  struct Impl;

  Prime p_;
  MultiDegree slice_;
  std::vector<Word> words_;
  std::unique_ptr<Impl> impl_;
};

enum class MembershipStatus { Member, NotMember, BudgetExceeded };
enum class SpanSemantics { Exact, Polarized };

struct CertificateEntry {
  std::string generator;  // expression-syntax text of the generator
  Fp coefficient;
};

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::NotMember;
  /// Present on Member when requested: target = sum coeff * generator.
  std::optional<std::vector<CertificateEntry>> certificate;
  std::uint64_t generators_used = 0;
  std::uint64_t dimension = 0;
  SpanSemantics semantics = SpanSemantics::Exact;
  MultiDegree slice;
  /// Fully reduced remainder of the target (zero iff Member).
  std::optional<Polynomial> residue;
};

/// Decides whether `target` lies in the family's span of its own slice.
/// The target must be multihomogeneous (usage_error otherwise, listing the
/// component multidegrees); the zero polynomial is trivially a member.
/// NotMember is only reported after the complete spanning set has been
/// enumerated; a truncated enumeration yields BudgetExceeded.
MembershipVerdict membership(const Polynomial& target,
                             const GeneratorFamily& family,
                             const Budget& budget = Budget{},
                             bool want_certificate = false);

/// Dimension of the family's span of the slice; budget_error if the
/// enumeration was truncated.
std::uint64_t span_dimension(const GeneratorFamily& family,
                             const MultiDegree& slice, Prime p,
                             const Budget& budget = Budget{});

const char* to_string(MembershipStatus s);
const char* to_string(SpanSemantics s);

}  // namespace freespan
