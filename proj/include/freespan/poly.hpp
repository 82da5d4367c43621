#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "freespan/gfp.hpp"
#include "freespan/word.hpp"

namespace freespan {

/// An element of the free associative algebra k<x1, x2, ...> over GF(p),
/// stored sparsely as word -> coefficient.  Invariants: no zero coefficients
/// are ever stored, and residues are reduced into [1, p).  Two polynomials
/// are equal iff their term maps are equal, so representation is canonical.
class Polynomial {
 public:
  explicit Polynomial(Prime p) : p_(p) {}

  static Polynomial zero(Prime p) { return Polynomial(p); }
  static Polynomial one(Prime p) { return constant(p, 1); }
  static Polynomial constant(Prime p, std::int64_t c);
  static Polynomial monomial(Prime p, const Word& w, std::int64_t c = 1);
  static Polynomial variable(Prime p, std::uint32_t index);

  Prime prime() const { return p_; }
  const std::map<Word, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Fp coeff(const Word& w) const;
  /// Adds delta * w; keeps the representation canonical.
  Polynomial& add_term(const Word& w, std::int64_t delta);

  /// Deg-lex greatest word; calling this on zero is a usage_error.
  const Word& leading_word() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator*=(const Polynomial& rhs);
  /// *this += c * rhs.
  Polynomial& add_scaled(std::int64_t c, const Polynomial& rhs);
  Polynomial times(std::int64_t c) const;
  Polynomial pow(std::uint32_t e) const;

  /// The multidegree shared by all terms, or nullopt if the terms span more
  /// than one multidegree.  Zero reports the empty multidegree.
  std::optional<MultiDegree> homogeneous_multidegree() const;
  /// The part of *this lying in the given slice.
  Polynomial component(const MultiDegree& d) const;
  /// Splits into multihomogeneous components; their sum is *this.
  std::map<MultiDegree, Polynomial> components() const;

  std::set<std::uint32_t> variables() const;
  std::uint32_t max_variable() const;

  bool operator==(const Polynomial& rhs) const {
    return p_ == rhs.p_ && terms_ == rhs.terms_;
  }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

 private:
  void check_same_prime(const Polynomial& rhs) const;

  Prime p_;
  std::map<Word, std::uint32_t> terms_;
};

/// [a, b] = a*b - b*a.
Polynomial commutator(const Polynomial& a, const Polynomial& b);

/// Left-normed commutator [x, y, y, ..., y] with n >= 1 copies of y,
/// bracketing from the left: [[..[x, y], y], .., y].
Polynomial left_normed_commutator(const Polynomial& x, const Polynomial& y,
                                  std::uint32_t n);

/// Left-normed commutator [a1, a2, ..., ak] over a list (k >= 2).
Polynomial left_normed_commutator(const std::vector<Polynomial>& entries);

/// A substitution x_i -> image.  Variables without an explicit image map to
/// themselves.  Unless `unital_allowed` is set, every image must be
/// constant-free (no empty-word term); that is checked at construction.
class Substitution {
 public:
  Substitution(Prime p, std::map<std::uint32_t, Polynomial> images,
               bool unital_allowed = false);

  Prime prime() const { return p_; }
  bool unital_allowed() const { return unital_allowed_; }
  /// Null when the variable maps to itself.
  const Polynomial* image(std::uint32_t var) const;

 private:
  Prime p_;
  std::map<std::uint32_t, Polynomial> images_;
  bool unital_allowed_;
};

/// Applies a substitution; this is the algebra endomorphism determined by
/// the variable images.
Polynomial substitute(const Polynomial& f, const Substitution& s);

/// Substitutes a word for every variable (w_images[var] = word).  Every
/// variable of f must have an image.  Fast path used by the generator
/// streams; equivalent to `substitute` with monomial images.
Polynomial substitute_words(const Polynomial& f,
                            const std::map<std::uint32_t, Word>& w_images);

}  // namespace freespan
