#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "freespan/errors.hpp"

namespace freespan {

/// A word in the free monoid on the alphabet {x1, x2, ...}: a finite sequence
/// of variable indices (each >= 1).  The empty word is the unit.
///
/// Words are totally ordered degree-first, then lexicographically
/// ("deg-lex"); this order is global across all degrees and is what the
/// elimination code uses to pick pivots.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<std::uint32_t> letters);
  explicit Word(std::vector<std::uint32_t> letters);

  static Word one() { return Word(); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<std::uint32_t>& letters() const { return letters_; }
  std::uint32_t operator[](std::size_t i) const { return letters_[i]; }
  std::uint32_t max_letter() const;

  /// Concatenation.
  Word operator*(const Word& rhs) const;
  Word pow(std::uint32_t e) const;

  bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
  bool operator!=(const Word& rhs) const { return letters_ != rhs.letters_; }
  bool operator<(const Word& rhs) const;
  bool operator>(const Word& rhs) const { return rhs < *this; }
  bool operator<=(const Word& rhs) const { return !(rhs < *this); }
  bool operator>=(const Word& rhs) const { return !(*this < rhs); }

 private:
  std::vector<std::uint32_t> letters_;
};

/// A multidegree: how many times each variable occurs.  Multihomogeneous
/// elements live in the "slice" of the algebra labelled by one of these.
class MultiDegree {
 public:
  MultiDegree() = default;

  static MultiDegree of(const Word& w);
  /// {var, count} pairs; zero counts are rejected.
  static MultiDegree from_counts(const std::map<std::uint32_t, std::uint32_t>& counts);

  const std::map<std::uint32_t, std::uint32_t>& counts() const { return counts_; }
  std::size_t total() const { return total_; }
  bool empty() const { return counts_.empty(); }
  std::uint32_t count(std::uint32_t var) const;

  void add(std::uint32_t var, std::uint32_t times);
  MultiDegree operator+(const MultiDegree& rhs) const;
  /// Componentwise difference; rhs must be contained in *this.
  MultiDegree operator-(const MultiDegree& rhs) const;
  /// Componentwise rhs <= *this.
  bool contains(const MultiDegree& rhs) const;
  bool divisible_by(std::uint32_t k) const;
  MultiDegree divided_by(std::uint32_t k) const;
  MultiDegree scaled(std::uint32_t k) const;

  /// Slice syntax, e.g. "{x1:3, x2:3}".
  std::string to_string() const;

  bool operator==(const MultiDegree& rhs) const { return counts_ == rhs.counts_; }
  bool operator!=(const MultiDegree& rhs) const { return counts_ != rhs.counts_; }
  bool operator<(const MultiDegree& rhs) const { return counts_ < rhs.counts_; }

 private:
  std::map<std::uint32_t, std::uint32_t> counts_;
  std::size_t total_ = 0;
};

/// Multidegree of a word.
MultiDegree multidegree(const Word& w);

}  // namespace freespan
