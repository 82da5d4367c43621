#include "freespan/word.hpp"

#include <algorithm>

namespace freespan {

namespace {

void check_letters(const std::vector<std::uint32_t>& letters) {
  for (std::uint32_t v : letters) {
    if (v == 0) throw usage_error("variable indices start at 1");
  }
}

}  // namespace

Word::Word(std::initializer_list<std::uint32_t> letters) : letters_(letters) {
  check_letters(letters_);
}

Word::Word(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

std::uint32_t Word::max_letter() const {
  std::uint32_t m = 0;
  for (std::uint32_t v : letters_) m = std::max(m, v);
  return m;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<std::uint32_t> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::pow(std::uint32_t e) const {
  std::vector<std::uint32_t> out;
  out.reserve(letters_.size() * e);
  for (std::uint32_t i = 0; i < e; ++i) {
    out.insert(out.end(), letters_.begin(), letters_.end());
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

bool Word::operator<(const Word& rhs) const {
  if (letters_.size() != rhs.letters_.size()) {
    return letters_.size() < rhs.letters_.size();
  }
  return letters_ < rhs.letters_;
}

MultiDegree MultiDegree::of(const Word& w) {
  MultiDegree d;
  for (std::uint32_t v : w.letters()) d.add(v, 1);
  return d;
}

MultiDegree MultiDegree::from_counts(
    const std::map<std::uint32_t, std::uint32_t>& counts) {
  MultiDegree d;
  for (const auto& [var, c] : counts) {
    if (var == 0) throw usage_error("variable indices start at 1");
    if (c == 0) throw usage_error("multidegree entries must be positive");
    d.add(var, c);
  }
  return d;
}

std::uint32_t MultiDegree::count(std::uint32_t var) const {
  auto it = counts_.find(var);
  return it == counts_.end() ? 0 : it->second;
}

void MultiDegree::add(std::uint32_t var, std::uint32_t times) {
  if (times == 0) return;
  counts_[var] += times;
  total_ += times;
}

MultiDegree MultiDegree::operator+(const MultiDegree& rhs) const {
  MultiDegree out = *this;
  for (const auto& [var, c] : rhs.counts_) out.add(var, c);
  return out;
}

MultiDegree MultiDegree::operator-(const MultiDegree& rhs) const {
  if (!contains(rhs)) throw usage_error("multidegree difference would go negative");
  MultiDegree out;
  for (const auto& [var, c] : counts_) {
    const std::uint32_t r = rhs.count(var);
    if (c > r) out.add(var, c - r);
  }
  return out;
}

bool MultiDegree::contains(const MultiDegree& rhs) const {
  for (const auto& [var, c] : rhs.counts_) {
    if (count(var) < c) return false;
  }
  return true;
}

bool MultiDegree::divisible_by(std::uint32_t k) const {
  for (const auto& [var, c] : counts_) {
    (void)var;
    if (c % k != 0) return false;
  }
  return true;
}

MultiDegree MultiDegree::divided_by(std::uint32_t k) const {
  if (!divisible_by(k)) throw usage_error("multidegree not divisible");
  MultiDegree out;
  for (const auto& [var, c] : counts_) out.add(var, c / k);
  return out;
}

MultiDegree MultiDegree::scaled(std::uint32_t k) const {
  MultiDegree out;
  if (k == 0) return out;
  for (const auto& [var, c] : counts_) out.add(var, c * k);
  return out;
}

std::string MultiDegree::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, c] : counts_) {
    if (!first) out += ", ";
    first = false;
    out += "x" + std::to_string(var) + ":" + std::to_string(c);
  }
  out += "}";
  return out;
}

MultiDegree multidegree(const Word& w) { return MultiDegree::of(w); }

}  // namespace freespan
