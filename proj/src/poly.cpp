#include "freespan/poly.hpp"

#include <algorithm>

namespace freespan {

Polynomial Polynomial::constant(Prime p, std::int64_t c) {
  Polynomial f(p);
  f.add_term(Word::one(), c);
  return f;
}

Polynomial Polynomial::monomial(Prime p, const Word& w, std::int64_t c) {
  Polynomial f(p);
  f.add_term(w, c);
  return f;
}

Polynomial Polynomial::variable(Prime p, std::uint32_t index) {
  return monomial(p, Word{index});
}

Fp Polynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return Fp(p_, it == terms_.end() ? 0 : it->second);
}

Polynomial& Polynomial::add_term(const Word& w, std::int64_t delta) {
  const std::int64_t m = p_.value();
  std::int64_t r = delta % m;
  if (r < 0) r += m;
  if (r == 0) return *this;
  auto [it, inserted] = terms_.emplace(w, static_cast<std::uint32_t>(r));
  if (!inserted) {
    const std::uint32_t sum = (it->second + static_cast<std::uint32_t>(r)) %
                              static_cast<std::uint32_t>(m);
    if (sum == 0) {
      terms_.erase(it);
    } else {
      it->second = sum;
    }
  }
  return *this;
}

const Word& Polynomial::leading_word() const {
  if (terms_.empty()) throw usage_error("zero polynomial has no leading word");
  return terms_.rbegin()->first;
}

void Polynomial::check_same_prime(const Polynomial& rhs) const {
  if (p_ != rhs.p_) {
    throw usage_error("mixed moduli: GF(" + std::to_string(p_.value()) +
                      ") vs GF(" + std::to_string(rhs.p_.value()) + ")");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(p_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, p_.value() - c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_prime(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_prime(rhs);
  for (const auto& [w, c] : rhs.terms_) {
    add_term(w, static_cast<std::int64_t>(p_.value()) - c);
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_same_prime(rhs);
  Polynomial out(p_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : rhs.terms_) {
      out.add_term(w1 * w2, static_cast<std::int64_t>(c1) * c2);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::add_scaled(std::int64_t c, const Polynomial& rhs) {
  check_same_prime(rhs);
  for (const auto& [w, cw] : rhs.terms_) add_term(w, c * cw);
  return *this;
}

Polynomial Polynomial::times(std::int64_t c) const {
  Polynomial out(p_);
  out.add_scaled(c, *this);
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = Polynomial::one(p_);
  for (std::uint32_t i = 0; i < e; ++i) acc *= *this;
  return acc;
}

std::optional<MultiDegree> Polynomial::homogeneous_multidegree() const {
  if (terms_.empty()) return MultiDegree();
  auto it = terms_.begin();
  MultiDegree d = MultiDegree::of(it->first);
  for (++it; it != terms_.end(); ++it) {
    if (MultiDegree::of(it->first) != d) return std::nullopt;
  }
  return d;
}

Polynomial Polynomial::component(const MultiDegree& d) const {
  Polynomial out(p_);
  for (const auto& [w, c] : terms_) {
    if (MultiDegree::of(w) == d) out.terms_.emplace(w, c);
  }
  return out;
}

std::map<MultiDegree, Polynomial> Polynomial::components() const {
  std::map<MultiDegree, Polynomial> out;
  for (const auto& [w, c] : terms_) {
    auto [it, inserted] = out.emplace(MultiDegree::of(w), Polynomial(p_));
    it->second.terms_.emplace(w, c);
  }
  return out;
}

std::set<std::uint32_t> Polynomial::variables() const {
  std::set<std::uint32_t> vars;
  for (const auto& [w, c] : terms_) {
    (void)c;
    for (std::uint32_t v : w.letters()) vars.insert(v);
  }
  return vars;
}

std::uint32_t Polynomial::max_variable() const {
  std::uint32_t m = 0;
  for (const auto& [w, c] : terms_) {
    (void)c;
    m = std::max(m, w.max_letter());
  }
  return m;
}

Polynomial commutator(const Polynomial& a, const Polynomial& b) {
  return a * b - b * a;
}

Polynomial left_normed_commutator(const Polynomial& x, const Polynomial& y,
                                  std::uint32_t n) {
  if (n == 0) throw usage_error("left-normed commutator needs n >= 1");
  Polynomial acc = x;
  for (std::uint32_t i = 0; i < n; ++i) acc = commutator(acc, y);
  return acc;
}

Polynomial left_normed_commutator(const std::vector<Polynomial>& entries) {
  if (entries.size() < 2) {
    throw usage_error("left-normed commutator needs at least two entries");
  }
  Polynomial acc = entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i) {
    acc = commutator(acc, entries[i]);
  }
  return acc;
}

Substitution::Substitution(Prime p, std::map<std::uint32_t, Polynomial> images,
                           bool unital_allowed)
    : p_(p), images_(std::move(images)), unital_allowed_(unital_allowed) {
  for (const auto& [var, img] : images_) {
    if (var == 0) throw usage_error("variable indices start at 1");
    if (img.prime() != p_) throw usage_error("substitution image over wrong modulus");
    if (!unital_allowed_ && !img.coeff(Word::one()).is_zero()) {
      throw usage_error("substitution image for x" + std::to_string(var) +
                        " has a constant term but unital images are not allowed");
    }
  }
}

const Polynomial* Substitution::image(std::uint32_t var) const {
  auto it = images_.find(var);
  return it == images_.end() ? nullptr : &it->second;
}

Polynomial substitute(const Polynomial& f, const Substitution& s) {
  if (f.prime() != s.prime()) throw usage_error("substitution over wrong modulus");
  const Prime p = f.prime();
  Polynomial out(p);
  for (const auto& [w, c] : f.terms()) {
    Polynomial prod = Polynomial::constant(p, c);
    for (std::uint32_t v : w.letters()) {
      if (const Polynomial* img = s.image(v)) {
        prod *= *img;
        if (prod.is_zero()) break;
      } else {
        prod *= Polynomial::variable(p, v);
      }
    }
    out += prod;
  }
  return out;
}

Polynomial substitute_words(const Polynomial& f,
                            const std::map<std::uint32_t, Word>& w_images) {
  const Prime p = f.prime();
  Polynomial out(p);
  for (const auto& [w, c] : f.terms()) {
    std::vector<std::uint32_t> letters;
    for (std::uint32_t v : w.letters()) {
      auto it = w_images.find(v);
      if (it == w_images.end()) {
        throw usage_error("no word image for x" + std::to_string(v));
      }
      const auto& ws = it->second.letters();
      letters.insert(letters.end(), ws.begin(), ws.end());
    }
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

}  // namespace freespan
