#include "freespan/parse.hpp"

#include <cctype>

namespace freespan {

namespace {

// Minimal cursor over the input; the extended expression syntax has its own
// parser, this one handles exactly the plain polynomial form.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  /// Digits, value accumulated mod m (so arbitrarily long integers are fine).
  std::uint64_t integer_mod(std::uint64_t m) {
    if (!at_digit()) fail("expected an integer");
    std::uint64_t acc = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      acc = (acc * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % m;
      ++pos;
    }
    return acc;
  }

  /// Small positive integer (exponents, variable indices).
  std::uint32_t positive_integer() {
    if (!at_digit()) fail("expected a positive integer");
    std::uint64_t acc = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      acc = acc * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (acc > 1000000) fail("integer too large");
      ++pos;
    }
    if (acc == 0) fail("expected a positive integer");
    return static_cast<std::uint32_t>(acc);
  }
};

// factor := var ('^' posint)?, with var := 'x' posint.
Word parse_factor(Cursor& c) {
  if (!c.eat('x')) c.fail("expected a variable like x1");
  const std::uint32_t var = c.positive_integer();
  std::uint32_t e = 1;
  if (c.eat('^')) e = c.positive_integer();
  return Word{var}.pow(e);
}

}  // namespace

Polynomial parse(std::string_view text, Prime p) {
  Cursor c{text};
  Polynomial out(p);
  if (c.done()) c.fail("empty input");
  bool negative = c.eat('-');  // tolerated leading sign
  while (true) {
    // One term: optional integer coefficient and/or a chain of factors.
    std::int64_t coeff = negative ? -1 : 1;
    Word w = Word::one();
    bool saw_atom = false;
    bool saw_factor = false;
    while (true) {
      if (c.at_digit()) {
        coeff *= static_cast<std::int64_t>(c.integer_mod(p.value()));
        coeff %= static_cast<std::int64_t>(p.value());
      } else if (c.peek() == 'x') {
        w = w * parse_factor(c);
        saw_factor = true;
      } else {
        c.fail("expected a coefficient or a variable");
      }
      saw_atom = true;
      if (!c.eat('*')) break;
    }
    (void)saw_factor;
    if (!saw_atom) c.fail("empty term");
    out.add_term(w, coeff);
    if (c.done()) break;
    if (c.eat('+')) {
      negative = false;
    } else if (c.eat('-')) {
      negative = true;
    } else {
      c.fail("expected '+', '-' or end of input");
    }
  }
  return out;
}

std::string format(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += "x" + std::to_string(w[i]);
  }
  return out;
}

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    if (w.empty()) {
      out += std::to_string(c);
    } else if (c != 1) {
      out += std::to_string(c) + "*" + format(w);
    } else {
      out += format(w);
    }
  }
  return out;
}

}  // namespace freespan
