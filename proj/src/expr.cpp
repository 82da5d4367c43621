#include "freespan/expr.hpp"

#include <cctype>
#include <map>

#include "freespan/symmetric.hpp"

namespace freespan {

namespace {

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
  void expect(char c, const char* what) {
    if (!eat(c)) fail(what);
  }
  bool eat_token(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token) return false;
    pos += token.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::uint64_t integer_mod(std::uint64_t m) {
    if (!at_digit()) fail("expected an integer");
    std::uint64_t acc = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      acc = (acc * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % m;
      ++pos;
    }
    return acc;
  }

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

Polynomial parse_expr(Cursor& c, Prime p);

Polynomial parse_primary(Cursor& c, Prime p) {
  if (c.at_digit()) {
    return Polynomial::constant(p, static_cast<std::int64_t>(c.integer_mod(p.value())));
  }
  if (c.eat('(')) {
    Polynomial e = parse_expr(c, p);
    c.expect(')', "expected ')'");
    return e;
  }
  if (c.eat('x')) return Polynomial::variable(p, c.positive_integer());
  if (c.eat_token("S")) {
    c.expect('(', "expected '(' after S");
    const std::uint32_t d = c.positive_integer();
    c.expect(';', "expected ';' after the degree of S");
    std::vector<Polynomial> args;
    args.push_back(parse_expr(c, p));
    while (c.eat(',')) args.push_back(parse_expr(c, p));
    c.expect(')', "expected ')'");
    if (args.size() != d) {
      c.fail("S(" + std::to_string(d) + "; ...) needs exactly " + std::to_string(d) +
             " arguments, got " + std::to_string(args.size()));
    }
    return s_d(args);
  }
  if (c.eat_token("comm")) {
    c.expect('(', "expected '(' after comm");
    const Polynomial a = parse_expr(c, p);
    c.expect(';', "expected ';' between commutator arguments");
    const Polynomial b = parse_expr(c, p);
    std::uint32_t n = 1;
    if (c.eat(',')) n = c.positive_integer();
    c.expect(')', "expected ')'");
    return left_normed_commutator(a, b, n);
  }
  if (c.eat_token("frob")) {
    c.expect('(', "expected '(' after frob");
    const Polynomial u = parse_expr(c, p);
    c.expect(',', "expected ',' between frob arguments");
    const Polynomial v = parse_expr(c, p);
    c.expect(')', "expected ')'");
    return frobenius_expand(u, v, p);
  }
  if (c.eat_token("w")) {
    c.expect('(', "expected '(' after w");
    const std::uint32_t q = c.positive_integer();
    c.expect(')', "expected ')'");
    if (q != p.value()) {
      c.fail("w(" + std::to_string(q) + ") does not match the ambient modulus " +
             std::to_string(p.value()));
    }
    return witness_w(p);
  }
  c.fail("expected an expression");
}

Polynomial parse_factor(Cursor& c, Prime p) {
  Polynomial base = parse_primary(c, p);
  if (c.eat('^')) return base.pow(c.positive_integer());
  return base;
}

Polynomial parse_term(Cursor& c, Prime p) {
  Polynomial acc = parse_factor(c, p);
  while (c.eat('*')) acc *= parse_factor(c, p);
  return acc;
}

Polynomial parse_expr(Cursor& c, Prime p) {
  bool negative = c.eat('-');
  Polynomial acc = parse_term(c, p);
  if (negative) acc = -acc;
  while (true) {
    if (c.eat('+')) {
      acc += parse_term(c, p);
    } else if (c.eat('-')) {
      acc -= parse_term(c, p);
    } else {
      return acc;
    }
  }
}

}  // namespace

Polynomial parse_expression(std::string_view text, Prime p) {
  Cursor c{text};
  if (c.done()) c.fail("empty input");
  Polynomial out = parse_expr(c, p);
  if (!c.done()) c.fail("unexpected trailing input");
  return out;
}

GeneratorFamily parse_family(std::string_view text, Prime p) {
  Cursor c{text};
  if (c.eat_token("R")) {
    c.expect('(', "expected '(' after R");
    if (!c.eat_token("n")) c.fail("expected n=...");
    c.expect('=', "expected '=' after n");
    const std::uint32_t n = c.positive_integer();
    c.expect(',', "expected ',' between n and d");
    if (!c.eat_token("d")) c.fail("expected d=...");
    c.expect('=', "expected '=' after d");
    const std::uint32_t d = c.positive_integer();
    c.expect(')', "expected ')'");
    if (!c.done()) c.fail("unexpected trailing input");
    return GeneratorFamily::r_family(n, d);
  }
  if (c.eat_token("L")) {
    c.expect('(', "expected '(' after L");
    if (!c.eat_token("n")) c.fail("expected n=...");
    c.expect('=', "expected '=' after n");
    const std::uint32_t n = c.positive_integer();
    c.expect(')', "expected ')'");
    if (!c.done()) c.fail("unexpected trailing input");
    return GeneratorFamily::l_family(n);
  }
  if (c.eat_token("T")) {
    c.expect('[', "expected '[' after T");
    std::vector<Polynomial> gens;
    gens.push_back(parse_expr(c, p));
    while (c.eat(';')) gens.push_back(parse_expr(c, p));
    c.expect(']', "expected ']'");
    if (!c.done()) c.fail("unexpected trailing input");
    return GeneratorFamily::t_space_of(std::move(gens));
  }
  c.fail("expected R(...), L(...) or T[...]");
}

MultiDegree parse_slice(std::string_view text) {
  Cursor c{text};
  c.expect('{', "expected '{'");
  std::map<std::uint32_t, std::uint32_t> counts;
  if (!c.eat('}')) {
    while (true) {
      if (!c.eat('x')) c.fail("expected a variable like x1");
      const std::uint32_t var = c.positive_integer();
      c.expect(':', "expected ':' after the variable");
      const std::uint32_t count = c.positive_integer();
      if (!counts.emplace(var, count).second) c.fail("duplicate variable in slice");
      if (c.eat('}')) break;
      c.expect(',', "expected ',' or '}'");
    }
  }
  if (!c.done()) c.fail("unexpected trailing input");
  return MultiDegree::from_counts(counts);
}

}  // namespace freespan
