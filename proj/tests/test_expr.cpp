#include <doctest.h>

#include "freespan/errors.hpp"
#include "freespan/expr.hpp"
#include "freespan/parse.hpp"
#include "freespan/symmetric.hpp"
#include "freespan/tspace.hpp"

using namespace freespan;

TEST_SUITE("expr") {

TEST_CASE("plain polynomial syntax is a subset of the expression syntax") {
  const Prime p(3);
  for (const char* text :
       {"0", "x1*x2 - x2*x1", "2*x1^3 + 1", "-x1 + x2", "x7"}) {
    CHECK(parse_expression(text, p) == parse(text, p));
  }
}

TEST_CASE("builders expand to their definitions") {
  const Prime p(3);
  const Polynomial x = Polynomial::variable(p, 1);
  const Polynomial y = Polynomial::variable(p, 2);

  CHECK(parse_expression("S(2; x1, x2)", p) ==
        s_d(std::vector<Polynomial>{x, y}));
  CHECK(parse_expression("S(3; x1, x2*x2, x2)", p) ==
        s_d(std::vector<Polynomial>{x, y * y, y}));
  CHECK(parse_expression("comm(x1; x2)", p) == commutator(x, y));
  CHECK(parse_expression("comm(x1; x2, 2)", p) ==
        left_normed_commutator(x, y, 2));
  CHECK(parse_expression("comm(x1*x2; x2 + x1, 1)", p) ==
        commutator(x * y, y + x));
  CHECK(parse_expression("frob(x1, x2)", p) == frobenius_expand(x, y, p));
  CHECK(parse_expression("w(3)", p) == witness_w(p));
}

TEST_CASE("operators compose: powers, products, grouping, signs") {
  const Prime p(5);
  const Polynomial x = Polynomial::variable(p, 1);
  const Polynomial y = Polynomial::variable(p, 2);
  CHECK(parse_expression("(x1 + x2)^3", p) == (x + y).pow(3));
  CHECK(parse_expression("2*(x1 - x2)*x1", p) == ((x - y) * x).times(2));
  CHECK(parse_expression("S(2; x1, x2)^2", p) ==
        s_d(std::vector<Polynomial>{x, y}).pow(2));
  CHECK(parse_expression("-(x1*x2)", p) == (x * y).times(-1));
  CHECK(parse_expression("3 - x1", p) ==
        Polynomial::constant(p, 3) - x);
}

TEST_CASE("expression errors: arity, modulus pins, trailing junk") {
  const Prime p(3);
  CHECK_THROWS_AS(parse_expression("", p), parse_error);
  CHECK_THROWS_AS(parse_expression("S(3; x1, x2)", p), parse_error);
  CHECK_THROWS_AS(parse_expression("S(0; x1)", p), parse_error);
  CHECK_THROWS_AS(parse_expression("w(5)", p), parse_error);
  CHECK_THROWS_AS(parse_expression("comm(x1)", p), parse_error);
  CHECK_THROWS_AS(parse_expression("x1 x2", p), parse_error);
  CHECK_THROWS_AS(parse_expression("x1 + ", p), parse_error);
  CHECK_THROWS_AS(parse_expression("frob(x1)", p), parse_error);
  CHECK_THROWS_AS(parse_expression("q1", p), parse_error);
}

TEST_CASE("family syntax round-trips through to_string") {
  const Prime p(3);
  const GeneratorFamily r = parse_family("R(n=2,d=3)", p);
  CHECK(r.to_string() == "R(n=2,d=3)");
  CHECK(r.exact_semantics());

  const GeneratorFamily l = parse_family(" L(n=1) ", p);
  CHECK(l.to_string() == "L(n=1)");

  const GeneratorFamily t = parse_family("T[ comm(x1; x2, 2) ]", p);
  CHECK(t.to_string() ==
        "T[x1*x2*x2 + x2*x1*x2 + x2*x2*x1]");
  CHECK(!t.exact_semantics());

  const GeneratorFamily t2 = parse_family("T[ x1*x2 - x2*x1 ; x3 ]", p);
  CHECK(t2.generators.size() == 2);
  CHECK(t2.exact_semantics());  // all generators multilinear
}

TEST_CASE("family syntax errors") {
  const Prime p(3);
  CHECK_THROWS_AS(parse_family("R(d=3,n=2)", p), parse_error);
  CHECK_THROWS_AS(parse_family("R(n=0,d=3)", p), parse_error);
  CHECK_THROWS_AS(parse_family("Q(n=1)", p), parse_error);
  CHECK_THROWS_AS(parse_family("T[]", p), parse_error);
  CHECK_THROWS_AS(parse_family("T[0]", p), usage_error);
  CHECK_THROWS_AS(parse_family("L(n=1) x", p), parse_error);
}

TEST_CASE("slice syntax") {
  const MultiDegree d = parse_slice("{x1:3, x2:3}");
  CHECK(d.count(1) == 3);
  CHECK(d.count(2) == 3);
  CHECK(d.total() == 6);
  CHECK(parse_slice("{}").empty());
  CHECK(parse_slice(" { x4 : 1 } ").count(4) == 1);
  CHECK_THROWS_AS(parse_slice("{x1:3, x1:2}"), parse_error);
  CHECK_THROWS_AS(parse_slice("{x1:0}"), parse_error);
  CHECK_THROWS_AS(parse_slice("x1:3"), parse_error);
  CHECK_THROWS_AS(parse_slice("{x1:3} extra"), parse_error);
}

TEST_CASE("round trip: formatted output reparses to the same element") {
  const Prime p(3);
  for (const char* text : {"w(3)", "S(3; x1, x2, x2)", "frob(x1*x2, x2)",
                           "comm(x1; x2, 4)"}) {
    const Polynomial f = parse_expression(text, p);
    CHECK(parse_expression(format(f), p) == f);
  }
}

}  // TEST_SUITE
