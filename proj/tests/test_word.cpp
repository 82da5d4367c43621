#include <doctest.h>

#include <algorithm>
#include <vector>

#include "freespan/errors.hpp"
#include "freespan/word.hpp"

using namespace freespan;

TEST_SUITE("word") {

TEST_CASE("concatenation and powers") {
  const Word a{1, 2};
  const Word b{3};
  CHECK((a * b) == Word{1, 2, 3});
  CHECK((a * Word::one()) == a);
  CHECK((Word::one() * a) == a);
  CHECK(a.pow(0) == Word::one());
  CHECK(a.pow(1) == a);
  CHECK(a.pow(3) == Word{1, 2, 1, 2, 1, 2});
  CHECK(Word{7}.pow(2) == Word{7, 7});
}

TEST_CASE("order is degree-first, then lexicographic") {
  // Frozen ascending chain: shorter words always come first; within one
  // length, compare letter sequences left to right.
  const std::vector<Word> ascending = {
      Word::one(), {1},    {2},    {3},       {1, 1}, {1, 2},
      {2, 1},      {2, 2}, {3, 1}, {1, 1, 1}, {1, 1, 2}};
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    for (std::size_t j = 0; j < ascending.size(); ++j) {
      CHECK((ascending[i] < ascending[j]) == (i < j));
      CHECK((ascending[i] == ascending[j]) == (i == j));
      CHECK((ascending[i] <= ascending[j]) == (i <= j));
      CHECK((ascending[i] > ascending[j]) == (i > j));
    }
  }
}

TEST_CASE("order is a strict total order on a mixed sample") {
  std::vector<Word> sample = {{2, 1}, {1}, {1, 1, 1}, Word::one(), {2}, {1, 2}};
  std::sort(sample.begin(), sample.end());
  CHECK(std::is_sorted(sample.begin(), sample.end()));
  for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
    CHECK(sample[i] < sample[i + 1]);
  }
}

TEST_CASE("max_letter and accessors") {
  const Word w{3, 1, 4, 1};
  CHECK(w.size() == 4);
  CHECK(w.max_letter() == 4);
  CHECK(w[2] == 4);
  CHECK(Word::one().max_letter() == 0);
  CHECK(Word::one().empty());
}

TEST_CASE("letters must be positive") {
  CHECK_THROWS_AS(Word{0}, usage_error);
  CHECK_THROWS_AS(Word({1, 0, 2}), usage_error);
}

TEST_CASE("multidegree of a word counts letters") {
  const MultiDegree d = multidegree(Word{1, 2, 1, 1, 3});
  CHECK(d.count(1) == 3);
  CHECK(d.count(2) == 1);
  CHECK(d.count(3) == 1);
  CHECK(d.count(4) == 0);
  CHECK(d.total() == 5);
  CHECK(multidegree(Word::one()).empty());
}

TEST_CASE("multidegree arithmetic") {
  MultiDegree a;
  a.add(1, 2);
  a.add(2, 1);
  MultiDegree b;
  b.add(1, 1);
  CHECK((a + b).count(1) == 3);
  CHECK((a - b).count(1) == 1);
  CHECK((a - b).count(2) == 1);
  CHECK(a.contains(b));
  CHECK(!b.contains(a));
  CHECK_THROWS_AS(b - a, usage_error);

  MultiDegree c;
  c.add(1, 4);
  c.add(2, 2);
  CHECK(c.divisible_by(2));
  CHECK(!c.divisible_by(3));
  CHECK(c.divided_by(2).count(1) == 2);
  CHECK(c.divided_by(2).total() == 3);
  CHECK(c.scaled(3).count(2) == 6);
  CHECK_THROWS_AS(c.divided_by(3), usage_error);
}

TEST_CASE("multidegree string form uses slice syntax") {
  MultiDegree d;
  d.add(1, 3);
  d.add(2, 3);
  CHECK(d.to_string() == "{x1:3, x2:3}");
  CHECK(MultiDegree().to_string() == "{}");
}

TEST_CASE("from_counts rejects zero counts") {
  CHECK_THROWS_AS(MultiDegree::from_counts({{1, 0}}), usage_error);
  const MultiDegree d = MultiDegree::from_counts({{2, 5}});
  CHECK(d.count(2) == 5);
  CHECK(d.total() == 5);
}

}  // TEST_SUITE
