#include <random>

#include "doctest.h"

#include "artin/errors.hpp"
#include "artin/word.hpp"

using namespace artin;

namespace {

FreeWord w(const char* s) { return FreeWord::parse(s); }

FreeWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  static const char* names[] = {"a", "b", "c", "x"};
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, 3);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters;
  for (std::size_t i = len(rng); i > 0; --i) letters.push_back(sign(rng) ? gen(names[pick(rng)]) : inv(names[pick(rng)]));
  return FreeWord(letters);
}

}  // namespace

TEST_CASE("parse and print") {
  const auto x = w("x^-1 a b");
  CHECK(x.size() == 3);
  CHECK(x[0] == inv("x"));
  CHECK(x.str() == "x^-1 a b");
  CHECK(w("").empty());
  CHECK_THROWS_AS(w("a^2"), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorId(""), std::invalid_argument);
}

TEST_CASE("free reduction") {
  CHECK(reduce(w("a a^-1")).empty());
  CHECK(reduce(w("a b b^-1 a")) == w("a a"));
  CHECK(reduce(w("a b a^-1 a b^-1 a^-1")).empty());
  const auto r = reduce(w("a1 a2 a1 a2 a1") * w("a1 a1 a2 a1 a2").inverse());
  CHECK(r == w("a1 a2 a1 a2 a1 a2^-1 a1^-1 a2^-1 a1^-1 a1^-1"));
  CHECK(r.size() == 10);
  CHECK(r.is_reduced());
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclically_reduce(w("b a c b^-1")) == w("a c"));
  CHECK(cyclically_reduce(w("a b a^-1")) == w("b"));
  CHECK(w("a b").is_cyclically_reduced());
  CHECK_FALSE(w("a b a^-1").is_cyclically_reduced());
}

TEST_CASE("power and inverse") {
  CHECK(power(w("a b"), 2) == w("a b a b"));
  CHECK(power(w("a b"), -1) == w("b^-1 a^-1"));
  CHECK(power(w("a b"), 0).empty());
  CHECK(w("a b^-1 c").inverse() == w("c^-1 b a^-1"));
}

TEST_CASE("substitution") {
  const GeneratorId x("x"), g("g");
  // H4 relator x^2 a1 x^-2 a1^-1 with x -> a1 a2.
  const auto h4 = w("x x a1 x^-1 x^-1 a1^-1");
  const auto s = substitute(h4, x, w("a1 a2"));
  CHECK(s == w("a1 a2 a1 a2 a1 a2^-1 a1^-1 a2^-1 a1^-1 a1^-1"));
  const CyclicWord g4(w("a1 a2 a1 a2") * w("a2 a1 a2 a1").inverse());
  CHECK(CyclicWord(s).equal_up_to_inversion(g4));

  CHECK(substitute(w("g"), g, w("h")) == w("h"));
  CHECK(substitute(w("a b"), g, w("h")) == w("a b"));
  CHECK(substitute(w("g^-1"), g, w("a b")) == w("b^-1 a^-1"));
  CHECK_THROWS_AS(substitute(w("g"), g, w("a g")), RecursiveSubstitution);
}

TEST_CASE("cyclic words") {
  const CyclicWord c(w("x^-1 a b"));
  CHECK(c == CyclicWord(w("a b x^-1")));
  CHECK(c == CyclicWord(w("b x^-1 a")));
  CHECK(c != CyclicWord(w("x^-1 b a")));
  CHECK(c.inverse() == CyclicWord(w("b^-1 a^-1 x")));
  CHECK(c.representative().is_cyclically_reduced());
  CHECK(CyclicWord(w("c a b c^-1")) == CyclicWord(w("a b")));

  CHECK(cyclic_subwords(c, 2) == std::set<FreeWord>{w("x^-1 a"), w("a b"), w("b x^-1")});
  CHECK(cyclic_subwords(c, 1) == std::set<FreeWord>{w("x^-1"), w("a"), w("b")});
  CHECK(cyclic_subwords(c, 3).size() == 3);
}

TEST_CASE("word properties on random words") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto u = random_word(rng, 12), v = random_word(rng, 12), r = random_word(rng, 4);
    CAPTURE(u.str());
    CAPTURE(v.str());
    CHECK(reduce(reduce(u)) == reduce(u));
    CHECK(reduce(u).is_reduced());
    CHECK(reduce(u * u.inverse()).empty());
    if (!r.mentions(GeneratorId("a"))) {
      const GeneratorId a("a");
      CHECK(substitute(u * v, a, r) == reduce(substitute(u, a, r) * substitute(v, a, r)));
    }
    const auto cu = cyclically_reduce(u);
    CHECK(cu.is_cyclically_reduced());
    if (!cu.empty()) {
      const CyclicWord base(cu);
      for (std::size_t k = 0; k < cu.size(); ++k) CHECK(CyclicWord(cu.rotated(k)) == base);
      CHECK(base.representative().size() == cu.size());
      for (std::size_t k = 0; k < cu.size(); ++k) CHECK(base.representative() <= cu.rotated(k));
    }
  }
}
