#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pclie/words.hpp"

using namespace pclie;

namespace {

const Alphabet xy = Alphabet::parse("x > y");
const Alphabet xyz = Alphabet::parse("x > y > z");

Word W(const Alphabet& a, std::string_view s) { return parse_word(a, s); }

std::vector<std::string> rendered(const Alphabet& a, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(render(a, w));
  return out;
}

}  // namespace

TEST_CASE("alphabet declaration") {
  Alphabet a = Alphabet::parse(" x>y >  z ");
  CHECK(a.size() == 3);
  CHECK(a.symbol(letter(0)) == "z");
  CHECK(a.symbol(letter(2)) == "x");
  CHECK(a.declaration() == "x > y > z");
  CHECK(a.compact());
  CHECK_FALSE(Alphabet::parse("x1 > x2").compact());
  CHECK_THROWS_AS(Alphabet::parse("x > x"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::parse("x > > y"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::parse("x > 1y"), std::invalid_argument);
}

TEST_CASE("word parsing and rendering") {
  CHECK(render(xyz, W(xyz, "x y  z")) == "xyz");
  Alphabet long_names = Alphabet::parse("ab > a > b");
  CHECK(W(long_names, "aba") == Word{letter(2), letter(1)});
  CHECK(render(long_names, W(long_names, "ab a b")) == "ab a b");
  CHECK_THROWS_AS(W(xyz, "xw"), std::invalid_argument);
}

TEST_CASE("compare_lex") {
  CHECK(compare_lex(W(xy, "xy"), W(xy, "yx")) > 0);
  CHECK(compare_lex(W(xy, "x"), W(xy, "x")) == 0);
  // the prefix is the greater word
  CHECK(compare_lex(W(xy, "xy"), W(xy, "x")) < 0);
  CHECK(compare_lex(W(xy, "x"), W(xy, "xy")) > 0);
}

TEST_CASE("compare_lex convention is forced by unique factorization of xyx") {
  // Only the prefix-greater convention admits exactly one factorization of
  // "xyx" into non-decreasing ALSWs; it is xy | x.
  Word u = W(xy, "xyx");
  auto all = oracle::all_factorizations(u);
  REQUIRE(all.size() == 1);
  CHECK(rendered(xy, all.front()) == std::vector<std::string>{"xy", "x"});
}

TEST_CASE("compare_deglex") {
  CHECK(compare_deglex(W(xy, "y"), W(xy, "xy")) < 0);
  CHECK(compare_deglex(W(xy, "xxy"), W(xy, "xyx")) > 0);
  CHECK(compare_deglex(W(xy, "xy"), W(xy, "yx")) > 0);
}

TEST_CASE("checked comparisons reject letters outside the alphabet") {
  Word foreign{letter(5)};
  CHECK_THROWS_AS(compare_lex(xy, foreign, W(xy, "x")), std::invalid_argument);
  CHECK_THROWS_AS(compare_deglex(xy, W(xy, "x"), foreign), std::invalid_argument);
}

TEST_CASE("is_alsw") {
  CHECK(is_alsw(W(xy, "x")));
  CHECK_FALSE(is_alsw(W(xy, "yx")));
  CHECK_FALSE(is_alsw(W(xy, "xx")));
  CHECK_THROWS_AS(is_alsw(Word{}), std::invalid_argument);

  std::vector<Word> small;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Word& w : oracle::all_words(2, n)) {
      if (is_alsw(w)) small.push_back(w);
    }
  }
  std::sort(small.begin(), small.end(), DegLexLess{});
  CHECK(rendered(xy, small) == std::vector<std::string>{"y", "x", "xy", "xyy", "xxy"});
}

TEST_CASE("lyndon_factorize") {
  CHECK(rendered(xy, lyndon_factorize(W(xy, "x"))) == std::vector<std::string>{"x"});
  CHECK(rendered(xy, lyndon_factorize(W(xy, "yxxy"))) == std::vector<std::string>{"y", "xxy"});
  CHECK(rendered(xy, lyndon_factorize(W(xy, "xyx"))) == std::vector<std::string>{"xy", "x"});
  CHECK_THROWS_AS(lyndon_factorize(Word{}), std::invalid_argument);
}

TEST_CASE("standard_split") {
  auto [v1, w1] = standard_split(W(xy, "xyy"));
  CHECK(render(xy, v1) == "xy");
  CHECK(render(xy, w1) == "y");
  auto [v2, w2] = standard_split(W(xy, "xxy"));
  CHECK(render(xy, v2) == "x");
  CHECK(render(xy, w2) == "xy");
  CHECK_THROWS_AS(standard_split(W(xy, "x")), std::invalid_argument);
  CHECK_THROWS_AS(standard_split(W(xy, "yx")), std::invalid_argument);
}

TEST_CASE("enumerate_alsw") {
  CHECK(rendered(xy, enumerate_alsw(xy, 3)) ==
        std::vector<std::string>{"y", "x", "xy", "xyy", "xxy"});
  CHECK(enumerate_alsw(Alphabet::parse("x"), 5).size() == 1);
  std::size_t degree3 = 0;
  for (const Word& w : enumerate_alsw(xyz, 3)) degree3 += w.size() == 3;
  CHECK(degree3 == 8);
  CHECK(degree3 == oracle::witt(3, 3));
  CHECK_THROWS_AS(enumerate_alsw(xy, 0), std::invalid_argument);
}

TEST_CASE("generator agrees with the brute-force split test up to length 8") {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<Word> fast = enumerate_alsw(k, 8);
    std::vector<Word> slow = oracle::alsw_brute_force(k, 8);
    std::sort(slow.begin(), slow.end(), DegLexLess{});
    CHECK(fast == slow);
    for (std::size_t n = 1; n <= 8; ++n) {
      std::size_t count = std::count_if(fast.begin(), fast.end(), [&](const Word& w) { return w.size() == n; });
      CHECK(count == oracle::witt(k, n));
    }
  }
}

TEST_CASE("ALSW equals strictly greater than all rotations") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Word& w : oracle::all_words(3, n)) {
      REQUIRE(is_alsw(w) == oracle::alsw_by_rotations(w));
      REQUIRE(is_alsw(w) == oracle::alsw_by_splits(w));
    }
  }
}

TEST_CASE("factorization round trip and uniqueness") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Word& w : oracle::all_words(3, n)) {
      auto factors = lyndon_factorize(w);
      Word joined;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        REQUIRE(is_alsw(factors[i]));
        if (i > 0) REQUIRE(compare_lex(factors[i - 1], factors[i]) <= 0);
        joined += factors[i];
      }
      REQUIRE(joined == w);
      if (n <= 6) {
        auto all = oracle::all_factorizations(w);
        REQUIRE(all.size() == 1);
        REQUIRE(all.front() == factors);
      }
    }
  }
}

TEST_CASE("standard split halves are ALSWs") {
  for (const Word& u : enumerate_alsw(3, 8)) {
    if (u.size() < 2) continue;
    auto [v, w] = standard_split(u);
    REQUIRE(is_alsw(v));
    REQUIRE(is_alsw(w));
    REQUIRE(v + w == u);
  }
}

TEST_CASE("deg-lex is compatible with concatenation for equal degrees") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> len(1, 5), pick(0, 2);
  auto random_word = [&](std::size_t n) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(letter(pick(rng)));
    return w;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = len(rng);
    Word u = random_word(n), v = random_word(n), a = random_word(len(rng)), b = random_word(len(rng));
    auto base = compare_deglex(u, v);
    REQUIRE(compare_deglex(a + u + b, a + v + b) == base);
  }
}

TEST_CASE("supp and multidegree") {
  Word u = W(xyz, "xzzx");
  CHECK(supp(u) == std::vector<Letter>{letter(0), letter(2)});
  CHECK(partial_degree(u, letter(0)) == 2);
  CHECK(multidegree(u, 3) == std::vector<std::size_t>{2, 0, 2});
}
