#include <doctest.h>

#include <random>

#include "mixforge/words.hpp"

using namespace mixforge;

namespace {

// Brute-force oracle: all (2n)^length strings, keep the balanced ones.
std::vector<std::string> brute_force_on(int length, int n) {
  std::vector<std::string> out;
  const int radix = 2 * n;
  std::string letters = "aAbBcC";
  letters.resize(radix);
  std::vector<int> digits(length, 0);
  for (;;) {
    std::string s;
    for (int d : digits) s.push_back(letters[d]);
    if (in_on(parse_word(s, n))) out.push_back(s);
    int i = length - 1;
    while (i >= 0 && digits[i] == radix - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

Word random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 2 * n - 1);
  Word w;
  w.n = n;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    const int ord = letter_dist(rng);
    w.letters.push_back(Letter{ord / 2 + 1, ord % 2 == 0 ? +1 : -1});
  }
  return w;
}

}  // namespace

TEST_CASE("parse_word on the running example") {
  const Word w = parse_word("abbAbaBaBBBAbA", 2);
  CHECK(w.size() == 14);
  CHECK(format_word(w) == "abbAbaBaBBBAbA");
  CHECK(parse_word("", 2).empty());
  const Word w3 = parse_word("abcABC", 3);
  REQUIRE(w3.size() == 6);
  const int axes[6] = {1, 2, 3, 1, 2, 3};
  for (int i = 0; i < 6; ++i) CHECK(w3.letters[i].axis == axes[i]);
}

TEST_CASE("parse_word rejects foreign characters and over-dimension letters") {
  CHECK_THROWS_WITH_AS(parse_word("abx", 2), doctest::Contains("position 2"),
                       Error);
  try {
    parse_word("acb", 2);  // 'c' needs n = 3
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCharacter);
    CHECK(e.index() == 1);
  }
}

TEST_CASE("displacement examples") {
  auto d = [](const char* s, int n) {
    const Displacement v = displacement(parse_word(s, n));
    return std::array<std::int64_t, 2>{v.c[0], v.c[1]};
  };
  CHECK(d("abA", 2) == std::array<std::int64_t, 2>{0, 1});
  CHECK(d("abbAbaBaBBBAbA", 2) == std::array<std::int64_t, 2>{0, 0});
  CHECK(d("", 2) == std::array<std::int64_t, 2>{0, 0});
}

TEST_CASE("in_on examples") {
  CHECK(in_on(parse_word("aA", 2)));
  CHECK_FALSE(in_on(parse_word("ab", 2)));
  CHECK(in_on(parse_word("abbAbaBaBBBAbA", 2)));
}

TEST_CASE("inverse_letter is the sign flip and an involution") {
  CHECK(inverse_letter(Letter::from_char('a')) == Letter::from_char('A'));
  CHECK(inverse_letter(Letter::from_char('B')) == Letter::from_char('b'));
  CHECK(inverse_letter(Letter::from_char('c')) == Letter::from_char('C'));
  for (char c : {'a', 'A', 'b', 'B', 'c', 'C'}) {
    const Letter l = Letter::from_char(c);
    CHECK(inverse_letter(inverse_letter(l)) == l);
  }
}

TEST_CASE("enumerate_on matches the brute-force oracle") {
  const auto two = enumerate_on(2, 2);
  REQUIRE(two.size() == 4);
  CHECK(format_word(two[0]) == "aA");
  CHECK(format_word(two[1]) == "Aa");
  CHECK(format_word(two[2]) == "bB");
  CHECK(format_word(two[3]) == "Bb");
  CHECK(enumerate_on(4, 2).size() == 36);
  CHECK(enumerate_on(2, 3).size() == 6);
  CHECK(enumerate_on(3, 2).empty());

  for (int n = 2; n <= 3; ++n) {
    for (int len = 0; len <= 8; len += 2) {
      const auto fast = enumerate_on(len, n);
      const auto slow = brute_force_on(len, n);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i)
        CHECK(format_word(fast[i]) == slow[i]);
    }
  }
}

TEST_CASE("enumeration order is lexicographic and round-trips") {
  // lexicographic under the letter order a < A < b < B, not ASCII
  auto order_key = [](const Word& w) {
    std::vector<int> k;
    for (const Letter& l : w.letters) k.push_back(l.order());
    return k;
  };
  const auto words = enumerate_on(6, 2);
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    CHECK(order_key(words[i]) < order_key(words[i + 1]));
  for (const Word& w : words)
    CHECK(parse_word(format_word(w), 2) == w);
}

TEST_CASE("enumeration cap guards the candidate space") {
  CHECK_THROWS_AS(enumerate_on(4, 2, 100), Error);
  try {
    enumerate_on(4, 2, 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResourceBound);
  }
  CHECK(enumerate_on(4, 2, 256).size() == 36);
}

TEST_CASE("displacement is additive under concatenation") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = random_word(rng, 2, 10);
    const Word v = random_word(rng, 2, 10);
    CHECK(displacement(concat(u, v)) == displacement(u) + displacement(v));
  }
}

TEST_CASE("subgroup property over enumerated words") {
  for (const Word& u : enumerate_on(4, 2)) {
    for (const Word& v : enumerate_on(2, 2)) {
      const Word uv = concat(u, v);
      if (in_on(uv) && in_on(u)) CHECK(in_on(v));
    }
  }
}
