#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mixforge/errors.hpp"

namespace mixforge {

inline constexpr int kMaxDimension = 3;

/// One generator or inverse letter. Axis 1 is a/A, axis 2 is b/B, axis 3 is
/// c/C; sign +1 for the generator, -1 for its inverse.
struct Letter {
  int axis = 1;
  int sign = +1;

  bool operator==(const Letter&) const = default;

  /// Rank in the fixed order a < A < b < B < c < C.
  int order() const { return (axis - 1) * 2 + (sign < 0 ? 1 : 0); }
  char to_char() const;
  static Letter from_char(char c);  // throws InvalidCharacter
};

inline bool operator<(const Letter& a, const Letter& b) {
  return a.order() < b.order();
}

/// A word over the 2n-letter alphabet together with its dimension. The empty
/// sequence is a valid word.
struct Word {
  std::vector<Letter> letters;
  int n = 2;

  bool operator==(const Word&) const = default;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

/// Net lattice translation of a word, one component per axis.
struct Displacement {
  std::array<std::int64_t, kMaxDimension> c{0, 0, 0};
  int n = 2;

  bool operator==(const Displacement&) const = default;
  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

Displacement operator+(const Displacement& a, const Displacement& b);

Word parse_word(const std::string& text, int n);  // throws InvalidCharacter
std::string format_word(const Word& w);

Displacement displacement(const Word& w);

/// Membership in O_n: every axis balances.
bool in_on(const Word& w);

Letter inverse_letter(Letter l);

Word concat(const Word& a, const Word& b);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// All words of exactly `length` with zero displacement, in lexicographic
/// order under a < A < b < B < c < C. Empty for odd lengths. Throws
/// ResourceBound when (2n)^length exceeds `cap`.
std::vector<Word> enumerate_on(int length, int n,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// Sum of enumerate_on counts for all lengths <= max_length (helper for
/// sweeps; same cap rule applied to the largest length).
std::vector<Word> enumerate_on_up_to(int max_length, int n,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace mixforge
