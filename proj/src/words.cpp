#include "mixforge/words.hpp"

#include <algorithm>

namespace mixforge {

namespace {

constexpr char kChars[2 * kMaxDimension] = {'a', 'A', 'b', 'B', 'c', 'C'};

}  // namespace

char Letter::to_char() const { return kChars[order()]; }

Letter Letter::from_char(char c) {
  for (int i = 0; i < 2 * kMaxDimension; ++i) {
    if (kChars[i] == c) return Letter{i / 2 + 1, i % 2 == 0 ? +1 : -1};
  }
  throw Error(ErrorCode::InvalidCharacter,
              std::string("invalid letter '") + c + "'");
}

Displacement operator+(const Displacement& a, const Displacement& b) {
  Displacement r;
  r.n = std::max(a.n, b.n);
  for (int i = 0; i < kMaxDimension; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Word parse_word(const std::string& text, int n) {
  if (n < 1 || n > kMaxDimension)
    throw Error(ErrorCode::UnsupportedDimension,
                "dimension must be in [1, 3], got " + std::to_string(n));
  Word w;
  w.n = n;
  w.letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    Letter l;
    try {
      l = Letter::from_char(text[i]);
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidCharacter,
                  "invalid character '" + std::string(1, text[i]) +
                      "' at position " + std::to_string(i),
                  static_cast<std::ptrdiff_t>(i));
    }
    if (l.axis > n)
      throw Error(ErrorCode::InvalidCharacter,
                  "letter '" + std::string(1, text[i]) + "' at position " +
                      std::to_string(i) + " exceeds dimension " +
                      std::to_string(n),
                  static_cast<std::ptrdiff_t>(i));
    w.letters.push_back(l);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  s.reserve(w.letters.size());
  for (const Letter& l : w.letters) s.push_back(l.to_char());
  return s;
}

Displacement displacement(const Word& w) {
  Displacement d;
  d.n = w.n;
  for (const Letter& l : w.letters) d.c[l.axis - 1] += l.sign;
  return d;
}

bool in_on(const Word& w) { return displacement(w).is_zero(); }

Letter inverse_letter(Letter l) { return Letter{l.axis, -l.sign}; }

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.n = std::max(a.n, b.n);
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

namespace {

void enumerate_rec(int remaining, int n, Word& current,
                   std::array<std::int64_t, kMaxDimension>& disp,
                   std::vector<Word>& out) {
  std::int64_t need = 0;
  for (int i = 0; i < n; ++i) need += disp[i] < 0 ? -disp[i] : disp[i];
  if (need > remaining) return;
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int ord = 0; ord < 2 * n; ++ord) {
    Letter l{ord / 2 + 1, ord % 2 == 0 ? +1 : -1};
    current.letters.push_back(l);
    disp[l.axis - 1] += l.sign;
    enumerate_rec(remaining - 1, n, current, disp, out);
    disp[l.axis - 1] -= l.sign;
    current.letters.pop_back();
  }
}

void check_cap(int length, int n, std::uint64_t cap) {
  std::uint64_t candidates = 1;
  for (int i = 0; i < length; ++i) {
    if (candidates > cap / (2 * static_cast<std::uint64_t>(n)) + 1) {
      candidates = cap + 1;
      break;
    }
    candidates *= 2 * static_cast<std::uint64_t>(n);
  }
  if (candidates > cap)
    throw Error(ErrorCode::ResourceBound,
                "enumeration of (2n)^" + std::to_string(length) +
                    " candidates exceeds cap " + std::to_string(cap));
}

}  // namespace

std::vector<Word> enumerate_on(int length, int n, std::uint64_t cap) {
  if (length < 0)
    throw Error(ErrorCode::ResourceBound, "negative length");
  if (n < 1 || n > kMaxDimension)
    throw Error(ErrorCode::UnsupportedDimension,
                "dimension must be in [1, 3]");
  std::vector<Word> out;
  if (length % 2 != 0) return out;
  check_cap(length, n, cap);
  Word current;
  current.n = n;
  std::array<std::int64_t, kMaxDimension> disp{0, 0, 0};
  enumerate_rec(length, n, current, disp, out);
  return out;
}

std::vector<Word> enumerate_on_up_to(int max_length, int n,
                                     std::uint64_t cap) {
  std::vector<Word> all;
  for (int len = 0; len <= max_length; len += 2) {
    auto ws = enumerate_on(len, n, cap);
    all.insert(all.end(), ws.begin(), ws.end());
  }
  return all;
}

}  // namespace mixforge
