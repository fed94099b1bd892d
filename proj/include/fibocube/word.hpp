#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibocube {

/// Raised for malformed input anywhere in the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a configured size cap.
class CapError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxWordLength = 63;

/// Fixed-length binary word. Position 1 is the leftmost character of the
/// textual form and is stored as the most significant of the `length` bits,
/// so for equal lengths numeric order on `bits()` is lexicographic order.
class Word {
 public:
  Word() = default;
  Word(std::uint64_t bits, int length);

  static Word parse(std::string_view text);
  static Word zeros(int length) { return Word(0, length); }

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }

  /// Bit at 1-based position i.
  int at(int i) const;
  std::string str() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// A nonempty forbidden factor.
class Pattern {
 public:
  explicit Pattern(Word w);
  static Pattern parse(std::string_view text);

  const Word& word() const { return word_; }
  int length() const { return word_.length(); }
  std::string str() const { return word_.str(); }

  bool operator==(const Pattern&) const = default;

 private:
  Word word_;
};

inline std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Mask selecting 1-based position i in a word of the given length.
inline std::uint64_t position_mask(int i, int length) {
  return std::uint64_t{1} << (length - i);
}

/// Raw-bits factor test used by the enumeration loops.
inline bool contains_factor_bits(std::uint64_t u, int ulen, std::uint64_t f,
                                 int flen) {
  if (flen > ulen) return false;
  const std::uint64_t mask = low_mask(flen);
  for (int shift = 0; shift <= ulen - flen; ++shift) {
    if (((u >> shift) & mask) == f) return true;
  }
  return false;
}

bool contains_factor(const Word& u, const Pattern& f);
std::vector<int> factor_offsets(const Word& u, const Pattern& f);
bool occurs_at(const Word& u, const Pattern& f, int offset);

int hamming(const Word& a, const Word& b);
std::vector<int> differing_positions(const Word& a, const Word& b);

Word flip(const Word& w, int i);
Word reverse(const Word& w);
Word complement(const Word& w);
Word concat(const Word& a, const Word& b);

inline Pattern reverse(const Pattern& f) { return Pattern(reverse(f.word())); }
inline Pattern complement(const Pattern& f) {
  return Pattern(complement(f.word()));
}

/// All patterns of the given length in lexicographic order.
std::vector<Pattern> all_patterns(int length);

}  // namespace fibocube
