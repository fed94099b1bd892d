#include "fibocube/word.hpp"

#include <bit>

#include "fibocube/trace.hpp"

namespace fibocube {

namespace {

void require_same_length(const Word& a, const Word& b) {
  if (a.length() != b.length()) {
    throw Error("word length mismatch: " + std::to_string(a.length()) +
                " vs " + std::to_string(b.length()));
  }
}

}  // namespace

Word::Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxWordLength) {
    throw Error("word length out of range [0, 63]: " + std::to_string(length));
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw Error("word bits exceed declared length");
  }
}

Word Word::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw Error("word longer than 63 bits");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error("invalid character in binary word: '" + std::string(1, c) +
                  "'");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Word(bits, static_cast<int>(text.size()));
}

int Word::at(int i) const {
  if (i < 1 || i > length_) {
    throw Error("position " + std::to_string(i) + " out of range [1, " +
                std::to_string(length_) + "]");
  }
  return static_cast<int>((bits_ >> (length_ - i)) & 1U);
}

std::string Word::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> (length_ - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Pattern::Pattern(Word w) : word_(w) {
  if (w.length() < 1) throw Error("pattern must be nonempty");
}

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw Error("pattern must be nonempty");
  return Pattern(Word::parse(text));
}

bool contains_factor(const Word& u, const Pattern& f) {
  FIBOCUBE_TRACE("contains_factor");
  return contains_factor_bits(u.bits(), u.length(), f.word().bits(),
                              f.length());
}

bool occurs_at(const Word& u, const Pattern& f, int offset) {
  if (offset < 1 || offset + f.length() - 1 > u.length()) return false;
  const int shift = u.length() - (offset + f.length() - 1);
  return ((u.bits() >> shift) & low_mask(f.length())) == f.word().bits();
}

std::vector<int> factor_offsets(const Word& u, const Pattern& f) {
  FIBOCUBE_TRACE("factor_offsets");
  std::vector<int> out;
  for (int o = 1; o + f.length() - 1 <= u.length(); ++o) {
    if (occurs_at(u, f, o)) out.push_back(o);
  }
  return out;
}

int hamming(const Word& a, const Word& b) {
  FIBOCUBE_TRACE("hamming");
  require_same_length(a, b);
  return std::popcount(a.bits() ^ b.bits());
}

std::vector<int> differing_positions(const Word& a, const Word& b) {
  FIBOCUBE_TRACE("differing_positions");
  require_same_length(a, b);
  std::vector<int> out;
  const std::uint64_t diff = a.bits() ^ b.bits();
  for (int i = 1; i <= a.length(); ++i) {
    if (diff & position_mask(i, a.length())) out.push_back(i);
  }
  return out;
}

Word flip(const Word& w, int i) {
  FIBOCUBE_TRACE("flip");
  if (i < 1 || i > w.length()) {
    throw Error("flip position " + std::to_string(i) + " out of range [1, " +
                std::to_string(w.length()) + "]");
  }
  return Word(w.bits() ^ position_mask(i, w.length()), w.length());
}

Word reverse(const Word& w) {
  FIBOCUBE_TRACE("reverse");
  std::uint64_t out = 0;
  std::uint64_t in = w.bits();
  for (int i = 0; i < w.length(); ++i) {
    out = (out << 1) | (in & 1U);
    in >>= 1;
  }
  return Word(out, w.length());
}

Word complement(const Word& w) {
  FIBOCUBE_TRACE("complement");
  return Word(~w.bits() & low_mask(w.length()), w.length());
}

Word concat(const Word& a, const Word& b) {
  if (a.length() + b.length() > kMaxWordLength) {
    throw Error("concatenation exceeds 63 bits");
  }
  return Word((a.bits() << b.length()) | b.bits(), a.length() + b.length());
}

std::vector<Pattern> all_patterns(int length) {
  if (length < 1 || length > 30) throw Error("pattern length out of range");
  std::vector<Pattern> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) {
    out.emplace_back(Word(v, length));
  }
  return out;
}

}  // namespace fibocube
