#include "fibocube/structural.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "fibocube/trace.hpp"

namespace fibocube::structural {

namespace {

struct Window {
  int offset;  // 1-based start inside alpha
  Word bits;   // length |f|
};

// Assembles a word of length d from overlapping windows; nullopt when two
// windows disagree on a shared position or a position is left uncovered.
std::optional<Word> assemble(int d, std::initializer_list<Window> windows) {
  std::vector<int> bits(static_cast<std::size_t>(d) + 1, -1);
  for (const Window& w : windows) {
    for (int k = 1; k <= w.bits.length(); ++k) {
      const int pos = w.offset + k - 1;
      if (pos > d) return std::nullopt;
      const int b = w.bits.at(k);
      int& slot = bits[static_cast<std::size_t>(pos)];
      if (slot != -1 && slot != b) return std::nullopt;
      slot = b;
    }
  }
  std::uint64_t value = 0;
  for (int pos = 1; pos <= d; ++pos) {
    const int b = bits[static_cast<std::size_t>(pos)];
    if (b < 0) return std::nullopt;
    value = (value << 1) | static_cast<std::uint64_t>(b);
  }
  return Word(value, d);
}

Word flip_all(Word w, const std::vector<int>& positions) {
  for (int i : positions) w = flip(w, i);
  return w;
}

bool witness_order(const CriticalWitness& a, const CriticalWitness& b) {
  return std::tie(a.dimension, a.alpha, a.beta, a.flips) <
         std::tie(b.dimension, b.alpha, b.beta, b.flips);
}

// Keeps the first-enumerated witness per unordered pair, then sorts by
// (d, alpha, beta). Enumeration order decides which endpoint is alpha.
void normalize(std::vector<CriticalWitness>& out) {
  std::set<std::pair<Word, Word>> seen;
  std::erase_if(out, [&](const CriticalWitness& w) {
    return !seen.insert(std::minmax(w.alpha, w.beta)).second;
  });
  std::sort(out.begin(), out.end(), witness_order);
}

}  // namespace

std::vector<CriticalWitness> two_flip_candidates(const Pattern& f) {
  FIBOCUBE_TRACE("two_flip_candidates");
  const int n = f.length();
  const Word& fw = f.word();
  std::vector<CriticalWitness> out;
  for (int r = 1; r <= n - 2; ++r) {
    const int d = n + r;
    for (int pa = r + 1; pa <= n; ++pa) {
      for (int pb = r + 1; pb <= n; ++pb) {
        if (pa == pb) continue;
        // pa owns the copy at offset 1, pb the copy at offset r + 1.
        const auto alpha = assemble(d, {{1, flip(fw, pa)}, {r + 1, flip(fw, pb - r)}});
        if (!alpha || contains_factor(*alpha, f)) continue;
        CriticalWitness w;
        w.pattern = f;
        w.dimension = d;
        w.p = 2;
        w.flips = {std::min(pa, pb), std::max(pa, pb)};
        w.offsets = {{pa, 1}, {pb, r + 1}};
        w.shift = r;
        w.alpha = *alpha;
        w.beta = flip_all(*alpha, w.flips);
        if (contains_factor(w.beta, f)) continue;
        out.push_back(std::move(w));
      }
    }
  }
  normalize(out);
  return out;
}

std::vector<CriticalWitness> three_flip_candidates(const Pattern& f) {
  FIBOCUBE_TRACE("three_flip_candidates");
  const int n = f.length();
  const Word& fw = f.word();
  std::vector<CriticalWitness> out;
  for (int rp = 1; 3 * rp + 1 <= n; ++rp) {
    const int d = n + 3 * rp;
    for (int i1 = 2 * rp + 1; i1 <= 3 * rp; ++i1) {
      const int i2 = i1 + rp;
      const int i3 = i1 + 2 * rp;
      if (i2 > n) continue;
      const auto alpha = assemble(d, {{1, flip(fw, i2)},
                                      {2 * rp + 1, flip(fw, i1 - 2 * rp)},
                                      {3 * rp + 1, flip(fw, i3 - 3 * rp)}});
      if (!alpha || contains_factor(*alpha, f)) continue;
      CriticalWitness w;
      w.pattern = f;
      w.dimension = d;
      w.p = 3;
      w.flips = {i1, i2, i3};
      w.offsets = {{i1, 2 * rp + 1}, {i2, 1}, {i3, 3 * rp + 1}};
      w.shift = rp;
      w.alpha = *alpha;
      w.beta = flip_all(*alpha, w.flips);
      if (contains_factor(w.beta, f)) continue;
      out.push_back(std::move(w));
    }
  }
  normalize(out);
  return out;
}

Classification classify(const Pattern& f) {
  FIBOCUBE_TRACE("classify");
  std::vector<CriticalWitness> all = two_flip_candidates(f);
  auto three = three_flip_candidates(f);
  all.insert(all.end(), std::make_move_iterator(three.begin()),
             std::make_move_iterator(three.end()));
  Classification c;
  if (all.empty()) return c;
  normalize(all);
  c.verdict = Verdict::Bad;
  c.index = all.front().dimension;
  for (auto& w : all) {
    if (w.dimension != c.index) break;
    c.witnesses.push_back(std::move(w));
  }
  return c;
}

std::string_view to_string(WitnessFailure failure) {
  switch (failure) {
    case WitnessFailure::None: return "none";
    case WitnessFailure::LengthMismatch: return "length-mismatch";
    case WitnessFailure::AlphaContainsPattern: return "alpha-contains-pattern";
    case WitnessFailure::BetaContainsPattern: return "beta-contains-pattern";
    case WitnessFailure::HammingMismatch: return "hamming-mismatch";
    case WitnessFailure::FlipsNotDiffering: return "flips-not-differing";
    case WitnessFailure::MissingCopy: return "missing-copy";
    case WitnessFailure::NeighborAvoidsPattern: return "neighbor-avoids-pattern";
  }
  return "unknown";
}

WitnessCheck verify_witness(const CriticalWitness& w) {
  FIBOCUBE_TRACE("verify_witness");
  if (w.p < 2) throw Error("malformed witness: p < 2");
  if (static_cast<int>(w.flips.size()) != w.p) {
    throw Error("malformed witness: p=" + std::to_string(w.p) + " but " +
                std::to_string(w.flips.size()) + " flips");
  }
  for (std::size_t k = 0; k < w.flips.size(); ++k) {
    const int i = w.flips[k];
    if (i < 1 || i > w.dimension) throw Error("malformed witness: flip out of range");
    if (k > 0 && w.flips[k - 1] >= i) throw Error("malformed witness: flips not ascending");
    if (!w.offsets.contains(i)) throw Error("malformed witness: flip without offset");
  }
  if (w.offsets.size() != w.flips.size()) {
    throw Error("malformed witness: offsets do not match flips");
  }

  const auto fail = [](WitnessFailure reason) { return WitnessCheck{false, reason}; };
  if (w.alpha.length() != w.dimension || w.beta.length() != w.dimension) {
    return fail(WitnessFailure::LengthMismatch);
  }
  if (contains_factor(w.alpha, w.pattern)) return fail(WitnessFailure::AlphaContainsPattern);
  if (contains_factor(w.beta, w.pattern)) return fail(WitnessFailure::BetaContainsPattern);
  if (hamming(w.alpha, w.beta) != w.p) return fail(WitnessFailure::HammingMismatch);
  const std::vector<int> diff = differing_positions(w.alpha, w.beta);
  if (diff != w.flips) return fail(WitnessFailure::FlipsNotDiffering);
  for (int i : w.flips) {
    const auto copies = factor_offsets(flip(w.alpha, i), w.pattern);
    if (std::find(copies.begin(), copies.end(), w.offsets.at(i)) == copies.end()) {
      return fail(WitnessFailure::MissingCopy);
    }
  }
  for (int i : diff) {
    if (!contains_factor(flip(w.alpha, i), w.pattern)) {
      return fail(WitnessFailure::NeighborAvoidsPattern);
    }
  }
  return {true, WitnessFailure::None};
}

CriticalWitness lift_witness(const CriticalWitness& w, int d) {
  FIBOCUBE_TRACE("lift_witness");
  if (d < w.dimension) {
    throw Error("cannot lift witness of dimension " + std::to_string(w.dimension) +
                " down to " + std::to_string(d));
  }
  const int k = d - w.dimension;
  const Word prefix = w.pattern.word().at(1) == 0 ? Word(low_mask(k), k) : Word::zeros(k);
  CriticalWitness out = w;
  out.dimension = d;
  out.alpha = concat(prefix, w.alpha);
  out.beta = concat(prefix, w.beta);
  out.offsets.clear();
  for (int& i : out.flips) i += k;
  for (const auto& [flip_pos, offset] : w.offsets) out.offsets[flip_pos + k] = offset + k;
  return out;
}

}  // namespace fibocube::structural
