#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "fibocube/word.hpp"

namespace fibocube::structural {

/// Certificate that alpha and beta are p-critical words for Q_d(f):
/// flipping alpha at each flip position i produces a copy of f starting at
/// offsets[i], while alpha and beta themselves avoid f.
struct CriticalWitness {
  Pattern pattern{Word(0, 1)};
  int dimension = 0;
  int p = 0;
  std::vector<int> flips;      // ascending, 1-based
  std::map<int, int> offsets;  // flip position -> copy offset
  int shift = 0;               // r when p = 2, r' when p = 3
  Word alpha;
  Word beta;

  bool operator==(const CriticalWitness&) const = default;
};

enum class Verdict { Good, Bad };

struct Classification {
  Verdict verdict = Verdict::Good;
  int index = 0;  // B(f) when Bad
  std::vector<CriticalWitness> witnesses;

  bool bad() const { return verdict == Verdict::Bad; }
};

/// Two flips whose copies of f start at offsets 1 and r+1, d = |f| + r.
std::vector<CriticalWitness> two_flip_candidates(const Pattern& f);

/// Three flips spaced r' apart whose copies start at 2r'+1, 1, 3r'+1
/// respectively, d = |f| + 3r'.
std::vector<CriticalWitness> three_flip_candidates(const Pattern& f);

Classification classify(const Pattern& f);

enum class WitnessFailure {
  None,
  LengthMismatch,
  AlphaContainsPattern,
  BetaContainsPattern,
  HammingMismatch,
  FlipsNotDiffering,
  MissingCopy,
  NeighborAvoidsPattern,
};

std::string_view to_string(WitnessFailure failure);

struct WitnessCheck {
  bool ok = false;
  WitnessFailure reason = WitnessFailure::None;
  explicit operator bool() const { return ok; }
};

/// Re-checks a witness from scratch. Throws Error when the witness is
/// structurally malformed (p < 2, wrong flip count, flip out of range).
WitnessCheck verify_witness(const CriticalWitness& w);

/// Prepends d - w.dimension copies of the complement of f's first bit.
CriticalWitness lift_witness(const CriticalWitness& w, int d);

}  // namespace fibocube::structural
