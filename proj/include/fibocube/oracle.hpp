#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibocube/word.hpp"

namespace fibocube::oracle {

inline constexpr int kDefaultDimensionCap = 25;

/// Q_d(f): the length-d words avoiding f, adjacency is Hamming distance 1.
/// Membership is held as a bitset over all 2^d words so that BFS can expand
/// whole frontiers with word-parallel operations.
class AvoidanceGraph {
 public:
  AvoidanceGraph(Pattern f, int dimension);

  int dimension() const { return dimension_; }
  const Pattern& pattern() const { return pattern_; }

  /// Vertices in lexicographic order.
  const std::vector<std::uint64_t>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool contains(std::uint64_t word_bits) const {
    return (membership_[word_bits >> 6] >> (word_bits & 63)) & 1U;
  }
  bool contains(const Word& w) const;

  Word word(std::uint64_t bits) const { return Word(bits, dimension_); }
  const std::vector<std::uint64_t>& membership() const { return membership_; }

 private:
  Pattern pattern_;
  int dimension_;
  std::vector<std::uint64_t> membership_;
  std::vector<std::uint64_t> vertices_;
};

AvoidanceGraph build_graph(const Pattern& f, int d,
                           int dimension_cap = kDefaultDimensionCap);

/// Shortest-path distance inside G; nullopt when b is unreachable from a.
std::optional<int> graph_distance(const AvoidanceGraph& G, const Word& a,
                                  const Word& b);

struct Violation {
  Word alpha;
  Word beta;
  std::optional<int> graph_distance;  // nullopt: unreachable
  int hamming = 0;
};

struct Verdict {
  bool isometric = true;
  std::optional<Violation> violating_pair;
  std::optional<int> minimal_critical_p;
  /// Set when some pair was found to be disconnected.
  bool unreachable_seen = false;
};

struct IsometryOptions {
  int workers = 1;
  bool with_critical_p = false;
};

/// All-sources BFS. Sources are scanned in lexicographic order and the scan
/// stops at the first source with a violation; the reported target is the
/// lexicographically smallest violating vertex for that source.
Verdict is_isometric(const AvoidanceGraph& G, const IsometryOptions& opts = {});

enum class BlockedSide { Alpha, Beta, Both };

struct CriticalPair {
  Word alpha;
  Word beta;
  int p = 0;
  BlockedSide blocked_side = BlockedSide::Alpha;
};

/// p-critical pairs straight from the definition, with alpha < beta.
std::vector<CriticalPair> find_critical_pairs(const AvoidanceGraph& G,
                                              bool minimal_only);

struct IndexResult {
  bool bad = false;
  int index = 0;  // meaningful when bad
  bool operator==(const IndexResult&) const = default;
};

struct ScanOptions {
  int dimension_cap = kDefaultDimensionCap;
  /// Highest dimension scanned; 0 means 2|f| - 1.
  int max_dimension = 0;
  int workers = 1;
};

/// First d in 1..max_dimension at which Q_d(f) is not isometric.
IndexResult index_bruteforce(const Pattern& f, const ScanOptions& opts = {});

}  // namespace fibocube::oracle
