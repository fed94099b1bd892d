#include "fibocube/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <thread>

#include "fibocube/trace.hpp"

namespace fibocube::oracle {

namespace {

// In-word masks selecting the bit indices whose bit b is 0, for b < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Level-synchronous BFS over the 2^d universe, one bit per word.
class FrontierBfs {
 public:
  explicit FrontierBfs(const AvoidanceGraph& G)
      : G_(G),
        words_(G.membership().size()),
        visited_(words_),
        frontier_(words_),
        next_(words_) {}

  void start(std::uint64_t source) {
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    set(visited_, source);
    set(frontier_, source);
    level_ = 0;
  }

  // Advances one level; returns false when the frontier is exhausted.
  bool step() {
    std::fill(next_.begin(), next_.end(), 0);
    const int d = G_.dimension();
    for (int b = 0; b < d; ++b) {
      if (b < 6) {
        const int shift = 1 << b;
        const std::uint64_t m = kLowHalf[b];
        for (std::size_t w = 0; w < words_; ++w) {
          const std::uint64_t f = frontier_[w];
          next_[w] |= ((f & m) << shift) | ((f >> shift) & m);
        }
      } else {
        const std::size_t stride = std::size_t{1} << (b - 6);
        for (std::size_t w = 0; w < words_; ++w) next_[w] |= frontier_[w ^ stride];
      }
    }
    const auto& member = G_.membership();
    bool any = false;
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t fresh = next_[w] & member[w] & ~visited_[w];
      frontier_[w] = fresh;
      visited_[w] |= fresh;
      any |= fresh != 0;
    }
    if (any) ++level_;
    return any;
  }

  int level() const { return level_; }
  const std::vector<std::uint64_t>& frontier() const { return frontier_; }
  const std::vector<std::uint64_t>& visited() const { return visited_; }
  bool reached(std::uint64_t v) const { return (visited_[v >> 6] >> (v & 63)) & 1U; }

 private:
  static void set(std::vector<std::uint64_t>& bits, std::uint64_t v) {
    bits[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  const AvoidanceGraph& G_;
  std::size_t words_;
  std::vector<std::uint64_t> visited_;
  std::vector<std::uint64_t> frontier_;
  std::vector<std::uint64_t> next_;
  int level_ = 0;
};

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct SourceResult {
  std::uint64_t target = kNone;
  std::optional<int> distance;
};

// Smallest violating target for one source, or kNone.
SourceResult scan_source(FrontierBfs& bfs, std::uint64_t source) {
  SourceResult best;
  bfs.start(source);
  while (bfs.step()) {
    const auto& frontier = bfs.frontier();
    const int level = bfs.level();
    for (std::size_t w = 0; w < frontier.size(); ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        const std::uint64_t v = (w << 6) | static_cast<std::uint64_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (std::popcount(v ^ source) != level && v < best.target) {
          best.target = v;
          best.distance = level;
        }
      }
    }
  }
  return best;
}

std::uint64_t first_unreached(const AvoidanceGraph& G, const FrontierBfs& bfs) {
  const auto& member = G.membership();
  for (std::size_t w = 0; w < member.size(); ++w) {
    const std::uint64_t missing = member[w] & ~bfs.visited()[w];
    if (missing) return (w << 6) | static_cast<std::uint64_t>(std::countr_zero(missing));
  }
  return kNone;
}

}  // namespace

AvoidanceGraph::AvoidanceGraph(Pattern f, int dimension)
    : pattern_(f), dimension_(dimension) {
  const std::uint64_t universe = std::uint64_t{1} << dimension;
  membership_.assign(std::max<std::uint64_t>(1, universe / 64), 0);
  const std::uint64_t fbits = f.word().bits();
  const int flen = f.length();
  for (std::uint64_t v = 0; v < universe; ++v) {
    if (!contains_factor_bits(v, dimension, fbits, flen)) {
      membership_[v >> 6] |= std::uint64_t{1} << (v & 63);
      vertices_.push_back(v);
    }
  }
}

bool AvoidanceGraph::contains(const Word& w) const {
  return w.length() == dimension_ && contains(w.bits());
}

AvoidanceGraph build_graph(const Pattern& f, int d, int dimension_cap) {
  FIBOCUBE_TRACE("build_graph");
  if (d < 1 || d > dimension_cap) {
    throw CapError("dimension " + std::to_string(d) +
                   " outside [1, dimension cap " + std::to_string(dimension_cap) + "]");
  }
  return AvoidanceGraph(f, d);
}

std::optional<int> graph_distance(const AvoidanceGraph& G, const Word& a,
                                  const Word& b) {
  FIBOCUBE_TRACE("graph_distance");
  if (!G.contains(a)) throw Error("vertex " + a.str() + " not in graph");
  if (!G.contains(b)) throw Error("vertex " + b.str() + " not in graph");
  if (a == b) return 0;
  FrontierBfs bfs(G);
  bfs.start(a.bits());
  while (bfs.step()) {
    if (bfs.reached(b.bits())) return bfs.level();
  }
  return std::nullopt;
}

Verdict is_isometric(const AvoidanceGraph& G, const IsometryOptions& opts) {
  FIBOCUBE_TRACE("is_isometric");
  const auto& vertices = G.vertices();
  const std::size_t n = vertices.size();
  const int workers = std::max(1, opts.workers);

  // Index of the first source (in lexicographic order) with a violation.
  std::atomic<std::size_t> first_bad{n};
  std::atomic<std::size_t> cursor{0};
  std::vector<SourceResult> results(n);

  auto work = [&] {
    FrontierBfs bfs(G);
    constexpr std::size_t kChunk = 16;
    for (;;) {
      const std::size_t begin = cursor.fetch_add(kChunk);
      if (begin >= n || begin >= first_bad.load()) return;
      const std::size_t end = std::min(n, begin + kChunk);
      for (std::size_t i = begin; i < end && i < first_bad.load(); ++i) {
        SourceResult r = scan_source(bfs, vertices[i]);
        // Unreached vertices are violations at infinite distance.
        const std::uint64_t missing = first_unreached(G, bfs);
        if (missing < r.target) {
          r.target = missing;
          r.distance.reset();
        }
        if (r.target != kNone) {
          results[i] = r;
          std::size_t cur = first_bad.load();
          while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };

  if (workers == 1 || n < 64) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  Verdict verdict;
  const std::size_t bad = first_bad.load();
  if (bad < n) {
    const SourceResult& r = results[bad];
    verdict.isometric = false;
    Violation v{G.word(vertices[bad]), G.word(r.target), r.distance,
                std::popcount(vertices[bad] ^ r.target)};
    verdict.unreachable_seen = !r.distance.has_value();
    verdict.violating_pair = v;
  }
  if (opts.with_critical_p) {
    const auto pairs = find_critical_pairs(G, true);
    if (!pairs.empty()) verdict.minimal_critical_p = pairs.front().p;
  }
  return verdict;
}

std::vector<CriticalPair> find_critical_pairs(const AvoidanceGraph& G,
                                              bool minimal_only) {
  FIBOCUBE_TRACE("find_critical_pairs");
  const int d = G.dimension();
  std::map<std::pair<std::uint64_t, std::uint64_t>, BlockedSide> found;
  for (std::uint64_t alpha : G.vertices()) {
    std::uint64_t blocked = 0;
    for (int b = 0; b < d; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if (!G.contains(alpha ^ bit)) blocked |= bit;
    }
    if (std::popcount(blocked) < 2) continue;
    // Every beta whose difference set lies inside the blocked positions.
    for (std::uint64_t sub = blocked; sub != 0; sub = (sub - 1) & blocked) {
      if (std::popcount(sub) < 2) continue;
      const std::uint64_t beta = alpha ^ sub;
      if (!G.contains(beta)) continue;
      const auto key = std::minmax(alpha, beta);
      const BlockedSide side = alpha == key.first ? BlockedSide::Alpha : BlockedSide::Beta;
      auto [it, inserted] = found.try_emplace(key, side);
      if (!inserted && it->second != side) it->second = BlockedSide::Both;
    }
  }
  std::vector<CriticalPair> out;
  int min_p = std::numeric_limits<int>::max();
  for (const auto& [key, side] : found) {
    const int p = std::popcount(key.first ^ key.second);
    min_p = std::min(min_p, p);
    out.push_back({G.word(key.first), G.word(key.second), p, side});
  }
  if (minimal_only) {
    std::erase_if(out, [&](const CriticalPair& c) { return c.p != min_p; });
  }
  return out;
}

IndexResult index_bruteforce(const Pattern& f, const ScanOptions& opts) {
  FIBOCUBE_TRACE("index_bruteforce");
  const int max_d = opts.max_dimension > 0 ? opts.max_dimension : 2 * f.length() - 1;
  if (max_d > opts.dimension_cap) {
    throw CapError("brute-force scan for |f|=" + std::to_string(f.length()) +
                   " needs dimension " + std::to_string(max_d) +
                   " above dimension cap " + std::to_string(opts.dimension_cap));
  }
  for (int d = 1; d <= max_d; ++d) {
    const AvoidanceGraph G = build_graph(f, d, opts.dimension_cap);
    if (!is_isometric(G, {opts.workers, false}).isometric) return {true, d};
  }
  return {false, 0};
}

}  // namespace fibocube::oracle
