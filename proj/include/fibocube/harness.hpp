#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibocube/oracle.hpp"
#include "fibocube/word.hpp"

namespace fibocube::harness {

struct Config {
  int workers = 1;
  int dimension_cap = oracle::kDefaultDimensionCap;
};

struct Counterexample {
  std::string pattern;
  int dimension = 0;
  std::string details;
  bool operator==(const Counterexample&) const = default;
};

struct TheoremReport {
  std::string theorem;
  std::string range;
  bool pass = true;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
  bool operator==(const TheoremReport&) const = default;
};

struct CensusRow {
  int length = 0;
  std::uint64_t total = 0;
  std::uint64_t good_count = 0;
  std::uint64_t bad_count = 0;
  std::map<int, std::uint64_t> index_histogram;
  /// Each bad pattern counted once, under the smallest p among its
  /// minimal-dimension witnesses.
  std::map<int, std::uint64_t> p_histogram;
  bool oracle_confirmed = false;

  double good_fraction() const {
    return total == 0 ? 0.0 : static_cast<double>(good_count) / static_cast<double>(total);
  }
  bool operator==(const CensusRow&) const = default;
};

/// Patterns of every length in [1, max_len], by length then lexicographically.
std::vector<Pattern> patterns_up_to(int max_len);

/// Oracle scan range used by the sweeps: 2|f|-1, widened to 2|f|+2 for
/// |f| <= kExtendedScanLength to probe just past the index bound.
inline constexpr int kExtendedScanLength = 4;
int oracle_scan_limit(const Pattern& f);

TheoremReport cross_validate(int max_len, const Config& cfg = {});
TheoremReport cross_validate_patterns(std::span<const Pattern> patterns,
                                      const Config& cfg = {});
TheoremReport check_p_values(int max_len, const Config& cfg = {});
TheoremReport check_index_bound(int max_len, const Config& cfg = {});
TheoremReport check_doubling(int max_len, int oracle_len = 3, const Config& cfg = {});
TheoremReport check_monotonicity(int max_len, int extra, const Config& cfg = {});
TheoremReport check_critical_pair_equivalence(int max_len, const Config& cfg = {});
/// Single-cycle and residue properties of the overlap graphs for r, s <= max_rs.
TheoremReport check_overlap_graphs(int max_rs, int max_residue_sum);
/// Forced equalities of the triangle, single-deletion and double-deletion
/// cases for r, s <= max_rs, plus the period check on all short words.
TheoremReport check_equation_closure(int max_rs, int max_word_len);

/// Census rows up to this length are also re-derived with the oracle.
inline constexpr int kCensusOracleLength = 6;

CensusRow census(int n, const Config& cfg = {});
/// Good patterns of length n are closed under reversal and complement.
TheoremReport check_census_symmetry(int n, const Config& cfg = {});

/// Patterns whose minimal-dimension witnesses all have p = 3.
std::vector<Pattern> find_pure_three_critical(int max_len, const Config& cfg = {});

enum class Suite { All, PValues, IndexBound, Doubling, Monotonicity, CriticalPairs, Cross, Periodicity };

std::optional<Suite> parse_suite(std::string_view name);

/// Runs the selected suite(s) at the given pattern length.
std::vector<TheoremReport> run_suite(Suite suite, int max_len, const Config& cfg = {});

}  // namespace fibocube::harness
