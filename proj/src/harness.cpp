#include "fibocube/harness.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "fibocube/periodicity.hpp"
#include "fibocube/structural.hpp"

namespace fibocube::harness {

namespace {

struct Outcome {
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
};

// Runs fn over every pattern; results are stored by position so the merge
// does not depend on the worker count.
template <class Fn>
std::vector<Outcome> sweep(std::span<const Pattern> patterns, int workers, Fn fn) {
  std::vector<Outcome> out(patterns.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < patterns.size(); i = next.fetch_add(1)) {
      out[i] = fn(patterns[i]);
    }
  };
  const int n = std::max(1, workers);
  if (n == 1 || patterns.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

TheoremReport merge(std::string theorem, std::string range, const std::vector<Outcome>& outcomes) {
  TheoremReport report{std::move(theorem), std::move(range), true, 0, std::nullopt};
  for (const Outcome& o : outcomes) {
    report.checked += o.checked;
    if (o.counterexample && report.pass) {
      report.pass = false;
      report.counterexample = o.counterexample;
    }
  }
  return report;
}

void require_max(int value, int cap, const char* what) {
  if (value < 0 || value > cap) {
    throw CapError(std::string(what) + " " + std::to_string(value) + " exceeds cap " +
                   std::to_string(cap));
  }
}

std::string lengths(int max_len) { return "|f| in [1, " + std::to_string(max_len) + "]"; }

std::string describe(const oracle::IndexResult& r) {
  return r.bad ? "bad B=" + std::to_string(r.index) : "good";
}

std::string describe(const structural::Classification& c) {
  return c.bad() ? "bad B=" + std::to_string(c.index) : "good";
}

oracle::ScanOptions scan_for(const Pattern& f, const Config& cfg) {
  return {cfg.dimension_cap, oracle_scan_limit(f), 1};
}

Outcome compare_with_oracle(const Pattern& f, const Config& cfg) {
  const auto c = structural::classify(f);
  const auto o = oracle::index_bruteforce(f, scan_for(f, cfg));
  Outcome out{1, std::nullopt};
  if (c.bad() != o.bad || (o.bad && c.index != o.index)) {
    out.counterexample = Counterexample{f.str(), o.index,
                                        "structural " + describe(c) + ", oracle " + describe(o)};
  }
  return out;
}

}  // namespace

std::vector<Pattern> patterns_up_to(int max_len) {
  std::vector<Pattern> out;
  for (int n = 1; n <= max_len; ++n) {
    auto ps = all_patterns(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

int oracle_scan_limit(const Pattern& f) {
  return f.length() <= kExtendedScanLength ? 2 * f.length() + 2 : 2 * f.length() - 1;
}

TheoremReport cross_validate(int max_len, const Config& cfg) {
  require_max(max_len, 8, "cross-validation length");
  const auto ps = patterns_up_to(max_len);
  auto outcomes = sweep(ps, cfg.workers, [&](const Pattern& f) { return compare_with_oracle(f, cfg); });
  return merge("structural-equals-oracle", lengths(max_len), outcomes);
}

TheoremReport cross_validate_patterns(std::span<const Pattern> patterns, const Config& cfg) {
  for (const auto& f : patterns) require_max(f.length(), 8, "cross-validation length");
  auto outcomes = sweep(patterns, cfg.workers, [&](const Pattern& f) { return compare_with_oracle(f, cfg); });
  return merge("structural-equals-oracle", std::to_string(patterns.size()) + " listed patterns",
               outcomes);
}

TheoremReport check_p_values(int max_len, const Config& cfg) {
  require_max(max_len, 8, "p-value sweep length");
  const auto ps = patterns_up_to(max_len);
  auto outcomes = sweep(ps, cfg.workers, [&](const Pattern& f) {
    Outcome out;
    const auto index = oracle::index_bruteforce(f, {cfg.dimension_cap, 0, 1});
    if (!index.bad) return out;
    out.checked = 1;
    const auto G = oracle::build_graph(f, index.index, cfg.dimension_cap);
    const auto pairs = oracle::find_critical_pairs(G, true);
    if (pairs.empty()) {
      out.counterexample = Counterexample{f.str(), index.index, "no critical pairs at the index"};
    } else if (pairs.front().p != 2 && pairs.front().p != 3) {
      out.counterexample = Counterexample{
          f.str(), index.index,
          "minimal p=" + std::to_string(pairs.front().p) + " at alpha=" + pairs.front().alpha.str() +
              " beta=" + pairs.front().beta.str()};
    }
    return out;
  });
  return merge("critical-p-is-2-or-3", lengths(max_len), outcomes);
}

TheoremReport check_index_bound(int max_len, const Config& cfg) {
  require_max(max_len, 16, "index-bound sweep length");
  const auto ps = patterns_up_to(max_len);
  auto outcomes = sweep(ps, cfg.workers, [&](const Pattern& f) {
    Outcome out{1, std::nullopt};
    const int n = f.length();
    const auto c = structural::classify(f);
    for (const Pattern& image : {reverse(f), complement(f)}) {
      const auto ci = structural::classify(image);
      if (ci.bad() != c.bad() || ci.index != c.index) {
        out.counterexample = Counterexample{f.str(), c.index,
                                            "classification differs from " + image.str()};
        return out;
      }
    }
    if (c.bad()) {
      if (c.index > 2 * n - 1) {
        out.counterexample = Counterexample{f.str(), c.index, "index above 2|f|-1"};
        return out;
      }
      for (const auto& w : c.witnesses) {
        if (w.p == 2 && c.index > 2 * n - 2) {
          out.counterexample = Counterexample{f.str(), c.index, "p=2 witness with index above 2|f|-2"};
          return out;
        }
      }
    }
    if (n <= kExtendedScanLength) {
      const auto o = oracle::index_bruteforce(f, {cfg.dimension_cap, 2 * n + 2, 1});
      if (o.bad && o.index > 2 * n - 1) {
        out.counterexample = Counterexample{f.str(), o.index, "oracle first failure beyond 2|f|-1"};
      }
    }
    return out;
  });
  return merge("index-below-twice-length", lengths(max_len), outcomes);
}

TheoremReport check_doubling(int max_len, int oracle_len, const Config& cfg) {
  require_max(max_len, 8, "doubling sweep length");
  require_max(oracle_len, 4, "doubling oracle length");
  const auto ps = patterns_up_to(max_len);
  auto outcomes = sweep(ps, cfg.workers, [&](const Pattern& f) {
    Outcome out{1, std::nullopt};
    const Pattern ff(concat(f.word(), f.word()));
    const auto c = structural::classify(f);
    if (!c.bad()) {
      const auto cff = structural::classify(ff);
      if (cff.bad()) {
        out.counterexample = Counterexample{ff.str(), cff.index, "f good but ff " + describe(cff)};
        return out;
      }
      if (f.length() <= oracle_len) {
        const auto o = oracle::index_bruteforce(ff, {cfg.dimension_cap, 0, 1});
        if (o.bad) out.counterexample = Counterexample{ff.str(), o.index, "oracle: ff " + describe(o)};
      }
      return out;
    }
    // Below the index Q_d(f) is isometric and Q_d(ff) must be as well.
    for (int d = 1; d < c.index; ++d) {
      const auto G = oracle::build_graph(ff, d, cfg.dimension_cap);
      const bool isometric = d < ff.length()
                                 ? G.vertex_count() == (std::size_t{1} << d)
                                 : oracle::is_isometric(G).isometric;
      if (!isometric) {
        out.counterexample = Counterexample{ff.str(), d, "Q_d(ff) not isometric below B(f)"};
        return out;
      }
    }
    return out;
  });
  return merge("good-doubles-to-good", lengths(max_len), outcomes);
}

TheoremReport check_monotonicity(int max_len, int extra, const Config& cfg) {
  require_max(max_len, 8, "monotonicity sweep length");
  require_max(extra, 8, "monotonicity extra dimensions");
  const auto ps = patterns_up_to(max_len);
  auto outcomes = sweep(ps, cfg.workers, [&](const Pattern& f) {
    Outcome out;
    const auto c = structural::classify(f);
    if (!c.bad()) return out;
    for (int d = c.index; d <= c.index + extra; ++d) {
      ++out.checked;
      for (const auto& w : c.witnesses) {
        const auto lifted = structural::lift_witness(w, d);
        const auto check = structural::verify_witness(lifted);
        if (!check) {
          out.counterexample = Counterexample{
              f.str(), d,
              "lifted witness alpha=" + lifted.alpha.str() + " fails: " +
                  std::string(structural::to_string(check.reason))};
          return out;
        }
      }
      if (d <= cfg.dimension_cap) {
        const auto G = oracle::build_graph(f, d, cfg.dimension_cap);
        if (oracle::is_isometric(G).isometric) {
          out.counterexample = Counterexample{f.str(), d, "oracle finds Q_d(f) isometric above B(f)"};
          return out;
        }
      }
    }
    return out;
  });
  return merge("non-isometry-persists", lengths(max_len) + ", d in [B, B+" + std::to_string(extra) + "]",
               outcomes);
}

TheoremReport check_critical_pair_equivalence(int max_len, const Config& cfg) {
  require_max(max_len, 6, "critical-pair equivalence length");
  const auto ps = patterns_up_to(max_len);
  auto outcomes = sweep(ps, cfg.workers, [&](const Pattern& f) {
    Outcome out;
    for (int d = 1; d <= oracle_scan_limit(f); ++d) {
      ++out.checked;
      const auto G = oracle::build_graph(f, d, cfg.dimension_cap);
      const auto verdict = oracle::is_isometric(G);
      const bool isometric = verdict.isometric;
      const bool critical = !oracle::find_critical_pairs(G, false).empty();
      if (!isometric) {
        // Re-derive the reported violation with a point-to-point search.
        const auto& v = *verdict.violating_pair;
        const auto dist = oracle::graph_distance(G, v.alpha, v.beta);
        const bool confirmed = dist == v.graph_distance && (!dist || *dist > hamming(v.alpha, v.beta));
        if (!confirmed) {
          out.counterexample = Counterexample{
              f.str(), d, "violating pair " + v.alpha.str() + "," + v.beta.str() + " does not re-verify"};
          return out;
        }
      }
      if (isometric == critical) {
        out.counterexample = Counterexample{
            f.str(), d,
            std::string(isometric ? "isometric" : "not isometric") +
                (critical ? " but critical pairs exist" : " but no critical pairs")};
        return out;
      }
    }
    return out;
  });
  return merge("non-isometric-iff-critical-pair", lengths(max_len), outcomes);
}

TheoremReport check_overlap_graphs(int max_rs, int max_residue_sum) {
  TheoremReport report{"overlap-graph-single-cycle",
                       "r, s in [1, " + std::to_string(max_rs) + "]; coprime k1+k2 <= " +
                           std::to_string(max_residue_sum),
                       true, 0, std::nullopt};
  const auto fail = [&](std::string details) {
    if (report.pass) {
      report.pass = false;
      report.counterexample = Counterexample{"", 0, std::move(details)};
    }
  };
  for (int r = 1; r <= max_rs; ++r) {
    for (int s = 1; s <= max_rs; ++s) {
      ++report.checked;
      const auto G = periodicity::build_overlap_graph(r, s);
      if (!periodicity::is_single_cycle(G) ||
          static_cast<int>(G.edges.size()) != 2 * (G.k1 + G.k2)) {
        fail("G(" + std::to_string(r) + "," + std::to_string(s) + ") is not one cycle of length 2(k1+k2)");
      }
    }
  }
  for (int k1 = 1; k1 < max_residue_sum; ++k1) {
    for (int k2 = 1; k1 + k2 <= max_residue_sum; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      ++report.checked;
      const auto h = periodicity::residue_sequence(k1, k2);
      std::vector<int> sorted = h;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> expected(h.size());
      std::iota(expected.begin(), expected.end(), 0);
      const bool last_is_k2 = h.back() == k2 &&
                              std::find(h.begin(), h.end() - 1, k2) == h.end() - 1;
      if (sorted != expected || !last_is_k2) {
        fail("residue sequence (" + std::to_string(k1) + "," + std::to_string(k2) + ") malformed");
      }
    }
  }
  return report;
}

TheoremReport check_equation_closure(int max_rs, int max_word_len) {
  using periodicity::EquationId;
  TheoremReport report{"equation-closure",
                       "r, s in [1, " + std::to_string(max_rs) + "]; words up to length " +
                           std::to_string(max_word_len),
                       true, 0, std::nullopt};
  const auto fail = [&](std::string details) {
    if (report.pass) {
      report.pass = false;
      report.counterexample = Counterexample{"", 0, std::move(details)};
    }
  };
  const auto implied = [](int r, int s, const std::vector<EquationId>& ids, int a, int b) {
    return periodicity::closure_implies(r, s, ids, {a, b});
  };
  for (int r = 1; r <= max_rs; ++r) {
    for (int s = 1; s <= max_rs; ++s) {
      const std::string rs = "r=" + std::to_string(r) + " s=" + std::to_string(s);
      const int g = std::gcd(r, s);
      const int k1 = r / g;
      const int k2 = s / g;
      // Any two equations of the triangle force the third.
      for (int drop = 1; drop <= 3; ++drop) {
        ++report.checked;
        std::vector<EquationId> ids;
        for (int i = 1; i <= 3; ++i) {
          if (i != drop) ids.push_back({1, i});
        }
        const auto eq = periodicity::equation(r, s, {1, drop});
        if (!implied(r, s, ids, eq.lhs, eq.rhs)) fail("triangle " + rs);
      }
      const auto all_but = [&](std::initializer_list<EquationId> dropped) {
        std::vector<EquationId> ids;
        for (int i = 1; i <= k1; ++i) ids.push_back({2, i});
        for (int j = 1; j <= k2; ++j) ids.push_back({3, j});
        std::erase_if(ids, [&](EquationId id) {
          return std::find(dropped.begin(), dropped.end(), id) != dropped.end();
        });
        return ids;
      };
      // All but one of equations (2) and (3) force the remaining one.
      for (int i = 1; i <= k1 + k2; ++i) {
        ++report.checked;
        const EquationId id = i <= k1 ? EquationId{2, i} : EquationId{3, i - k1};
        const auto eq = periodicity::equation(r, s, id);
        if (!implied(r, s, all_but({id}), eq.lhs, eq.rhs)) fail("single deletion " + rs);
      }
      // Two deletions leave the cross equalities.
      for (int i1 = 1; i1 <= k1; ++i1) {
        for (int i2 = i1 + 1; i2 <= k1; ++i2) {
          ++report.checked;
          const auto ids = all_but({{2, i1}, {2, i2}});
          if (!implied(r, s, ids, (i1 - 1) * g, (i2 - 1) * g + s) ||
              !implied(r, s, ids, (i2 - 1) * g, (i1 - 1) * g + s)) {
            fail("two type-(2) deletions " + rs);
          }
        }
      }
      for (int j1 = 1; j1 <= k2; ++j1) {
        for (int j2 = j1 + 1; j2 <= k2; ++j2) {
          ++report.checked;
          const auto ids = all_but({{3, j1}, {3, j2}});
          if (!implied(r, s, ids, (j1 - 1) * g, (j2 - 1) * g + r) ||
              !implied(r, s, ids, (j2 - 1) * g, (j1 - 1) * g + r)) {
            fail("two type-(3) deletions " + rs);
          }
        }
      }
      for (int i1 = 1; i1 <= k1; ++i1) {
        for (int j1 = 1; j1 <= k2; ++j1) {
          ++report.checked;
          const auto ids = all_but({{2, i1}, {3, j1}});
          if (!implied(r, s, ids, (i1 - 1) * g, (j1 - 1) * g) ||
              !implied(r, s, ids, (i1 - 1) * g + s, (j1 - 1) * g + r)) {
            fail("mixed deletion " + rs);
          }
        }
      }
    }
  }
  // Concrete strings with both periods satisfy the equations for every base.
  for (int n = 2; n <= max_word_len; ++n) {
    for (const Pattern& f : all_patterns(n)) {
      for (int r = 1; r < n; ++r) {
        ++report.checked;
        if (!periodicity::period_closure_check(f, r, n - r).holds) {
          fail("period closure fails for " + f.str() + " r=" + std::to_string(r));
        }
      }
    }
  }
  return report;
}

CensusRow census(int n, const Config& cfg) {
  require_max(n, 14, "census length");
  if (n < 1) throw Error("census length must be positive");
  const auto ps = all_patterns(n);
  std::vector<structural::Classification> results(ps.size());
  sweep(ps, cfg.workers, [&](const Pattern& f) {
    const auto i = static_cast<std::size_t>(f.word().bits());
    results[i] = structural::classify(f);
    return Outcome{};
  });
  CensusRow row;
  row.length = n;
  row.total = ps.size();
  for (const auto& c : results) {
    if (!c.bad()) {
      ++row.good_count;
      continue;
    }
    ++row.bad_count;
    ++row.index_histogram[c.index];
    int p = c.witnesses.front().p;
    for (const auto& w : c.witnesses) p = std::min(p, w.p);
    ++row.p_histogram[p];
  }
  if (n <= kCensusOracleLength) {
    const auto outcomes = sweep(ps, cfg.workers, [&](const Pattern& f) {
      const auto o = oracle::index_bruteforce(f, {cfg.dimension_cap, 0, 1});
      const auto& c = results[static_cast<std::size_t>(f.word().bits())];
      const bool agree = o.bad == c.bad() && (!o.bad || o.index == c.index);
      return Outcome{1, agree ? std::nullopt : std::optional<Counterexample>(Counterexample{})};
    });
    row.oracle_confirmed = std::none_of(outcomes.begin(), outcomes.end(),
                                        [](const Outcome& o) { return o.counterexample.has_value(); });
  }
  return row;
}

TheoremReport check_census_symmetry(int n, const Config& cfg) {
  require_max(n, 14, "census length");
  const auto ps = all_patterns(n);
  std::vector<char> good(ps.size());
  sweep(ps, cfg.workers, [&](const Pattern& f) {
    good[static_cast<std::size_t>(f.word().bits())] = !structural::classify(f).bad();
    return Outcome{};
  });
  TheoremReport report{"census-symmetry", "|f| = " + std::to_string(n), true, ps.size(), std::nullopt};
  for (const auto& f : ps) {
    const bool g = good[static_cast<std::size_t>(f.word().bits())];
    const bool gr = good[static_cast<std::size_t>(reverse(f.word()).bits())];
    const bool gc = good[static_cast<std::size_t>(complement(f.word()).bits())];
    if (g != gr || g != gc) {
      report.pass = false;
      report.counterexample = Counterexample{f.str(), 0, "good status differs from reverse/complement"};
      break;
    }
  }
  return report;
}

std::vector<Pattern> find_pure_three_critical(int max_len, const Config& cfg) {
  require_max(max_len, 12, "p=3 probe length");
  const auto ps = patterns_up_to(max_len);
  std::vector<char> pure(ps.size());
  sweep(ps, cfg.workers, [&](const Pattern& f) {
    const auto c = structural::classify(f);
    const auto i = static_cast<std::size_t>(&f - ps.data());
    pure[i] = c.bad() && std::all_of(c.witnesses.begin(), c.witnesses.end(),
                                     [](const auto& w) { return w.p == 3; });
    return Outcome{};
  });
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (pure[i]) out.push_back(ps[i]);
  }
  return out;
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "p-values") return Suite::PValues;
  if (name == "index-bound") return Suite::IndexBound;
  if (name == "doubling") return Suite::Doubling;
  if (name == "monotonicity") return Suite::Monotonicity;
  if (name == "lemma21") return Suite::CriticalPairs;
  if (name == "cross") return Suite::Cross;
  if (name == "periodicity") return Suite::Periodicity;
  return std::nullopt;
}

std::vector<TheoremReport> run_suite(Suite suite, int max_len, const Config& cfg) {
  std::vector<TheoremReport> out;
  const auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
  if (want(Suite::Cross)) out.push_back(cross_validate(max_len, cfg));
  if (want(Suite::PValues)) out.push_back(check_p_values(max_len, cfg));
  if (want(Suite::IndexBound)) out.push_back(check_index_bound(max_len, cfg));
  if (want(Suite::Doubling)) out.push_back(check_doubling(max_len, std::min(max_len, 3), cfg));
  if (want(Suite::Monotonicity)) out.push_back(check_monotonicity(max_len, 3, cfg));
  if (want(Suite::CriticalPairs)) out.push_back(check_critical_pair_equivalence(std::min(max_len, 6), cfg));
  if (want(Suite::Periodicity)) {
    out.push_back(check_overlap_graphs(20, 40));
    out.push_back(check_equation_closure(12, 12));
    out.push_back(check_census_symmetry(std::min(max_len, 10), cfg));
  }
  return out;
}

}  // namespace fibocube::harness
