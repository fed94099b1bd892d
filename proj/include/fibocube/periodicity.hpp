#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fibocube/word.hpp"

namespace fibocube::periodicity {

/// Identifies one equality among positions t..t+r+s of a word.
///   type 1, index 1..3: the triangle f_t = f_{t+r}, f_{t+r} = f_{t+r+s},
///                        f_t = f_{t+r+s}
///   type 2, index 1..r/g: f_{t+(i-1)g} = f_{t+(i-1)g+s}
///   type 3, index 1..s/g: f_{t+(j-1)g} = f_{t+(j-1)g+r}
///   type 4, index 1..(r+s)/g: the tautology f_{t+(i-1)g} = f_{t+(i-1)g}
struct EquationId {
  int type = 0;
  int index = 0;
  auto operator<=>(const EquationId&) const = default;
};

/// An equation with both sides given as offsets relative to the base t.
struct Equation {
  EquationId id;
  int lhs = 0;
  int rhs = 0;
};

struct EquationSystem {
  int r = 0;
  int s = 0;
  int g = 0;
  /// Relative offsets 0, g, 2g, ..., r+s.
  std::vector<int> span;
  /// All type 2, 3 and 4 equations in (type, index) order.
  std::vector<Equation> equations;
};

struct OverlapEdge {
  int x = 0;  // index into OverlapGraph::x_labels
  int y = 0;  // index into OverlapGraph::y_labels
  EquationId id;
};

/// Bipartite graph whose X side holds v1_1..v1_k1 then v3_1..v3_k2 and whose
/// Y side holds v2_1..v2_{k1+k2}. Edge v1_i v2_{i+k2} is equation (2, i),
/// edge v3_k v2_k is equation (3, k); the remaining edges are tautologies.
struct OverlapGraph {
  int r = 0;
  int s = 0;
  int g = 0;
  int k1 = 0;
  int k2 = 0;
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<OverlapEdge> edges;
};

EquationSystem build_equation_system(int r, int s);
Equation equation(int r, int s, EquationId id);

OverlapGraph build_overlap_graph(int r, int s);
bool is_single_cycle(const OverlapGraph& graph);
std::vector<int> vertex_degrees(const OverlapGraph& graph);
std::string overlap_graph_dot(const OverlapGraph& graph);

/// h_j = (j-1) k1 mod (k1+k2) for j = 1..k1+k2. Requires gcd(k1,k2) = 1.
std::vector<int> residue_sequence(int k1, int k2);

/// Whether assuming the given equations forces f_{t+a} = f_{t+b} for the
/// queried relative offsets (a, b).
bool closure_implies(int r, int s, std::span<const EquationId> assumed,
                     std::pair<int, int> queried);

struct PeriodCheck {
  bool holds = true;
  bool vacuous = false;
};

/// For |f| = r+s: if f has periods s (over 1..r) and r (over 1..s), checks
/// that equations (2) and (3) hold for every base t = 1..g.
PeriodCheck period_closure_check(const Pattern& f, int r, int s);

}  // namespace fibocube::periodicity
