#include "fibocube/periodicity.hpp"

#include <numeric>
#include <sstream>

#include "fibocube/trace.hpp"
#include "fibocube/union_find.hpp"

namespace fibocube::periodicity {

namespace {

void require_positive(int r, int s) {
  if (r < 1 || s < 1) {
    throw Error("r and s must be positive (got r=" + std::to_string(r) +
                ", s=" + std::to_string(s) + ")");
  }
}

std::string id_text(EquationId id) {
  return "(" + std::to_string(id.type) + "," + std::to_string(id.index) + ")";
}

}  // namespace

Equation equation(int r, int s, EquationId id) {
  require_positive(r, s);
  const int g = std::gcd(r, s);
  const int i = id.index;
  switch (id.type) {
    case 1:
      if (i == 1) return {id, 0, r};
      if (i == 2) return {id, r, r + s};
      if (i == 3) return {id, 0, r + s};
      break;
    case 2:
      if (i >= 1 && i <= r / g) return {id, (i - 1) * g, (i - 1) * g + s};
      break;
    case 3:
      if (i >= 1 && i <= s / g) return {id, (i - 1) * g, (i - 1) * g + r};
      break;
    case 4:
      if (i >= 1 && i <= (r + s) / g) return {id, (i - 1) * g, (i - 1) * g};
      break;
    default:
      break;
  }
  throw Error("malformed equation id " + id_text(id) + " for r=" +
              std::to_string(r) + ", s=" + std::to_string(s));
}

EquationSystem build_equation_system(int r, int s) {
  require_positive(r, s);
  EquationSystem sys;
  sys.r = r;
  sys.s = s;
  sys.g = std::gcd(r, s);
  for (int off = 0; off <= r + s; off += sys.g) sys.span.push_back(off);
  for (int i = 1; i <= r / sys.g; ++i) sys.equations.push_back(equation(r, s, {2, i}));
  for (int j = 1; j <= s / sys.g; ++j) sys.equations.push_back(equation(r, s, {3, j}));
  for (int i = 1; i <= (r + s) / sys.g; ++i) {
    sys.equations.push_back(equation(r, s, {4, i}));
  }
  return sys;
}

OverlapGraph build_overlap_graph(int r, int s) {
  FIBOCUBE_TRACE("build_overlap_graph");
  require_positive(r, s);
  OverlapGraph G;
  G.r = r;
  G.s = s;
  G.g = std::gcd(r, s);
  G.k1 = r / G.g;
  G.k2 = s / G.g;
  for (int i = 1; i <= G.k1; ++i) G.x_labels.push_back("v1_" + std::to_string(i));
  for (int k = 1; k <= G.k2; ++k) G.x_labels.push_back("v3_" + std::to_string(k));
  for (int j = 1; j <= G.k1 + G.k2; ++j) G.y_labels.push_back("v2_" + std::to_string(j));

  // Y indices are 0-based: v2_j lives at j-1.
  for (int i = 1; i <= G.k1; ++i) {
    G.edges.push_back({i - 1, i - 1, {4, i}});
    G.edges.push_back({i - 1, i + G.k2 - 1, {2, i}});
  }
  for (int k = 1; k <= G.k2; ++k) {
    const int x = G.k1 + k - 1;
    G.edges.push_back({x, k - 1, {3, k}});
    G.edges.push_back({x, k + G.k1 - 1, {4, k + G.k1}});
  }
  return G;
}

std::vector<int> vertex_degrees(const OverlapGraph& graph) {
  const int nx = static_cast<int>(graph.x_labels.size());
  std::vector<int> deg(graph.x_labels.size() + graph.y_labels.size(), 0);
  for (const auto& e : graph.edges) {
    ++deg[static_cast<std::size_t>(e.x)];
    ++deg[static_cast<std::size_t>(nx + e.y)];
  }
  return deg;
}

bool is_single_cycle(const OverlapGraph& graph) {
  FIBOCUBE_TRACE("is_single_cycle");
  const int nx = static_cast<int>(graph.x_labels.size());
  const int n = nx + static_cast<int>(graph.y_labels.size());
  if (n == 0) return false;
  for (int d : vertex_degrees(graph)) {
    if (d != 2) return false;
  }
  UnionFind uf(n);
  for (const auto& e : graph.edges) uf.unite(e.x, nx + e.y);
  return uf.components() == 1;
}

std::string overlap_graph_dot(const OverlapGraph& graph) {
  std::ostringstream out;
  out << "graph overlap_r" << graph.r << "_s" << graph.s << " {\n";
  for (const auto& label : graph.x_labels) out << "  \"" << label << "\";\n";
  for (const auto& label : graph.y_labels) out << "  \"" << label << "\";\n";
  for (const auto& e : graph.edges) {
    out << "  \"" << graph.x_labels[static_cast<std::size_t>(e.x)] << "\" -- \""
        << graph.y_labels[static_cast<std::size_t>(e.y)] << "\" [label=\"("
        << e.id.type << "," << e.id.index << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<int> residue_sequence(int k1, int k2) {
  FIBOCUBE_TRACE("residue_sequence");
  require_positive(k1, k2);
  if (std::gcd(k1, k2) != 1) {
    throw Error("residue_sequence requires coprime k1, k2 (got " +
                std::to_string(k1) + ", " + std::to_string(k2) + ")");
  }
  const long long m = k1 + k2;
  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(m));
  for (long long j = 1; j <= m; ++j) {
    h.push_back(static_cast<int>(((j - 1) * k1) % m));
  }
  return h;
}

bool closure_implies(int r, int s, std::span<const EquationId> assumed,
                     std::pair<int, int> queried) {
  FIBOCUBE_TRACE("closure_implies");
  require_positive(r, s);
  const int g = std::gcd(r, s);
  const auto in_span = [&](int off) { return off >= 0 && off <= r + s && off % g == 0; };
  if (!in_span(queried.first) || !in_span(queried.second)) {
    throw Error("queried offsets outside the span t..t+r+s");
  }
  UnionFind uf((r + s) / g + 1);
  for (EquationId id : assumed) {
    const Equation eq = equation(r, s, id);
    uf.unite(eq.lhs / g, eq.rhs / g);
  }
  return uf.same(queried.first / g, queried.second / g);
}

PeriodCheck period_closure_check(const Pattern& f, int r, int s) {
  FIBOCUBE_TRACE("period_closure_check");
  require_positive(r, s);
  if (f.length() != r + s) {
    throw Error("period_closure_check requires |f| = r + s");
  }
  const Word& w = f.word();
  for (int i = 1; i <= r; ++i) {
    if (w.at(i) != w.at(i + s)) return {true, true};
  }
  for (int j = 1; j <= s; ++j) {
    if (w.at(j) != w.at(j + r)) return {true, true};
  }
  const int g = std::gcd(r, s);
  PeriodCheck result;
  for (int t = 1; t <= g; ++t) {
    for (int i = 1; i <= r / g; ++i) {
      const int p = t + (i - 1) * g;
      if (w.at(p) != w.at(p + s)) result.holds = false;
    }
    for (int j = 1; j <= s / g; ++j) {
      const int p = t + (j - 1) * g;
      if (w.at(p) != w.at(p + r)) result.holds = false;
    }
  }
  return result;
}

}  // namespace fibocube::periodicity
