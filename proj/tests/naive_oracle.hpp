#pragma once

// Test-only reference implementation working on plain strings. Shares no
// code with the library beyond the standard library.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace naive {

inline std::vector<std::string> all_words(int d) {
  std::vector<std::string> out;
  for (long v = 0; v < (1L << d); ++v) {
    std::string w(static_cast<std::size_t>(d), '0');
    for (int i = 0; i < d; ++i) {
      if ((v >> (d - 1 - i)) & 1) w[static_cast<std::size_t>(i)] = '1';
    }
    out.push_back(w);
  }
  return out;
}

inline std::set<std::string> vertices(const std::string& f, int d) {
  std::set<std::string> out;
  for (const auto& w : all_words(d)) {
    if (w.find(f) == std::string::npos) out.insert(w);
  }
  return out;
}

inline std::string toggled(std::string w, std::size_t i) {
  w[i] = w[i] == '0' ? '1' : '0';
  return w;
}

inline int hamming(const std::string& a, const std::string& b) {
  int h = 0;
  for (std::size_t i = 0; i < a.size(); ++i) h += a[i] != b[i];
  return h;
}

inline std::map<std::string, int> bfs(const std::set<std::string>& V, const std::string& s) {
  std::map<std::string, int> dist{{s, 0}};
  std::deque<std::string> queue{s};
  while (!queue.empty()) {
    const std::string u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < u.size(); ++i) {
      const std::string v = toggled(u, i);
      if (V.contains(v) && !dist.contains(v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline bool isometric(const std::string& f, int d) {
  const auto V = vertices(f, d);
  for (const auto& s : V) {
    const auto dist = bfs(V, s);
    for (const auto& t : V) {
      const auto it = dist.find(t);
      if (it == dist.end() || it->second != hamming(s, t)) return false;
    }
  }
  return true;
}

// First failing dimension in [1, max_d], or nullopt.
inline std::optional<int> index(const std::string& f, int max_d) {
  for (int d = 1; d <= max_d; ++d) {
    if (!isometric(f, d)) return d;
  }
  return std::nullopt;
}

}  // namespace naive
