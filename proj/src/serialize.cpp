#include "fibocube/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace fibocube::serialize {

namespace {

std::vector<std::uint64_t> neighbors(const oracle::AvoidanceGraph& G, std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (int b = 0; b < G.dimension(); ++b) {
    const std::uint64_t u = v ^ (std::uint64_t{1} << b);
    if (G.contains(u)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json histogram_json(const std::map<int, std::uint64_t>& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

std::map<int, std::uint64_t> histogram_from_json(const Json& j) {
  std::map<int, std::uint64_t> h;
  for (const auto& [k, v] : j.items()) h[std::stoi(k)] = v.get<std::uint64_t>();
  return h;
}

std::string histogram_text(const std::map<int, std::uint64_t>& h) {
  std::string out;
  for (const auto& [k, v] : h) {
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ":" + std::to_string(v);
  }
  return out;
}

std::string fraction_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

Json to_json(const structural::CriticalWitness& w) {
  Json offsets = Json::object();
  for (const auto& [flip_pos, offset] : w.offsets) offsets[std::to_string(flip_pos)] = offset;
  return Json{{"pattern", w.pattern.str()}, {"dimension", w.dimension}, {"p", w.p},
              {"flips", w.flips},           {"offsets", offsets},       {"shift", w.shift},
              {"alpha", w.alpha.str()},     {"beta", w.beta.str()}};
}

structural::CriticalWitness witness_from_json(const Json& j) {
  try {
    structural::CriticalWitness w;
    w.pattern = Pattern::parse(j.at("pattern").get<std::string>());
    w.dimension = j.at("dimension").get<int>();
    w.p = j.at("p").get<int>();
    w.flips = j.at("flips").get<std::vector<int>>();
    for (const auto& [k, v] : j.at("offsets").items()) w.offsets[std::stoi(k)] = v.get<int>();
    w.shift = j.at("shift").get<int>();
    w.alpha = Word::parse(j.at("alpha").get<std::string>());
    w.beta = Word::parse(j.at("beta").get<std::string>());
    return w;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed witness JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(std::string("malformed witness JSON: ") + e.what());
  }
}

Json to_json(const structural::Classification& c, const Pattern& f) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(to_json(w));
  return Json{{"pattern", f.str()},
              {"verdict", c.bad() ? "bad" : "good"},
              {"index", c.bad() ? Json(c.index) : Json(nullptr)},
              {"witnesses", witnesses}};
}

std::string to_text(const structural::Classification& c) {
  if (!c.bad()) return "good\n";
  std::string out = "bad B=" + std::to_string(c.index) + "\n";
  for (const auto& w : c.witnesses) out += to_json(w).dump() + "\n";
  return out;
}

Json to_json(const harness::TheoremReport& r) {
  Json cx = nullptr;
  if (r.counterexample) {
    cx = Json{{"pattern", r.counterexample->pattern},
              {"dimension", r.counterexample->dimension},
              {"details", r.counterexample->details}};
  }
  return Json{{"theorem", r.theorem}, {"range", r.range},   {"pass", r.pass},
              {"checked", r.checked}, {"counterexample", cx}};
}

harness::TheoremReport report_from_json(const Json& j) {
  harness::TheoremReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.range = j.at("range").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.checked = j.at("checked").get<std::uint64_t>();
  if (!j.at("counterexample").is_null()) {
    const Json& cx = j.at("counterexample");
    r.counterexample = harness::Counterexample{cx.at("pattern").get<std::string>(),
                                               cx.at("dimension").get<int>(),
                                               cx.at("details").get<std::string>()};
  }
  return r;
}

std::string to_text(const std::vector<harness::TheoremReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.pass ? "PASS " : "FAIL ") << r.theorem << "  [" << r.range << "]  checked=" << r.checked;
    if (r.counterexample) {
      out << "  counterexample: f=" << r.counterexample->pattern << " d=" << r.counterexample->dimension
          << " (" << r.counterexample->details << ")";
    }
    out << '\n';
  }
  return out.str();
}

Json to_json(const harness::CensusRow& row) {
  return Json{{"length", row.length},
              {"total", row.total},
              {"good_count", row.good_count},
              {"bad_count", row.bad_count},
              {"good_fraction", row.good_fraction()},
              {"index_histogram", histogram_json(row.index_histogram)},
              {"p_histogram", histogram_json(row.p_histogram)},
              {"oracle_confirmed", row.oracle_confirmed}};
}

harness::CensusRow census_from_json(const Json& j) {
  harness::CensusRow row;
  row.length = j.at("length").get<int>();
  row.total = j.at("total").get<std::uint64_t>();
  row.good_count = j.at("good_count").get<std::uint64_t>();
  row.bad_count = j.at("bad_count").get<std::uint64_t>();
  row.index_histogram = histogram_from_json(j.at("index_histogram"));
  row.p_histogram = histogram_from_json(j.at("p_histogram"));
  row.oracle_confirmed = j.at("oracle_confirmed").get<bool>();
  return row;
}

std::string census_csv_header() {
  return "length,total,good_count,bad_count,good_fraction,index_histogram,p_histogram,oracle_confirmed\n";
}

std::string to_csv(const harness::CensusRow& row) {
  std::ostringstream out;
  out << row.length << ',' << row.total << ',' << row.good_count << ',' << row.bad_count << ','
      << fraction_text(row.good_fraction()) << ',' << histogram_text(row.index_histogram) << ','
      << histogram_text(row.p_histogram) << ',' << (row.oracle_confirmed ? "true" : "false") << '\n';
  return out.str();
}

std::string to_text(const harness::CensusRow& row) {
  std::ostringstream out;
  out << "length " << row.length << ": " << row.good_count << " good / " << row.total << " ("
      << fraction_text(row.good_fraction()) << "), " << row.bad_count << " bad"
      << (row.oracle_confirmed ? " [oracle-confirmed]" : " [structural only]") << '\n';
  for (const auto& [index, count] : row.index_histogram) {
    out << "  B=" << index << ": " << count << '\n';
  }
  for (const auto& [p, count] : row.p_histogram) {
    out << "  p=" << p << ": " << count << '\n';
  }
  return out.str();
}

std::string graph_dot(const oracle::AvoidanceGraph& G) {
  std::ostringstream out;
  out << "graph \"Q" << G.dimension() << "(" << G.pattern().str() << ")\" {\n";
  for (std::uint64_t v : G.vertices()) out << "  \"" << G.word(v).str() << "\";\n";
  for (std::uint64_t v : G.vertices()) {
    for (std::uint64_t u : neighbors(G, v)) {
      if (u > v) out << "  \"" << G.word(v).str() << "\" -- \"" << G.word(u).str() << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json graph_json(const oracle::AvoidanceGraph& G) {
  Json vertices = Json::array();
  Json adjacency = Json::object();
  for (std::uint64_t v : G.vertices()) {
    const std::string name = G.word(v).str();
    vertices.push_back(name);
    Json list = Json::array();
    for (std::uint64_t u : neighbors(G, v)) list.push_back(G.word(u).str());
    adjacency[name] = list;
  }
  return Json{{"pattern", G.pattern().str()},
              {"dimension", G.dimension()},
              {"vertex_count", G.vertex_count()},
              {"vertices", vertices},
              {"adjacency", adjacency}};
}

Json overlap_graph_json(const periodicity::OverlapGraph& G) {
  Json edges = Json::array();
  for (const auto& e : G.edges) {
    edges.push_back(Json{{"x", G.x_labels[static_cast<std::size_t>(e.x)]},
                         {"y", G.y_labels[static_cast<std::size_t>(e.y)]},
                         {"equation", Json::array({e.id.type, e.id.index})}});
  }
  return Json{{"r", G.r}, {"s", G.s}, {"g", G.g}, {"k1", G.k1}, {"k2", G.k2},
              {"x_vertices", G.x_labels}, {"y_vertices", G.y_labels}, {"edges", edges}};
}

}  // namespace fibocube::serialize
