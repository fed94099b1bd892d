#include "fibocube/fibocube.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "fibocube/harness.hpp"
#include "fibocube/oracle.hpp"
#include "fibocube/periodicity.hpp"
#include "fibocube/serialize.hpp"
#include "fibocube/structural.hpp"

using namespace fibocube;

struct fc_config {
  int dimension_cap = oracle::kDefaultDimensionCap;
  int workers = std::max(1u, std::thread::hardware_concurrency());
};

struct fc_classification {
  Pattern pattern;
  structural::Classification result;
};

struct fc_graph {
  oracle::AvoidanceGraph graph;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
fc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return FC_OK;
  } catch (const CapError& e) {
    g_last_error = e.what();
    return FC_ERR_CAP_EXCEEDED;
  } catch (const Error& e) {
    g_last_error = e.what();
    return FC_ERR_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return FC_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown internal error";
    return FC_ERR_INTERNAL;
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw Error(message);
}

const fc_config& config_or_default(const fc_config* cfg) {
  static const fc_config defaults{};
  return cfg != nullptr ? *cfg : defaults;
}

harness::Config harness_config(const fc_config* cfg) {
  const fc_config& c = config_or_default(cfg);
  return {c.workers, c.dimension_cap};
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "1.0.0"; }

const char* fc_last_error(void) { return g_last_error.c_str(); }

void fc_string_free(char* s) { std::free(s); }

fc_status fc_config_new(fc_config** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new fc_config{};
  });
}

void fc_config_free(fc_config* cfg) { delete cfg; }

fc_status fc_config_set_dimension_cap(fc_config* cfg, int cap) {
  return guarded([&] {
    require(cfg != nullptr, "null config");
    require(cap >= 2 && cap <= 30, "dimension cap must lie in [2, 30]");
    cfg->dimension_cap = cap;
  });
}

fc_status fc_config_set_workers(fc_config* cfg, int workers) {
  return guarded([&] {
    require(cfg != nullptr, "null config");
    require(workers >= 1, "worker count must be at least 1");
    cfg->workers = workers;
  });
}

int fc_config_dimension_cap(const fc_config* cfg) { return config_or_default(cfg).dimension_cap; }

int fc_config_workers(const fc_config* cfg) { return config_or_default(cfg).workers; }

fc_status fc_classify(const char* pattern, fc_classification** out) {
  return guarded([&] {
    require(pattern != nullptr && out != nullptr, "null argument");
    const Pattern f = Pattern::parse(pattern);
    *out = new fc_classification{f, structural::classify(f)};
  });
}

void fc_classification_free(fc_classification* c) { delete c; }

int fc_classification_is_bad(const fc_classification* c) { return c != nullptr && c->result.bad(); }

int fc_classification_index(const fc_classification* c) {
  return c != nullptr && c->result.bad() ? c->result.index : 0;
}

size_t fc_classification_witness_count(const fc_classification* c) {
  return c != nullptr ? c->result.witnesses.size() : 0;
}

fc_status fc_classification_witness_json(const fc_classification* c, size_t i, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "null argument");
    require(i < c->result.witnesses.size(), "witness index out of range");
    *out = dup(serialize::to_json(c->result.witnesses[i]).dump());
  });
}

fc_status fc_classification_render(const fc_classification* c, fc_format format, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "null argument");
    if (format == FC_FORMAT_JSON) {
      *out = dup(serialize::to_json(c->result, c->pattern).dump() + "\n");
    } else {
      require(format == FC_FORMAT_TEXT, "classification supports text or json output");
      *out = dup(serialize::to_text(c->result));
    }
  });
}

fc_status fc_witness_verify(const char* witness_json, int* ok, char** reason) {
  return guarded([&] {
    require(witness_json != nullptr && ok != nullptr, "null argument");
    const auto w = serialize::witness_from_json(serialize::Json::parse(witness_json));
    const auto check = structural::verify_witness(w);
    *ok = check.ok ? 1 : 0;
    if (reason != nullptr) *reason = dup(std::string(structural::to_string(check.reason)));
  });
}

fc_status fc_witness_lift(const char* witness_json, int dimension, char** out) {
  return guarded([&] {
    require(witness_json != nullptr && out != nullptr, "null argument");
    const auto w = serialize::witness_from_json(serialize::Json::parse(witness_json));
    *out = dup(serialize::to_json(structural::lift_witness(w, dimension)).dump());
  });
}

fc_status fc_index_bruteforce(const char* pattern, const fc_config* cfg, int* bad, int* index) {
  return guarded([&] {
    require(pattern != nullptr && bad != nullptr && index != nullptr, "null argument");
    const fc_config& c = config_or_default(cfg);
    const auto r = oracle::index_bruteforce(Pattern::parse(pattern), {c.dimension_cap, 0, c.workers});
    *bad = r.bad ? 1 : 0;
    *index = r.bad ? r.index : 0;
  });
}

fc_status fc_graph_build(const char* pattern, int dimension, const fc_config* cfg, fc_graph** out) {
  return guarded([&] {
    require(pattern != nullptr && out != nullptr, "null argument");
    const Pattern f = Pattern::parse(pattern);
    *out = new fc_graph{oracle::build_graph(f, dimension, config_or_default(cfg).dimension_cap)};
  });
}

void fc_graph_free(fc_graph* g) { delete g; }

size_t fc_graph_vertex_count(const fc_graph* g) { return g != nullptr ? g->graph.vertex_count() : 0; }

fc_status fc_graph_distance(const fc_graph* g, const char* a, const char* b, int* distance) {
  return guarded([&] {
    require(g != nullptr && a != nullptr && b != nullptr && distance != nullptr, "null argument");
    const auto d = oracle::graph_distance(g->graph, Word::parse(a), Word::parse(b));
    *distance = d ? *d : -1;
  });
}

fc_status fc_graph_is_isometric(const fc_graph* g, const fc_config* cfg, int* isometric) {
  return guarded([&] {
    require(g != nullptr && isometric != nullptr, "null argument");
    *isometric = oracle::is_isometric(g->graph, {config_or_default(cfg).workers, false}).isometric;
  });
}

fc_status fc_graph_render(const fc_graph* g, fc_format format, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    if (format == FC_FORMAT_JSON) {
      *out = dup(serialize::graph_json(g->graph).dump() + "\n");
    } else {
      require(format == FC_FORMAT_DOT, "graph export supports dot or json output");
      *out = dup(serialize::graph_dot(g->graph));
    }
  });
}

fc_status fc_overlap_graph_render(int r, int s, fc_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto G = periodicity::build_overlap_graph(r, s);
    if (format == FC_FORMAT_JSON) {
      *out = dup(serialize::overlap_graph_json(G).dump() + "\n");
    } else {
      require(format == FC_FORMAT_DOT, "overlap graph export supports dot or json output");
      *out = dup(periodicity::overlap_graph_dot(G));
    }
  });
}

fc_status fc_census(int length, const fc_config* cfg, fc_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto row = harness::census(length, harness_config(cfg));
    switch (format) {
      case FC_FORMAT_JSON: *out = dup(serialize::to_json(row).dump() + "\n"); break;
      case FC_FORMAT_CSV: *out = dup(serialize::census_csv_header() + serialize::to_csv(row)); break;
      case FC_FORMAT_TEXT: *out = dup(serialize::to_text(row)); break;
      default: throw Error("census supports text, json or csv output");
    }
  });
}

fc_status fc_verify(const char* suite, int max_len, const fc_config* cfg, fc_format format, char** out,
                    int* all_pass) {
  return guarded([&] {
    require(suite != nullptr && out != nullptr && all_pass != nullptr, "null argument");
    const auto which = harness::parse_suite(suite);
    if (!which) throw Error(std::string("unknown suite '") + suite + "'");
    if (max_len < 1) throw Error("max length must be positive");
    const auto reports = harness::run_suite(*which, max_len, harness_config(cfg));
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    *all_pass = pass ? 1 : 0;
    if (format == FC_FORMAT_JSON) {
      std::string lines;
      for (const auto& r : reports) lines += serialize::to_json(r).dump() + "\n";
      *out = dup(lines);
    } else {
      require(format == FC_FORMAT_TEXT, "verify supports text or json output");
      *out = dup(serialize::to_text(reports));
    }
  });
}

}  // extern "C"
