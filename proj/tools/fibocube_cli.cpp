// fibocube command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 good / success, 10 bad pattern, 11 verification failure,
// 2 usage or cap error, 1 internal error.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fibocube/fibocube.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBad = 10;
constexpr int kExitVerifyFailed = 11;

struct Options {
  std::string format;
  std::optional<int> cap;
  std::optional<int> workers;
};

int status_exit(fc_status status) {
  if (status == FC_OK) return kExitOk;
  std::fprintf(stderr, "fibocube: %s\n", fc_last_error());
  return status == FC_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

struct StringDeleter {
  void operator()(char* s) const { fc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

void emit(const char* text) { std::fputs(text, stdout); }

std::optional<fc_format> parse_format(const std::string& name, fc_format fallback) {
  static const std::map<std::string, fc_format> formats = {
      {"text", FC_FORMAT_TEXT}, {"json", FC_FORMAT_JSON}, {"csv", FC_FORMAT_CSV}, {"dot", FC_FORMAT_DOT}};
  if (name.empty()) return fallback;
  const auto it = formats.find(name);
  if (it == formats.end()) return std::nullopt;
  return it->second;
}

// Flag beats FIBOCUBE_CAP, which beats the built-in default.
std::optional<int> resolve_cap(const Options& opts) {
  if (opts.cap) return opts.cap;
  if (const char* env = std::getenv("FIBOCUBE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0') return -1;
    return static_cast<int>(v);
  }
  return std::nullopt;
}

class Config {
 public:
  Config() { fc_config_new(&cfg_); }
  ~Config() { fc_config_free(cfg_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;

  fc_status apply(const Options& opts) {
    if (const auto cap = resolve_cap(opts)) {
      if (const fc_status s = fc_config_set_dimension_cap(cfg_, *cap); s != FC_OK) return s;
    }
    if (opts.workers) return fc_config_set_workers(cfg_, *opts.workers);
    return FC_OK;
  }
  const fc_config* get() const { return cfg_; }

 private:
  fc_config* cfg_ = nullptr;
};

int bad_format(const std::string& name, const char* command) {
  std::fprintf(stderr, "fibocube: unsupported --format '%s' for %s\n", name.c_str(), command);
  return kExitUsage;
}

int run_classify(const std::string& pattern, const Options& opts, bool index_only, bool witness_only) {
  const auto format = parse_format(opts.format, FC_FORMAT_TEXT);
  if (!format || (*format != FC_FORMAT_TEXT && *format != FC_FORMAT_JSON)) {
    return bad_format(opts.format, "classify");
  }
  fc_classification* c = nullptr;
  if (const fc_status s = fc_classify(pattern.c_str(), &c); s != FC_OK) return status_exit(s);
  std::unique_ptr<fc_classification, decltype(&fc_classification_free)> owned(c, fc_classification_free);
  const bool bad = fc_classification_is_bad(c) != 0;

  if (index_only) {
    const std::string value = bad ? std::to_string(fc_classification_index(c)) : "good";
    if (*format == FC_FORMAT_JSON) {
      emit(("{\"pattern\":\"" + pattern + "\",\"index\":" + (bad ? value : "null") + "}\n").c_str());
    } else {
      emit((value + "\n").c_str());
    }
  } else if (witness_only) {
    const std::size_t n = fc_classification_witness_count(c);
    std::string out = *format == FC_FORMAT_JSON ? "[" : "";
    for (std::size_t i = 0; i < n; ++i) {
      char* json = nullptr;
      if (const fc_status s = fc_classification_witness_json(c, i, &json); s != FC_OK) return status_exit(s);
      OwnedString holder(json);
      if (*format == FC_FORMAT_JSON) {
        out += (i > 0 ? "," : "") + std::string(json);
      } else {
        out += std::string(json) + "\n";
      }
    }
    if (*format == FC_FORMAT_JSON) out += "]\n";
    emit(out.c_str());
  } else {
    char* text = nullptr;
    if (const fc_status s = fc_classification_render(c, *format, &text); s != FC_OK) return status_exit(s);
    OwnedString holder(text);
    emit(text);
  }
  return bad ? kExitBad : kExitOk;
}

int run_census(int n, const Options& opts) {
  const auto format = parse_format(opts.format, FC_FORMAT_TEXT);
  if (!format || *format == FC_FORMAT_DOT) return bad_format(opts.format, "census");
  Config cfg;
  if (const fc_status s = cfg.apply(opts); s != FC_OK) return status_exit(s);
  char* out = nullptr;
  if (const fc_status s = fc_census(n, cfg.get(), *format, &out); s != FC_OK) return status_exit(s);
  OwnedString holder(out);
  emit(out);
  return kExitOk;
}

int run_verify(int max_len, const std::string& suite, const Options& opts) {
  const auto format = parse_format(opts.format, FC_FORMAT_TEXT);
  if (!format || (*format != FC_FORMAT_TEXT && *format != FC_FORMAT_JSON)) {
    return bad_format(opts.format, "verify");
  }
  Config cfg;
  if (const fc_status s = cfg.apply(opts); s != FC_OK) return status_exit(s);
  char* out = nullptr;
  int all_pass = 0;
  if (const fc_status s = fc_verify(suite.c_str(), max_len, cfg.get(), *format, &out, &all_pass); s != FC_OK) {
    return status_exit(s);
  }
  OwnedString holder(out);
  emit(out);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_graph(const std::string& pattern, int dim, const Options& opts) {
  const auto format = parse_format(opts.format, FC_FORMAT_DOT);
  if (!format || (*format != FC_FORMAT_DOT && *format != FC_FORMAT_JSON)) {
    return bad_format(opts.format, "graph");
  }
  Config cfg;
  if (const fc_status s = cfg.apply(opts); s != FC_OK) return status_exit(s);
  fc_graph* g = nullptr;
  if (const fc_status s = fc_graph_build(pattern.c_str(), dim, cfg.get(), &g); s != FC_OK) {
    return status_exit(s);
  }
  std::unique_ptr<fc_graph, decltype(&fc_graph_free)> owned(g, fc_graph_free);
  char* out = nullptr;
  if (const fc_status s = fc_graph_render(g, *format, &out); s != FC_OK) return status_exit(s);
  OwnedString holder(out);
  emit(out);
  return kExitOk;
}

int run_overlap(int r, int s, const Options& opts) {
  const auto format = parse_format(opts.format, FC_FORMAT_DOT);
  if (!format || (*format != FC_FORMAT_DOT && *format != FC_FORMAT_JSON)) {
    return bad_format(opts.format, "overlap-graph");
  }
  char* out = nullptr;
  if (const fc_status st = fc_overlap_graph_render(r, s, *format, &out); st != FC_OK) return status_exit(st);
  OwnedString holder(out);
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Good and bad strings for generalized Fibonacci cubes"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format: text, json, csv or dot");
  app.add_option("--cap", opts.cap, "Dimension cap for explicit graphs (default 25, env FIBOCUBE_CAP)");
  app.add_option("--workers", opts.workers, "Worker threads (default: hardware concurrency)");

  std::string pattern;
  int dim = 0;
  int length = 0;
  int max_len = 6;
  std::string suite = "all";
  int r = 0;
  int s = 0;

  auto* classify = app.add_subcommand("classify", "Classify a pattern as good or bad");
  classify->add_option("pattern", pattern, "Binary pattern")->required();
  auto* index = app.add_subcommand("index", "Print B(f), or 'good'");
  index->add_option("pattern", pattern, "Binary pattern")->required();
  auto* witness = app.add_subcommand("witness", "Print the minimal-dimension critical-word witnesses");
  witness->add_option("pattern", pattern, "Binary pattern")->required();
  auto* census = app.add_subcommand("census", "Classify every pattern of a given length");
  census->add_option("length", length, "Pattern length (at most 14)")->required();
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--max-len", max_len, "Largest pattern length swept");
  verify->add_option("--suite", suite,
                     "all, p-values, index-bound, doubling, monotonicity, lemma21, cross or periodicity");
  auto* graph = app.add_subcommand("graph", "Export Q_d(f)");
  graph->add_option("pattern", pattern, "Binary pattern")->required();
  graph->add_option("--dim", dim, "Dimension d")->required();
  auto* overlap = app.add_subcommand("overlap-graph", "Export the overlap graph G(r,s)");
  overlap->add_option("r", r, "r")->required();
  overlap->add_option("s", s, "s")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*classify) return run_classify(pattern, opts, false, false);
  if (*index) return run_classify(pattern, opts, true, false);
  if (*witness) return run_classify(pattern, opts, false, true);
  if (*census) return run_census(length, opts);
  if (*verify) return run_verify(max_len, suite, opts);
  if (*graph) return run_graph(pattern, dim, opts);
  if (*overlap) return run_overlap(r, s, opts);
  return kExitUsage;
}
