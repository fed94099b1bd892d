#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" FIBOCUBE_CLI_PATH "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines_with(const std::string& text, const std::string& needle) {
  int n = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string line = text.substr(start, end - start);
    if (line.find(needle) != std::string::npos) ++n;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return n;
}

}  // namespace

TEST_CASE("classify exit codes") {
  const auto bad = cli("classify 101");
  CHECK(bad.code == 10);
  CHECK(bad.out.starts_with("bad B=4\n"));
  const auto good = cli("classify 11");
  CHECK(good.code == 0);
  CHECK(good.out == "good\n");
  CHECK(cli("classify 1x1").code == 2);
  CHECK(cli("classify").code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("classify json") {
  const auto r = cli("classify 11 --format json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"pattern\":\"11\",\"verdict\":\"good\",\"index\":null,\"witnesses\":[]}\n");
  CHECK(cli("--format json classify 11").out == r.out);
  CHECK(cli("classify 11 --format dot").code == 2);
}

TEST_CASE("index and witness") {
  CHECK(cli("index 0011").out == "7\n");
  CHECK(cli("index 0011").code == 10);
  CHECK(cli("index 110").out == "good\n");
  CHECK(cli("index 0011 --format json").out == "{\"pattern\":\"0011\",\"index\":7}\n");
  const auto w = cli("witness 101");
  CHECK(w.out ==
        "{\"pattern\":\"101\",\"dimension\":4,\"p\":2,\"flips\":[2,3],\"offsets\":{\"2\":1,\"3\":2},"
        "\"shift\":1,\"alpha\":\"1111\",\"beta\":\"1001\"}\n");
  CHECK(cli("witness 101 --format json").out.starts_with("[{\"pattern\":\"101\""));
}

TEST_CASE("graph export") {
  const auto r = cli("graph 11 --dim 4 --format dot");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("graph \"Q4(11)\" {\n"));
  CHECK(count_lines_with(r.out, "--") == 10);
  CHECK(count_lines_with(r.out, "\";") - count_lines_with(r.out, "--") == 8);
  CHECK(cli("graph 11 --dim 4 --format json").out.find("\"vertex_count\":8") != std::string::npos);
}

TEST_CASE("caps") {
  CHECK(cli("graph 11 --dim 26").code == 2);
  CHECK(cli("graph 11 --dim 12 --cap 10").code == 2);
  CHECK(cli("graph 11 --dim 12", "FIBOCUBE_CAP=10").code == 2);
  CHECK(cli("graph 11 --dim 12 --cap 12", "FIBOCUBE_CAP=10").code == 0);
  CHECK(cli("graph 11 --dim 12", "FIBOCUBE_CAP=abc").code == 2);
  CHECK(cli("census 15").code == 2);
}

TEST_CASE("census") {
  const auto r = cli("census 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "length,total,good_count,bad_count,good_fraction,index_histogram,p_histogram,oracle_confirmed\n"
        "3,8,6,2,0.750000,4:2,2:2,true\n");
  CHECK(cli("census 3 --format dot").code == 2);
  CHECK(cli("census 8 --workers 1").out == cli("census 8 --workers 3").out);
}

TEST_CASE("verify") {
  const auto r = cli("verify --max-len 3 --suite all");
  CHECK(r.code == 0);
  CHECK(count_lines_with(r.out, "PASS") == 9);
  CHECK(cli("verify --max-len 3 --suite cross --format json").out.starts_with("{\"theorem\":"));
  CHECK(cli("verify --suite bogus").code == 2);
  CHECK(cli("verify --max-len 40").code == 2);
}

TEST_CASE("overlap graph") {
  const auto r = cli("overlap-graph 10 3");
  CHECK(r.code == 0);
  CHECK(count_lines_with(r.out, "--") == 26);
  CHECK(cli("overlap-graph 0 3").code == 2);
}
