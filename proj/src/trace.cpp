#include "fibocube/trace.hpp"

#ifdef FIBOCUBE_TRACE_CALLS
#include <mutex>

namespace fibocube::trace {

namespace {
std::mutex g_mutex;
std::map<std::string, std::uint64_t>& counters() {
  static std::map<std::string, std::uint64_t> c;
  return c;
}
}  // namespace

void hit(std::string_view op) {
  std::lock_guard lock(g_mutex);
  ++counters()[std::string(op)];
}

std::map<std::string, std::uint64_t> snapshot() {
  std::lock_guard lock(g_mutex);
  return counters();
}

void reset() {
  std::lock_guard lock(g_mutex);
  counters().clear();
}

}  // namespace fibocube::trace
#endif
