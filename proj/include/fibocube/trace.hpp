#pragma once

// Call tracing for the coverage meta-test. Compiled in only when
// FIBOCUBE_TRACE_CALLS is defined; otherwise FIBOCUBE_TRACE is a no-op.

#ifdef FIBOCUBE_TRACE_CALLS
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace fibocube::trace {
void hit(std::string_view op);
std::map<std::string, std::uint64_t> snapshot();
void reset();
}  // namespace fibocube::trace

#define FIBOCUBE_TRACE(name) ::fibocube::trace::hit(name)
#else
#define FIBOCUBE_TRACE(name) ((void)0)
#endif
