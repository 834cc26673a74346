// common.hpp — shared error model, numeric formatting, and small parallel map
// used across the hj library.
//
// The library throws hj::error with a status code; the extern "C" boundary
// translates these into hj_status values and a thread-local message.

#pragma once

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hj {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Status codes mirrored 1:1 by the C API (see include/hj.h).
enum class status {
    ok = 0,
    invalid_argument = 1,  // bad construction/parameters
    domain = 2,            // request outside the mathematical domain of an operation
    numeric = 3,           // integrator/root-finder failed to reach tolerance
    inconsistent = 4,      // computed data violates a structural invariant
    io = 5,                // file/format problems
    internal = 6,          // should-not-happen
};

class error : public std::runtime_error {
  public:
    error(status code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    status code() const noexcept { return code_; }

  private:
    status code_;
};

[[noreturn]] inline void fail(status code, const std::string& message) {
    throw error(code, message);
}

// printf-style std::string builder (C locale; used for all diagnostics).
inline std::string strfmt(const char* fmt, ...) {
    va_list ap;
    va_start(ap, fmt);
    char buf[512];
    vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return std::string(buf);
}

// Canonical float formatting for reports: 17 significant digits round-trips
// IEEE doubles exactly, so identical inputs give byte-identical output.
inline std::string fmt17(double x) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
}

// Reduce x to [0, period).  Guards against the -0.0 and x == k*period cases so
// that evaluation is exactly periodic for closed-form representations.
inline double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) r += period;
    if (r >= period) r = 0.0;  // fmod can land exactly on period after the add
    return r;
}

inline bool finite(double x) { return std::isfinite(x); }

// Deterministic parallel map: calls fn(i) for i in [0, n).  Worker count is
// min(HJ_THREADS or hardware_concurrency, n); results must be written to
// pre-sized slots indexed by i so the output is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hj
