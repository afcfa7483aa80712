#pragma once

#include <chrono>
#include <cstddef>
#include <string>

namespace tcs {

/// Resource limits consulted by every enumerating operation.
struct Limits {
  std::size_t simplex_cap = 100000;
  std::chrono::milliseconds timeout{std::chrono::seconds(120)};
  int universe_cap = 4;
};

/// The process-wide limits. Read-only while operations run.
const Limits& limits();

/// Replaces the process-wide limits for the lifetime of the guard.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& next);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

/// Reads TCS_SIMPLEX_CAP and TCS_TIMEOUT (seconds) on top of `base`.
Limits limits_from_environment(Limits base = {});

/// Per-operation stopwatch. `check()` throws Timeout once the budget
/// from `limits().timeout` is exhausted; the check is amortised so it is
/// safe to call in inner loops.
class Deadline {
 public:
  explicit Deadline(std::string operation);
  void check();
  void check_size(std::size_t count, const char* what) const;
  const std::string& operation() const { return operation_; }
  std::size_t steps() const { return steps_; }

 private:
  std::string operation_;
  std::chrono::steady_clock::time_point end_;
  std::size_t steps_ = 0;
};

}  // namespace tcs
