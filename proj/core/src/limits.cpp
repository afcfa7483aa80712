#include "tcs/limits.hpp"

#include <cstdlib>
#include <string>

#include "tcs/errors.hpp"

namespace tcs {
namespace {

Limits& mutable_limits() {
  static Limits current;
  return current;
}

}  // namespace

const Limits& limits() { return mutable_limits(); }

ScopedLimits::ScopedLimits(const Limits& next) : saved_(mutable_limits()) {
  mutable_limits() = next;
}

ScopedLimits::~ScopedLimits() { mutable_limits() = saved_; }

Limits limits_from_environment(Limits base) {
  if (const char* cap = std::getenv("TCS_SIMPLEX_CAP")) {
    base.simplex_cap = std::stoull(cap);
  }
  if (const char* timeout = std::getenv("TCS_TIMEOUT")) {
    base.timeout = std::chrono::milliseconds(
        static_cast<long long>(std::stod(timeout) * 1000.0));
  }
  return base;
}

Deadline::Deadline(std::string operation)
    : operation_(std::move(operation)),
      end_(std::chrono::steady_clock::now() + limits().timeout) {}

void Deadline::check() {
  if ((++steps_ & 0x3ff) != 0) return;
  if (std::chrono::steady_clock::now() > end_) {
    throw Timeout(operation_ + ": timeout after " + std::to_string(steps_) +
                  " search steps");
  }
}

void Deadline::check_size(std::size_t count, const char* what) const {
  if (count > limits().simplex_cap) {
    throw SizeCapExceeded(operation_ + ": " + what + " exceeds cap of " +
                          std::to_string(limits().simplex_cap) + " simplices");
  }
}

}  // namespace tcs
