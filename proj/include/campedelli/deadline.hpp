#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace campedelli {

class CheckTimeout : public std::runtime_error {
 public:
  CheckTimeout() : std::runtime_error("computation exceeded its time budget") {}
};

/// Per-thread wall-clock budget polled by the long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static void check() {
    auto& d = current();
    if (d && Clock::now() > *d) throw CheckTimeout();
  }

  static std::optional<Clock::time_point>& current() {
    thread_local std::optional<Clock::time_point> deadline;
    return deadline;
  }
};

/// Installs a deadline for the lifetime of the object (nested scopes keep the
/// earlier of the two limits).
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::milliseconds budget) : saved_(Deadline::current()) {
    const auto limit = Deadline::Clock::now() + budget;
    if (!saved_ || limit < *saved_) Deadline::current() = limit;
  }
  ~ScopedDeadline() { Deadline::current() = saved_; }
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<Deadline::Clock::time_point> saved_;
};

}  // namespace campedelli
