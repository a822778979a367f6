#pragma once

#include <coroutine>
#include <cstdint>
#include <exception>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "sgs/errors.hpp"

namespace sgs {

using WorkUnits = std::uint64_t;

/// Work budget shared by a recompute job and its driver. Each elementary
/// operation of a job is written as `co_await meter.unit()`; when the
/// current slice is exhausted the job suspends there until the driver
/// grants the next slice.
class Meter {
 public:
  static constexpr WorkUnits kUnlimited = std::numeric_limits<WorkUnits>::max();

  void grant(WorkUnits units) noexcept { budget_ = units; }
  WorkUnits budget() const noexcept { return budget_; }
  WorkUnits charged() const noexcept { return charged_; }

  /// Handle of the innermost suspended coroutine, resumed by the driver.
  std::coroutine_handle<> resume_point;

  class UnitAwaiter {
   public:
    explicit UnitAwaiter(Meter& m) noexcept : meter_(m) {}

    bool await_ready() noexcept {
      if (meter_.budget_ == 0) return false;
      meter_.take();
      return true;
    }
    void await_suspend(std::coroutine_handle<> h) noexcept {
      meter_.resume_point = h;
      suspended_ = true;
    }
    void await_resume() noexcept {
      if (suspended_) meter_.take();
    }

   private:
    Meter& meter_;
    bool suspended_ = false;
  };

  UnitAwaiter unit() noexcept { return UnitAwaiter(*this); }

 private:
  void take() noexcept {
    if (budget_ != kUnlimited) --budget_;
    ++charged_;
  }

  WorkUnits budget_ = 0;
  WorkUnits charged_ = 0;
};

/// Lazily started coroutine returning T. Awaiting a task runs it to
/// completion inside the awaiting coroutine (symmetric transfer), so
/// kernels can be composed from metered subroutines.
template <class T>
class WorkTask {
 public:
  struct promise_type {
    std::optional<T> value;
    std::exception_ptr error;
    std::coroutine_handle<> continuation;

    WorkTask get_return_object() {
      return WorkTask(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }

    struct FinalAwaiter {
      bool await_ready() noexcept { return false; }
      std::coroutine_handle<> await_suspend(std::coroutine_handle<promise_type> h) noexcept {
        auto next = h.promise().continuation;
        return next ? next : std::noop_coroutine();
      }
      void await_resume() noexcept {}
    };
    FinalAwaiter final_suspend() noexcept { return {}; }

    template <class U>
    void return_value(U&& v) {
      value.emplace(std::forward<U>(v));
    }
    void unhandled_exception() { error = std::current_exception(); }
  };

  using Handle = std::coroutine_handle<promise_type>;

  WorkTask() = default;
  explicit WorkTask(Handle h) : handle_(h) {}
  WorkTask(WorkTask&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  WorkTask& operator=(WorkTask&& other) noexcept {
    if (this != &other) {
      if (handle_) handle_.destroy();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  WorkTask(const WorkTask&) = delete;
  WorkTask& operator=(const WorkTask&) = delete;
  ~WorkTask() {
    if (handle_) handle_.destroy();
  }

  Handle handle() const noexcept { return handle_; }
  bool done() const noexcept { return handle_ && handle_.done(); }

  /// Result of a finished task; rethrows the task's exception if any.
  T take() {
    auto& p = handle_.promise();
    if (p.error) std::rethrow_exception(p.error);
    return std::move(*p.value);
  }

  auto operator co_await() && noexcept {
    struct Awaiter {
      Handle child;
      bool await_ready() noexcept { return false; }
      std::coroutine_handle<> await_suspend(std::coroutine_handle<> parent) noexcept {
        child.promise().continuation = parent;
        return child;
      }
      T await_resume() {
        auto& p = child.promise();
        if (p.error) std::rethrow_exception(p.error);
        return std::move(*p.value);
      }
    };
    return Awaiter{handle_};
  }

 private:
  Handle handle_;
};

/// A recompute job: a metered task with an exact work bound, advanced in
/// slices of ceil(bound / slices) units.
template <class T>
class Job {
 public:
  /// `make` receives the job's meter and returns the task to run.
  template <class Factory>
  Job(Factory&& make, WorkUnits bound, WorkUnits slices)
      : bound_(bound),
        slice_(slices == 0 ? bound : (bound + slices - 1) / slices),
        task_(std::forward<Factory>(make)(meter_)) {
    if (slice_ == 0) slice_ = 1;
    meter_.resume_point = task_.handle();
  }

  Job(const Job&) = delete;
  Job& operator=(const Job&) = delete;

  bool done() const noexcept { return task_.done(); }
  WorkUnits bound() const noexcept { return bound_; }
  WorkUnits slice() const noexcept { return slice_; }
  WorkUnits charged() const noexcept { return meter_.charged(); }

  /// Runs one slice; returns the units charged by it.
  WorkUnits step() { return advance(slice_); }

  /// Runs the job to completion; returns the units charged.
  WorkUnits drain() { return advance(Meter::kUnlimited); }

  T take() {
    if (meter_.charged() > bound_) {
      throw InvariantViolation("recompute job charged " + std::to_string(meter_.charged()) +
                               " work units, over its bound of " + std::to_string(bound_));
    }
    return task_.take();
  }

 private:
  WorkUnits advance(WorkUnits units) {
    if (done()) return 0;
    WorkUnits before = meter_.charged();
    meter_.grant(units);
    meter_.resume_point.resume();
    meter_.grant(0);
    return meter_.charged() - before;
  }

  Meter meter_;
  WorkUnits bound_;
  WorkUnits slice_;
  WorkTask<T> task_;
};

/// Runs a metered kernel eagerly without a budget.
template <class T, class Factory>
T run_unmetered(Factory&& make) {
  Meter meter;
  WorkTask<T> task = std::forward<Factory>(make)(meter);
  meter.grant(Meter::kUnlimited);
  task.handle().resume();
  return task.take();
}

}  // namespace sgs
