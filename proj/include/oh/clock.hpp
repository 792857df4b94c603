#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>

namespace oh {

// Millisecond clock. The simulated variant makes timeout/redelivery paths and
// journal timestamps deterministic; the wall variant backs live CLI use.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual int64_t now_ms() = 0;
  // Blocks (or virtually jumps) until the given instant.
  virtual void sleep_until(int64_t t_ms) = 0;
  // Advances by one tick and returns the new now. Gives journal records
  // strictly increasing timestamps under simulation.
  virtual int64_t tick() = 0;
  virtual bool simulated() const = 0;
};

class SimClock final : public Clock {
 public:
  explicit SimClock(int64_t start_ms = 0) : t_(start_ms) {}
  int64_t now_ms() override { return t_.load(); }
  void sleep_until(int64_t t_ms) override {
    int64_t cur = t_.load();
    while (t_ms > cur && !t_.compare_exchange_weak(cur, t_ms)) {
    }
  }
  int64_t tick() override { return t_.fetch_add(1) + 1; }
  bool simulated() const override { return true; }

 private:
  std::atomic<int64_t> t_;
};

class WallClock final : public Clock {
 public:
  int64_t now_ms() override {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
  }
  void sleep_until(int64_t t_ms) override {
    int64_t now = now_ms();
    if (t_ms > now) std::this_thread::sleep_for(std::chrono::milliseconds(t_ms - now));
  }
  int64_t tick() override { return now_ms(); }
  bool simulated() const override { return false; }
};

}  // namespace oh
