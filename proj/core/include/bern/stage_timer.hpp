#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace bern {

struct StageTiming {
  std::string label;
  double seconds;
};

// Records wall time between consecutive checkpoints.
class StageTimer {
 public:
  StageTimer() : last_(Clock::now()) {}

  void mark(std::string label) {
    const auto now = Clock::now();
    stages_.push_back({std::move(label), std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

  const std::vector<StageTiming>& stages() const { return stages_; }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point last_;
  std::vector<StageTiming> stages_;
};

}  // namespace bern
