#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace thetakit {

// Wall-clock allowance for searches that may not finish.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    static Budget unlimited() { return Budget(); }
    static Budget milliseconds(std::int64_t ms) {
        Budget b;
        b.deadline_ = Clock::now() + std::chrono::milliseconds(ms);
        b.limited_ = true;
        return b;
    }

    bool limited() const { return limited_; }
    bool expired() const { return limited_ && Clock::now() >= deadline_; }
    std::int64_t remaining_ms() const {
        if (!limited_) return std::numeric_limits<std::int64_t>::max();
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline_ - Clock::now()).count();
        return left > 0 ? left : 0;
    }
    // A budget ending at the earlier of this deadline and now + ms.
    Budget slice(std::int64_t ms) const {
        Budget b = milliseconds(ms);
        if (limited_ && deadline_ < b.deadline_) b.deadline_ = deadline_;
        return b;
    }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    Clock::time_point start_ = Clock::now();
    Clock::time_point deadline_{};
    bool limited_ = false;
};

}  // namespace thetakit
