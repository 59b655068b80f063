#pragma once

#include <atomic>
#include <chrono>
#include <limits>

namespace tww {

// Cooperative time budget: solvers poll expired() at state-expansion and
// batch boundaries. Optionally bound to an external stop flag set by a
// signal handler.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() = default;

    static Budget unlimited() { return Budget{}; }

    static Budget until(Clock::time_point t) {
        Budget b;
        b.has_deadline_ = true;
        b.deadline_ = t;
        return b;
    }

    static Budget seconds(double s) {
        return until(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(s)));
    }

    void bind_stop(const std::atomic<bool>* flag) { stop_ = flag; }

    bool expired() const {
        if (stop_ && stop_->load(std::memory_order_relaxed))
            return true;
        return has_deadline_ && Clock::now() >= deadline_;
    }

    double remaining_seconds() const {
        if (!has_deadline_)
            return std::numeric_limits<double>::infinity();
        return std::chrono::duration<double>(deadline_ - Clock::now()).count();
    }

    // Sub-budget spanning the given fraction of the remaining time; shares
    // the stop flag. Fraction 0 yields an already-expired budget.
    Budget fraction(double f) const {
        Budget b;
        if (f <= 0.0) {
            b.has_deadline_ = true;
            b.deadline_ = Clock::now();
        } else if (has_deadline_) {
            const double rem = remaining_seconds();
            b = seconds(rem > 0 ? rem * f : 0.0);
        }
        b.stop_ = stop_;
        return b;
    }

private:
    bool has_deadline_ = false;
    Clock::time_point deadline_{};
    const std::atomic<bool>* stop_ = nullptr;
};

} // namespace tww
