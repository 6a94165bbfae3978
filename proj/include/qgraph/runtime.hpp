#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qgraph {

// QGRAPH_THREADS overrides the worker count (default: hardware cores).
inline unsigned worker_count() {
    if (const char* env = std::getenv("QGRAPH_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(i) for i in [0, count). Results must be written into caller-owned,
// index-addressed slots, so the outcome is identical at any thread count.
template <typename F>
void parallel_for(std::size_t count, F&& f) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    pool.reserve(spawn);
    for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

// Wall-clock budget for long searches. QGRAPH_TIME_BUDGET_SECS sets a global
// default; searches that hit the deadline report themselves as incomplete
// instead of guessing.
class Deadline {
public:
    Deadline() = default;

    static Deadline from_env() {
        if (const char* env = std::getenv("QGRAPH_TIME_BUDGET_SECS")) {
            double secs = std::strtod(env, nullptr);
            if (secs > 0) return after_seconds(secs);
        }
        return Deadline();
    }

    static Deadline after_seconds(double secs) {
        Deadline d;
        d.when_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(secs));
        return d;
    }

    bool unlimited() const { return !when_.has_value(); }
    bool expired() const {
        return when_.has_value() && std::chrono::steady_clock::now() >= *when_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> when_;
};

} // namespace qgraph
