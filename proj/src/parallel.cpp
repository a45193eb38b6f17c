#include "wavemask/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wavemask {

int thread_budget() {
    int budget = static_cast<int>(std::thread::hardware_concurrency());
    if (budget <= 0) budget = 1;
    if (const char* env = std::getenv("WAVEMASK_THREADS")) {
        const int requested = std::atoi(env);
        if (requested > 0) budget = requested;
    }
    return std::clamp(budget, 1, 256);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const int budget = std::min<std::size_t>(thread_budget(), count);
    if (budget <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(budget);
    for (int t = 0; t < budget; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& w : workers) w.join();
}

} // namespace wavemask
