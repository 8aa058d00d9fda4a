#include "polylap/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace polylap {

int worker_count() {
    if (const char* env = std::getenv("POLYLAP_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(int n, const std::function<void(int, int)>& fn) {
    if (n <= 0) return;
    const int workers = std::min(worker_count(), n);
    if (workers == 1) {
        fn(0, n);
        return;
    }

    const int chunk = std::max(1, n / (workers * 4));
    std::atomic<int> next{0};
    auto body = [&] {
        for (;;) {
            const int begin = next.fetch_add(chunk);
            if (begin >= n) return;
            fn(begin, std::min(begin + chunk, n));
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    parallel_chunks(n, [&](int begin, int end) {
        for (int i = begin; i < end; ++i) fn(i);
    });
}

}  // namespace polylap
