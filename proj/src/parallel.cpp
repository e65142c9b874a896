#include "lgc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lgc {

int worker_count() {
    static const int count = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw < 1)
            hw = 1;
        if (const char* env = std::getenv("LGC_THREADS")) {
            const int requested = std::atoi(env);
            if (requested > 0)
                return requested;
        }
        return hw;
    }();
    return count;
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    const int total = end - begin;
    if (total <= 0)
        return;
    const int workers = std::min(worker_count(), total);
    if (workers == 1) {
        for (int i = begin; i < end; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = begin + w; i < end; i += workers)
                    fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!failed.exchange(true))
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace lgc
