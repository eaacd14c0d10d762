#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace multiassoc {

int resolve_threads(int requested);

// Calls body(begin, end) on contiguous chunks of [0, count). Chunk boundaries depend
// on the thread count, so callers must only write per-index or per-chunk results.
template <class Body>
void parallel_chunks(std::size_t count, int threads, Body&& body) {
    threads = resolve_threads(threads);
    std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        body(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
        std::size_t begin = t * chunk, end = std::min(count, begin + chunk);
        pool.emplace_back([&, t, begin, end] {
            try {
                if (begin < end) body(begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace multiassoc
