#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace clonekit {

/// Runs body(chunk_index, begin, end) over a partition of [0, n) into
/// contiguous chunks, one per thread. Callers merge per-chunk results in
/// chunk order, so output does not depend on the schedule.
template <typename Body>
void parallel_chunks(std::size_t n, int thread_count, Body&& body) {
    if (thread_count < 1) thread_count = 1;
    std::size_t chunks = static_cast<std::size_t>(thread_count);
    if (chunks > n) chunks = n ? n : 1;
    if (chunks <= 1) {
        body(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::size_t per = n / chunks;
    std::size_t extra = n % chunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = per + (c < extra ? 1 : 0);
        workers.emplace_back([&body, c, begin, end = begin + len] { body(c, begin, end); });
        begin += len;
    }
    for (std::thread& w : workers) w.join();
}

}  // namespace clonekit
