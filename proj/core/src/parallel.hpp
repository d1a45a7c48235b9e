#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hpc::detail {

inline unsigned worker_count(std::uint64_t total) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t by_size = total / 16384 + 1;
    return static_cast<unsigned>(std::min<std::uint64_t>(hw, by_size));
}

// Runs fn(chunk, begin, end) over contiguous chunks of [0, total); rethrows the
// first exception by chunk order.
template <class Fn>
void parallel_chunks(std::uint64_t total, unsigned chunks, Fn&& fn) {
    chunks = std::max(1u, chunks);
    if (chunks == 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
        const std::uint64_t begin = total * c / chunks, end = total * (c + 1) / chunks;
        threads.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace hpc::detail
