#pragma once

// Deterministic chunked parallelism: the index range is split into
// contiguous chunks, each worker owns whole chunks, and callers merge
// per-chunk results in chunk order so output never depends on timing.

#include <cstddef>
#include <thread>
#include <vector>

namespace zetabound {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// fn(chunk_index, begin, end) is invoked once per chunk
template <typename Fn>
inline void parallel_chunks(std::size_t n_items, unsigned threads, std::size_t n_chunks,
                            Fn&& fn) {
    if (n_items == 0) return;
    threads = resolve_threads(threads);
    if (n_chunks == 0) n_chunks = 1;
    if (n_chunks > n_items) n_chunks = n_items;
    const std::size_t chunk = (n_items + n_chunks - 1) / n_chunks;
    if (threads <= 1 || n_chunks == 1) {
        for (std::size_t c = 0, b = 0; b < n_items; ++c, b += chunk)
            fn(c, b, std::min(b + chunk, n_items));
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([=, &fn] {
            for (std::size_t c = w, b = w * chunk; b < n_items;
                 c += threads, b += chunk * threads)
                fn(c, b, std::min(b + chunk, n_items));
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace zetabound
