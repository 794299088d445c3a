#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace yg {

/// Runs fn(begin, end, chunk_index) over [0, n) split into a fixed number of
/// chunks.  Chunk boundaries depend only on n, never on the thread count, so
/// per-chunk results merged in chunk order are reproducible for any number of
/// workers.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn, std::size_t n_chunks = 0) {
    if (n == 0) return;
    if (threads == 0) threads = 1;
    if (n_chunks == 0) n_chunks = 64;
    if (n_chunks > n) n_chunks = n;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            const std::size_t begin = n * c / n_chunks;
            const std::size_t end = n * (c + 1) / n_chunks;
            fn(begin, end, c);
        }
    };

    if (threads == 1 || n_chunks == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    const unsigned use = threads < n_chunks ? threads : static_cast<unsigned>(n_chunks);
    pool.reserve(use);
    for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

} // namespace yg
