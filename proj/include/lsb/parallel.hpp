#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lsb {

inline unsigned resolve_threads(unsigned requested) noexcept {
    if (requested != 0) return requested;
    const auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Calls body(worker, begin, end) on `threads` contiguous slices of [0, count).
/// The first exception thrown by any worker is rethrown after all have joined.
template <typename Body>
void parallel_ranges(std::size_t count, unsigned threads, Body&& body) {
    threads = static_cast<unsigned>(std::clamp<std::size_t>(resolve_threads(threads), 1, std::max<std::size_t>(count, 1)));
    if (threads == 1) {
        body(0u, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        workers.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace lsb

namespace lsb {

/// Calls body(worker, i) for every i in [0, count), worker w taking i ≡ w (mod threads).
/// Suits triangular pair scans, where row cost shrinks with i.
template <typename Body>
void parallel_strided(std::size_t count, unsigned threads, Body&& body) {
    const unsigned workers = static_cast<unsigned>(
        std::clamp<std::size_t>(resolve_threads(threads), 1, std::max<std::size_t>(count, 1)));
    parallel_ranges(workers, workers, [&](unsigned, std::size_t w, std::size_t) {
        for (std::size_t i = w; i < count; i += workers) body(static_cast<unsigned>(w), i);
    });
}

}  // namespace lsb
