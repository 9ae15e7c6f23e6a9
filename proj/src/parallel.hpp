#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "rimhook/rng.hpp"

namespace rimhook::detail {

/// Splits `count` draws over `threads` workers; worker w gets a contiguous
/// share and Rng(seed).split(w). Results are concatenated in worker order.
template <typename T, typename Work>
std::vector<T> map_reduce(std::int64_t count, int threads, std::uint64_t seed, Work work) {
    threads = std::max(1, threads);
    const Rng master(seed);
    std::vector<std::vector<T>> partial(static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    auto run = [&](int w) {
        const std::int64_t begin = count * w / threads;
        const std::int64_t end = count * (w + 1) / threads;
        Rng rng = master.split(static_cast<std::uint64_t>(w));
        try {
            partial[static_cast<std::size_t>(w)] = work(end - begin, rng);
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(run, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace rimhook::detail
