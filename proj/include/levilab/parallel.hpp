#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace levilab {

/// Worker count: LEVILAB_THREADS when set and positive, else the hardware
/// concurrency.
inline std::size_t thread_budget()
{
    if (const char* env = std::getenv("LEVILAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) over contiguous chunks. fn must only write
/// to slot i of its outputs, so results do not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn)
{
    const std::size_t workers = std::min(thread_budget(), std::max<std::size_t>(1, count / 64));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream per (seed, index) pair.
inline std::mt19937_64 index_rng(std::uint64_t seed, std::uint64_t index)
{
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1)));
}

} // namespace levilab
