#pragma once

// Deterministic range reductions over [lo, hi].
//
// The range is cut into fixed-size blocks that do not depend on the thread
// count.  Workers claim blocks from an atomic counter, and per-block results
// are folded in block order afterwards, so the output is identical for any
// number of threads.

#include "binomgap/primes.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace binomgap {

inline constexpr Natural kDefaultBlock = 4096;

namespace detail {

template <class Body>
void run_workers(unsigned threads, std::size_t jobs, Body body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto guarded = [&] {
        try {
            body();
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };
    if (threads == 1) {
        guarded();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(guarded);
    }
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace detail

// fn(a, b) reduces the closed block [a, b]; combine folds block results left
// to right starting from identity.
template <class T, class BlockFn, class Combine>
T reduce_range(Natural lo, Natural hi, unsigned threads, T identity, BlockFn fn, Combine combine,
               Natural block = kDefaultBlock)
{
    if (hi < lo)
        return identity;
    const std::size_t blocks = static_cast<std::size_t>((hi - lo) / block + 1);
    std::vector<std::optional<T>> partial(blocks);
    std::atomic<std::size_t> next{0};
    detail::run_workers(threads, blocks, [&] {
        for (std::size_t i = next++; i < blocks; i = next++) {
            Natural a = lo + i * block;
            Natural b = std::min(hi, a + block - 1);
            partial[i] = fn(a, b);
        }
    });
    T acc = std::move(identity);
    for (auto& part : partial)
        acc = combine(std::move(acc), std::move(*part));
    return acc;
}

// Smallest x in [lo, hi] accepted by pred, or nullopt.  Blocks lying above an
// already-found hit are skipped.
template <class Pred>
std::optional<Natural> find_first(Natural lo, Natural hi, unsigned threads, Pred pred, Natural block = kDefaultBlock)
{
    if (hi < lo)
        return std::nullopt;
    const std::size_t blocks = static_cast<std::size_t>((hi - lo) / block + 1);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_block{blocks};
    std::vector<std::optional<Natural>> hits(blocks);
    detail::run_workers(threads, blocks, [&] {
        for (std::size_t i = next++; i < blocks; i = next++) {
            if (i > best_block.load())
                break;
            Natural a = lo + i * block;
            Natural b = std::min(hi, a + block - 1);
            for (Natural x = a;; ++x) {
                if (pred(x)) {
                    hits[i] = x;
                    std::size_t seen = best_block.load();
                    while (i < seen && !best_block.compare_exchange_weak(seen, i)) {
                    }
                    break;
                }
                if (x == b)
                    break;
            }
        }
    });
    for (auto& h : hits)
        if (h)
            return h;
    return std::nullopt;
}

}  // namespace binomgap
