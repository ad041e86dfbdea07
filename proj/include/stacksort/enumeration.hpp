#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "stacksort/counts.hpp"

namespace stacksort {

// Lexicographically rank-th permutation of {1, ..., n} (rank in [0, n!)).
std::vector<int> unrank_permutation(int n, std::uint64_t rank);

// Visits permutations of {1, ..., n} with lexicographic ranks in [lo, hi),
// in order. fn(const std::vector<int>&).
template <class Fn>
void for_each_permutation_range(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn)
{
    if (lo >= hi)
        return;
    std::vector<int> v = unrank_permutation(n, lo);
    for (std::uint64_t r = lo; r < hi; ++r) {
        fn(static_cast<const std::vector<int>&>(v));
        std::next_permutation(v.begin(), v.end());
    }
}

// Splits S_n into contiguous lexicographic rank ranges, one per worker.
// fn(worker_index, const std::vector<int>&) must only touch state owned by
// its worker index.
template <class Fn>
void parallel_permutation_sweep(int n, int workers, Fn&& fn)
{
    const std::uint64_t total = factorial_u64(n);
    if (workers < 1)
        workers = 1;
    if (static_cast<std::uint64_t>(workers) > total)
        workers = static_cast<int>(total);
    if (workers == 1) {
        for_each_permutation_range(n, 0, total, [&](const std::vector<int>& v) { fn(0, v); });
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        threads.emplace_back([n, lo, hi, w, &fn] {
            for_each_permutation_range(n, lo, hi, [&](const std::vector<int>& v) { fn(w, v); });
        });
    }
    for (auto& t : threads)
        t.join();
}

int resolve_workers(int requested); // 0 or negative -> hardware_concurrency

} // namespace stacksort
