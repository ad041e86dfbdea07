#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "stacksort/counts.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/sorting.hpp"

namespace stacksort {

// Memo key: the normalized entries as raw bytes. Rejects n > 255 so every
// entry fits in one byte.
std::string encode_key(const Permutation& normalized);

// Map from normalized-permutation keys to exact fertilities. Safe for
// concurrent lookup/store; values are deterministic so last-writer-wins.
class FertilityCache {
public:
    std::optional<int128> lookup(const std::string& key) const;
    void store(const std::string& key, int128 value);
    std::size_t size() const;

    // Binary sidecar: 8-byte magic, then records of
    // [u8 key length][key bytes][16-byte little-endian value].
    void save(const std::string& path) const;
    void load(const std::string& path); // merges into the cache

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, int128> map_;
};

// |s^{-1}(normalize(p))| via the Decomposition Lemma: recurse on the hooks
// of the canonical tail-bound descent (the position of entry n - tail
// length), memoized. Empty -> 1; increasing of length m -> C_m; a descent
// with no hooks -> 0.
int128 fertility(const Permutation& p, FertilityCache& cache);

// Exhaustive oracle: all sigma in S_n with s(sigma) = p, in lexicographic
// order. p must be normalized; n is capped by `guard`.
std::vector<Permutation> preimages_brute(const Permutation& p, int guard = 10,
                                         int workers = 1);

struct CountRow {
    int n;
    int t;
    int128 value;
};

// Counts of permutations in S_n by exact depth 0..n-1 under `kind`,
// by exhaustive sweep (n <= 10).
std::vector<int128> depth_histogram(int n, MapKind kind, int workers = 1);

// Number of t-stack-sortable permutations in S_n (exhaustive, n <= 10).
CountRow count_t_sortable(int n, int t, int workers = 1);

// Exact average of sd (or sd') over S_n as a reduced fraction (n <= 10).
Rational exact_depth_average(int n, bool prime, int workers = 1);

} // namespace stacksort
