#include "stacksort/fertility.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "stacksort/enumeration.hpp"
#include "stacksort/errors.hpp"

namespace stacksort {

namespace {

constexpr char kCacheMagic[8] = {'S', 'S', 'F', 'E', 'R', 'T', '0', '1'};

std::string encode_entries(const std::vector<int>& entries)
{
    if (entries.size() > 255)
        throw ResourceGuardError("fertility keys support n <= 255");
    std::string key;
    key.reserve(entries.size());
    for (int v : entries)
        key.push_back(static_cast<char>(static_cast<unsigned char>(v)));
    return key;
}

std::vector<int> normalized_vec(const std::vector<int>& entries)
{
    const std::size_t n = entries.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return entries[a] < entries[b]; });
    std::vector<int> out(n);
    for (std::size_t rank = 0; rank < n; ++rank)
        out[order[rank]] = static_cast<int>(rank) + 1;
    return out;
}

int128 fertility_normalized(const std::vector<int>& e, FertilityCache& cache)
{
    const int n = static_cast<int>(e.size());
    if (n == 0)
        return 1;
    if (std::is_sorted(e.begin(), e.end()))
        return catalan128(n);

    const std::string key = encode_entries(e);
    if (auto hit = cache.lookup(key))
        return *hit;

    int tail = 0;
    while (tail < n && e[static_cast<std::size_t>(n - 1 - tail)] == n - tail)
        ++tail;
    const int target = n - tail;
    int d0 = 0; // 0-based index of the entry n - tail (the canonical descent)
    while (e[static_cast<std::size_t>(d0)] != target)
        ++d0;

    // Hooks from the canonical descent end exactly at the tail points
    // (1-based positions n - tail + 1 .. n); an empty tail means no hooks.
    int128 total = 0;
    std::vector<int> part;
    for (int j0 = n - tail; j0 < n; ++j0) { // 0-based northeast index
        part.assign(e.begin(), e.begin() + d0 + 1);
        part.insert(part.end(), e.begin() + j0 + 1, e.end());
        const int128 fu = fertility_normalized(normalized_vec(part), cache);

        part.assign(e.begin() + d0 + 1, e.begin() + j0);
        const int128 fs = fertility_normalized(normalized_vec(part), cache);

        total = checked_add(total, checked_mul(fu, fs));
    }
    cache.store(key, total);
    return total;
}

} // namespace

std::string encode_key(const Permutation& normalized)
{
    if (!normalized.is_normalized())
        throw std::invalid_argument("encode_key: permutation must be normalized");
    return encode_entries(normalized.entries());
}

std::optional<int128> FertilityCache::lookup(const std::string& key) const
{
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end())
        return std::nullopt;
    return it->second;
}

void FertilityCache::store(const std::string& key, int128 value)
{
    std::unique_lock lock(mutex_);
    map_[key] = value;
}

std::size_t FertilityCache::size() const
{
    std::shared_lock lock(mutex_);
    return map_.size();
}

void FertilityCache::save(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("FertilityCache::save: cannot open " + path);
    out.write(kCacheMagic, sizeof(kCacheMagic));
    std::shared_lock lock(mutex_);
    for (const auto& [key, value] : map_) {
        const unsigned char len = static_cast<unsigned char>(key.size());
        out.put(static_cast<char>(len));
        out.write(key.data(), static_cast<std::streamsize>(key.size()));
        unsigned char bytes[16];
        unsigned __int128 u = static_cast<unsigned __int128>(value);
        for (int i = 0; i < 16; ++i) {
            bytes[i] = static_cast<unsigned char>(u & 0xff);
            u >>= 8;
        }
        out.write(reinterpret_cast<const char*>(bytes), 16);
    }
    if (!out)
        throw std::runtime_error("FertilityCache::save: write failed for " + path);
}

void FertilityCache::load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("FertilityCache::load: cannot open " + path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || !std::equal(magic, magic + 8, kCacheMagic))
        throw std::runtime_error("FertilityCache::load: bad magic in " + path);
    while (true) {
        const int len = in.get();
        if (len == std::ifstream::traits_type::eof())
            break;
        std::string key(static_cast<std::size_t>(len), '\0');
        in.read(key.data(), len);
        unsigned char bytes[16];
        in.read(reinterpret_cast<char*>(bytes), 16);
        if (!in)
            throw std::runtime_error("FertilityCache::load: truncated record in " + path);
        unsigned __int128 u = 0;
        for (int i = 15; i >= 0; --i)
            u = (u << 8) | bytes[i];
        store(key, static_cast<int128>(u));
    }
}

int128 fertility(const Permutation& p, FertilityCache& cache)
{
    return fertility_normalized(normalized_vec(p.entries()), cache);
}

std::vector<Permutation> preimages_brute(const Permutation& p, int guard, int workers)
{
    if (!p.is_normalized())
        throw std::invalid_argument("preimages_brute: permutation must be normalized");
    const int n = p.size();
    if (n > guard)
        throw ResourceGuardError("preimages_brute: n exceeds the exhaustive-sweep guard");
    workers = std::max(1, workers);

    std::vector<std::vector<Permutation>> found(static_cast<std::size_t>(workers));
    const std::vector<int>& target = p.entries();
    parallel_permutation_sweep(n, workers, [&](int w, const std::vector<int>& cand) {
        thread_local std::vector<int> out, stack_buf;
        detail::stack_sort_pass(cand, out, stack_buf);
        if (out == target)
            found[static_cast<std::size_t>(w)].push_back(Permutation(cand));
    });
    std::vector<Permutation> all;
    for (auto& part : found)
        all.insert(all.end(), part.begin(), part.end());
    return all; // rank ranges are contiguous, so this is lexicographic
}

std::vector<int128> depth_histogram(int n, MapKind kind, int workers)
{
    if (n < 0 || n > 10)
        throw ResourceGuardError("depth_histogram: n exceeds the exhaustive-sweep guard");
    workers = std::max(1, workers);
    if (n == 0)
        return {};
    std::vector<std::vector<int128>> local(
        static_cast<std::size_t>(workers), std::vector<int128>(static_cast<std::size_t>(n), 0));
    parallel_permutation_sweep(n, workers, [&](int w, const std::vector<int>& v) {
        int depth = 0;
        switch (kind) {
        case MapKind::stack: depth = detail::sd_vec(v); break;
        case MapKind::revstack: depth = detail::revstack_depth_vec(v); break;
        case MapKind::pop: depth = detail::pop_depth_vec(v); break;
        }
        local[static_cast<std::size_t>(w)][static_cast<std::size_t>(depth)] += 1;
    });
    std::vector<int128> hist(static_cast<std::size_t>(n), 0);
    for (const auto& part : local)
        for (std::size_t d = 0; d < part.size(); ++d)
            hist[d] = checked_add(hist[d], part[d]);
    return hist;
}

CountRow count_t_sortable(int n, int t, int workers)
{
    if (t < 0)
        throw std::out_of_range("count_t_sortable: t must be nonnegative");
    const std::vector<int128> hist = depth_histogram(n, MapKind::stack, workers);
    int128 total = 0;
    for (int d = 0; d < static_cast<int>(hist.size()) && d <= t; ++d)
        total = checked_add(total, hist[static_cast<std::size_t>(d)]);
    if (n == 0)
        total = 1; // the empty permutation is t-stack-sortable for every t
    return CountRow{n, t, total};
}

Rational exact_depth_average(int n, bool prime, int workers)
{
    if (n < 0 || n > 10)
        throw ResourceGuardError("exact_depth_average: n exceeds the exhaustive-sweep guard");
    if (n == 0)
        return Rational(0, 1);
    workers = std::max(1, workers);
    std::vector<std::uint64_t> local(static_cast<std::size_t>(workers), 0);
    parallel_permutation_sweep(n, workers, [&](int w, const std::vector<int>& v) {
        local[static_cast<std::size_t>(w)] +=
            static_cast<std::uint64_t>(prime ? detail::sd_prime_vec(v) : detail::sd_vec(v));
    });
    std::uint64_t sum = 0;
    for (std::uint64_t part : local)
        sum += part;
    return Rational(static_cast<int128>(sum), static_cast<int128>(factorial_u64(n)));
}

} // namespace stacksort
