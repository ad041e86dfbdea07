#include "stacksort/partition_dynamics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "stacksort/errors.hpp"

namespace stacksort {

OrderedSetPartition OrderedSetPartition::from_blocks(std::vector<std::vector<int>> blocks)
{
    for (auto& b : blocks) {
        if (b.empty())
            throw std::invalid_argument("OrderedSetPartition: blocks must be nonempty");
        std::sort(b.begin(), b.end(), std::greater<int>());
        if (b.back() <= 0)
            throw std::invalid_argument("OrderedSetPartition: entries must be positive");
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("OrderedSetPartition: entries must be distinct");
    }
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].front() <= blocks[i + 1].front())
            throw std::invalid_argument("OrderedSetPartition: block maxima must strictly decrease");
    // Disjointness: pooled entries must be distinct.
    std::vector<int> pool;
    for (const auto& b : blocks)
        pool.insert(pool.end(), b.begin(), b.end());
    std::sort(pool.begin(), pool.end());
    if (std::adjacent_find(pool.begin(), pool.end()) != pool.end())
        throw std::invalid_argument("OrderedSetPartition: blocks must be disjoint");
    return OrderedSetPartition(std::move(blocks), unchecked_t{});
}

const std::vector<int>& OrderedSetPartition::block(int i) const
{
    if (i < 1 || i > block_count())
        throw std::out_of_range("OrderedSetPartition::block: index out of range");
    return blocks_[static_cast<std::size_t>(i - 1)];
}

int OrderedSetPartition::total_elements() const
{
    int total = 0;
    for (const auto& b : blocks_)
        total += static_cast<int>(b.size());
    return total;
}

std::string OrderedSetPartition::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            out += ",";
        out += "{";
        for (std::size_t k = blocks_[i].size(); k-- > 0;) {
            out += std::to_string(blocks_[i][k]);
            if (k)
                out += ",";
        }
        out += "}";
    }
    out += ")";
    return out;
}

std::vector<int> maxima(const OrderedSetPartition& b)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(b.block_count()));
    for (const auto& blk : b.blocks())
        out.push_back(blk.front());
    std::sort(out.begin(), out.end());
    return out;
}

OrderedSetPartition eta(const OrderedSetPartition& b)
{
    const int r = b.block_count();
    if (r == 0)
        return OrderedSetPartition();

    // Strip each block's maximum (blocks are descending, so drop the front).
    std::vector<std::vector<int>> residual(static_cast<std::size_t>(r));
    bool any = false;
    for (int i = 0; i < r; ++i) {
        const auto& blk = b.blocks()[static_cast<std::size_t>(i)];
        residual[static_cast<std::size_t>(i)].assign(blk.begin() + 1, blk.end());
        any = any || blk.size() > 1;
    }
    if (!any)
        return OrderedSetPartition();

    // j is a cut index when its residual maximum beats every later residual
    // maximum; an empty residual counts as minus infinity, and the last
    // index is a cut vacuously.
    std::vector<int> cuts;
    bool have_best = false;
    int best = 0;
    for (int j = r - 1; j >= 0; --j) {
        const auto& res = residual[static_cast<std::size_t>(j)];
        const bool in_j = (j == r - 1) || (!res.empty() && (!have_best || res.front() > best));
        if (in_j)
            cuts.push_back(j);
        if (!res.empty() && (!have_best || res.front() > best)) {
            best = res.front();
            have_best = true;
        }
    }
    std::reverse(cuts.begin(), cuts.end());

    std::vector<std::vector<int>> merged;
    int prev = -1;
    for (int j : cuts) {
        std::vector<int> cell;
        for (int i = prev + 1; i <= j; ++i) {
            const auto& res = residual[static_cast<std::size_t>(i)];
            if (res.empty())
                continue;
            std::vector<int> tmp;
            tmp.reserve(cell.size() + res.size());
            std::merge(cell.begin(), cell.end(), res.begin(), res.end(),
                       std::back_inserter(tmp), std::greater<int>());
            cell.swap(tmp);
        }
        if (!cell.empty())
            merged.push_back(std::move(cell));
        prev = j;
    }
    return OrderedSetPartition(std::move(merged), OrderedSetPartition::unchecked_t{});
}

OrderedSetPartition b1_of(const Permutation& p)
{
    std::vector<std::vector<int>> blocks;
    int prev = 0;
    for (int boundary : right_to_left_maxima(p)) {
        std::vector<int> blk;
        blk.reserve(static_cast<std::size_t>(boundary - prev));
        for (int k = prev + 1; k <= boundary; ++k)
            blk.push_back(p.at(k));
        std::sort(blk.begin(), blk.end(), std::greater<int>());
        blocks.push_back(std::move(blk));
        prev = boundary;
    }
    return OrderedSetPartition(std::move(blocks), OrderedSetPartition::unchecked_t{});
}

int largest_b1_block(const Permutation& p)
{
    // Block sizes are the gaps between consecutive right-to-left maxima
    // positions.
    int best = 0;
    int prev = 0;
    for (int b : right_to_left_maxima(p)) {
        best = std::max(best, b - prev);
        prev = b;
    }
    return best;
}

DynamicsTrace run_dynamics(const Permutation& p)
{
    if (p.empty())
        throw std::invalid_argument("run_dynamics: requires a nonempty permutation");
    DynamicsTrace trace;
    OrderedSetPartition cur = b1_of(p);
    while (!cur.empty()) {
        trace.maxima_sets.push_back(maxima(cur));
        trace.partitions.push_back(cur);
        cur = eta(cur);
        ++trace.halted_at;
    }
    return trace;
}

bool is_quarantined(const OrderedSetPartition& b, int m)
{
    const int r = b.block_count();
    if (m < 1 || m > r - 1)
        throw std::out_of_range("is_quarantined: m must be in [1, r-1]");
    const std::vector<int>& bm = b.block(m);
    std::vector<int> rest;
    for (int i = m + 1; i <= r; ++i) {
        const auto& blk = b.block(i);
        std::vector<int> tmp;
        tmp.reserve(rest.size() + blk.size());
        std::merge(rest.begin(), rest.end(), blk.begin(), blk.end(),
                   std::back_inserter(tmp), std::greater<int>());
        rest.swap(tmp);
    }
    if (bm.size() < rest.size())
        return false;
    for (std::size_t j = 0; j < rest.size(); ++j)
        if (bm[j] <= rest[j])
            return false;
    return true;
}

std::optional<int> lemma5_bound(const Permutation& p, int m)
{
    const OrderedSetPartition b1 = b1_of(p);
    if (m < 1 || m > b1.block_count() - 1)
        throw std::out_of_range("lemma5_bound: m must be in [1, r-1]");
    if (!is_quarantined(b1, m))
        return std::nullopt;
    return right_to_left_maxima(p)[static_cast<std::size_t>(m - 1)];
}

Rational ballot_probability(int n, int i_prev, int i_m)
{
    if (i_prev < 0 || i_prev >= i_m || i_m > n)
        throw std::out_of_range("ballot_probability: need 0 <= i_prev < i_m <= n");
    const int a = i_m - i_prev;  // east steps, counting the forced first one
    const int cap = n - i_prev - 1;
    const int128 total = binomial128(cap, a - 1);
    int128 good = binomial128(cap, a - 1) - binomial128(cap, a + 1);
    if (good < 0)
        good = 0; // endpoint above y = x: quarantine impossible
    return Rational(good, total);
}

Rational ballot_lower_bound(int n, int i_prev, int i_m)
{
    if (i_prev < 0 || i_prev >= i_m || i_m > n)
        throw std::out_of_range("ballot_lower_bound: need 0 <= i_prev < i_m <= n");
    const int128 num = static_cast<int128>(n - i_m) * (n - i_m);
    const int128 den = static_cast<int128>(i_m - i_prev) * (i_m - i_prev);
    return Rational(den - num, den);
}

} // namespace stacksort
