#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stacksort/counts.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// An ordered set partition in standard form: pairwise-disjoint nonempty
// sets of positive integers with strictly decreasing block maxima. Blocks
// are stored descending-sorted so maxima and j-th-largest queries are
// direct reads; the empty tuple is a valid value.
class OrderedSetPartition {
public:
    OrderedSetPartition() = default; // ()

    // Sorts each block descending and validates the standard-form invariants.
    static OrderedSetPartition from_blocks(std::vector<std::vector<int>> blocks);

    int block_count() const { return static_cast<int>(blocks_.size()); }
    bool empty() const { return blocks_.empty(); }
    const std::vector<int>& block(int i) const; // 1-based, entries descending
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int total_elements() const;

    std::string str() const; // "({9,12},{6,11})", ascending inside braces

    friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
    std::vector<std::vector<int>> blocks_;

    struct unchecked_t {};
    OrderedSetPartition(std::vector<std::vector<int>> blocks, unchecked_t)
        : blocks_(std::move(blocks))
    {
    }
    friend OrderedSetPartition eta(const OrderedSetPartition&);
    friend OrderedSetPartition b1_of(const Permutation&);
};

// Block maxima, ascending. maxima(()) is empty.
std::vector<int> maxima(const OrderedSetPartition& b);

// One step of the dynamics: strip each block's maximum, cut at the
// residual right-to-left dominance indices (max of an empty residual is
// treated as minus infinity), merge the cells, drop empties.
OrderedSetPartition eta(const OrderedSetPartition& b);

// The partition cut at the right-to-left maxima of p.
OrderedSetPartition b1_of(const Permutation& p);

// Size of the largest block of b1_of(p); equals the longest Foata cycle.
int largest_b1_block(const Permutation& p);

struct DynamicsTrace {
    std::vector<OrderedSetPartition> partitions;   // B_1 .. B_t (nonempty)
    std::vector<std::vector<int>> maxima_sets;     // M_1 .. M_t
    int halted_at = 0;                             // least t with B_{t+1} = ()
};

// Iterates eta from b1_of(p) until empty; halted_at equals sd_prime(p).
DynamicsTrace run_dynamics(const Permutation& p);

// With E_m the union of blocks m+1..r: true iff |B_m| >= |E_m| and the
// j-th largest of B_m beats the j-th largest of E_m for every j.
bool is_quarantined(const OrderedSetPartition& b, int m);

// If E_m(p) is quarantined in b1_of(p), the depth bound i_m (position of
// the m-th right-to-left maximum); otherwise nothing.
std::optional<int> lemma5_bound(const Permutation& p, int m);

// Exact probability that E_m is quarantined given right-to-left maxima at
// positions i_prev < i_m in a permutation of length n:
// (C(n-i_prev-1, i_m-i_prev-1) - C(n-i_prev-1, i_m-i_prev+1)) / C(n-i_prev-1, i_m-i_prev-1),
// clamped at 0 for parameter ranges where no valid lattice path exists.
Rational ballot_probability(int n, int i_prev, int i_m);

// The companion lower bound 1 - ((n-i_m)/(i_m-i_prev))^2 (may be negative).
Rational ballot_lower_bound(int n, int i_prev, int i_m);

} // namespace stacksort
