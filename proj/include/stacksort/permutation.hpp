#pragma once

#include <string>
#include <vector>

namespace stacksort {

// A permutation in one-line notation: a sequence of distinct positive
// integers. Values are immutable; every operation returns a fresh value.
// Positions are 1-based throughout, matching the usual combinatorial
// indexing.
class Permutation {
public:
    Permutation() = default; // the empty permutation
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    // Accepts entries separated by single spaces ("4 1 6 2"). A single
    // multi-digit token ("4162") is read in compact form, one entry per
    // digit; entries >= 10 therefore require the spaced form.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int at(int pos) const; // 1-based
    const std::vector<int>& entries() const { return entries_; }

    bool is_normalized() const; // entries are exactly {1, ..., n}
    bool is_increasing() const;

    std::string str() const; // space-separated entries

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b)
    {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<int> entries_;
};

// A hook connects the plot points (i, p_i) and (j, p_j) with i < j and
// p_i < p_j; indices are 1-based positions in the owning permutation.
struct Hook {
    int sw_index;
    int ne_index;
    friend bool operator==(const Hook&, const Hook&) = default;
};

// Cycles as produced by the Foata transition map: each cycle is written
// with its maximum last, and cycle maxima decrease left to right.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

// Replace the i-th smallest entry with i; the result lies in S_n.
Permutation normalize(const Permutation& p);

// Delete the r smallest entries (by value). r > n is an error.
Permutation del_r(const Permutation& p, int r);

Permutation inverse(const Permutation& p); // requires normalized

// Positions (increasing) of entries that exceed everything to their right.
std::vector<int> right_to_left_maxima(const Permutation& p);

std::vector<int> descents(const Permutation& p); // positions i with p_i > p_{i+1}

// Length of the longest suffix with p_i = i. Requires a normalized input.
int tail_length(const Permutation& p);

// All hooks with southwest endpoint (i, p_i): the positions j > i with p_j > p_i.
std::vector<Hook> hooks_from(const Permutation& p, int i);

// Descents d whose every hook in SW_d(p) ends in the tail. Requires a
// normalized input; for p != identity this always contains the position
// of the entry n - tail_length(p).
std::vector<int> tail_bound_descents(const Permutation& p);

// Splits p along hook H into (unsheltered, sheltered):
// unsheltered = p_1..p_i p_{j+1}..p_n, sheltered = p_{i+1}..p_{j-1}.
std::pair<Permutation, Permutation> split_by_hook(const Permutation& p, const Hook& h);

// Foata's transition map: cut before each right-to-left-maximum block
// boundary. A bijection from S_n to cycle decompositions.
CycleDecomposition foata(const Permutation& p);

} // namespace stacksort
