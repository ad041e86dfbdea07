#pragma once

#include <vector>

#include "stacksort/counts.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// Adjacent-position swap at i when p_i > p_{i+1}; otherwise the identity move.
Permutation t_right(const Permutation& p, int i);

// Adjacent-value swap of i, i+1 when i+1 precedes i; otherwise the identity move.
Permutation t_left(const Permutation& p, int i);

// Fast order tests via inversion-set containment (right order on value
// pairs, left order through inverses). Validated against the BFS
// reference below; see leq_right_bfs.
bool leq_right(const Permutation& lhs, const Permutation& rhs);
bool leq_left(const Permutation& lhs, const Permutation& rhs);

// Reference implementations: breadth-first reachability by generator
// moves (n <= 8).
bool leq_right_bfs(const Permutation& lhs, const Permutation& rhs);
bool leq_left_bfs(const Permutation& lhs, const Permutation& rhs);

struct Lemma9Report {
    Permutation input;
    int index = 0;
    int128 fertility_before = 0; // |s^{-1}(p)|
    int128 fertility_after = 0;  // |s^{-1}(t_left(p, i))|
    bool has_witness = false;    // some a makes i+1, a, i a 231 pattern
    bool holds = false;          // before <= after, with equality when witnessed
};

// Brute-force check of the injection/bijection statement for one (p, i);
// requires i+1 to precede i, and n <= 8.
Lemma9Report lemma9_check(const Permutation& p, int i);

} // namespace stacksort
