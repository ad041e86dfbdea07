#pragma once

#include <string>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

enum class MapKind { stack, revstack, pop };

MapKind map_kind_from_name(const std::string& name); // "s" | "revstack" | "pop"
std::string map_kind_name(MapKind kind);

// One pass of the stack-sorting map, via the explicit stack procedure.
Permutation stack_sort(const Permutation& p);

// Same map via the recursive decomposition s(LmR) = s(L)s(R)m. Kept as an
// independent route; the two implementations must agree on every input.
Permutation stack_sort_recursive(const Permutation& p);

Permutation iterate(const Permutation& p, int t); // s^t, t >= 0

// Least t with s^t(p) increasing; 0 for increasing (and empty) inputs.
int sd(const Permutation& p);

// Least positive t such that appending a 0 sentinel and iterating s puts
// the sentinel first. Rejects the empty permutation.
int sd_prime(const Permutation& p);

// Reverses every maximal descending run.
Permutation pop_stack(const Permutation& p);

Permutation reversed(const Permutation& p);
Permutation revstack(const Permutation& p); // s applied to the reversal

Permutation apply_map(MapKind kind, const Permutation& p);

// Least t with kind^t(p) increasing.
int depth_under(MapKind kind, const Permutation& p);

namespace detail {

// Raw-vector fast paths used by sweeps and sampling. Entries need only be
// distinct; `out` and `stack_buf` are scratch.
void stack_sort_pass(const std::vector<int>& in, std::vector<int>& out,
                     std::vector<int>& stack_buf);
void pop_pass(const std::vector<int>& in, std::vector<int>& out);
bool is_increasing(const std::vector<int>& v);
int sd_vec(std::vector<int> v);
int sd_prime_vec(const std::vector<int>& v);
int pop_depth_vec(std::vector<int> v);
int revstack_depth_vec(std::vector<int> v);

} // namespace detail

} // namespace stacksort
