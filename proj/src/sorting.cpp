#include "stacksort/sorting.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacksort {

namespace detail {

void stack_sort_pass(const std::vector<int>& in, std::vector<int>& out,
                     std::vector<int>& stack_buf)
{
    out.clear();
    stack_buf.clear();
    for (int x : in) {
        // Pop while the next input entry is larger than the top of the stack.
        while (!stack_buf.empty() && x > stack_buf.back()) {
            out.push_back(stack_buf.back());
            stack_buf.pop_back();
        }
        stack_buf.push_back(x);
    }
    while (!stack_buf.empty()) {
        out.push_back(stack_buf.back());
        stack_buf.pop_back();
    }
}

void pop_pass(const std::vector<int>& in, std::vector<int>& out)
{
    out = in;
    const std::size_t n = out.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && out[j] > out[j + 1])
            ++j;
        std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i),
                     out.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        i = j + 1;
    }
}

bool is_increasing(const std::vector<int>& v)
{
    return std::is_sorted(v.begin(), v.end());
}

int sd_vec(std::vector<int> v)
{
    std::vector<int> next;
    std::vector<int> stack_buf;
    next.reserve(v.size());
    stack_buf.reserve(v.size());
    int t = 0;
    while (!is_increasing(v)) {
        stack_sort_pass(v, next, stack_buf);
        v.swap(next);
        ++t;
    }
    return t;
}

int sd_prime_vec(const std::vector<int>& v)
{
    // Sentinel simulation: entries are positive, so 0 is strictly smallest.
    std::vector<int> cur = v;
    cur.push_back(0);
    std::vector<int> next;
    std::vector<int> stack_buf;
    next.reserve(cur.size());
    stack_buf.reserve(cur.size());
    int t = 0;
    do {
        stack_sort_pass(cur, next, stack_buf);
        cur.swap(next);
        ++t;
    } while (cur.front() != 0);
    return t;
}

int pop_depth_vec(std::vector<int> v)
{
    std::vector<int> next;
    int t = 0;
    while (!is_increasing(v)) {
        pop_pass(v, next);
        v.swap(next);
        ++t;
    }
    return t;
}

int revstack_depth_vec(std::vector<int> v)
{
    std::vector<int> next;
    std::vector<int> stack_buf;
    next.reserve(v.size());
    stack_buf.reserve(v.size());
    int t = 0;
    while (!is_increasing(v)) {
        std::reverse(v.begin(), v.end());
        stack_sort_pass(v, next, stack_buf);
        v.swap(next);
        ++t;
    }
    return t;
}

} // namespace detail

MapKind map_kind_from_name(const std::string& name)
{
    if (name == "s")
        return MapKind::stack;
    if (name == "revstack")
        return MapKind::revstack;
    if (name == "pop")
        return MapKind::pop;
    throw std::invalid_argument("unknown map kind: " + name);
}

std::string map_kind_name(MapKind kind)
{
    switch (kind) {
    case MapKind::stack: return "s";
    case MapKind::revstack: return "revstack";
    case MapKind::pop: return "pop";
    }
    throw std::invalid_argument("unknown map kind");
}

Permutation stack_sort(const Permutation& p)
{
    std::vector<int> out;
    std::vector<int> stack_buf;
    detail::stack_sort_pass(p.entries(), out, stack_buf);
    return Permutation(std::move(out));
}

namespace {

void recursive_sort(const std::vector<int>& in, std::size_t lo, std::size_t hi,
                    std::vector<int>& out)
{
    if (lo >= hi)
        return;
    std::size_t m = lo;
    for (std::size_t k = lo + 1; k < hi; ++k)
        if (in[k] > in[m])
            m = k;
    recursive_sort(in, lo, m, out);
    recursive_sort(in, m + 1, hi, out);
    out.push_back(in[m]);
}

} // namespace

Permutation stack_sort_recursive(const Permutation& p)
{
    std::vector<int> out;
    out.reserve(p.entries().size());
    recursive_sort(p.entries(), 0, p.entries().size(), out);
    return Permutation(std::move(out));
}

Permutation iterate(const Permutation& p, int t)
{
    if (t < 0)
        throw std::out_of_range("iterate: t must be nonnegative");
    std::vector<int> cur = p.entries();
    std::vector<int> next;
    std::vector<int> stack_buf;
    for (int k = 0; k < t; ++k) {
        detail::stack_sort_pass(cur, next, stack_buf);
        cur.swap(next);
    }
    return Permutation(std::move(cur));
}

int sd(const Permutation& p)
{
    return detail::sd_vec(p.entries());
}

int sd_prime(const Permutation& p)
{
    if (p.empty())
        throw std::invalid_argument("sd_prime: undefined for the empty permutation");
    return detail::sd_prime_vec(p.entries());
}

Permutation pop_stack(const Permutation& p)
{
    std::vector<int> out;
    detail::pop_pass(p.entries(), out);
    return Permutation(std::move(out));
}

Permutation reversed(const Permutation& p)
{
    std::vector<int> e = p.entries();
    std::reverse(e.begin(), e.end());
    return Permutation(std::move(e));
}

Permutation revstack(const Permutation& p)
{
    return stack_sort(reversed(p));
}

Permutation apply_map(MapKind kind, const Permutation& p)
{
    switch (kind) {
    case MapKind::stack: return stack_sort(p);
    case MapKind::revstack: return revstack(p);
    case MapKind::pop: return pop_stack(p);
    }
    throw std::invalid_argument("unknown map kind");
}

int depth_under(MapKind kind, const Permutation& p)
{
    switch (kind) {
    case MapKind::stack: return detail::sd_vec(p.entries());
    case MapKind::revstack: return detail::revstack_depth_vec(p.entries());
    case MapKind::pop: return detail::pop_depth_vec(p.entries());
    }
    throw std::invalid_argument("unknown map kind");
}

} // namespace stacksort
