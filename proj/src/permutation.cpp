#include "stacksort/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stacksort {

namespace {

void validate_entries(const std::vector<int>& entries)
{
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() <= 0)
        throw std::invalid_argument("Permutation: entries must be positive");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("Permutation: entries must be distinct");
}

} // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries))
{
    validate_entries(entries_);
}

Permutation Permutation::identity(int n)
{
    if (n < 0)
        throw std::invalid_argument("Permutation::identity: negative length");
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::parse(const std::string& text)
{
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    if (trimmed.empty())
        return Permutation();

    const bool spaced = trimmed.find(' ') != std::string::npos;
    if (!spaced && trimmed.size() > 1 &&
        std::all_of(trimmed.begin(), trimmed.end(),
                    [](char c) { return c >= '1' && c <= '9'; })) {
        std::vector<int> e;
        e.reserve(trimmed.size());
        for (char c : trimmed)
            e.push_back(c - '0');
        return Permutation(std::move(e));
    }

    std::istringstream in(trimmed);
    std::vector<int> e;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("Permutation::parse: not a number: " + tok);
        }
        if (used != tok.size())
            throw std::invalid_argument("Permutation::parse: not a number: " + tok);
        e.push_back(v);
    }
    return Permutation(std::move(e));
}

int Permutation::at(int pos) const
{
    if (pos < 1 || pos > size())
        throw std::out_of_range("Permutation::at: position out of range");
    return entries_[static_cast<std::size_t>(pos - 1)];
}

bool Permutation::is_normalized() const
{
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n)
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true; // distinctness is a class invariant
}

bool Permutation::is_increasing() const
{
    return std::is_sorted(entries_.begin(), entries_.end());
}

std::string Permutation::str() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(entries_[i]);
    }
    return out;
}

Permutation normalize(const Permutation& p)
{
    const int n = p.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const auto& e = p.entries();
    std::sort(order.begin(), order.end(), [&](int a, int b) { return e[a] < e[b]; });
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int rank = 0; rank < n; ++rank)
        out[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
    return Permutation(std::move(out));
}

Permutation del_r(const Permutation& p, int r)
{
    const int n = p.size();
    if (r < 0 || r > n)
        throw std::out_of_range("del_r: r must be in [0, n]");
    if (r == 0)
        return p;
    std::vector<int> sorted = p.entries();
    std::sort(sorted.begin(), sorted.end());
    const int cutoff = sorted[static_cast<std::size_t>(r - 1)];
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n - r));
    for (int v : p.entries())
        if (v > cutoff)
            out.push_back(v);
    return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p)
{
    if (!p.is_normalized())
        throw std::invalid_argument("inverse: permutation must be normalized");
    const int n = p.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        out[static_cast<std::size_t>(p.at(i) - 1)] = i;
    return Permutation(std::move(out));
}

std::vector<int> right_to_left_maxima(const Permutation& p)
{
    std::vector<int> positions;
    int best = 0;
    for (int i = p.size(); i >= 1; --i) {
        if (p.at(i) > best) {
            best = p.at(i);
            positions.push_back(i);
        }
    }
    std::reverse(positions.begin(), positions.end());
    return positions;
}

std::vector<int> descents(const Permutation& p)
{
    std::vector<int> out;
    for (int i = 1; i + 1 <= p.size(); ++i)
        if (p.at(i) > p.at(i + 1))
            out.push_back(i);
    return out;
}

int tail_length(const Permutation& p)
{
    if (!p.is_normalized())
        throw std::invalid_argument("tail_length: permutation must be normalized");
    const int n = p.size();
    int len = 0;
    for (int i = n; i >= 1 && p.at(i) == i; --i)
        ++len;
    return len;
}

std::vector<Hook> hooks_from(const Permutation& p, int i)
{
    if (i < 1 || i > p.size())
        throw std::out_of_range("hooks_from: position out of range");
    std::vector<Hook> out;
    for (int j = i + 1; j <= p.size(); ++j)
        if (p.at(j) > p.at(i))
            out.push_back(Hook{i, j});
    return out;
}

std::vector<int> tail_bound_descents(const Permutation& p)
{
    if (!p.is_normalized())
        throw std::invalid_argument("tail_bound_descents: permutation must be normalized");
    const int n = p.size();
    const int tail_start = n - tail_length(p) + 1; // first tail position
    std::vector<int> out;
    for (int d : descents(p)) {
        bool bound = true;
        for (int j = d + 1; j <= n && bound; ++j)
            if (p.at(j) > p.at(d) && j < tail_start)
                bound = false;
        if (bound)
            out.push_back(d);
    }
    return out;
}

std::pair<Permutation, Permutation> split_by_hook(const Permutation& p, const Hook& h)
{
    const int n = p.size();
    const int i = h.sw_index;
    const int j = h.ne_index;
    if (i < 1 || j > n || i >= j || p.at(i) >= p.at(j))
        throw std::domain_error("split_by_hook: not a hook of this permutation");
    std::vector<int> unsheltered;
    unsheltered.reserve(static_cast<std::size_t>(i + n - j));
    for (int k = 1; k <= i; ++k)
        unsheltered.push_back(p.at(k));
    for (int k = j + 1; k <= n; ++k)
        unsheltered.push_back(p.at(k));
    std::vector<int> sheltered;
    sheltered.reserve(static_cast<std::size_t>(j - i - 1));
    for (int k = i + 1; k <= j - 1; ++k)
        sheltered.push_back(p.at(k));
    return {Permutation(std::move(unsheltered)), Permutation(std::move(sheltered))};
}

CycleDecomposition foata(const Permutation& p)
{
    if (!p.is_normalized())
        throw std::invalid_argument("foata: permutation must be normalized");
    CycleDecomposition out;
    int prev = 0;
    for (int boundary : right_to_left_maxima(p)) {
        std::vector<int> cycle;
        cycle.reserve(static_cast<std::size_t>(boundary - prev));
        for (int k = prev + 1; k <= boundary; ++k)
            cycle.push_back(p.at(k));
        out.cycles.push_back(std::move(cycle));
        prev = boundary;
    }
    return out;
}

} // namespace stacksort
