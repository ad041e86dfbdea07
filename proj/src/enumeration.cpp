#include "stacksort/enumeration.hpp"

#include <stdexcept>

namespace stacksort {

std::vector<int> unrank_permutation(int n, std::uint64_t rank)
{
    if (rank >= factorial_u64(n))
        throw std::out_of_range("unrank_permutation: rank out of range");
    std::vector<int> available(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        available[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial_u64(i - 1);
        const std::uint64_t digit = rank / f;
        rank %= f;
        out.push_back(available[static_cast<std::size_t>(digit)]);
        available.erase(available.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace stacksort
