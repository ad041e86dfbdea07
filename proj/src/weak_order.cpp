#include "stacksort/weak_order.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "stacksort/errors.hpp"
#include "stacksort/fertility.hpp"

namespace stacksort {

namespace {

void require_member(const Permutation& p, const char* who)
{
    if (!p.is_normalized())
        throw std::invalid_argument(std::string(who) + ": permutation must be in S_n");
}

std::vector<int> positions_of(const Permutation& p)
{
    std::vector<int> pos(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int i = 1; i <= p.size(); ++i)
        pos[static_cast<std::size_t>(p.at(i))] = i;
    return pos;
}

// Entries fit in 4 bits for the BFS guard n <= 8.
std::uint64_t pack(const std::vector<int>& v)
{
    std::uint64_t key = 0;
    for (int x : v)
        key = (key << 4) | static_cast<std::uint64_t>(x);
    return key;
}

// Down-set reachability: from `from`, apply all moving generators until
// `target` is seen or the frontier empties.
bool bfs_reaches(const Permutation& target, const Permutation& from, bool left)
{
    const int n = from.size();
    if (target == from)
        return true;
    const std::uint64_t goal = pack(target.entries());
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::vector<int>> frontier;
    seen.insert(pack(from.entries()));
    frontier.push_back(from.entries());
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    while (!frontier.empty()) {
        std::vector<int> cur = std::move(frontier.front());
        frontier.pop_front();
        if (left)
            for (int i = 1; i <= n; ++i)
                pos[static_cast<std::size_t>(cur[static_cast<std::size_t>(i - 1)])] = i;
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> next = cur;
            if (left) {
                const int pi = pos[static_cast<std::size_t>(i)];
                const int pj = pos[static_cast<std::size_t>(i + 1)];
                if (pj >= pi)
                    continue; // i+1 does not precede i
                std::swap(next[static_cast<std::size_t>(pi - 1)],
                          next[static_cast<std::size_t>(pj - 1)]);
            } else {
                if (cur[static_cast<std::size_t>(i - 1)] < cur[static_cast<std::size_t>(i)])
                    continue; // not a descent
                std::swap(next[static_cast<std::size_t>(i - 1)], next[static_cast<std::size_t>(i)]);
            }
            const std::uint64_t key = pack(next);
            if (key == goal)
                return true;
            if (seen.insert(key).second)
                frontier.push_back(std::move(next));
        }
    }
    return false;
}

void require_bfs_size(const Permutation& p)
{
    if (p.size() > 8)
        throw ResourceGuardError("weak-order BFS reference supports n <= 8");
}

} // namespace

Permutation t_right(const Permutation& p, int i)
{
    require_member(p, "t_right");
    if (i < 1 || i > p.size() - 1)
        throw std::out_of_range("t_right: index out of range");
    if (p.at(i) < p.at(i + 1))
        return p;
    std::vector<int> e = p.entries();
    std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
    return Permutation(std::move(e));
}

Permutation t_left(const Permutation& p, int i)
{
    require_member(p, "t_left");
    if (i < 1 || i > p.size() - 1)
        throw std::out_of_range("t_left: index out of range");
    const std::vector<int> pos = positions_of(p);
    const int pi = pos[static_cast<std::size_t>(i)];
    const int pj = pos[static_cast<std::size_t>(i + 1)];
    if (pj >= pi)
        return p;
    std::vector<int> e = p.entries();
    std::swap(e[static_cast<std::size_t>(pi - 1)], e[static_cast<std::size_t>(pj - 1)]);
    return Permutation(std::move(e));
}

bool leq_right(const Permutation& lhs, const Permutation& rhs)
{
    require_member(lhs, "leq_right");
    require_member(rhs, "leq_right");
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("leq_right: sizes differ");
    const int n = lhs.size();
    const std::vector<int> pl = positions_of(lhs);
    const std::vector<int> pr = positions_of(rhs);
    // Value-pair inversions of lhs must be inversions of rhs.
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (pl[static_cast<std::size_t>(b)] < pl[static_cast<std::size_t>(a)] &&
                pr[static_cast<std::size_t>(b)] > pr[static_cast<std::size_t>(a)])
                return false;
    return true;
}

bool leq_left(const Permutation& lhs, const Permutation& rhs)
{
    require_member(lhs, "leq_left");
    require_member(rhs, "leq_left");
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("leq_left: sizes differ");
    return leq_right(inverse(lhs), inverse(rhs));
}

bool leq_right_bfs(const Permutation& lhs, const Permutation& rhs)
{
    require_member(lhs, "leq_right_bfs");
    require_member(rhs, "leq_right_bfs");
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("leq_right_bfs: sizes differ");
    require_bfs_size(rhs);
    return bfs_reaches(lhs, rhs, /*left=*/false);
}

bool leq_left_bfs(const Permutation& lhs, const Permutation& rhs)
{
    require_member(lhs, "leq_left_bfs");
    require_member(rhs, "leq_left_bfs");
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("leq_left_bfs: sizes differ");
    require_bfs_size(rhs);
    return bfs_reaches(lhs, rhs, /*left=*/true);
}

Lemma9Report lemma9_check(const Permutation& p, int i)
{
    require_member(p, "lemma9_check");
    if (p.size() > 8)
        throw ResourceGuardError("lemma9_check supports n <= 8");
    if (i < 1 || i > p.size() - 1)
        throw std::out_of_range("lemma9_check: index out of range");
    const std::vector<int> pos = positions_of(p);
    const int pi = pos[static_cast<std::size_t>(i)];
    const int pj = pos[static_cast<std::size_t>(i + 1)];
    if (pj >= pi)
        throw std::invalid_argument("lemma9_check: i+1 must precede i");

    Lemma9Report report;
    report.input = p;
    report.index = i;
    report.fertility_before = static_cast<int128>(preimages_brute(p, 8).size());
    report.fertility_after = static_cast<int128>(preimages_brute(t_left(p, i), 8).size());
    for (int k = pj + 1; k < pi && !report.has_witness; ++k)
        if (p.at(k) > i + 1)
            report.has_witness = true;
    report.holds = report.fertility_before <= report.fertility_after &&
                   (!report.has_witness || report.fertility_before == report.fertility_after);
    return report;
}

} // namespace stacksort
