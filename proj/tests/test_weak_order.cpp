#include <doctest.h>

#include <stdexcept>

#include "stacksort/enumeration.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/sorting.hpp"
#include "stacksort/weak_order.hpp"

using namespace stacksort;

TEST_CASE("generator moves")
{
    CHECK(t_left(Permutation::parse("231"), 1) == Permutation::parse("132"));
    CHECK(t_left(Permutation::parse("312"), 2) == Permutation::parse("213"));
    CHECK(t_right(Permutation::parse("34125"), 2) == Permutation::parse("31425"));
    CHECK(t_right(Permutation::identity(5), 3) == Permutation::identity(5));
    CHECK(t_left(Permutation::parse("123"), 1) == Permutation::parse("123"));
    CHECK_THROWS_AS(t_right(Permutation::parse("21"), 2), std::out_of_range);
    CHECK_THROWS_AS(t_left(Permutation::parse("21"), 0), std::out_of_range);
    CHECK_THROWS_AS(t_right(Permutation::parse("4 1 6 2"), 1), std::invalid_argument);
}

TEST_CASE("moving generators are undone by the opposite direction")
{
    for_each_permutation_range(5, 0, factorial_u64(5), [&](const std::vector<int>& v) {
        const Permutation p(v);
        for (int i = 1; i <= 4; ++i) {
            const Permutation down = t_right(p, i);
            if (down != p) {
                // Swapping back is again an adjacent transposition of the
                // same positions; redoing t_right on the ascent fixes it.
                CHECK(t_right(down, i) == down);
                std::vector<int> restored = down.entries();
                std::swap(restored[static_cast<std::size_t>(i - 1)],
                          restored[static_cast<std::size_t>(i)]);
                CHECK(Permutation(restored) == p);
            }
            const Permutation moved = t_left(p, i);
            if (moved != p)
                CHECK(t_left(moved, i) == moved);
        }
    });
}

TEST_CASE("order relations on the named pairs")
{
    CHECK(leq_right(Permutation::parse("31425"), Permutation::parse("34125")));
    CHECK_FALSE(leq_left(Permutation::parse("213"), Permutation::parse("231")));
    const Permutation p = Permutation::parse("42135");
    CHECK(leq_right(p, p));
    CHECK(leq_left(p, p));
}

TEST_CASE("fast order tests agree with BFS reachability")
{
    for (int n = 1; n <= 5; ++n) {
        std::vector<Permutation> all;
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            all.push_back(Permutation(v));
        });
        for (const auto& a : all)
            for (const auto& b : all) {
                CHECK(leq_right(a, b) == leq_right_bfs(a, b));
                CHECK(leq_left(a, b) == leq_left_bfs(a, b));
            }
    }
}

TEST_CASE("BFS guard")
{
    CHECK_THROWS_AS(leq_right_bfs(Permutation::identity(9), Permutation::identity(9)),
                    ResourceGuardError);
}

TEST_CASE("s(p) sits below p in the right weak order")
{
    for (int n = 1; n <= 6; ++n)
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            const Permutation p(v);
            CHECK(leq_right(stack_sort(p), p));
        });
}

TEST_CASE("fertility is antitone on left-weak covers but not right-weak ones")
{
    FertilityCache cache;
    for (int n = 2; n <= 5; ++n)
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            const Permutation p(v);
            const int128 fp = fertility(p, cache);
            for (int i = 1; i <= n - 1; ++i) {
                const Permutation q = t_left(p, i);
                if (q != p)
                    CHECK(fertility(q, cache) >= fp);
            }
        });

    // The right-order analogue fails at this specific comparable pair.
    const Permutation lo = Permutation::parse("31425");
    const Permutation hi = Permutation::parse("34125");
    CHECK(leq_right(lo, hi));
    CHECK(fertility(lo, cache) == 1);
    CHECK(fertility(hi, cache) == 4);
}

TEST_CASE("lemma9_check")
{
    const Lemma9Report equal_case = lemma9_check(Permutation::parse("231"), 1);
    CHECK(equal_case.has_witness);
    CHECK(equal_case.fertility_before == 0);
    CHECK(equal_case.fertility_after == 0);
    CHECK(equal_case.holds);

    const Lemma9Report no_witness = lemma9_check(Permutation::parse("21"), 1);
    CHECK_FALSE(no_witness.has_witness);
    CHECK(no_witness.fertility_before == 0);
    CHECK(no_witness.fertility_after == 2); // |s^{-1}(12)| = C_2
    CHECK(no_witness.holds);

    CHECK_THROWS_AS(lemma9_check(Permutation::parse("12"), 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma9_check(Permutation::parse("21"), 5), std::out_of_range);

    for (int n = 2; n <= 5; ++n)
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            const Permutation p(v);
            for (int i = 1; i <= n - 1; ++i)
                if (t_left(p, i) != p)
                    CHECK(lemma9_check(p, i).holds);
        });
}
