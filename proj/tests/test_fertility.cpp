#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "stacksort/enumeration.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/montecarlo.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/sorting.hpp"

using namespace stacksort;

namespace {

// Independent route for the Decomposition Lemma: the hook sum at a given
// tail-bound descent, assembled from the public pieces.
int128 hook_sum_at(const Permutation& p, int d, FertilityCache& cache)
{
    int128 total = 0;
    for (const Hook& h : hooks_from(p, d)) {
        const auto [unsheltered, sheltered] = split_by_hook(p, h);
        total = checked_add(total,
                            checked_mul(fertility(unsheltered, cache),
                                        fertility(sheltered, cache)));
    }
    return total;
}

} // namespace

TEST_CASE("preimages of small targets, frozen from the exhaustive oracle")
{
    // All of S_3 maps onto 123 except 231 (which maps to 213).
    const auto pre123 = preimages_brute(Permutation::parse("123"));
    std::vector<Permutation> expected = {
        Permutation::parse("123"), Permutation::parse("132"), Permutation::parse("213"),
        Permutation::parse("312"), Permutation::parse("321")};
    CHECK(pre123 == expected);
    CHECK(pre123.size() == 5); // C_3

    CHECK(preimages_brute(Permutation::parse("132")).empty());
    CHECK(preimages_brute(Permutation::parse("213")) ==
          std::vector<Permutation>{Permutation::parse("231")});
}

TEST_CASE("preimages_brute guards and preconditions")
{
    CHECK_THROWS_AS(preimages_brute(Permutation::identity(11)), ResourceGuardError);
    CHECK_THROWS_AS(preimages_brute(Permutation::parse("4 1 6 2")), std::invalid_argument);
}

TEST_CASE("fertility on named inputs")
{
    FertilityCache cache;
    CHECK(fertility(Permutation::parse("31425"), cache) == 1);
    CHECK(fertility(Permutation::parse("34125"), cache) == 4);
    CHECK(fertility(Permutation::identity(4), cache) == 14); // C_4
    CHECK(fertility(Permutation::parse("21"), cache) == 0);
    CHECK(fertility(Permutation{}, cache) == 1);
    // Relative order is all that matters.
    CHECK(fertility(Permutation::parse("4682"), cache) ==
          fertility(Permutation::parse("2341"), cache));
}

TEST_CASE("fertility equals the brute preimage count")
{
    FertilityCache cache;
    for (int n = 0; n <= 6; ++n)
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            const Permutation p(v);
            CHECK(fertility(p, cache) ==
                  static_cast<int128>(preimages_brute(p).size()));
        });
    // Spot checks at n = 8 and 9.
    SplitMix64 rng(31);
    for (int k = 0; k < 12; ++k) {
        const Permutation p = sample_permutation(8, rng);
        CHECK(fertility(p, cache) == static_cast<int128>(preimages_brute(p).size()));
    }
    for (int k = 0; k < 4; ++k) {
        const Permutation p = sample_permutation(9, rng);
        CHECK(fertility(p, cache) ==
              static_cast<int128>(preimages_brute(p, 10, 2).size()));
    }
}

TEST_CASE("fertilities over S_n sum to n!")
{
    FertilityCache cache;
    for (int n = 1; n <= 6; ++n) {
        int128 total = 0;
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            total = checked_add(total, fertility(Permutation(v), cache));
        });
        CHECK(total == static_cast<int128>(factorial_u64(n)));
    }
}

TEST_CASE("every tail-bound descent gives the same hook sum")
{
    FertilityCache cache;
    for (int n = 1; n <= 6; ++n)
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            const Permutation p(v);
            if (p.is_increasing())
                return;
            const int128 value = fertility(p, cache);
            for (int d : tail_bound_descents(p))
                CHECK(hook_sum_at(p, d, cache) == value);
        });
}

TEST_CASE("fertility monotonicity under s, small scale")
{
    FertilityCache cache;
    for (int n = 1; n <= 6; ++n)
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            const Permutation p(v);
            const int128 before = fertility(p, cache);
            const int128 after = fertility(stack_sort(p), cache);
            CHECK(before <= after);
            CHECK((before == after) == p.is_increasing());
        });
}

TEST_CASE("count_t_sortable")
{
    for (int n = 1; n <= 7; ++n)
        CHECK(count_t_sortable(n, 1).value == catalan128(n));
    CHECK(count_t_sortable(4, 2).value == 22);
    for (int n = 2; n <= 6; ++n)
        CHECK(count_t_sortable(n, n - 2).value ==
              static_cast<int128>(factorial_u64(n)) -
                  static_cast<int128>(factorial_u64(n - 2)));
    CHECK_THROWS_AS(count_t_sortable(11, 1), ResourceGuardError);
}

TEST_CASE("exact depth averages")
{
    CHECK(exact_depth_average(1, false) == Rational(0, 1));
    CHECK(exact_depth_average(2, false) == Rational(1, 2));
    CHECK(exact_depth_average(0, false) == Rational(0, 1));
    // D'_{n+1} <= D'_n + 1.
    Rational prev = exact_depth_average(1, true);
    for (int n = 2; n <= 6; ++n) {
        const Rational cur = exact_depth_average(n, true);
        CHECK(cur <= prev + Rational(1, 1));
        // D'_n >= D_n.
        CHECK(exact_depth_average(n, false) <= cur);
        prev = cur;
    }
    CHECK_THROWS_AS(exact_depth_average(11, false), ResourceGuardError);
}

TEST_CASE("worker counts do not change exhaustive results")
{
    CHECK(count_t_sortable(7, 3, 1).value == count_t_sortable(7, 3, 4).value);
    CHECK(exact_depth_average(7, true, 1) == exact_depth_average(7, true, 3));
    CHECK(preimages_brute(Permutation::identity(6), 10, 1) ==
          preimages_brute(Permutation::identity(6), 10, 4));
}

TEST_CASE("identity fertility is Catalan and overflows loudly far out")
{
    FertilityCache cache;
    CHECK(fertility(Permutation::identity(10), cache) == catalan128(10));
    CHECK(catalan128(10) == 16796);
    CHECK_THROWS_AS(catalan128(80), CountOverflowError);
    CHECK_THROWS_AS(fertility(Permutation::identity(80), cache), CountOverflowError);
}

TEST_CASE("encode_key guards")
{
    CHECK_THROWS_AS(encode_key(Permutation::parse("4 1 6 2")), std::invalid_argument);
    CHECK(encode_key(Permutation::identity(3)).size() == 3);
    std::vector<int> big(300);
    for (int i = 0; i < 300; ++i)
        big[static_cast<std::size_t>(i)] = i + 1;
    CHECK_THROWS_AS(encode_key(Permutation(big)), ResourceGuardError);
}

TEST_CASE("cache save and load round-trip")
{
    const std::string path = "fertility_cache_test.bin";
    {
        FertilityCache cache;
        fertility(Permutation::parse("34125"), cache);
        fertility(Permutation::parse("426315789"), cache);
        CHECK(cache.size() > 0);
        cache.save(path);
    }
    FertilityCache reloaded;
    reloaded.load(path);
    CHECK(reloaded.size() > 0);
    // Cached values short-circuit recomputation and must agree.
    CHECK(fertility(Permutation::parse("34125"), reloaded) == 4);
    CHECK(reloaded.lookup(encode_key(Permutation::parse("34125"))).has_value());
    std::filesystem::remove(path);

    FertilityCache missing;
    CHECK_THROWS_AS(missing.load("no_such_cache_file.bin"), std::runtime_error);
}
