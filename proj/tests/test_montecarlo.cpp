#include <doctest.h>

#include <cmath>
#include <map>

#include "stacksort/enumeration.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/montecarlo.hpp"
#include "stacksort/partition_dynamics.hpp"
#include "stacksort/report.hpp"
#include "stacksort/sorting.hpp"

using namespace stacksort;

TEST_CASE("sampling determinism")
{
    SplitMix64 a(7);
    SplitMix64 b(7);
    for (int k = 0; k < 20; ++k)
        CHECK(sample_permutation(12, a) == sample_permutation(12, b));
    SplitMix64 c(8);
    bool all_equal = true;
    SplitMix64 a2(7);
    for (int k = 0; k < 20; ++k)
        all_equal = all_equal && (sample_permutation(12, a2) == sample_permutation(12, c));
    CHECK_FALSE(all_equal);
    CHECK(sample_permutation(1, a) == Permutation({1}));
}

TEST_CASE("uniformity over S_4 passes a chi-square test")
{
    SplitMix64 rng(20240101);
    std::map<std::vector<int>, int> counts;
    const int samples = 100000;
    std::vector<int> v;
    for (int k = 0; k < samples; ++k) {
        sample_permutation_vec(4, rng, v);
        ++counts[v];
    }
    CHECK(counts.size() == 24);
    const double expected = samples / 24.0;
    double chi2 = 0.0;
    for (const auto& [perm, observed] : counts) {
        const double d = observed - expected;
        chi2 += d * d / expected;
    }
    // df = 23, significance 0.001.
    CHECK(chi2 < 49.728);
}

TEST_CASE("estimate is reproducible and worker-independent")
{
    const EstimateReport one = estimate(Statistic::sd_prime, 60, 128, 99, 1);
    const EstimateReport four = estimate(Statistic::sd_prime, 60, 128, 99, 4);
    CHECK(one.mean == four.mean);       // bitwise
    CHECK(one.stddev == four.stddev);   // bitwise
    CHECK(one.std_err == four.std_err); // bitwise
    CHECK(emit(one, Format::json) == emit(four, Format::json));

    const EstimateReport again = estimate(Statistic::sd_prime, 60, 128, 99, 2);
    CHECK(again.mean == one.mean);
    CHECK_THROWS_AS(estimate(Statistic::sd, 5, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("estimate agrees with the exact average at n = 5")
{
    const Rational exact = exact_depth_average(5, false);
    const EstimateReport report = estimate(Statistic::sd, 5, 4000, 1234, 2);
    const double expected = exact.to_double() / 5.0;
    CHECK(std::abs(report.mean - expected) <= 4.0 * report.std_err);
}

TEST_CASE("sd_prime dominates sd pointwise")
{
    SplitMix64 rng(51);
    std::vector<int> v;
    for (int k = 0; k < 100; ++k) {
        sample_permutation_vec(200, rng, v);
        CHECK(detail::sd_prime_vec(v) >= detail::sd_vec(v));
    }
}

TEST_CASE("paired estimates preserve the pointwise dominations")
{
    // Same seed means the same sampled permutations for every statistic,
    // so the mean inequalities hold sample by sample.
    const EstimateReport sdp = estimate(Statistic::sd_prime, 200, 200, 500, 2);
    const EstimateReport sdr = estimate(Statistic::sd, 200, 200, 500, 2);
    CHECK(sdp.mean >= sdr.mean);

    const EstimateReport blocks = estimate(Statistic::max_block, 200, 200, 500, 2);
    CHECK(sdp.mean >= blocks.mean - 3.0 * (sdp.std_err + blocks.std_err));
}

TEST_CASE("n = 1 degenerate statistics")
{
    const EstimateReport sd1 = estimate(Statistic::sd, 1, 8, 3, 1);
    CHECK(sd1.mean == 0.0);
    const EstimateReport mb1 = estimate(Statistic::max_block, 1, 8, 3, 1);
    CHECK(mb1.mean == 1.0);
    const EstimateReport sp1 = estimate(Statistic::sd_prime, 1, 8, 3, 1);
    CHECK(sp1.mean == 1.0);
}

TEST_CASE("exact longest-block ratio is monotonically decreasing")
{
    double prev = 2.0;
    for (int n = 1; n <= 7; ++n) {
        long long total = 0;
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            total += largest_b1_block(Permutation(v));
        });
        const double ratio = static_cast<double>(total) /
                             (static_cast<double>(factorial_u64(n)) * n);
        CHECK(ratio <= prev + 1e-12);
        prev = ratio;
    }
}

TEST_CASE("alpha ratio estimate sits near the Golomb-Dickman constant")
{
    const EstimateReport report = alpha_ratio(400, 400, 77, 4);
    CHECK(report.statistic == "maxblock");
    CHECK(report.mean > 0.60);
    CHECK(report.mean < 0.65);
}

TEST_CASE("statistic names round-trip")
{
    for (Statistic s : {Statistic::sd, Statistic::sd_prime, Statistic::pop_depth,
                        Statistic::revstack_depth, Statistic::max_block})
        CHECK(statistic_from_name(statistic_name(s)) == s);
    CHECK_THROWS_AS(statistic_from_name("nope"), std::invalid_argument);
}

TEST_CASE("pairwise sum is deterministic and accurate")
{
    std::vector<double> values(1000);
    for (int i = 0; i < 1000; ++i)
        values[static_cast<std::size_t>(i)] = 1.0 / (i + 1);
    const double s1 = pairwise_sum(values);
    const double s2 = pairwise_sum(values);
    CHECK(s1 == s2);
    CHECK(std::abs(s1 - 7.4854708605503449) < 1e-9); // harmonic number H_1000
}
