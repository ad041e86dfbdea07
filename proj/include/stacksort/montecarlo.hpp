#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

// SplitMix64: state advances by the golden-ratio constant and is scrambled
// by the standard finalizer. Every published estimate records the seed and
// this generator name so runs are replayable elsewhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next()
    {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t bounded(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold)
                return x % bound;
        }
    }
};

// Sample k draws its own stream: the initial state is the (k+1)-th output
// of SplitMix64 seeded with `seed`. Worker count therefore never affects
// results.
std::uint64_t substream_state(std::uint64_t seed, std::uint64_t sample_index);

// Uniform over S_n by an unbiased Fisher-Yates shuffle.
Permutation sample_permutation(int n, SplitMix64& rng);
void sample_permutation_vec(int n, SplitMix64& rng, std::vector<int>& out);

enum class Statistic { sd, sd_prime, pop_depth, revstack_depth, max_block };

Statistic statistic_from_name(const std::string& name); // sd|sdprime|pop|revstack|maxblock
std::string statistic_name(Statistic stat);

struct EstimateReport {
    std::string statistic;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string generator = "splitmix64";
    double mean = 0.0;   // of statistic/n
    double stddev = 0.0; // sample standard deviation
    double std_err = 0.0;
    double ci_lo = 0.0; // mean +/- 1.96 stderr
    double ci_hi = 0.0;
    double wall_time_s = 0.0;
};

// Mean/stddev of statistic/n over independent uniform samples. Bit-identical
// for any worker count at a fixed seed (per-sample substreams plus an
// index-ordered pairwise reduction).
EstimateReport estimate(Statistic stat, int n, int samples, std::uint64_t seed,
                        int workers = 1);

// Mean of (largest block of B_1)/n, the longest-Foata-cycle ratio.
EstimateReport alpha_ratio(int n, int samples, std::uint64_t seed, int workers = 1);

// Deterministic index-ordered pairwise summation.
double pairwise_sum(const std::vector<double>& values);

} // namespace stacksort
