#include "stacksort/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "stacksort/sorting.hpp"

namespace stacksort {

std::uint64_t substream_state(std::uint64_t seed, std::uint64_t sample_index)
{
    // The (k+1)-th output of SplitMix64 seeded with `seed`: jump the state
    // forward k steps, then emit one value.
    SplitMix64 root(seed + sample_index * 0x9E3779B97F4A7C15ULL);
    return root.next();
}

void sample_permutation_vec(int n, SplitMix64& rng, std::vector<int>& out)
{
    out.resize(static_cast<std::size_t>(n));
    std::iota(out.begin(), out.end(), 1);
    for (int i = n - 1; i >= 1; --i) {
        const std::uint64_t j = rng.bounded(static_cast<std::uint64_t>(i) + 1);
        std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(j)]);
    }
}

Permutation sample_permutation(int n, SplitMix64& rng)
{
    if (n < 1)
        throw std::invalid_argument("sample_permutation: n must be positive");
    std::vector<int> v;
    sample_permutation_vec(n, rng, v);
    return Permutation(std::move(v));
}

Statistic statistic_from_name(const std::string& name)
{
    if (name == "sd")
        return Statistic::sd;
    if (name == "sdprime")
        return Statistic::sd_prime;
    if (name == "pop")
        return Statistic::pop_depth;
    if (name == "revstack")
        return Statistic::revstack_depth;
    if (name == "maxblock")
        return Statistic::max_block;
    throw std::invalid_argument("unknown statistic: " + name);
}

std::string statistic_name(Statistic stat)
{
    switch (stat) {
    case Statistic::sd: return "sd";
    case Statistic::sd_prime: return "sdprime";
    case Statistic::pop_depth: return "pop";
    case Statistic::revstack_depth: return "revstack";
    case Statistic::max_block: return "maxblock";
    }
    throw std::invalid_argument("unknown statistic");
}

namespace {

int evaluate_statistic(Statistic stat, const std::vector<int>& v)
{
    switch (stat) {
    case Statistic::sd: return detail::sd_vec(v);
    case Statistic::sd_prime: return detail::sd_prime_vec(v);
    case Statistic::pop_depth: return detail::pop_depth_vec(v);
    case Statistic::revstack_depth: return detail::revstack_depth_vec(v);
    case Statistic::max_block: {
        // Largest gap between consecutive right-to-left maxima positions;
        // the leftmost maximum closes the first block.
        int best = 0;
        int prev = -1;
        int running = 0;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
            if (v[static_cast<std::size_t>(i)] > running) {
                running = v[static_cast<std::size_t>(i)];
                if (prev >= 0)
                    best = std::max(best, prev - i);
                prev = i;
            }
        }
        return std::max(best, prev + 1);
    }
    }
    throw std::invalid_argument("unknown statistic");
}

double pairwise_sum_span(const double* data, std::size_t count)
{
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i)
            s += data[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum_span(data, half) + pairwise_sum_span(data + half, count - half);
}

} // namespace

double pairwise_sum(const std::vector<double>& values)
{
    return pairwise_sum_span(values.data(), values.size());
}

EstimateReport estimate(Statistic stat, int n, int samples, std::uint64_t seed, int workers)
{
    if (n < 1)
        throw std::invalid_argument("estimate: n must be positive");
    if (samples < 2)
        throw std::invalid_argument("estimate: need at least 2 samples");
    workers = std::max(1, workers);
    workers = std::min(workers, samples);

    const auto start = std::chrono::steady_clock::now();
    std::vector<double> values(static_cast<std::size_t>(samples));

    auto run_range = [&](int lo, int hi) {
        std::vector<int> perm;
        for (int k = lo; k < hi; ++k) {
            SplitMix64 rng(substream_state(seed, static_cast<std::uint64_t>(k)));
            sample_permutation_vec(n, rng, perm);
            values[static_cast<std::size_t>(k)] =
                static_cast<double>(evaluate_statistic(stat, perm)) / static_cast<double>(n);
        }
    };

    if (workers == 1) {
        run_range(0, samples);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const int lo = static_cast<int>(static_cast<long long>(samples) * w / workers);
            const int hi = static_cast<int>(static_cast<long long>(samples) * (w + 1) / workers);
            threads.emplace_back(run_range, lo, hi);
        }
        for (auto& t : threads)
            t.join();
    }

    const double mean = pairwise_sum(values) / samples;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - mean;
        sq[i] = d * d;
    }
    const double variance = pairwise_sum(sq) / (samples - 1);
    const double stddev = std::sqrt(variance);
    const double std_err = stddev / std::sqrt(static_cast<double>(samples));

    EstimateReport report;
    report.statistic = statistic_name(stat);
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.mean = mean;
    report.stddev = stddev;
    report.std_err = std_err;
    report.ci_lo = mean - 1.96 * std_err;
    report.ci_hi = mean + 1.96 * std_err;
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

EstimateReport alpha_ratio(int n, int samples, std::uint64_t seed, int workers)
{
    return estimate(Statistic::max_block, n, samples, seed, workers);
}

} // namespace stacksort
