#include "stacksort/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "stacksort/enumeration.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/montecarlo.hpp"
#include "stacksort/partition_dynamics.hpp"
#include "stacksort/sorting.hpp"
#include "stacksort/weak_order.hpp"

namespace stacksort {

namespace {

constexpr std::uint64_t kSweepSeed = 0x5741B5EED0000001ULL;

std::string vec_str(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

void note(std::vector<std::string>& cex, std::string message)
{
    if (cex.size() < 5)
        cex.push_back(std::move(message));
}

std::string key_of(const std::vector<int>& v)
{
    std::string key;
    key.reserve(v.size());
    for (int x : v)
        key.push_back(static_cast<char>(static_cast<unsigned char>(x)));
    return key;
}

// Preimage counts of every element of S_n by one sweep of s over S_n.
std::unordered_map<std::string, long long> brute_fertility_map(int n)
{
    std::unordered_map<std::string, long long> counts;
    std::vector<int> out, stack_buf;
    for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
        detail::stack_sort_pass(v, out, stack_buf);
        ++counts[key_of(out)];
    });
    return counts;
}

bool check_impl_agreement(int max_n, int workers, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 0; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            if (stack_sort(p) != stack_sort_recursive(p)) {
                ok = false;
                note(cex, "disagreement at " + vec_str(v));
            }
        });
    }
    SplitMix64 rng(kSweepSeed);
    std::vector<int> v;
    for (int k = 0; k < 10000 && ok; ++k) {
        sample_permutation_vec(100, rng, v);
        const Permutation p(v);
        if (stack_sort(p) != stack_sort_recursive(p)) {
            ok = false;
            note(cex, "disagreement at random n=100 sample " + std::to_string(k));
        }
    }
    (void)workers;
    return ok;
}

bool check_lemma2(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 0; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            for (int r = 0; r <= n && ok; ++r) {
                const Permutation dp = del_r(p, r);
                for (int t = 0; t <= n && ok; ++t) {
                    if (iterate(dp, t) != del_r(iterate(p, t), r)) {
                        ok = false;
                        note(cex, "p=" + vec_str(v) + " r=" + std::to_string(r) +
                                      " t=" + std::to_string(t));
                    }
                }
            }
        });
    }
    return ok;
}

bool check_lemma3(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            const Permutation s = stack_sort(p);
            std::vector<int> pos_p(static_cast<std::size_t>(n) + 1);
            std::vector<int> pos_s(static_cast<std::size_t>(n) + 1);
            for (int i = 1; i <= n; ++i) {
                pos_p[static_cast<std::size_t>(p.at(i))] = i;
                pos_s[static_cast<std::size_t>(s.at(i))] = i;
            }
            for (int a = 1; a <= n && ok; ++a) {
                for (int b = a + 1; b <= n && ok; ++b) {
                    const bool pattern21 = pos_s[static_cast<std::size_t>(b)] <
                                           pos_s[static_cast<std::size_t>(a)];
                    bool witness = false;
                    if (pos_p[static_cast<std::size_t>(b)] < pos_p[static_cast<std::size_t>(a)])
                        for (int k = pos_p[static_cast<std::size_t>(b)] + 1;
                             k < pos_p[static_cast<std::size_t>(a)] && !witness; ++k)
                            if (p.at(k) > b)
                                witness = true;
                    if (pattern21 != witness) {
                        ok = false;
                        note(cex, "p=" + vec_str(v) + " b=" + std::to_string(b) +
                                      " a=" + std::to_string(a));
                    }
                }
            }
        });
    }
    return ok;
}

bool check_lemma4(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            int amin = 1; // normalized: minimum entry is 1
            int pos_min = 0;
            for (int i = 1; i <= n; ++i)
                if (p.at(i) == amin)
                    pos_min = i;
            std::set<int> expected;
            for (int i = pos_min + 1; i <= n; ++i)
                expected.insert(p.at(i));
            int running = 0;
            for (int i = pos_min - 1; i >= 1; --i)
                if (p.at(i) > running) {
                    running = p.at(i);
                    expected.insert(p.at(i));
                }
            const Permutation s = stack_sort(p);
            std::set<int> actual;
            bool after = false;
            for (int i = 1; i <= n; ++i) {
                if (after)
                    actual.insert(s.at(i));
                if (s.at(i) == amin)
                    after = true;
            }
            if (actual != expected) {
                ok = false;
                note(cex, "p=" + vec_str(v));
            }
        });
    }
    return ok;
}

bool check_lemma5(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            const int r = static_cast<int>(right_to_left_maxima(p).size());
            const int sdp = detail::sd_prime_vec(v);
            for (int m = 1; m <= r - 1 && ok; ++m) {
                const auto bound = lemma5_bound(p, m);
                if (bound && sdp > *bound) {
                    ok = false;
                    note(cex, "p=" + vec_str(v) + " m=" + std::to_string(m) +
                                  " bound=" + std::to_string(*bound) +
                                  " sd'=" + std::to_string(sdp));
                }
            }
        });
    }
    return ok;
}

// Exhaustive count of east/north paths from (1,0) to (a,b) staying weakly
// below y = x, as a fraction of all such paths.
Rational ballot_oracle(int n, int i_prev, int i_m)
{
    const int a = i_m - i_prev;
    const int b = n - i_m;
    std::vector<std::vector<int128>> ways(
        static_cast<std::size_t>(a) + 1, std::vector<int128>(static_cast<std::size_t>(b) + 1, 0));
    ways[1][0] = 1;
    for (int x = 1; x <= a; ++x)
        for (int y = 0; y <= b && y <= x; ++y) {
            if (x == 1 && y == 0)
                continue;
            int128 w = 0;
            if (x > 1 && y <= x - 1)
                w = checked_add(w, ways[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)]);
            if (y > 0)
                w = checked_add(w, ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)]);
            ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = w;
        }
    const int128 good = b <= a ? ways[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] : 0;
    const int128 total = binomial128(a + b - 1, b);
    return Rational(good, total);
}

bool check_lemma6(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n)
        for (int i_prev = 0; i_prev < n && ok; ++i_prev)
            for (int i_m = i_prev + 1; i_m <= n && ok; ++i_m) {
                const Rational exact = ballot_probability(n, i_prev, i_m);
                const Rational oracle = ballot_oracle(n, i_prev, i_m);
                const Rational bound = ballot_lower_bound(n, i_prev, i_m);
                if (!(exact == oracle)) {
                    ok = false;
                    note(cex, "n=" + std::to_string(n) + " i_prev=" + std::to_string(i_prev) +
                                  " i_m=" + std::to_string(i_m) + " exact=" + exact.str() +
                                  " oracle=" + oracle.str());
                } else if (exact < bound) {
                    ok = false;
                    note(cex, "bound violated at n=" + std::to_string(n) +
                                  " i_prev=" + std::to_string(i_prev) +
                                  " i_m=" + std::to_string(i_m));
                }
            }
    return ok;
}

bool check_lemma7(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            // Normalization of p*0 in S_{n+1}: shift entries up, append 1.
            std::vector<int> appended;
            appended.reserve(v.size() + 1);
            for (int x : v)
                appended.push_back(x + 1);
            appended.push_back(1);
            if (detail::sd_prime_vec(v) != detail::sd_vec(appended)) {
                ok = false;
                note(cex, "p=" + vec_str(v));
            }
        });
    }
    return ok;
}

bool check_lemma8(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            const DynamicsTrace trace = run_dynamics(p);
            std::vector<int> tail_union;
            for (int t = 1; t <= n + 1 && ok; ++t) {
                if (t <= trace.halted_at) {
                    const auto& m = trace.maxima_sets[static_cast<std::size_t>(t - 1)];
                    tail_union.insert(tail_union.end(), m.begin(), m.end());
                    std::sort(tail_union.begin(), tail_union.end());
                }
                const Permutation st = iterate(p, t);
                const int split = n - static_cast<int>(tail_union.size());
                std::vector<int> suffix;
                for (int i = split + 1; i <= n; ++i)
                    suffix.push_back(st.at(i));
                if (suffix != tail_union) {
                    ok = false;
                    note(cex, "p=" + vec_str(v) + " t=" + std::to_string(t) + " suffix mismatch");
                    break;
                }
                std::vector<int> prefix;
                for (int i = 1; i <= split; ++i)
                    prefix.push_back(st.at(i));
                std::vector<int> prefix_rtl;
                int running = 0;
                for (int i = static_cast<int>(prefix.size()) - 1; i >= 0; --i)
                    if (prefix[static_cast<std::size_t>(i)] > running) {
                        running = prefix[static_cast<std::size_t>(i)];
                        prefix_rtl.push_back(running);
                    }
                std::sort(prefix_rtl.begin(), prefix_rtl.end());
                const std::vector<int> expected =
                    t + 1 <= trace.halted_at
                        ? trace.maxima_sets[static_cast<std::size_t>(t)]
                        : std::vector<int>{};
                if (prefix_rtl != expected) {
                    ok = false;
                    note(cex, "p=" + vec_str(v) + " t=" + std::to_string(t) +
                                  " prefix maxima mismatch");
                    break;
                }
            }
        });
    }
    return ok;
}

bool check_lemma9(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n) {
        const auto counts = brute_fertility_map(n);
        auto fert = [&](const Permutation& q) -> long long {
            auto it = counts.find(key_of(q.entries()));
            return it == counts.end() ? 0 : it->second;
        };
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            std::vector<int> pos(static_cast<std::size_t>(n) + 1);
            for (int i = 1; i <= n; ++i)
                pos[static_cast<std::size_t>(p.at(i))] = i;
            for (int i = 1; i <= n - 1 && ok; ++i) {
                const int pi = pos[static_cast<std::size_t>(i)];
                const int pj = pos[static_cast<std::size_t>(i + 1)];
                if (pj >= pi)
                    continue;
                const long long before = fert(p);
                const long long after = fert(t_left(p, i));
                bool witness = false;
                for (int k = pj + 1; k < pi && !witness; ++k)
                    if (p.at(k) > i + 1)
                        witness = true;
                if (before > after || (witness && before != after)) {
                    ok = false;
                    note(cex, "p=" + vec_str(v) + " i=" + std::to_string(i));
                }
            }
        });
    }
    return ok;
}

bool check_thm2(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    FertilityCache cache;
    for (int n = 1; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            const int128 before = fertility(p, cache);
            const int128 after = fertility(stack_sort(p), cache);
            const bool identity = p.is_increasing();
            if (before > after || (identity && before != after) ||
                (!identity && before == after)) {
                ok = false;
                note(cex, "p=" + vec_str(v));
            }
        });
    }
    return ok;
}

bool check_thm3_oracle(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    FertilityCache cache;
    for (int n = 0; n <= max_n && ok; ++n) {
        const auto counts = brute_fertility_map(n);
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            auto it = counts.find(key_of(v));
            const long long brute = it == counts.end() ? 0 : it->second;
            if (fertility(p, cache) != static_cast<int128>(brute)) {
                ok = false;
                note(cex, "p=" + vec_str(v) + " brute=" + std::to_string(brute));
            }
        });
    }
    return ok;
}

bool check_thm4(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    FertilityCache cache;
    for (int n = 2; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            const int128 fp = fertility(p, cache);
            for (int i = 1; i <= n - 1 && ok; ++i) {
                const Permutation q = t_left(p, i);
                if (q == p)
                    continue;
                if (fertility(q, cache) < fp) {
                    ok = false;
                    note(cex, "cover p=" + vec_str(v) + " i=" + std::to_string(i));
                }
            }
        });
    }
    // The corresponding right-order statement must stay false: the known
    // counterexample pair is comparable with strictly increasing fertility.
    if (ok && max_n >= 5) {
        const Permutation lo = Permutation::parse("31425");
        const Permutation hi = Permutation::parse("34125");
        if (!leq_right(lo, hi) || !(fertility(lo, cache) == 1) || !(fertility(hi, cache) == 4)) {
            ok = false;
            note(cex, "right-order counterexample pair 31425/34125 not reproduced");
        }
    }
    return ok;
}

bool check_s_below_right(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            const Permutation p(v);
            if (!leq_right(stack_sort(p), p)) {
                ok = false;
                note(cex, "p=" + vec_str(v));
            }
        });
    }
    return ok;
}

bool check_wt_tables(int max_n, int workers, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n) {
        const std::vector<int128> hist = depth_histogram(n, MapKind::stack, workers);
        auto w_of = [&](int t) {
            int128 total = 0;
            for (int d = 0; d < static_cast<int>(hist.size()) && d <= t; ++d)
                total = checked_add(total, hist[static_cast<std::size_t>(d)]);
            return total;
        };
        if (w_of(1) != catalan128(n)) {
            ok = false;
            note(cex, "W_1(" + std::to_string(n) + ") != C_n");
        }
        const int128 w2_num = checked_mul(2, binomial128(3 * n, n));
        const int128 w2_den = static_cast<int128>(n + 1) * (2 * n + 1);
        if (ok && (w2_num % w2_den != 0 || w_of(2) != w2_num / w2_den)) {
            ok = false;
            note(cex, "W_2(" + std::to_string(n) + ") mismatch");
        }
        if (ok && n >= 2 && n <= 8) {
            const int128 expected = static_cast<int128>(factorial_u64(n)) -
                                    static_cast<int128>(factorial_u64(n - 2));
            if (w_of(n - 2) != expected) {
                ok = false;
                note(cex, "W_{n-2}(" + std::to_string(n) + ") mismatch");
            }
        }
        if (ok && w_of(n - 1) != static_cast<int128>(factorial_u64(n))) {
            ok = false;
            note(cex, "W_{n-1}(" + std::to_string(n) + ") != n!");
        }
    }
    return ok;
}

bool check_dn_monotone(int max_n, int workers, std::vector<std::string>& cex)
{
    bool ok = true;
    Rational prev(0, 1);
    for (int n = 1; n <= max_n + 1 && ok; ++n) {
        const Rational cur = exact_depth_average(n, /*prime=*/true, workers);
        if (n > 1 && !(cur <= prev + Rational(1, 1))) {
            ok = false;
            note(cex, "D'_" + std::to_string(n) + " > D'_" + std::to_string(n - 1) + " + 1");
        }
        prev = cur;
    }
    return ok;
}

bool check_dynamics_agreement(int max_n, int, std::vector<std::string>& cex)
{
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n) {
        for_each_permutation_range(n, 0, factorial_u64(n), [&](const std::vector<int>& v) {
            if (!ok)
                return;
            if (run_dynamics(Permutation(v)).halted_at != detail::sd_prime_vec(v)) {
                ok = false;
                note(cex, "p=" + vec_str(v));
            }
        });
    }
    SplitMix64 rng(kSweepSeed ^ 0xD15EA5EULL);
    std::vector<int> v;
    for (int k = 0; k < 1000 && ok; ++k) {
        sample_permutation_vec(100, rng, v);
        const DynamicsTrace trace = run_dynamics(Permutation(v));
        int total = 0;
        for (const auto& m : trace.maxima_sets)
            total += static_cast<int>(m.size());
        if (trace.halted_at != detail::sd_prime_vec(v) || total != 100) {
            ok = false;
            note(cex, "random n=100 sample " + std::to_string(k));
        }
    }
    return ok;
}

struct PropertyEntry {
    PropertyInfo info;
    std::function<bool(int, int, std::vector<std::string>&)> run;
    std::string range_suffix;
};

const std::vector<PropertyEntry>& registry()
{
    static const std::vector<PropertyEntry> entries = {
        {{"impl-agreement", 8, "stack procedure equals recursive decomposition"},
         check_impl_agreement, " plus 10^4 random n=100"},
        {{"lemma2", 6, "s^t(del_r(p)) = del_r(s^t(p)) for all valid r, t"}, check_lemma2, ""},
        {{"lemma3", 6, "21 patterns of s(p) match 231 witnesses in p"}, check_lemma3, ""},
        {{"lemma4", 6, "entries right of the minimum in s(p)"}, check_lemma4, ""},
        {{"lemma5", 7, "quarantine bound dominates sd'"}, check_lemma5, ""},
        {{"lemma6", 12, "ballot probability equals the lattice-path count"}, check_lemma6, ""},
        {{"lemma7", 7, "sd'(p) = sd(p0 normalized)"}, check_lemma7, ""},
        {{"lemma8", 6, "iterate split: sorted maxima suffix, next maxima prefix"},
         check_lemma8, ""},
        {{"lemma9", 6, "fertility rises along applicable t~ moves"}, check_lemma9, ""},
        {{"thm2", 7, "fertility(p) <= fertility(s(p)), equality only at identity"},
         check_thm2, ""},
        {{"thm3-oracle", 7, "decomposition fertility equals brute preimage count"},
         check_thm3_oracle, ""},
        {{"thm4", 6, "fertility antitone on left-weak covers"}, check_thm4, ""},
        {{"s-below-right", 7, "s(p) lies below p in the right weak order"},
         check_s_below_right, ""},
        {{"wt-tables", 9, "W_1 = Catalan, W_2 closed form, W_{n-2} = n! - (n-2)!"},
         check_wt_tables, ""},
        {{"dn-monotone", 7, "D'_{n+1} <= D'_n + 1"}, check_dn_monotone, ""},
        {{"dynamics-agreement", 7, "run_dynamics halting time equals sentinel sd'"},
         check_dynamics_agreement, " plus 10^3 random n=100"},
    };
    return entries;
}

} // namespace

const std::vector<PropertyInfo>& registered_properties()
{
    static const std::vector<PropertyInfo> infos = [] {
        std::vector<PropertyInfo> out;
        for (const auto& e : registry())
            out.push_back(e.info);
        return out;
    }();
    return infos;
}

VerifyResult run_verify(const std::string& property_id, int max_n, int workers)
{
    for (const auto& entry : registry()) {
        if (entry.info.id != property_id)
            continue;
        const int effective = max_n > 0 ? max_n : entry.info.default_max_n;
        VerifyResult result;
        result.property_id = property_id;
        result.n_range = "n<=" + std::to_string(effective) + entry.range_suffix;
        const auto start = std::chrono::steady_clock::now();
        result.passed = entry.run(effective, std::max(1, workers), result.counterexamples);
        result.elapsed_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
    throw std::invalid_argument("unknown property id: " + property_id);
}

} // namespace stacksort
