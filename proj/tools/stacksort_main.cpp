#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stacksort/analytic.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/montecarlo.hpp"
#include "stacksort/partition_dynamics.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/report.hpp"
#include "stacksort/sorting.hpp"
#include "stacksort/verify.hpp"
#include "stacksort/weak_order.hpp"

#include <json.hpp>

namespace {

using namespace stacksort;
using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20250407ULL;

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource-guard violation (including count overflow).
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kGuard = 3 };

struct Config {
    std::uint64_t seed = kDefaultSeed;
    bool seed_set = false;
    int workers = 0;
    bool workers_set = false;
    int preimage_guard = 10;
};

Config load_config(const std::string& path)
{
    Config cfg;
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
            return s;
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "seed") {
            cfg.seed = std::stoull(value);
            cfg.seed_set = true;
        } else if (key == "workers") {
            cfg.workers = std::stoi(value);
            cfg.workers_set = true;
        } else if (key == "preimage_guard") {
            cfg.preimage_guard = std::stoi(value);
        }
        // unknown keys are ignored
    }
    return cfg;
}

std::string join_args(const std::vector<std::string>& parts)
{
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            joined += ' ';
        joined += parts[i];
    }
    return joined;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"stacksort: exact and statistical analysis of stack-sorting maps"};
    app.require_subcommand(1);

    std::string format_name = "table";
    std::uint64_t seed = kDefaultSeed;
    int workers = 0;
    std::string config_path;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed");
    auto* workers_opt = app.add_option("--workers", workers, "worker threads (0 = auto)");
    app.add_option("--config", config_path, "key=value config file");

    // sort
    auto* sort_cmd = app.add_subcommand("sort", "apply a sorting map");
    std::string sort_map = "s";
    int sort_iterations = 1;
    std::vector<std::string> sort_perm;
    sort_cmd->add_option("--map", sort_map)->check(CLI::IsMember({"s", "revstack", "pop"}));
    sort_cmd->add_option("--iterations", sort_iterations)->check(CLI::NonNegativeNumber);
    sort_cmd->add_option("perm", sort_perm, "permutation entries");

    // depth
    auto* depth_cmd = app.add_subcommand("depth", "iterations needed to sort");
    std::string depth_map = "s";
    bool depth_prime = false;
    std::vector<std::string> depth_perm;
    depth_cmd->add_option("--map", depth_map)->check(CLI::IsMember({"s", "revstack", "pop"}));
    depth_cmd->add_flag("--prime", depth_prime, "compute sd' instead of sd");
    depth_cmd->add_option("perm", depth_perm, "permutation entries");

    // fertility
    auto* fert_cmd = app.add_subcommand("fertility", "number of stack-sorting preimages");
    std::string fert_cache_path;
    std::vector<std::string> fert_perm;
    fert_cmd->add_option("--cache", fert_cache_path, "binary sidecar cache file");
    fert_cmd->add_option("perm", fert_perm, "permutation entries");

    // preimages
    auto* pre_cmd = app.add_subcommand("preimages", "list stack-sorting preimages");
    std::vector<std::string> pre_perm;
    pre_cmd->add_option("perm", pre_perm, "permutation entries");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exact tables");
    std::string enum_what;
    int enum_n = 0;
    int enum_t = -1;
    enum_cmd->add_option("--what", enum_what)->required()->check(
        CLI::IsMember({"wt", "dn", "dnprime"}));
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--t", enum_t);

    // dynamics
    auto* dyn_cmd = app.add_subcommand("dynamics", "ordered-set-partition trace");
    std::vector<std::string> dyn_perm;
    dyn_cmd->add_option("perm", dyn_perm, "permutation entries");

    // order
    auto* order_cmd = app.add_subcommand("order", "weak order comparison");
    std::string order_kind;
    std::string order_lhs, order_rhs;
    order_cmd->add_option("--kind", order_kind)->required()->check(
        CLI::IsMember({"left", "right"}));
    order_cmd->add_option("perm1", order_lhs, "candidate smaller permutation")->required();
    order_cmd->add_option("perm2", order_rhs, "candidate larger permutation")->required();

    // ballot
    auto* ballot_cmd = app.add_subcommand("ballot", "quarantine probability");
    int ballot_n = 0, ballot_iprev = 0, ballot_im = 0;
    ballot_cmd->add_option("--n", ballot_n)->required();
    ballot_cmd->add_option("--iprev", ballot_iprev)->required();
    ballot_cmd->add_option("--im", ballot_im)->required();

    // estimate
    auto* est_cmd = app.add_subcommand("estimate", "Monte Carlo depth statistics");
    std::string est_stat;
    int est_n = 0, est_samples = 0;
    bool est_timing = false;
    est_cmd->add_option("--stat", est_stat)->required()->check(
        CLI::IsMember({"sd", "sdprime", "pop", "revstack", "maxblock"}));
    est_cmd->add_option("--n", est_n)->required();
    est_cmd->add_option("--samples", est_samples)->required();
    est_cmd->add_flag("--timing", est_timing, "include wall_time_s in the output");

    // bounds
    app.add_subcommand("bounds", "numeric constants table");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run registered property sweeps");
    std::string verify_property;
    int verify_max_n = 0;
    bool verify_list = false;
    verify_cmd->add_option("--property", verify_property, "property id or 'all'");
    verify_cmd->add_option("--max-n", verify_max_n);
    verify_cmd->add_flag("--list", verify_list, "list registered properties");

    // Global options (--format, --seed, --workers, --config) may appear
    // after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Config cfg;
        if (!config_path.empty())
            cfg = load_config(config_path);
        if (seed_opt->count() == 0 && cfg.seed_set)
            seed = cfg.seed;
        if (workers_opt->count() == 0 && cfg.workers_set)
            workers = cfg.workers;
        const int effective_workers = resolve_workers(workers);
        const Format format = format_from_name(format_name);

        if (app.got_subcommand(sort_cmd)) {
            const Permutation input = Permutation::parse(join_args(sort_perm));
            const MapKind kind = map_kind_from_name(sort_map);
            Permutation result = input;
            for (int i = 0; i < sort_iterations; ++i)
                result = apply_map(kind, result);
            if (format == Format::json) {
                ordered_json j;
                j["input"] = input.str();
                j["map"] = sort_map;
                j["iterations"] = sort_iterations;
                j["result"] = result.str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << result.str() << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(depth_cmd)) {
            const Permutation input = Permutation::parse(join_args(depth_perm));
            const MapKind kind = map_kind_from_name(depth_map);
            if (depth_prime && kind != MapKind::stack)
                throw std::invalid_argument("--prime applies to the map s only");
            const int depth = depth_prime ? sd_prime(input) : depth_under(kind, input);
            if (format == Format::json) {
                ordered_json j;
                j["input"] = input.str();
                j["map"] = depth_map;
                j["prime"] = depth_prime;
                j["depth"] = depth;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << depth << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(fert_cmd)) {
            const Permutation input = Permutation::parse(join_args(fert_perm));
            FertilityCache cache;
            if (!fert_cache_path.empty() && std::filesystem::exists(fert_cache_path))
                cache.load(fert_cache_path);
            const int128 result = fertility(input, cache);
            if (!fert_cache_path.empty())
                cache.save(fert_cache_path);
            if (format == Format::json) {
                ordered_json j;
                j["input"] = input.str();
                j["fertility"] = count_to_string(result);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << count_to_string(result) << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(pre_cmd)) {
            const Permutation input = normalize(Permutation::parse(join_args(pre_perm)));
            const auto preimages = preimages_brute(input, cfg.preimage_guard, effective_workers);
            if (format == Format::json) {
                ordered_json arr = ordered_json::array();
                for (const auto& p : preimages)
                    arr.push_back(p.str());
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& p : preimages)
                    std::cout << p.str() << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(enum_cmd)) {
            if (enum_what == "wt") {
                std::vector<CountRow> rows;
                const auto hist = depth_histogram(enum_n, MapKind::stack, effective_workers);
                auto prefix = [&](int t) {
                    int128 total = 0;
                    for (int d = 0; d < static_cast<int>(hist.size()) && d <= t; ++d)
                        total = checked_add(total, hist[static_cast<std::size_t>(d)]);
                    return total;
                };
                if (enum_t >= 0) {
                    rows.push_back(CountRow{enum_n, enum_t, prefix(enum_t)});
                } else {
                    for (int t = 0; t <= std::max(0, enum_n - 1); ++t)
                        rows.push_back(CountRow{enum_n, t, prefix(t)});
                }
                std::cout << emit(rows, format == Format::table ? Format::csv : format);
                if (format == Format::json)
                    std::cout << "\n";
            } else {
                std::vector<AverageRow> rows;
                for (int n = 1; n <= enum_n; ++n)
                    rows.push_back(AverageRow{
                        n, exact_depth_average(n, enum_what == "dnprime", effective_workers)});
                std::cout << emit(rows, format == Format::table ? Format::csv : format);
                if (format == Format::json)
                    std::cout << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(dyn_cmd)) {
            const Permutation input = Permutation::parse(join_args(dyn_perm));
            std::cout << emit(run_dynamics(input), format) << "\n";
            return kOk;
        }

        if (app.got_subcommand(order_cmd)) {
            const Permutation lhs = Permutation::parse(order_lhs);
            const Permutation rhs = Permutation::parse(order_rhs);
            const bool result =
                order_kind == "left" ? leq_left(lhs, rhs) : leq_right(lhs, rhs);
            if (format == Format::json) {
                ordered_json j;
                j["kind"] = order_kind;
                j["perm1"] = lhs.str();
                j["perm2"] = rhs.str();
                j["leq"] = result;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (result ? "true" : "false") << "\n";
            }
            return kOk;
        }

        if (app.got_subcommand(ballot_cmd)) {
            const Rational exact = ballot_probability(ballot_n, ballot_iprev, ballot_im);
            const Rational bound = ballot_lower_bound(ballot_n, ballot_iprev, ballot_im);
            if (format == Format::json) {
                ordered_json j;
                j["n"] = ballot_n;
                j["i_prev"] = ballot_iprev;
                j["i_m"] = ballot_im;
                j["exact"] = exact.str();
                j["exact_decimal"] = exact.to_double();
                j["lower_bound"] = bound.str();
                j["lower_bound_decimal"] = bound.to_double();
                std::cout << j.dump() << "\n";
            } else if (format == Format::csv) {
                std::cout << "n,i_prev,i_m,exact,lower_bound\n"
                          << ballot_n << ',' << ballot_iprev << ',' << ballot_im << ','
                          << exact.str() << ',' << bound.str() << "\n";
            } else {
                std::cout << "exact=" << exact.str() << " (" << exact.to_double() << ")"
                          << " lower_bound=" << bound.str() << " (" << bound.to_double()
                          << ")\n";
            }
            return kOk;
        }

        if (app.got_subcommand(est_cmd)) {
            const EstimateReport report = estimate(statistic_from_name(est_stat), est_n,
                                                   est_samples, seed, effective_workers);
            std::cout << emit(report, format, est_timing);
            if (format == Format::json)
                std::cout << "\n";
            return kOk;
        }

        if (app.got_subcommand("bounds")) {
            std::cout << emit(compute_bounds_table(), format);
            if (format == Format::json)
                std::cout << "\n";
            return kOk;
        }

        if (app.got_subcommand(verify_cmd)) {
            if (verify_list) {
                for (const auto& info : registered_properties())
                    std::cout << info.id << "  (default n<=" << info.default_max_n << ")  "
                              << info.description << "\n";
                return kOk;
            }
            if (verify_property.empty())
                throw std::invalid_argument("verify: --property or --list is required");
            std::vector<std::string> ids;
            if (verify_property == "all") {
                for (const auto& info : registered_properties())
                    ids.push_back(info.id);
            } else {
                ids.push_back(verify_property);
            }
            bool all_passed = true;
            for (const auto& id : ids) {
                const VerifyResult result = run_verify(id, verify_max_n, effective_workers);
                std::cout << emit(result, format);
                if (format == Format::json)
                    std::cout << "\n";
                all_passed = all_passed && result.passed;
            }
            return all_passed ? kOk : kVerifyFailed;
        }

        return kUsage;
    } catch (const ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const CountOverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
