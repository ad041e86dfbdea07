#include "stacksort/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "stacksort/analytic.hpp"

namespace stacksort {

using json = nlohmann::ordered_json;

Format format_from_name(const std::string& name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    if (name == "table")
        return Format::table;
    throw std::invalid_argument("unknown format: " + name);
}

std::string emit(const EstimateReport& report, Format format, bool include_timing)
{
    if (format == Format::json) {
        json j;
        j["statistic"] = report.statistic;
        j["n"] = report.n;
        j["samples"] = report.samples;
        j["seed"] = report.seed;
        j["generator"] = report.generator;
        j["mean"] = report.mean;
        j["stddev"] = report.stddev;
        j["stderr"] = report.std_err;
        j["ci95"] = {report.ci_lo, report.ci_hi};
        if (include_timing)
            j["wall_time_s"] = report.wall_time_s;
        return j.dump();
    }
    std::ostringstream out;
    out.precision(17);
    if (format == Format::csv) {
        out << "statistic,n,samples,seed,generator,mean,stddev,stderr,ci95_lo,ci95_hi";
        if (include_timing)
            out << ",wall_time_s";
        out << "\n"
            << report.statistic << ',' << report.n << ',' << report.samples << ','
            << report.seed << ',' << report.generator << ',' << report.mean << ','
            << report.stddev << ',' << report.std_err << ',' << report.ci_lo << ','
            << report.ci_hi;
        if (include_timing)
            out << ',' << report.wall_time_s;
        out << "\n";
        return out.str();
    }
    out.precision(6);
    out << std::fixed;
    out << report.statistic << "/n at n=" << report.n << ": mean=" << report.mean
        << " stddev=" << report.stddev << " stderr=" << report.std_err << " ci95=["
        << report.ci_lo << ", " << report.ci_hi << "] samples=" << report.samples
        << " seed=" << report.seed;
    if (include_timing)
        out << " wall=" << report.wall_time_s << "s";
    out << "\n";
    return out.str();
}

std::string emit(const std::vector<CountRow>& rows, Format format)
{
    if (format == Format::json) {
        json arr = json::array();
        for (const auto& row : rows) {
            json j;
            j["n"] = row.n;
            j["t"] = row.t;
            j["value"] = count_to_string(row.value);
            arr.push_back(std::move(j));
        }
        return arr.dump();
    }
    std::ostringstream out;
    if (format == Format::csv)
        out << "n,t,value\n";
    for (const auto& row : rows)
        out << row.n << ',' << row.t << ',' << count_to_string(row.value) << "\n";
    return out.str();
}

std::string emit(const std::vector<AverageRow>& rows, Format format)
{
    if (format == Format::json) {
        json arr = json::array();
        for (const auto& row : rows) {
            json j;
            j["n"] = row.n;
            j["value"] = row.value.str();
            j["decimal"] = row.value.to_double();
            arr.push_back(std::move(j));
        }
        return arr.dump();
    }
    std::ostringstream out;
    if (format == Format::csv)
        out << "n,value\n";
    for (const auto& row : rows)
        out << row.n << ',' << row.value.str() << "\n";
    return out.str();
}

std::string emit(const VerifyResult& result, Format format)
{
    if (format == Format::json) {
        json j;
        j["property"] = result.property_id;
        j["n_range"] = result.n_range;
        j["status"] = result.passed ? "pass" : "fail";
        j["counterexamples"] = result.counterexamples;
        j["elapsed_s"] = result.elapsed_s;
        return j.dump();
    }
    std::ostringstream out;
    if (format == Format::csv) {
        out << "property,n_range,status,elapsed_s\n"
            << result.property_id << ',' << result.n_range << ','
            << (result.passed ? "pass" : "fail") << ',' << result.elapsed_s << "\n";
        return out.str();
    }
    out << (result.passed ? "pass" : "FAIL") << "  " << result.property_id << "  ("
        << result.n_range << ")  " << result.elapsed_s << "s\n";
    for (const auto& cex : result.counterexamples)
        out << "  counterexample: " << cex << "\n";
    return out.str();
}

std::string emit(const DynamicsTrace& trace, Format format)
{
    // The trace is a nested structure; it is always emitted as JSON
    // (positions and entries are 1-based, blocks listed ascending).
    (void)format;
    json j;
    json partitions = json::array();
    for (const auto& part : trace.partitions) {
        json blocks = json::array();
        for (const auto& block : part.blocks())
            blocks.push_back(std::vector<int>(block.rbegin(), block.rend()));
        partitions.push_back(std::move(blocks));
    }
    j["partitions"] = std::move(partitions);
    j["maxima"] = trace.maxima_sets;
    j["sd_prime"] = trace.halted_at;
    return j.dump();
}

BoundsTable compute_bounds_table()
{
    BoundsTable table{};
    const QuadratureResult lambda = golomb_dickman();
    table.lambda_value = lambda.value;
    table.lambda_error = lambda.error_estimate;
    table.a0 = f0_slope();
    table.b0 = f0_intercept();
    table.sum_b_partial = sum_b(60);
    table.closed_constant = depth_upper_bound_constant();
    table.f0_plus_half = f0_intercept() + 0.5;
    return table;
}

std::string emit(const BoundsTable& table, Format format)
{
    if (format == Format::json) {
        json j;
        j["lambda"] = table.lambda_value;
        j["lambda_error_estimate"] = table.lambda_error;
        j["a0"] = table.a0;
        j["b0"] = table.b0;
        j["sum_b"] = table.sum_b_partial;
        j["upper_bound_constant"] = table.closed_constant;
        j["f0_at_0_plus_half"] = table.f0_plus_half;
        return j.dump();
    }
    std::ostringstream out;
    out.precision(12);
    if (format == Format::csv) {
        out << "name,value\n";
        out << "lambda," << table.lambda_value << "\n";
        out << "lambda_error_estimate," << table.lambda_error << "\n";
        out << "a0," << table.a0 << "\n";
        out << "b0," << table.b0 << "\n";
        out << "sum_b," << table.sum_b_partial << "\n";
        out << "upper_bound_constant," << table.closed_constant << "\n";
        out << "f0_at_0_plus_half," << table.f0_plus_half << "\n";
        return out.str();
    }
    out << "lambda (computed)      " << table.lambda_value << "\n";
    out << "  error estimate       " << table.lambda_error << "\n";
    out << "a0 = 3log2 - 2         " << table.a0 << "\n";
    out << "b0 = 5/2 - 3log2       " << table.b0 << "\n";
    out << "sum of b_l             " << table.sum_b_partial << "\n";
    out << "(3/5)(7 - 8log2)       " << table.closed_constant << "\n";
    out << "F_0(0) + 1/2           " << table.f0_plus_half << "\n";
    return out.str();
}

} // namespace stacksort
