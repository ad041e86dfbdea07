#pragma once

#include <string>
#include <vector>

#include "stacksort/counts.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/montecarlo.hpp"
#include "stacksort/partition_dynamics.hpp"
#include "stacksort/verify.hpp"

namespace stacksort {

enum class Format { json, csv, table };

Format format_from_name(const std::string& name);

// Serializations are deterministic: fixed key order in JSON, fixed column
// order in CSV. Estimate JSON omits wall_time_s unless include_timing is
// set, so identical seeds give byte-identical output.
std::string emit(const EstimateReport& report, Format format, bool include_timing = false);
std::string emit(const std::vector<CountRow>& rows, Format format);

struct AverageRow {
    int n;
    Rational value;
};
std::string emit(const std::vector<AverageRow>& rows, Format format);

std::string emit(const VerifyResult& result, Format format);
std::string emit(const DynamicsTrace& trace, Format format);

struct BoundsTable {
    double lambda_value;
    double lambda_error;
    double a0;
    double b0;
    double sum_b_partial;
    double closed_constant; // (3/5)(7 - 8 log 2)
    double f0_plus_half;
};

BoundsTable compute_bounds_table();
std::string emit(const BoundsTable& table, Format format);

} // namespace stacksort
