#pragma once

#include <string>
#include <vector>

namespace stacksort {

struct VerifyResult {
    std::string property_id;
    std::string n_range;
    bool passed = false;
    std::vector<std::string> counterexamples; // first few, re-checkable by hand
    double elapsed_s = 0.0;
};

struct PropertyInfo {
    std::string id;
    int default_max_n;
    std::string description;
};

const std::vector<PropertyInfo>& registered_properties();

// Runs one registered exhaustive/sampled invariant. max_n = 0 uses the
// property's documented default; unknown ids throw std::invalid_argument.
VerifyResult run_verify(const std::string& property_id, int max_n = 0, int workers = 1);

} // namespace stacksort
