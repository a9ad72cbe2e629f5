#pragma once

#include <string>
#include <vector>

#include "qps/algebra.hpp"

namespace qps {

/// Names of the named verification suites, in run order.
const std::vector<std::string>& check_suite_names();

/// Run one suite; throws std::invalid_argument for an unknown name.
std::vector<CheckReport> run_check_suite(const std::string& name);

/// Every suite, concatenated.
std::vector<CheckReport> run_all_checks();

/// Sampling seed: QPS_SEED from the environment, else 12345.
uint64_t default_seed();

}  // namespace qps
