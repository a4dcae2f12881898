#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgs/signed_graph.hpp"

namespace sgs::cli {

using Json = nlohmann::ordered_json;

struct SuiteOptions {
  int max_n = -1;    // suite default when negative
  int samples = -1;  // suite default when negative
  std::uint64_t seed = 1;
  double tol = 1e-8;
  int jobs = 1;
  std::vector<SignedGraph> extra;  // user-supplied graphs, checked as given
};

const std::vector<std::string>& suite_names();

/// Runs one named invariant suite; result["passed"] tells the outcome.
/// Throws Error(UnknownName) for an unknown suite.
Json run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace sgs::cli
