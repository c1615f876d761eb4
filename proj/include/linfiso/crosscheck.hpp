#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linfiso/instance.hpp"

namespace linfiso {

// Checks one instance against every equivalence and inequality the library
// promises: decision <=> lambda = 1, fast paths vs the general scan,
// 1 <= lambda <= best distance bound, the projection inequality, and the exact
// structural identities. Returns the names of the failed checks.
struct InstanceCheck {
  bool verdict = false;
  Rational lambda;
  Rational best_upper;
  std::vector<std::string> failures;
};

InstanceCheck check_instance(const SubspaceSpec& spec);

struct CrossCheckOptions {
  std::uint64_t seed = 7;
  std::size_t count = 100;
  std::size_t max_n = 5;  // largest ambient dimension N
  std::size_t max_m = 2;
  EntryDistribution entries;
  unsigned jobs = 1;
};

struct Disagreement {
  std::size_t index = 0;
  std::vector<std::string> failures;
  std::string instance;  // serialized, ready to feed back to `decide`
};

struct CrossCheckSummary {
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::size_t isometric = 0;
  std::vector<Disagreement> disagreements;  // sorted by index
};

// Throws Error(usage) on count = 0, max_m < 1, max_n < 2 or max_m >= max_n.
std::vector<Instance> crosscheck_instances(const CrossCheckOptions& options);
CrossCheckSummary run_crosscheck(const CrossCheckOptions& options);

}  // namespace linfiso
