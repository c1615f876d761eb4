#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "linfiso/canonical.hpp"

namespace linfiso {

enum class DecideMode { automatic, general };
enum class DecisionMethod { general, hyperplane_m1, delta_m2 };

const char* to_string(DecisionMethod method) noexcept;

struct Witness {
  IndexSet set;
  CanonicalFamily family;
  VectorQ norms;  // norms[p] = ||h(S)^k||_1 for k = set[p]
};

struct DecisionReport {
  bool verdict = false;
  std::optional<Witness> witness;
  // Admissible sets (general), nonzero coordinates (hyperplane) or admissible
  // pairs (delta) inspected. Equals the full admissible count when verdict is
  // false.
  std::size_t sets_examined = 0;
  // Presumptive inequalities evaluated by the delta test; zero otherwise.
  std::size_t inequalities_tested = 0;
  DecisionMethod method = DecisionMethod::general;
};

// True iff some admissible S has ||h(S)^k||_1 <= 2 for all k in S. The
// witness is the lexicographically smallest such S.
DecisionReport decide_isometric(const SubspaceSpec& spec,
                                DecideMode mode = DecideMode::automatic);

// Hyperplane {f}^perp: isometric iff ||f||_1 <= 2 ||f||_inf.
DecisionReport decide_hyperplane(std::span<const Rational> f);

// Codimension two: isometric iff some k != l has
// max(||D^k||_1, ||D^l||_1) <= 2 |D^k_l|.
DecisionReport decide_delta(const SubspaceSpec& spec);

}  // namespace linfiso
