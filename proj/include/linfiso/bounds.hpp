#pragma once

#include <map>
#include <optional>

#include "linfiso/canonical.hpp"

namespace linfiso {

struct BoundReport {
  std::map<IndexSet, Rational> per_set;  // filled only when requested
  Rational best_upper;
  IndexSet best_set;
  std::size_t sets_examined = 0;
  std::optional<Rational> lower;  // lambda(V), when computed
};

// max{1, max_{k in S} ||h(S)^k||_1 - 1}, an upper bound on the Banach-Mazur
// distance d(V, l_inf^n). Throws Error(inadmissible_set) if det(F_S) = 0.
Rational distance_upper_bound(const SubspaceSpec& spec, const IndexSet& set);
Rational distance_upper_bound(const CanonicalFamily& family);

// Minimum of distance_upper_bound over all admissible S; ties go to the
// lexicographically smallest set. Does not fill `lower`.
BoundReport best_upper_bound(const SubspaceSpec& spec, bool keep_per_set = false);

}  // namespace linfiso
