#include "linfiso/bounds.hpp"

#include "linfiso/error.hpp"

namespace linfiso {

Rational distance_upper_bound(const CanonicalFamily& family) {
  // ||h(S)^k_{S^c}||_1 = ||h(S)^k||_1 - 1 since h(S)^k restricted to S is e_k.
  Rational worst = 1;
  for (const auto& h : family.vectors) {
    Rational off_support = vec_norm1(h) - 1;
    if (off_support > worst) worst = off_support;
  }
  return worst;
}

Rational distance_upper_bound(const SubspaceSpec& spec, const IndexSet& set) {
  return distance_upper_bound(canonical_family(spec, set));
}

BoundReport best_upper_bound(const SubspaceSpec& spec, bool keep_per_set) {
  BoundReport report;
  bool first = true;
  for_each_admissible_set(spec, [&](const AdmissibleSet& a) {
    ++report.sets_examined;
    Rational b = distance_upper_bound(canonical_family(spec, a.set));
    if (first || b < report.best_upper) {
      report.best_upper = b;
      report.best_set = a.set;
      first = false;
    }
    if (keep_per_set) report.per_set.emplace(a.set, std::move(b));
    return true;
  });
  if (first) throw Error(ErrorCode::internal, "full-rank annihilator without an admissible set");
  return report;
}

}  // namespace linfiso
