#include "linfiso/decider.hpp"

#include "linfiso/error.hpp"

namespace linfiso {

const char* to_string(DecisionMethod method) noexcept {
  switch (method) {
    case DecisionMethod::general: return "general";
    case DecisionMethod::hyperplane_m1: return "hyperplane_m1";
    case DecisionMethod::delta_m2: return "delta_m2";
  }
  return "unknown";
}

namespace {

const Rational kTwo = 2;

Witness make_witness(CanonicalFamily family) {
  Witness w{family.set, std::move(family), {}};
  for (const auto& h : w.family.vectors) w.norms.push_back(vec_norm1(h));
  return w;
}

DecisionReport decide_general(const SubspaceSpec& spec) {
  DecisionReport report;
  report.method = DecisionMethod::general;
  for_each_admissible_set(spec, [&](const AdmissibleSet& a) {
    ++report.sets_examined;
    CanonicalFamily family = canonical_family(spec, a.set);
    for (const auto& h : family.vectors)
      if (vec_norm1(h) > kTwo) return true;
    report.verdict = true;
    report.witness = make_witness(std::move(family));
    return false;
  });
  return report;
}

}  // namespace

DecisionReport decide_hyperplane(std::span<const Rational> f) {
  const Rational inf = vec_norm_inf(f);
  if (inf == 0) throw Error(ErrorCode::invalid_basis, "hyperplane normal is the zero vector");
  if (f.size() < 2) throw Error(ErrorCode::invalid_basis, "hyperplane needs N >= 2");

  DecisionReport report;
  report.method = DecisionMethod::hyperplane_m1;
  report.verdict = vec_norm1(f) <= kTwo * inf;

  std::size_t nonzero = 0;
  std::size_t arg_max = f.size();
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    ++nonzero;
    if (arg_max == f.size() && abs(f[k]) == inf) {
      arg_max = k;
      if (report.verdict) break;
    }
  }
  report.sets_examined = nonzero;
  if (report.verdict) {
    const auto spec = SubspaceSpec::from_annihilator(MatrixQ::from_columns({VectorQ(f.begin(), f.end())}));
    report.witness = make_witness(canonical_family(spec, IndexSet({arg_max}, f.size())));
  }
  return report;
}

DecisionReport decide_delta(const SubspaceSpec& spec) {
  const auto delta = delta_vectors(spec);
  const std::size_t n = spec.ambient();
  VectorQ norms(n);
  for (std::size_t k = 0; k < n; ++k) norms[k] = vec_norm1(delta[k]);

  DecisionReport report;
  report.method = DecisionMethod::delta_m2;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (delta[k][l] == 0) continue;
      ++report.sets_examined;
      const Rational bound = kTwo * abs(delta[k][l]);
      ++report.inequalities_tested;
      if (norms[k] > bound) continue;
      ++report.inequalities_tested;
      if (norms[l] > bound) continue;
      report.verdict = true;
      report.witness = make_witness(canonical_family_from_deltas(delta, IndexSet({k, l}, n)));
      return report;
    }
  }
  return report;
}

DecisionReport decide_isometric(const SubspaceSpec& spec, DecideMode mode) {
  if (mode == DecideMode::automatic) {
    if (spec.codim() == 1) return decide_hyperplane(spec.annihilator().column(0));
    if (spec.codim() == 2) return decide_delta(spec);
  }
  return decide_general(spec);
}

}  // namespace linfiso
