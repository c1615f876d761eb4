#include "linfiso/crosscheck.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "linfiso/bounds.hpp"
#include "linfiso/decider.hpp"
#include "linfiso/error.hpp"
#include "linfiso/projection.hpp"

namespace linfiso {

namespace {

void check_structure(const SubspaceSpec& spec, InstanceCheck& out, std::size_t& admissible) {
  const MatrixQ& f = spec.annihilator();
  std::vector<VectorQ> delta;
  if (spec.codim() == 2) delta = delta_vectors(spec);

  bool reconstruct_ok = true;
  bool kronecker_ok = true;
  bool delta_ok = true;
  for_each_admissible_set(spec, [&](const AdmissibleSet& a) {
    ++admissible;
    const CanonicalFamily family = canonical_family(spec, a.set);
    if (family.matrix() * f.row_submatrix(a.set) != f) reconstruct_ok = false;
    for (std::size_t p = 0; p < a.set.size(); ++p)
      for (std::size_t q = 0; q < a.set.size(); ++q)
        if (family.vectors[p][a.set[q]] != (p == q ? 1 : 0)) kronecker_ok = false;
    if (!delta.empty() && canonical_family_from_deltas(delta, a.set).vectors != family.vectors)
      delta_ok = false;
    return true;
  });
  if (!reconstruct_ok) out.failures.emplace_back("H(S) F_S != F");
  if (!kronecker_ok) out.failures.emplace_back("h(S)^k_i != [i = k] on S");
  if (!delta_ok) out.failures.emplace_back("delta family != determinant-ratio family");
}

}  // namespace

InstanceCheck check_instance(const SubspaceSpec& spec) {
  InstanceCheck out;
  auto fail = [&](std::string what) { out.failures.push_back(std::move(what)); };

  try {
    const DecisionReport general = decide_isometric(spec, DecideMode::general);
    const DecisionReport fast = decide_isometric(spec, DecideMode::automatic);
    out.verdict = general.verdict;
    if (fast.verdict != general.verdict) fail("fast path verdict != general verdict");
    if (fast.witness.has_value() != general.witness.has_value() ||
        (fast.witness && fast.witness->set != general.witness->set))
      fail("fast path witness != general witness");
    if (general.witness) {
      for (const auto& norm : general.witness->norms)
        if (norm > 2) fail("witness norm exceeds 2");
      if (distance_upper_bound(general.witness->family) != 1) fail("witness distance bound != 1");
    }
    if (spec.codim() == 1) {
      const VectorQ f = spec.annihilator().column(0);
      if (general.verdict != (vec_norm1(f) <= 2 * vec_norm_inf(f)))
        fail("hyperplane criterion disagrees");
    }

    std::size_t admissible = 0;
    check_structure(spec, out, admissible);
    if (!general.verdict && general.sets_examined != admissible)
      fail("negative verdict did not scan every admissible set");

    const ProjectionResult proj = projection_constant(spec);
    out.lambda = proj.lambda;
    if (!lp::verify_certificate(proj.problem, proj.certificate)) fail("LP certificate rejected");
    if (proj.lambda < 1) fail("lambda < 1");
    if (general.verdict != (proj.lambda == 1)) fail("verdict != (lambda == 1)");
    if (cauchy_binet_sum(spec.annihilator(), proj.y) != 1) fail("sum det(F_S) det(Y_S) != 1");
    const MatrixQ& p = proj.p;
    if (p * p != p) fail("P^2 != P");
    if (spec.annihilator().transpose() * p != MatrixQ(spec.codim(), spec.ambient()))
      fail("F^T P != 0");

    const BoundReport bounds = best_upper_bound(spec);
    out.best_upper = bounds.best_upper;
    if (proj.lambda > bounds.best_upper) fail("lambda > best distance bound");
    if ((bounds.best_upper == 1) != general.verdict) fail("(best bound == 1) != verdict");

    const ProjectionInequalityReport inequality = verify_projection_inequality(spec, proj);
    if (!inequality.holds()) fail("projection inequality violated");
    if (!inequality.z_matches_projection_block) fail("Z_S != I - P_S^S");
  } catch (const Error& e) {
    fail(std::string("exception: ") + e.what());
  }
  return out;
}

std::vector<Instance> crosscheck_instances(const CrossCheckOptions& options) {
  if (options.count == 0) throw Error(ErrorCode::usage, "--count must be at least 1");
  if (options.max_m < 1) throw Error(ErrorCode::usage, "--max-m must be at least 1");
  if (options.max_n < 2) throw Error(ErrorCode::usage, "--max-n must be at least 2");
  if (options.max_m >= options.max_n) throw Error(ErrorCode::usage, "--max-m must be below --max-n");
  if (options.entries.range < 1) throw Error(ErrorCode::usage, "--entry-range must be at least 1");

  std::mt19937_64 rng(options.seed);
  std::vector<Instance> out;
  out.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::size_t ambient = std::uniform_int_distribution<std::size_t>(2, options.max_n)(rng);
    const std::size_t codim = std::uniform_int_distribution<std::size_t>(
        1, std::min(options.max_m, ambient - 1))(rng);
    out.push_back(Instance{ambient, codim, BasisKind::annihilator,
                           random_full_rank(rng, ambient, codim, options.entries)});
  }
  return out;
}

CrossCheckSummary run_crosscheck(const CrossCheckOptions& options) {
  const std::vector<Instance> instances = crosscheck_instances(options);
  std::vector<InstanceCheck> results(instances.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      results[i] = check_instance(instances[i].to_spec());
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, instances.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  CrossCheckSummary summary;
  summary.seed = options.seed;
  summary.instances = instances.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].verdict) ++summary.isometric;
    if (results[i].failures.empty()) {
      ++summary.agreements;
    } else {
      summary.disagreements.push_back(
          Disagreement{i, results[i].failures, serialize_instance(instances[i])});
    }
  }
  return summary;
}

}  // namespace linfiso
