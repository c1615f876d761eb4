// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linfiso/bounds.hpp"
#include "linfiso/decider.hpp"
#include "linfiso/lp.hpp"
#include "linfiso/projection.hpp"
#include "oracles.hpp"

using namespace linfiso;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 10) problems.push_back(what);
  }
};

struct Case {
  std::size_t id;
  SubspaceSpec spec;
  DecisionReport decision;
  ProjectionResult projection;
  BoundReport bounds;
};

std::string describe(const SubspaceSpec& spec) {
  std::ostringstream os;
  os << spec.ambient() << "x" << spec.codim() << " " << to_string(spec.annihilator().transpose());
  return os.str();
}

std::string label(const Case& c) { return "instance " + std::to_string(c.id); }

Case evaluate(std::size_t id, SubspaceSpec spec) {
  auto decision = decide_isometric(spec);
  auto projection = projection_constant(spec);
  auto bounds = best_upper_bound(spec);
  return {id, std::move(spec), std::move(decision), std::move(projection), std::move(bounds)};
}

// N uniform in [2, 6], m uniform in {1, 2, 3} restricted to m < N, integer
// entries in [-5, 5].
std::vector<Case> random_suite(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, n - 1))(rng);
    out.push_back(evaluate(i, oracle::random_spec(rng, n, m)));
  }
  return out;
}

// Y + B R is a right inverse of F^T for every R when the columns of B span V.
std::vector<MatrixQ> feasible_parameters(const SubspaceSpec& spec, std::mt19937_64& rng,
                                         std::size_t count) {
  const MatrixQ& f = spec.annihilator();
  const MatrixQ base = f * inverse(f.transpose() * f);
  const MatrixQ span = spec.spanning_basis();
  std::vector<MatrixQ> out{base};
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(base + span * oracle::random_matrix(rng, span.cols(), f.cols(), 3, true));
  return out;
}

void structural(const Case& c, std::mt19937_64& rng, Outcome& o) {
  const MatrixQ& f = c.spec.annihilator();
  const std::size_t n = c.spec.ambient();
  for (const auto& adm : admissible_sets(c.spec)) {
    const auto family = canonical_family(c.spec, adm.set);
    o.expect(family.matrix() * f.row_submatrix(adm.set) == f,
             label(c) + " H(S) F_S != F for S=" + adm.set.to_string());
    for (std::size_t p = 0; p < adm.set.size(); ++p)
      for (std::size_t q = 0; q < adm.set.size(); ++q)
        o.expect(family.vectors[p][adm.set[q]] == (p == q ? 1 : 0),
                 label(c) + " h(S) not Kronecker on S=" + adm.set.to_string());
    for (std::size_t p = 0; p < adm.set.size(); ++p)
      for (std::size_t i = 0; i < n; ++i)
        o.expect(family.vectors[p][i] == oracle::h_by_cofactors(f, adm.set, p, i),
                 label(c) + " h(S) differs from cofactor expansion at S=" + adm.set.to_string());
  }
  o.expect(cauchy_binet_sum(f, c.projection.y) == 1, label(c) + " Cauchy-Binet sum for LP Y != 1");
  for (const auto& y : feasible_parameters(c.spec, rng, 2))
    o.expect(cauchy_binet_sum(f, y) == 1, label(c) + " Cauchy-Binet sum for feasible Y != 1");
  const MatrixQ& p = c.projection.p;
  o.expect(p * p == p, label(c) + " P^2 != P");
  o.expect(f.transpose() * p == MatrixQ(f.cols(), n), label(c) + " F^T P != 0");
}

void chain(const Case& c, Outcome& o) {
  const Rational& lambda = c.projection.lambda;
  o.expect(lambda >= 1, label(c) + " lambda < 1");
  o.expect(lambda <= c.bounds.best_upper, label(c) + " lambda above best upper bound");
  o.expect(op_norm_inf(c.projection.p) == lambda, label(c) + " ||P|| != lambda");
  const IndexSet s = good_index_set(c.spec, c.projection.y);
  try {
    const auto rep = verify_projection_inequality(c.spec, c.projection, s);
    o.expect(rep.holds(), label(c) + " projection inequality fails at S=" + s.to_string() +
                              ": " + to_string(rep.lhs) + " > " + to_string(rep.rhs));
    o.expect(rep.z_matches_projection_block, label(c) + " Y_S F_S^T != I - P_S^S");
  } catch (const Error& e) {
    o.expect(false, label(c) + " " + e.what());
  }
}

Outcome verdict_matches_lambda(const std::vector<Case>& suite) {
  Outcome o;
  std::size_t iso = 0;
  std::array<std::size_t, 4> by_m{};
  for (const auto& c : suite) {
    by_m[c.spec.codim()]++;
    if (c.decision.verdict) ++iso;
    o.expect(c.decision.verdict == (c.projection.lambda == 1),
             label(c) + " verdict " + std::to_string(c.decision.verdict) + " but lambda " +
                 to_string(c.projection.lambda) + ": " + describe(c.spec));
  }
  o.expect(iso > 0 && iso < suite.size(), "suite does not contain both outcomes");
  o.expect(by_m[1] && by_m[2] && by_m[3], "suite misses a codimension");
  o.detail = std::to_string(suite.size()) + " instances (m=1: " + std::to_string(by_m[1]) +
             ", m=2: " + std::to_string(by_m[2]) + ", m=3: " + std::to_string(by_m[3]) + "), " +
             std::to_string(iso) + " isometric";
  return o;
}

Outcome hyperplane_anchor() {
  Outcome o;
  const VectorQ f{1, 1, 1};
  const auto spec = SubspaceSpec::from_annihilator(MatrixQ::from_columns({f}));
  // Independent value: minimize ||I - y f^T|| over a grid of y with <f, y> = 1.
  // The grid (step 1/12) contains y = (1/3, 1/3, 1/3).
  const Rational brute = oracle::hyperplane_grid_minimum(f, 12, 2);
  const auto c = evaluate(0, spec);
  o.expect(brute == Rational(4, 3), "grid minimum " + to_string(brute) + " != 4/3");
  o.expect(!c.decision.verdict, "verdict true");
  o.expect(c.projection.lambda == brute, "lambda " + to_string(c.projection.lambda));
  o.expect(c.bounds.best_upper == 2, "best upper bound " + to_string(c.bounds.best_upper));
  const auto rep = verify_projection_inequality(spec, c.projection, IndexSet({0}, 3));
  o.expect(rep.lhs == 2 && rep.rhs == 2,
           "inequality at {1}: lhs " + to_string(rep.lhs) + ", rhs " + to_string(rep.rhs));
  o.detail = "lambda " + to_string(c.projection.lambda) + ", bound " +
             to_string(c.bounds.best_upper) + ", S={1}: " + to_string(rep.lhs) +
             " <= " + to_string(rep.rhs);
  return o;
}

Outcome hyperplane_criterion() {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::vector<VectorQ> fs;
  for (int i = 0; i < 200; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    fs.push_back(oracle::random_spec(rng, n, 1, 5, i % 4 == 3).annihilator().column(0));
  }
  // Equality ||f||_1 = 2 ||f||_inf and one step to either side.
  const std::vector<VectorQ> boundary{
      {1, 1, 2},  {1, 1, 1},  {2, -1, -1},   {3, 1, 1, 1}, {3, 1, 1, 1, 1},
      {1, 1},     {5, 0, 5},  {0, 0, 3, -3}, {Rational(1, 2), Rational(1, 3), Rational(5, 6)},
      {7, 3, -4}, {7, 3, -5}, {7, 3, -3}};
  fs.insert(fs.end(), boundary.begin(), boundary.end());
  std::size_t iso = 0, equality = 0;
  for (const auto& f : fs) {
    const bool expected = vec_norm1(f) <= 2 * vec_norm_inf(f);
    if (vec_norm1(f) == 2 * vec_norm_inf(f)) ++equality;
    const auto spec = SubspaceSpec::from_annihilator(MatrixQ::from_columns({f}));
    const bool automatic = decide_isometric(spec).verdict;
    const bool general = decide_isometric(spec, DecideMode::general).verdict;
    if (expected) ++iso;
    std::ostringstream os;
    os << "f=" << to_string(MatrixQ::from_rows({f}));
    o.expect(automatic == expected && general == expected, os.str() + " misclassified");
  }
  o.detail = std::to_string(fs.size()) + " hyperplanes, " + std::to_string(iso) +
             " isometric, " + std::to_string(equality) + " on the boundary";
  return o;
}

Outcome delta_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2002);
  std::size_t iso = 0, pairs = 0;
  for (int i = 0; i < 200; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 7)(rng);
    const auto spec = oracle::random_spec(rng, n, 2, 5, i % 5 == 4);
    const bool fast = decide_delta(spec).verdict;
    const bool general = decide_isometric(spec, DecideMode::general).verdict;
    if (general) ++iso;
    o.expect(fast == general, "instance " + std::to_string(i) + ": delta test disagrees");
    const auto delta = delta_vectors(spec);
    for (const auto& adm : admissible_sets(spec)) {
      ++pairs;
      o.expect(canonical_family_from_deltas(delta, adm.set).vectors ==
                   canonical_family(spec, adm.set).vectors,
               "instance " + std::to_string(i) + ": families differ at S=" + adm.set.to_string());
    }
  }
  o.detail = "200 instances, " + std::to_string(iso) + " isometric, " + std::to_string(pairs) +
             " admissible pairs compared";
  return o;
}

Outcome structural_identities(const std::vector<Case>& suite) {
  Outcome o;
  std::mt19937_64 rng(3003);
  for (const auto& c : suite) structural(c, rng, o);
  o.detail = std::to_string(suite.size()) + " instances, every admissible S";
  return o;
}

Outcome inequality_chain(const std::vector<Case>& suite) {
  Outcome o;
  for (const auto& c : suite) chain(c, o);
  o.detail = std::to_string(suite.size()) + " instances";
  return o;
}

Outcome invariance(const std::vector<Case>& suite) {
  Outcome o;
  std::mt19937_64 rng(4004);
  std::size_t transforms = 0;
  auto same = [&](const Case& c, const MatrixQ& g, const std::string& how) {
    ++transforms;
    const auto spec = SubspaceSpec::from_annihilator(g);
    const auto t = evaluate(c.id, spec);
    o.expect(t.decision.verdict == c.decision.verdict, label(c) + " verdict changes under " + how);
    o.expect(t.projection.lambda == c.projection.lambda, label(c) + " lambda changes under " + how);
    o.expect(t.bounds.best_upper == c.bounds.best_upper,
             label(c) + " best bound changes under " + how);
  };
  for (const auto& c : suite) {
    const MatrixQ& f = c.spec.annihilator();
    for (int k = 0; k < 20; ++k)
      same(c, f * oracle::random_invertible(rng, f.cols()), "change of basis");
    std::vector<std::size_t> perm(f.rows());
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      same(c, oracle::permute_rows(f, perm), "permutation");
      std::vector<bool> flip(f.rows());
      for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = rng() % 2;
      same(c, oracle::flip_rows(f, flip), "sign flip");
    }
  }
  o.detail = std::to_string(suite.size()) + " instances, " + std::to_string(transforms) +
             " transformed copies (20 bases, 3 permutations, 3 sign patterns each)";
  return o;
}

Outcome lp_correctness() {
  Outcome o;
  std::mt19937_64 rng(5005);
  std::size_t count = 0, pivots = 0;
  for (int i = 0; i < 80; ++i) {
    const auto vars = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const auto extra = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const auto problem = oracle::random_bounded_lp(rng, vars, extra);
    const auto brute = oracle::vertex_enumeration(problem);
    const auto sol = lp::solve(problem);
    const std::string id = "LP " + std::to_string(i);
    ++count;
    pivots += sol.pivots;
    if (!brute) {
      o.expect(sol.status == lp::Status::infeasible, id + ": enumeration infeasible, solver " +
                                                         lp::to_string(sol.status));
      o.expect(lp::verify_certificate(problem, sol), id + ": infeasibility certificate rejected");
      continue;
    }
    o.expect(sol.status == lp::Status::optimal, id + ": status " +
                                                    std::string(lp::to_string(sol.status)));
    if (sol.status != lp::Status::optimal) continue;
    o.expect(sol.objective == *brute,
             id + ": objective " + to_string(sol.objective) + " vs " + to_string(*brute));
    o.expect(lp::verify_certificate(problem, sol), id + ": certificate rejected");

    auto bad = sol;
    bad.objective += 1;
    o.expect(!lp::verify_certificate(problem, bad), id + ": shifted objective accepted");
    bad = sol;
    bad.primal[0] += 1000;
    o.expect(!lp::verify_certificate(problem, bad), id + ": infeasible primal accepted");
  }
  o.expect(count >= 50, "fewer than 50 LPs");
  o.detail = std::to_string(count) + " LPs with up to 8 variables, " + std::to_string(pivots) +
             " pivots";
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::printf("building random suite...\n");
  std::fflush(stdout);
  const auto suite = random_suite(20261016, 500);
  const std::vector<Case> invariance_suite(suite.begin(), suite.begin() + 30);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"isometry verdict agrees with lambda(V) = 1", [&] { return verdict_matches_lambda(suite); }},
      {"hyperplane anchor f = (1,1,1)", hyperplane_anchor},
      {"hyperplane criterion ||f||_1 <= 2||f||_inf", hyperplane_criterion},
      {"codimension-two delta test", delta_equivalence},
      {"structural identities", [&] { return structural_identities(suite); }},
      {"inequality chain", [&] { return inequality_chain(suite); }},
      {"invariance", [&] { return invariance(invariance_suite); }},
      {"exact LP correctness", lp_correctness},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%s  %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                secs);
    for (const auto& p : o.problems) std::printf("      %s\n", p.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1fs\n", criteria.size() - failed, criteria.size(),
              total);
  return failed == 0 ? 0 : 1;
}
