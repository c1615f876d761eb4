#include <doctest.h>

#include <random>

#include "linfiso/error.hpp"
#include "linfiso/lp.hpp"
#include "oracles.hpp"

using namespace linfiso;
using namespace linfiso::lp;

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }
}  // namespace

TEST_CASE("single free variable bounded below by a row") {
  Problem p;
  p.add_variable(1, Bound::free());
  p.add_row({1}, Sense::ge, 1);
  const Solution s = solve(p);
  CHECK(s.status == Status::optimal);
  CHECK(s.primal == VectorQ{1});
  CHECK(s.objective == 1);
  CHECK(verify_certificate(p, s));
}

TEST_CASE("contradictory row and bound are infeasible with a Farkas certificate") {
  Problem p;
  p.add_variable(1);  // x >= 0
  p.add_row({1}, Sense::le, -1);
  const Solution s = solve(p);
  CHECK(s.status == Status::infeasible);
  CHECK(verify_certificate(p, s));

  Solution forged = s;
  forged.duals = {0};
  CHECK_FALSE(verify_certificate(p, forged));
}

TEST_CASE("unbounded problems carry a ray") {
  Problem p;
  p.add_variable(-1);
  p.add_variable(0);
  p.add_row({1, -1}, Sense::le, 2);
  const Solution s = solve(p);
  CHECK(s.status == Status::unbounded);
  CHECK(verify_certificate(p, s));

  Problem none;
  none.add_variable(1, Bound::free());
  CHECK(solve(none).status == Status::unbounded);
}

TEST_CASE("hand-built optimal pair") {
  // min -x - y  s.t.  x + 2y <= 4,  3x + y <= 6,  x, y >= 0.
  Problem p;
  p.add_variable(-1);
  p.add_variable(-1);
  p.add_row({1, 2}, Sense::le, 4);
  p.add_row({3, 1}, Sense::le, 6);

  Solution manual;
  manual.status = Status::optimal;
  manual.primal = {q(8, 5), q(6, 5)};
  manual.objective = q(-14, 5);
  manual.duals = {q(-2, 5), q(-1, 5)};
  CHECK(verify_certificate(p, manual));

  const Solution s = solve(p);
  CHECK(s.status == Status::optimal);
  CHECK(s.primal == manual.primal);
  CHECK(s.objective == manual.objective);
  CHECK(s.duals == manual.duals);

  Solution bad_sign = manual;
  bad_sign.duals = {q(2, 5), q(1, 5)};
  CHECK_FALSE(verify_certificate(p, bad_sign));
}

TEST_CASE("perturbing a returned solution breaks its certificate") {
  Problem p;
  p.add_variable(-1);
  p.add_variable(-1);
  p.add_row({1, 2}, Sense::le, 4);
  p.add_row({3, 1}, Sense::le, 6);
  const Solution s = solve(p);
  REQUIRE(verify_certificate(p, s));
  for (std::size_t j = 0; j < s.primal.size(); ++j) {
    Solution t = s;
    t.primal[j] += q(1, 1000);
    CHECK_FALSE(verify_certificate(p, t));
  }
  Solution t = s;
  t.objective -= q(1, 1000);
  CHECK_FALSE(verify_certificate(p, t));
}

TEST_CASE("equality rows, redundant rows and shifted bounds") {
  // min x + 2y + 3z  s.t. x + y + z = 3, 2x + 2y + 2z = 6, 1 <= y <= 2, z <= 1/2.
  Problem p;
  p.add_variable(1);
  p.add_variable(2, Bound{1, 2});
  p.add_variable(3, Bound{std::nullopt, q(1, 2)});
  p.add_row({1, 1, 1}, Sense::eq, 3);
  p.add_row({2, 2, 2}, Sense::eq, 6);
  p.add_row({0, 0, 1}, Sense::ge, -1);
  const Solution s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(verify_certificate(p, s));
  CHECK(s.objective == oracle::vertex_enumeration(p).value());
  // z = -1, y = 1, x = 3: objective 3 + 2 - 3 = 2.
  CHECK(s.objective == 2);
}

TEST_CASE("model errors") {
  Problem p;
  p.add_variable(1);
  CHECK_THROWS_AS(p.add_row({1, 2}, Sense::le, 0), Error);
  Problem q2;
  q2.add_variable(1, Bound{3, 2});
  CHECK_THROWS_AS(solve(q2), Error);
  Problem broken;
  broken.objective = {1, 2};
  broken.bounds = {Bound{}};
  CHECK_THROWS_AS(solve(broken), Error);
  CHECK_FALSE(verify_certificate(broken, Solution{}));
}

TEST_CASE("solver matches vertex enumeration on random bounded LPs") {
  std::mt19937_64 rng(51);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t vars = 2 + trial % 5;
    const Problem p = oracle::random_bounded_lp(rng, vars, 1 + trial % 3);
    const Solution s = solve(p);
    const auto brute = oracle::vertex_enumeration(p);
    CHECK(verify_certificate(p, s));
    if (brute) {
      ++optimal;
      REQUIRE(s.status == Status::optimal);
      CHECK(s.objective == *brute);
    } else {
      ++infeasible;
      CHECK(s.status == Status::infeasible);
    }
  }
  CHECK(optimal > 30);
  CHECK(infeasible > 0);
}

TEST_CASE("degenerate LP terminates under Bland's rule") {
  // Beale's classic cycling example for Dantzig's rule.
  Problem p;
  p.add_variable(q(-3, 4));
  p.add_variable(150);
  p.add_variable(q(-1, 50));
  p.add_variable(6);
  p.add_row({q(1, 4), -60, q(-1, 25), 9}, Sense::le, 0);
  p.add_row({q(1, 2), -90, q(-1, 50), 3}, Sense::le, 0);
  p.add_row({0, 0, 1, 0}, Sense::le, 1);
  const Solution s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == q(-1, 20));
  CHECK(verify_certificate(p, s));
}

TEST_CASE("debug dump lists the final tableau") {
  Problem p;
  p.add_variable(1, Bound::free());
  p.add_row({1}, Sense::ge, 1);
  const std::string dump = debug_tableau(p);
  CHECK(dump.find("reduced") != std::string::npos);
  CHECK(dump.find("columns:") != std::string::npos);
}
