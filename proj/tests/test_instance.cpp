#include <doctest.h>

#include <random>

#include "linfiso/crosscheck.hpp"
#include "linfiso/error.hpp"
#include "linfiso/instance.hpp"
#include "oracles.hpp"

using namespace linfiso;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance parsing") {
  const Instance inst = parse_instance(
      "# hyperplane\n"
      "3 1 annihilator\n"
      "1\n"
      "  0.5   # comment\n"
      "\n"
      "-7/3\n");
  CHECK(inst.ambient == 3);
  CHECK(inst.codim == 1);
  CHECK(inst.kind == BasisKind::annihilator);
  CHECK(inst.entries == MatrixQ{{1}, {q(1, 2)}, {q(-7, 3)}});
  CHECK(serialize_instance(inst) == "3 1 annihilator\n1\n1/2\n-7/3\n");

  const Instance span = parse_instance("3 1 spanning\n1 0\n0 1\n1 1\n");
  CHECK(span.entries.cols() == 2);
  const auto spec = span.to_spec();
  CHECK(spec.codim() == 1);
  CHECK(spec.annihilator().transpose() * span.entries == MatrixQ(1, 2));
}

TEST_CASE("instance parse errors carry line and column") {
  CHECK(parse_error("3 1 annihilator\n1\nx\n1\n").find("line 3, column 1") != std::string::npos);
  CHECK(parse_error("3 1 annihilator\n1\n1 2\n1\n").find("line 3, column 3") != std::string::npos);
  CHECK(parse_error("3 1 annihilator\n1\n1\n").find("expected 3 data rows") != std::string::npos);
  CHECK(parse_error("3 1 annihilator\n1\n1\n1\n1\n").find("line 5") != std::string::npos);
  CHECK(parse_error("3 1 kernel\n").find("column 5") != std::string::npos);
  CHECK(parse_error("3 3 annihilator\n").find("1 <= m < N") != std::string::npos);
  CHECK(parse_error("").find("missing header") != std::string::npos);
  CHECK(parse_error("2 1 annihilator\n1/0\n1\n").find("line 2, column 1") != std::string::npos);
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.txt"), Error);
}

TEST_CASE("rank-deficient instances parse but fail validation") {
  const Instance inst = parse_instance("3 2 annihilator\n1 2\n1 2\n1 2\n");
  try {
    inst.to_spec();
    FAIL("expected invalid basis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_basis);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t m = 1 + trial % (n - 1);
    Instance inst{n, m, trial % 2 ? BasisKind::spanning : BasisKind::annihilator,
                  oracle::random_matrix(rng, n, trial % 2 ? n - m : m, 9, true)};
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
}

TEST_CASE("generator") {
  GenOptions o;
  o.seed = 1;
  o.dim = 2;
  o.codim = 1;
  const Instance a = generate_instance(o);
  CHECK(a.ambient == 3);
  CHECK(a.entries.cols() == 1);
  CHECK(vec_norm_inf(a.entries.column(0)) > 0);
  CHECK(generate_instance(o) == a);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    o.seed = seed;
    o.dim = 1 + seed % 4;
    o.codim = 1 + seed % 3;
    o.entries.rational_entries = seed % 2 == 0;
    o.kind = seed % 3 == 0 ? BasisKind::spanning : BasisKind::annihilator;
    const Instance g = generate_instance(o);
    CHECK_NOTHROW(g.to_spec());
    CHECK(g.to_spec().codim() == o.codim);
  }

  o.dim = 0;
  CHECK_THROWS_AS(generate_instance(o), Error);
  o.dim = 2;
  o.entries.range = 0;
  CHECK_THROWS_AS(generate_instance(o), Error);
}

TEST_CASE("crosscheck summary") {
  CrossCheckOptions o;
  o.seed = 7;
  o.count = 100;
  o.max_n = 5;
  o.max_m = 2;
  const auto s = run_crosscheck(o);
  CHECK(s.instances == 100);
  CHECK(s.agreements == 100);
  CHECK(s.disagreements.empty());
  CHECK(s.isometric > 0);
  CHECK(s.isometric < 100);

  o.jobs = 4;
  const auto parallel = run_crosscheck(o);
  CHECK(parallel.agreements == s.agreements);
  CHECK(parallel.isometric == s.isometric);

  o.count = 0;
  CHECK_THROWS_AS(run_crosscheck(o), Error);
  o.count = 5;
  o.max_m = 5;
  CHECK_THROWS_AS(run_crosscheck(o), Error);
}

TEST_CASE("crosscheck instance streams are deterministic") {
  CrossCheckOptions o;
  o.seed = 99;
  o.count = 30;
  o.max_n = 6;
  o.max_m = 3;
  const auto a = crosscheck_instances(o);
  CHECK(a == crosscheck_instances(o));
  for (const auto& inst : a) {
    CHECK(inst.ambient <= 6);
    CHECK(inst.codim <= 3);
    CHECK(inst.codim < inst.ambient);
  }
}

TEST_CASE("check_instance reports failures instead of throwing") {
  const auto spec = SubspaceSpec::from_annihilator(MatrixQ{{1}, {1}, {1}});
  const auto r = check_instance(spec);
  CHECK(r.failures.empty());
  CHECK_FALSE(r.verdict);
  CHECK(r.lambda == q(4, 3));
  CHECK(r.best_upper == 2);
}
