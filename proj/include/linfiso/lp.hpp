#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linfiso/rational.hpp"

namespace linfiso::lp {

enum class Sense { le, eq, ge };

struct Row {
  VectorQ coeffs;  // one entry per variable
  Sense sense = Sense::le;
  Rational rhs;
};

struct Bound {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static Bound free() { return {std::nullopt, std::nullopt}; }
  static Bound nonnegative() { return {}; }
};

// minimize c^T x subject to rows and variable bounds.
struct Problem {
  VectorQ objective;
  std::vector<Row> rows;
  std::vector<Bound> bounds;

  std::size_t num_vars() const noexcept { return objective.size(); }

  // Appends a variable and returns its index; existing rows get a zero
  // coefficient.
  std::size_t add_variable(const Rational& cost, Bound bound = {});
  void add_row(VectorQ coeffs, Sense sense, Rational rhs);

  // Throws Error(model) on inconsistent dimensions or empty bound intervals.
  void validate() const;
};

enum class Status { optimal, infeasible, unbounded };

const char* to_string(Status status) noexcept;

// Certificates use the sign convention of the minimization dual:
// row duals are <= 0 on `le` rows, >= 0 on `ge` rows, free on `eq` rows, and
// the reduced costs c - A^T y may only be positive on variables with a finite
// lower bound and negative on variables with a finite upper bound.
//
//   optimal:    primal feasible, dual feasible, equal objectives.
//   infeasible: duals form a Farkas ray for the zero objective whose dual
//               objective is strictly positive.
//   unbounded:  primal is feasible and `ray` is a recession direction with
//               c^T ray < 0.
struct Solution {
  Status status = Status::infeasible;
  VectorQ primal;
  Rational objective;
  VectorQ duals;
  VectorQ ray;
  std::size_t pivots = 0;
};

Solution solve(const Problem& problem);

// Re-checks the certificate carried by `solution` against `problem` in exact
// arithmetic without touching the solver.
bool verify_certificate(const Problem& problem, const Solution& solution);

// Plain-text dump of the standard-form tableau after solving, for debugging.
std::string debug_tableau(const Problem& problem);

}  // namespace linfiso::lp
