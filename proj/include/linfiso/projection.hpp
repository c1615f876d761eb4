#pragma once

#include <optional>

#include "linfiso/canonical.hpp"
#include "linfiso/lp.hpp"

namespace linfiso {

struct ProjectionResult {
  MatrixQ y;  // N x m with F^T Y = I
  MatrixQ p;  // I - Y F^T
  Rational lambda;
  lp::Problem problem;
  lp::Solution certificate;
};

// Exact lambda(V) from the LP
//   minimize t  s.t.  F^T Y = I,  |(I - Y F^T)_ij| <= T_ij,  sum_j T_ij <= t.
ProjectionResult projection_constant(const SubspaceSpec& spec);

// The LP above, exposed for inspection. Variables are ordered Y (row-major,
// N*m, free), T (row-major, N*N, nonnegative), t (free).
lp::Problem projection_lp(const SubspaceSpec& spec);

// I - Y F^T for a right inverse Y of F^T. Throws Error(contract) if
// F^T Y != I.
MatrixQ projection_from_parameter(const SubspaceSpec& spec, const MatrixQ& y);

// ||P|| after checking that P is a projection onto V
// (P^2 = P, F^T P = 0, P v = v on V). Throws Error(contract) otherwise.
Rational minimality_of_norm(const SubspaceSpec& spec, const MatrixQ& p);

// Lexicographically smallest S with det(F_S) != 0 and det(Y_S) != 0.
// Throws Error(contract) unless F^T Y = I; Error(internal) if none exists.
IndexSet good_index_set(const SubspaceSpec& spec, const MatrixQ& y);

// sum over |S| = m of det(F_S) det(Y_S).
Rational cauchy_binet_sum(const MatrixQ& f, const MatrixQ& y);

struct ProjectionInequalityReport {
  IndexSet set;
  Rational lhs;  // max_k ||h(S)^k||_1 - 1
  Rational rhs;  // 1 + (lambda - 1) ||(I - P_S^S)^{-1}||
  MatrixQ z_s;   // Y_S F_S^T
  bool z_matches_projection_block = false;  // Z_S == I - P_S^S exactly
  bool holds() const { return lhs <= rhs; }
};

// Throws Error(inadmissible_set) if det(F_S) = 0 or det(I - P_S^S) = 0.
// For the minimal projection P and S with det(F_S) det(I - P_S^S) != 0:
//   max_k ||h(S)^k||_1 - 1 <= 1 + (lambda - 1) ||(I - P_S^S)^{-1}||.
// S defaults to good_index_set(spec, result.y).
ProjectionInequalityReport verify_projection_inequality(
    const SubspaceSpec& spec, const ProjectionResult& result,
    std::optional<IndexSet> set = std::nullopt);

}  // namespace linfiso
