#include "linfiso/projection.hpp"

#include "linfiso/error.hpp"

namespace linfiso {

namespace {

void require_right_inverse(const SubspaceSpec& spec, const MatrixQ& y) {
  const MatrixQ& f = spec.annihilator();
  if (y.rows() != f.rows() || y.cols() != f.cols())
    throw Error(ErrorCode::contract, "Y must have the shape of F");
  if (f.transpose() * y != MatrixQ::identity(f.cols()))
    throw Error(ErrorCode::contract, "F^T Y is not the identity");
}

}  // namespace

lp::Problem projection_lp(const SubspaceSpec& spec) {
  const MatrixQ& f = spec.annihilator();
  const std::size_t n = spec.ambient();
  const std::size_t m = spec.codim();
  const std::size_t y0 = 0;
  const std::size_t t0 = n * m;
  const std::size_t norm = t0 + n * n;

  lp::Problem p;
  for (std::size_t k = 0; k < n * m; ++k) p.add_variable(0, lp::Bound::free());
  for (std::size_t k = 0; k < n * n; ++k) p.add_variable(0, lp::Bound::nonnegative());
  p.add_variable(1, lp::Bound::free());
  const std::size_t nv = p.num_vars();

  // F^T Y = I
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      VectorQ row(nv);
      for (std::size_t i = 0; i < n; ++i) row[y0 + i * m + b] = f(i, a);
      p.add_row(std::move(row), lp::Sense::eq, a == b ? 1 : 0);
    }

  // +-(delta_ij - sum_b Y_ib F_jb) <= T_ij
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational kron = i == j ? 1 : 0;
      VectorQ upper(nv);
      VectorQ lower(nv);
      for (std::size_t b = 0; b < m; ++b) {
        upper[y0 + i * m + b] = -f(j, b);
        lower[y0 + i * m + b] = f(j, b);
      }
      upper[t0 + i * n + j] = -1;
      lower[t0 + i * n + j] = -1;
      p.add_row(std::move(upper), lp::Sense::le, -kron);
      p.add_row(std::move(lower), lp::Sense::le, kron);
    }

  // sum_j T_ij <= t
  for (std::size_t i = 0; i < n; ++i) {
    VectorQ row(nv);
    for (std::size_t j = 0; j < n; ++j) row[t0 + i * n + j] = 1;
    row[norm] = -1;
    p.add_row(std::move(row), lp::Sense::le, 0);
  }
  return p;
}

MatrixQ projection_from_parameter(const SubspaceSpec& spec, const MatrixQ& y) {
  require_right_inverse(spec, y);
  return MatrixQ::identity(spec.ambient()) - y * spec.annihilator().transpose();
}

ProjectionResult projection_constant(const SubspaceSpec& spec) {
  const std::size_t n = spec.ambient();
  const std::size_t m = spec.codim();

  ProjectionResult result;
  result.problem = projection_lp(spec);
  result.certificate = lp::solve(result.problem);
  if (result.certificate.status != lp::Status::optimal)
    throw Error(ErrorCode::internal, std::string("projection LP reported ") +
                                         lp::to_string(result.certificate.status));
  if (!lp::verify_certificate(result.problem, result.certificate))
    throw Error(ErrorCode::internal, "projection LP certificate failed verification");

  result.y = MatrixQ(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) result.y(i, b) = result.certificate.primal[i * m + b];
  result.p = projection_from_parameter(spec, result.y);
  result.lambda = minimality_of_norm(spec, result.p);
  if (result.lambda != result.certificate.objective)
    throw Error(ErrorCode::internal, "||P|| disagrees with the LP optimum");
  return result;
}

Rational minimality_of_norm(const SubspaceSpec& spec, const MatrixQ& p) {
  const std::size_t n = spec.ambient();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::contract, "P must be N x N");
  const MatrixQ& f = spec.annihilator();
  if (f.transpose() * p != MatrixQ(spec.codim(), n))
    throw Error(ErrorCode::contract, "range of P is not inside V (F^T P != 0)");
  if (p * p != p) throw Error(ErrorCode::contract, "P is not idempotent");
  const MatrixQ basis = spec.spanning_basis();
  if (p * basis != basis) throw Error(ErrorCode::contract, "P does not fix V");
  return op_norm_inf(p);
}

Rational cauchy_binet_sum(const MatrixQ& f, const MatrixQ& y) {
  return cauchy_binet_check(f, y).second;
}

IndexSet good_index_set(const SubspaceSpec& spec, const MatrixQ& y) {
  require_right_inverse(spec, y);
  IndexSet found;
  for_each_admissible_set(spec, [&](const AdmissibleSet& a) {
    if (det(y.row_submatrix(a.set)) == 0) return true;
    found = a.set;
    return false;
  });
  if (found.empty())
    throw Error(ErrorCode::internal,
                "no S with det(F_S) det(Y_S) != 0 although F^T Y = I; arithmetic bug");
  return found;
}

ProjectionInequalityReport verify_projection_inequality(const SubspaceSpec& spec,
                                                        const ProjectionResult& result,
                                                        std::optional<IndexSet> set) {
  const IndexSet s = set ? *set : good_index_set(spec, result.y);
  const CanonicalFamily family = canonical_family(spec, s);  // rejects det(F_S) = 0

  ProjectionInequalityReport report;
  report.set = s;
  report.z_s = result.y.row_submatrix(s) * spec.annihilator().row_submatrix(s).transpose();
  const MatrixQ block = MatrixQ::identity(s.size()) - result.p.submatrix(s, s);
  report.z_matches_projection_block = report.z_s == block;
  if (det(block) == 0)
    throw Error(ErrorCode::inadmissible_set, "det(I - P_S^S) = 0 for S = " + s.to_string());

  Rational worst = 0;
  for (const auto& h : family.vectors) {
    Rational v = vec_norm1(h);
    if (v > worst) worst = v;
  }
  report.lhs = worst - 1;
  report.rhs = 1 + (result.lambda - 1) * op_norm_inf(inverse(block));
  return report;
}

}  // namespace linfiso
