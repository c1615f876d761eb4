#include "linfiso/canonical.hpp"

#include <string>

#include "linfiso/error.hpp"

namespace linfiso {

SubspaceSpec SubspaceSpec::from_annihilator(MatrixQ annihilator) {
  const std::size_t n = annihilator.rows();
  const std::size_t m = annihilator.cols();
  if (m < 1 || m >= n)
    throw Error(ErrorCode::invalid_basis, "annihilator must be N x m with 1 <= m < N (got " +
                                              std::to_string(n) + " x " + std::to_string(m) + ")");
  if (rank(annihilator) != m)
    throw Error(ErrorCode::invalid_basis, "annihilator columns are linearly dependent");
  return SubspaceSpec(std::move(annihilator));
}

SubspaceSpec SubspaceSpec::from_spanning_set(const MatrixQ& spanning) {
  const std::size_t n = spanning.rows();
  const std::size_t dim = spanning.cols();
  if (dim >= n)
    throw Error(ErrorCode::invalid_basis, "spanning set must have fewer columns than rows");
  if (rank(spanning) != dim)
    throw Error(ErrorCode::invalid_basis, "spanning set columns are linearly dependent");
  return from_annihilator(MatrixQ::from_columns(kernel_basis(spanning.transpose())));
}

MatrixQ SubspaceSpec::spanning_basis() const {
  return MatrixQ::from_columns(kernel_basis(f_.transpose()));
}

void for_each_admissible_set(const SubspaceSpec& spec,
                             const std::function<bool(const AdmissibleSet&)>& visit) {
  const MatrixQ& f = spec.annihilator();
  for_each_subset(spec.ambient(), spec.codim(), [&](const IndexSet& s) {
    Rational d = det(f.row_submatrix(s));
    if (d == 0) return true;
    return visit(AdmissibleSet{s, std::move(d)});
  });
}

std::vector<AdmissibleSet> admissible_sets(const SubspaceSpec& spec) {
  std::vector<AdmissibleSet> out;
  for_each_admissible_set(spec, [&](const AdmissibleSet& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

MatrixQ CanonicalFamily::matrix() const { return MatrixQ::from_columns(vectors); }

CanonicalFamily canonical_family(const SubspaceSpec& spec, const IndexSet& set) {
  const MatrixQ& f = spec.annihilator();
  if (set.size() != spec.codim() || set.ambient() != spec.ambient())
    throw Error(ErrorCode::inadmissible_set,
                "index set " + set.to_string() + " must have size " + std::to_string(spec.codim()));
  const MatrixQ fs = f.row_submatrix(set);
  CanonicalFamily family{set, {}, det(fs)};
  if (family.det_fs == 0)
    throw Error(ErrorCode::inadmissible_set, "det(F_S) = 0 for S = " + set.to_string());

  family.vectors.assign(set.size(), VectorQ(spec.ambient()));
  for (std::size_t p = 0; p < set.size(); ++p)
    for (std::size_t i = 0; i < spec.ambient(); ++i)
      family.vectors[p][i] = det(fs.replace_row(p, f.row_view(i))) / family.det_fs;
  return family;
}

std::vector<VectorQ> delta_vectors(const SubspaceSpec& spec) {
  if (spec.codim() != 2)
    throw Error(ErrorCode::wrong_codimension,
                "delta vectors need codimension 2, got " + std::to_string(spec.codim()));
  const MatrixQ& f = spec.annihilator();
  const std::size_t n = spec.ambient();
  std::vector<VectorQ> delta(n, VectorQ(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) delta[k][i] = f(k, 0) * f(i, 1) - f(k, 1) * f(i, 0);
  return delta;
}

}  // namespace linfiso

namespace linfiso {

CanonicalFamily canonical_family_from_deltas(const std::vector<VectorQ>& delta,
                                             const IndexSet& pair) {
  if (pair.size() != 2 || pair.ambient() != delta.size())
    throw Error(ErrorCode::wrong_codimension, "delta family needs a pair of indices");
  const std::size_t k = pair[0];
  const std::size_t l = pair[1];
  const Rational& dkl = delta[k][l];
  if (dkl == 0)
    throw Error(ErrorCode::inadmissible_set, "det(F_S) = 0 for S = " + pair.to_string());
  const Rational dlk = delta[l][k];

  CanonicalFamily family{pair, {VectorQ(delta.size()), VectorQ(delta.size())}, dkl};
  for (std::size_t i = 0; i < delta.size(); ++i) {
    family.vectors[0][i] = delta[l][i] / dlk;
    family.vectors[1][i] = delta[k][i] / dkl;
  }
  return family;
}

}  // namespace linfiso
