#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "linfiso/matrix.hpp"

namespace linfiso {

// Codimension-m subspace V = {x : F^T x = 0} of l_inf^N, described by a
// full-column-rank annihilator basis F (N x m).
class SubspaceSpec {
 public:
  // Throws Error(invalid_basis) unless 1 <= m < N and rank(F) = m.
  static SubspaceSpec from_annihilator(MatrixQ annihilator);
  // `spanning` is N x n with rank n >= 1; F is an exact kernel basis of its
  // transpose.
  static SubspaceSpec from_spanning_set(const MatrixQ& spanning);

  const MatrixQ& annihilator() const noexcept { return f_; }
  std::size_t ambient() const noexcept { return f_.rows(); }
  std::size_t codim() const noexcept { return f_.cols(); }
  std::size_t dim() const noexcept { return f_.rows() - f_.cols(); }

  // A basis of V itself (N x n), from the kernel of F^T.
  MatrixQ spanning_basis() const;

 private:
  explicit SubspaceSpec(MatrixQ f) : f_(std::move(f)) {}
  MatrixQ f_;
};

struct AdmissibleSet {
  IndexSet set;
  Rational det_fs;
};

// Visits every size-m S with det(F_S) != 0, lexicographically. The visitor
// returns false to stop.
void for_each_admissible_set(const SubspaceSpec& spec,
                             const std::function<bool(const AdmissibleSet&)>& visit);
std::vector<AdmissibleSet> admissible_sets(const SubspaceSpec& spec);

// The intrinsic basis (h(S)^k, k in S) of the annihilator, normalized to the
// identity on S. vectors[p] is h(S)^k for k = set[p].
struct CanonicalFamily {
  IndexSet set;
  std::vector<VectorQ> vectors;
  Rational det_fs;

  const VectorQ& vector_for(std::size_t k) const { return vectors[set.position_of(k)]; }
  // N x m matrix H(S) with columns ordered by increasing k.
  MatrixQ matrix() const;
};

// h(S)^k_i = det(F_S[row k <- row i of F]) / det(F_S).
// Throws Error(inadmissible_set) if det(F_S) = 0.
CanonicalFamily canonical_family(const SubspaceSpec& spec, const IndexSet& set);

// Codimension two only: delta[k] = f_k g - g_k f for k = 0..N-1.
std::vector<VectorQ> delta_vectors(const SubspaceSpec& spec);

// The same family for S = {k, l}, read off the delta vectors:
// h(S)^k = D^l / D^l_k and h(S)^l = D^k / D^k_l.
CanonicalFamily canonical_family_from_deltas(const std::vector<VectorQ>& delta,
                                             const IndexSet& pair);

}  // namespace linfiso
