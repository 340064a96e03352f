#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wonderkit/json_io.hpp"
#include "wonderkit/linalg.hpp"

namespace wk {

enum class FormKind { symplectic, orthogonal };

/// W1 (+) W2 with W = Q^{2n} (form J = [[0, I], [-I, 0]]) or W = Q^{2n+1}
/// (split form e_i.e_{n+i} = 1, e_{2n+1}.e_{2n+1} = 1), total form diag(F, -F).
class DoubledSpace {
 public:
  static DoubledSpace symplectic(int n);
  static DoubledSpace orthogonal(int n);

  FormKind kind() const { return kind_; }
  int n() const { return n_; }
  std::size_t half_dim() const;
  std::size_t dim() const { return 2 * half_dim(); }
  const QMat& half_form() const { return half_; }
  const QMat& form() const { return total_; }
  Rational pairing(const QVec& x, const QVec& y) const;

 private:
  DoubledSpace(FormKind kind, int n);
  FormKind kind_;
  int n_;
  QMat half_;
  QMat total_;
};

/// Rows in reduced echelon form, so equal subspaces have equal bases.
class IsotropicSubspace {
 public:
  /// Throws InvalidInput when the rows are dependent, of the wrong length, or not isotropic.
  IsotropicSubspace(const DoubledSpace& space, const std::vector<QVec>& rows);

  const QMat& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }

  friend bool operator==(const IsotropicSubspace& a, const IsotropicSubspace& b) { return a.basis_ == b.basis_; }

 private:
  QMat basis_;
};

bool is_maximal(const DoubledSpace& space, const IsotropicSubspace& v);

/// dim V n W1 and dim V n W2.
std::pair<int, int> intersection_dims(const DoubledSpace& space, const IsotropicSubspace& v);

/// k = dim V n W1 = dim V n W2. Throws InvalidInput unless V is maximal and
/// InvariantViolation if the two dimensions differ.
int intersection_invariant(const DoubledSpace& space, const IsotropicSubspace& v);

/// W' = {(w, w)}.
IsotropicSubspace diagonal_subspace(const DoubledSpace& space);

/// L (+) L with L = span(e_1..e_n) (symplectic only).
IsotropicSubspace split_subspace(const DoubledSpace& space);

/// {(x, g x)}; Lagrangian exactly when g preserves the half form.
IsotropicSubspace graph_subspace(const DoubledSpace& space, const QMat& g);

/// U (+) U (+) {(c, r c) : c in C} with U = span(e_1..e_k), C a complement of U in U^perp
/// and r the identity, or for odd k in the orthogonal case the reflection in e_{2n+1},
/// which keeps the result in the family of W'.
IsotropicSubspace stratum_representative(const DoubledSpace& space, int k);

/// Split subspace (diagonal subspace for orthogonal spaces) moved by a random element of the
/// full isometry group: products of rational transvections, or a Cayley transform.
IsotropicSubspace random_maximal_isotropic(const DoubledSpace& space, std::uint64_t seed);

/// Stratum representative moved by a random element of Sp(W1) x Sp(W2) or SO(W1) x SO(W2).
IsotropicSubspace random_stratum_subspace(const DoubledSpace& space, int k, std::uint64_t seed);

/// Two maximal isotropic subspaces of an orthogonal space lie in one family iff
/// dim(A n B) has the parity of their dimension.
bool same_family(const DoubledSpace& space, const IsotropicSubspace& a, const IsotropicSubspace& b);

/// (x1, x2) -> (x1, -x2).
IsotropicSubspace apply_tau(const DoubledSpace& space, const IsotropicSubspace& v);

struct SampleReport {
  std::string lemma;
  std::string space;                    // "symplectic n=2"
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::uint64_t seed = 0;
  std::map<int, std::size_t> strata;    // observed k -> count
};

Json to_json(const SampleReport& r);

/// Sample i is a generic draw when i % (n + 2) == n + 1 and a stratum-(i % (n + 2)) draw otherwise.
/// A violation is a sample whose two intersection dimensions differ.
SampleReport equal_intersection_check(const DoubledSpace& space, std::size_t sample_count, std::uint64_t seed);

/// Same sampling; a violation is a sample with (tau V == V) != (k == n). Symplectic only.
SampleReport tau_fixed_locus_check(const DoubledSpace& space, std::size_t sample_count, std::uint64_t seed);

struct OrbitDimensions {
  int n = 0;
  int k = 0;
  long total = 0;      // dimension of the orbit
  long codim = 0;      // in the ambient Grassmannian of dimension n(2n+1)
  long base = 0;       // 2 dim of the isotropic Grassmannian of k-planes in W
  long fiber = 0;      // dim of the isometry group of the 2(n-k) or 2(n-k)+1 dimensional quotient
};

/// 2n^2 + n - k^2, checked against the base + fiber count. Throws InvalidInput unless 0 <= k <= n.
long lg_orbit_dim(int n, int k);
OrbitDimensions lg_orbit_data(int n, int k);
OrbitDimensions og_orbit_data(int n, int k);

Json to_json(const OrbitDimensions& d);

}  // namespace wk
