#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wonderkit/json_io.hpp"
#include "wonderkit/linalg.hpp"
#include "wonderkit/rational.hpp"

namespace wk {

enum class Family { A, B, C, D, E, F, G };

struct TypeLabel {
  Family family = Family::A;
  int rank = 1;

  /// Accepts "B3", "b3", "B_3". Throws InvalidInput for unknown families or
  /// rank combinations outside A1.., B2.., C2.., D4.., E6-E8, F4, G2.
  static TypeLabel parse(std::string_view text);
  static void validate(Family family, int rank);

  std::string str() const;
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Bourbaki Cartan matrix A_ij = <alpha_i, alpha_j^vee> of a simple type, from the Dynkin diagram.
std::vector<std::vector<int>> dynkin_cartan(const TypeLabel& type);

/// Every valid simple type of rank <= max_rank, in family order then rank.
std::vector<TypeLabel> all_types_up_to_rank(int max_rank);

enum class Basis { ambient, simple_root, fund_weight, simple_coroot, fund_coweight };

std::string to_string(Basis b);
Basis parse_basis(std::string_view text);

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Exact vector tagged with the basis its coordinates refer to.
struct LatticeVector {
  QVec coords;
  Basis basis = Basis::ambient;
  RootSystemPtr rs;

  QVec ambient() const;
};

/// A reduced irreducible root system in an explicit Euclidean coordinate model
/// (standard dot product). Immutable after construction.
class RootSystem {
 public:
  /// Validates that the Cartan integers of `simple_roots` form the Cartan matrix of `type`.
  RootSystem(TypeLabel type, std::vector<QVec> simple_roots);

  const TypeLabel& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t ambient_dim() const { return simple_roots_.front().size(); }

  const std::vector<QVec>& simple_roots() const { return simple_roots_; }
  const QVec& simple_root(int i) const { return simple_roots_.at(static_cast<std::size_t>(i)); }
  QVec simple_coroot(int i) const;
  QVec fundamental_weight(int i) const;
  QVec fundamental_coweight(int i) const;
  QVec rho() const;

  /// Integer matrix A_ij = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// Every root in ambient coordinates, canonical order.
  const std::vector<QVec>& roots() const { return roots_; }
  /// Positive roots as simple-root coordinates, sorted by height then lexicographically.
  const std::vector<std::vector<long>>& positive_root_coords() const { return positive_coords_; }
  bool is_root(const QVec& ambient) const { return root_set_.count(ambient) != 0; }

  /// Columns are the basis vectors of `b` in ambient coordinates (ambient x rank),
  /// or the identity for Basis::ambient.
  const QMat& basis_matrix(Basis b) const;

  /// Ambient matrix of the simple reflection s_i.
  const QMat& reflection(int i) const { return reflections_.at(static_cast<std::size_t>(i)); }

  /// <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i).
  Rational coroot_pairing(const QVec& v, int i) const;

  QVec ambient_from_simple_coords(const std::vector<long>& coords) const;

 private:
  TypeLabel type_;
  std::vector<QVec> simple_roots_;
  std::vector<std::vector<int>> cartan_;
  std::vector<QVec> roots_;
  std::set<QVec, QVecLess> root_set_;
  std::vector<std::vector<long>> positive_coords_;
  std::vector<QMat> reflections_;
  QMat simple_root_basis_, weight_basis_, coroot_basis_, coweight_basis_, ambient_basis_;
};

/// Bundled coordinate model for a type label (E6/E7 live inside the E8 model in Q^8).
RootSystemPtr build_root_system(const TypeLabel& type);
RootSystemPtr build_root_system(std::string_view label);

std::vector<LatticeVector> positive_roots(const RootSystemPtr& rs);
LatticeVector highest_root(const RootSystemPtr& rs);

/// |W| as the product of the degrees, read from the height distribution of positive roots.
Integer weyl_order(const RootSystem& rs);

/// Exponents m_1 <= ... <= m_n from the conjugate of the height partition.
std::vector<int> exponents(const RootSystem& rs);

struct WeylElement {
  QMat matrix;
  std::vector<int> word;  // s_{word[0]} s_{word[1]} ... ; a witness, not canonical

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

/// Checks that `matrix` preserves the inner product and permutes the root set; throws InvalidInput otherwise.
WeylElement make_weyl_element(const RootSystem& rs, QMat matrix, std::vector<int> word = {});

WeylElement simple_reflection(const RootSystem& rs, int i);

inline constexpr std::size_t kDefaultWeylBound = 2000;

/// Full duplicate-free enumeration of W by closure of the simple reflections (BFS order).
/// Throws BoundExceeded when weyl_order(rs) > bound.
std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, std::size_t bound = kDefaultWeylBound);

/// Group generated by `generators` (word entries index into the generator list).
/// Throws BoundExceeded once more than `bound` elements appear.
std::vector<WeylElement> subgroup_closure(const std::vector<WeylElement>& generators,
                                          std::size_t bound = kDefaultWeylBound);

/// {g v : g in group} in canonical order.
std::vector<QVec> orbit(const std::vector<WeylElement>& group, const QVec& v);

/// w_0 via greedy descent from rho to -rho; its word is reduced of length |R+|.
WeylElement longest_element(const RootSystem& rs);

/// Permutation p with -w_0(omega_i) = omega_{p[i]}.
std::vector<int> weight_involution(const RootSystem& rs);

Json to_json(const RootSystem& rs);
Json to_json(const WeylElement& w);
RootSystemPtr root_system_from_json(const Json& j);
WeylElement weyl_element_from_json(const RootSystem& rs, const Json& j);

}  // namespace wk
