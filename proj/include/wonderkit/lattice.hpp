#pragma once

#include <vector>

#include "wonderkit/rootsys.hpp"

namespace wk {

/// A_ij = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(const RootSystem& rs);

/// Same ambient vector expressed in `target`. Throws InvalidInput when the vector
/// leaves the span of the target basis (possible for E6/E7 inside Q^8).
LatticeVector to_basis(const LatticeVector& v, Basis target);

LatticeVector make_vector(const RootSystemPtr& rs, Basis basis, QVec coords);

/// (lambda, mu) of the ambient representatives; <omega_i, alpha_j^vee> = delta_ij.
/// Throws InvalidInput for vectors of different root systems.
Rational pair(const LatticeVector& weight_side, const LatticeVector& coweight_side);

/// The coroot 2 beta / (beta, beta) of a root, in the ambient basis.
LatticeVector coroot(const LatticeVector& root);

/// [weight lattice : root lattice] = det of the Cartan matrix.
Integer weight_root_index(const RootSystem& rs);

/// gcd of the fundamental-weight coordinates is 1. The zero vector is not primitive.
/// Throws InvalidInput when v is not in the weight lattice.
bool is_primitive_in_weight_lattice(const LatticeVector& v);

/// <lambda, theta^vee>.
Rational minimal_curve_degree(const LatticeVector& lambda);

/// 2 rho + sum alpha_i in the fundamental-weight basis; throws InvariantViolation
/// unless it pairs strictly positively with every simple coroot.
LatticeVector anticanonical_weight(const RootSystemPtr& rs);

}  // namespace wk
