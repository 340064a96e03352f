#include "wonderkit/lattice.hpp"

#include "wonderkit/errors.hpp"

namespace wk {

std::vector<std::vector<int>> cartan_matrix(const RootSystem& rs) { return rs.cartan(); }

LatticeVector make_vector(const RootSystemPtr& rs, Basis basis, QVec coords) {
  const std::size_t expected = basis == Basis::ambient ? rs->ambient_dim() : static_cast<std::size_t>(rs->rank());
  if (coords.size() != expected)
    throw InvalidInput(to_string(basis) + " coordinates of " + rs->type().str() + " need " + std::to_string(expected) +
                       " entries, got " + std::to_string(coords.size()));
  return {std::move(coords), basis, rs};
}

LatticeVector to_basis(const LatticeVector& v, Basis target) {
  if (v.basis == target) return v;
  const QVec amb = v.ambient();
  if (target == Basis::ambient) return {amb, target, v.rs};
  const QMat& m = v.rs->basis_matrix(target);
  auto x = solve(m, amb);
  if (!x) throw InvalidInput("vector " + to_string(amb) + " is outside the span of the " + to_string(target) + " basis");
  return {std::move(*x), target, v.rs};
}

namespace {

void require_same_system(const LatticeVector& a, const LatticeVector& b) {
  if (!a.rs || !b.rs) throw InvalidInput("lattice vector without a root system");
  if (a.rs != b.rs && (a.rs->type() != b.rs->type() || a.rs->simple_roots() != b.rs->simple_roots()))
    throw InvalidInput("vectors belong to different root systems (" + a.rs->type().str() + ", " +
                       b.rs->type().str() + ")");
}

}  // namespace

Rational pair(const LatticeVector& weight_side, const LatticeVector& coweight_side) {
  require_same_system(weight_side, coweight_side);
  return dot(weight_side.ambient(), coweight_side.ambient());
}

LatticeVector coroot(const LatticeVector& root) {
  const QVec b = root.ambient();
  if (!root.rs->is_root(b)) throw InvalidInput(to_string(b) + " is not a root");
  return {Rational(2) / dot(b, b) * b, Basis::ambient, root.rs};
}

Integer weight_root_index(const RootSystem& rs) {
  const auto& c = rs.cartan();
  const std::size_t n = c.size();
  QMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = c[i][j];
  const Rational d = determinant(a);
  if (!is_integer(d) || d <= 0) throw InvariantViolation("Cartan determinant " + to_string(d) + " is not a positive integer");
  return d.get_num();
}

bool is_primitive_in_weight_lattice(const LatticeVector& v) {
  const LatticeVector w = to_basis(v, Basis::fund_weight);
  ZVec z;
  for (const auto& x : w.coords) {
    if (!is_integer(x)) throw InvalidInput(to_string(v.ambient()) + " is not in the weight lattice");
    z.push_back(x.get_num());
  }
  return gcd_of(z) == 1;  // gcd of the zero vector is 0
}

Rational minimal_curve_degree(const LatticeVector& lambda) {
  return pair(lambda, coroot(highest_root(lambda.rs)));
}

LatticeVector anticanonical_weight(const RootSystemPtr& rs) {
  QVec v = Rational(2) * rs->rho();
  for (const auto& a : rs->simple_roots()) v += a;
  for (int j = 0; j < rs->rank(); ++j)
    if (rs->coroot_pairing(v, j) <= 0)
      throw InvariantViolation("anticanonical weight of " + rs->type().str() + " is not regular dominant");
  return to_basis({v, Basis::ambient, rs}, Basis::fund_weight);
}

}  // namespace wk
