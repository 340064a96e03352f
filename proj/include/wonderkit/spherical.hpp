#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wonderkit/polyhedra.hpp"
#include "wonderkit/rootsys.hpp"

namespace wk {

// All colored-fan geometry lives in Q^n with coordinates in the fundamental
// coweights, so the coweight lattice is the standard lattice Z^n.

enum class DivisorKind { boundary, color };

struct RhoEntry {
  std::string symbol;
  DivisorKind kind = DivisorKind::color;
  QVec value;
};

/// Ordered map from divisor symbols to their images in the dual weight space.
class RhoTable {
 public:
  RhoTable() = default;
  explicit RhoTable(std::vector<RhoEntry> entries);

  const std::vector<RhoEntry>& entries() const { return entries_; }
  const RhoEntry& at(const std::string& symbol) const;
  bool has(const std::string& symbol) const;
  /// Boundary symbol whose image spans the ray of v, if any.
  std::optional<std::string> boundary_symbol_on_ray(const QVec& v) const;

  friend bool operator==(const RhoTable& a, const RhoTable& b);

 private:
  std::vector<RhoEntry> entries_;
};

struct ColoredCone {
  RationalCone cone;
  std::set<std::string> colors;

  friend bool operator==(const ColoredCone& a, const ColoredCone& b) {
    return a.cone == b.cone && a.colors == b.colors;
  }
  friend bool operator<(const ColoredCone& a, const ColoredCone& b);
};

/// Empty string when valid; otherwise the first failed condition: colors with
/// images in the cone, every other generator in the valuation cone, and relative
/// interior meeting the valuation cone.
std::string colored_cone_defect(const ColoredCone& c, const RationalCone& valuation_cone, const RhoTable& rho);

/// Faces whose relative interior meets the valuation cone, each with the colors
/// whose images lie in that face.
std::vector<ColoredCone> colored_faces(const ColoredCone& c, const RationalCone& valuation_cone, const RhoTable& rho);

bool is_colored_face(const ColoredCone& face, const ColoredCone& c, const RationalCone& valuation_cone,
                     const RhoTable& rho);

class ColoredFan {
 public:
  /// Closes `generating` under colored faces and validates every cone and the
  /// pairwise disjointness of relative interiors inside the valuation cone.
  ColoredFan(std::vector<ColoredCone> generating, RationalCone valuation_cone, RhoTable rho);

  /// Canonical order: dimension, generators, colors.
  const std::vector<ColoredCone>& cones() const { return cones_; }
  std::vector<ColoredCone> maximal_cones() const;
  const RationalCone& valuation_cone() const { return valuation_; }
  const RhoTable& rho_table() const { return rho_; }
  std::size_t dim() const { return valuation_.ambient_dim(); }

  friend bool operator==(const ColoredFan& a, const ColoredFan& b) {
    return a.cones_ == b.cones_ && a.valuation_ == b.valuation_ && a.rho_ == b.rho_;
  }

 private:
  std::vector<ColoredCone> cones_;
  RationalCone valuation_;
  RhoTable rho_;
};

/// rho(D_i) = -omega_i^vee, rho(D(omega_j)) = alpha_j^vee, valuation cone cone{-omega_i^vee}.
RhoTable wonderful_rho_table(const RootSystem& rs);
RationalCone valuation_cone(const RootSystem& rs);

/// All colored faces of (valuation cone, no colors).
ColoredFan wonderful_colored_fan(const RootSystem& rs);

/// Valuation cone lies in the union of the fan's cones.
bool is_complete_embedding(const ColoredFan& f);

/// Chain cone{-omega_1^vee, alpha_1^vee..alpha_{k-1}^vee} with colors D(omega_1)..D(omega_{k-1}) in type C_n.
ColoredCone z_chain_cone(const RootSystem& rs, int k);
ColoredFan z_colored_fan(int n);

/// Colored faces of (cone(alpha_1^vee..alpha_i^vee, -omega_1^vee, -omega_{i+2}^vee..-omega_n^vee), {D(omega_1)..D(omega_i)}),
/// i = 0..n-1, in type C_n.
std::vector<ColoredFan> blowup_chain_fans(int n);

struct ExtensionDecision {
  bool extends = false;
  std::string obstruction;  // first source cone without an admissible target, when it fails
};

/// Every source colored cone maps into some target colored cone, and each of its
/// colors is dominant or belongs to that target cone's colors.
ExtensionDecision extension_decision(const ColoredFan& source, const ColoredFan& target, const QMat& map,
                                     const std::set<std::string>& dominant_colors);
bool extends_to_morphism(const ColoredFan& source, const ColoredFan& target, const QMat& map,
                         const std::set<std::string>& dominant_colors);

/// Valid colored cones strictly between `lower` and `upper`: generators drawn from
/// the rho images, cone and colors inside the upper ones, and the relative interior
/// of the lower cone inside the relative interior of the candidate.
std::vector<ColoredCone> intermediate_colored_cones(const ColoredCone& lower, const ColoredCone& upper,
                                                    const RationalCone& valuation_cone, const RhoTable& rho);

/// Free abelian group on `symbols` modulo the given integer relations.
struct DivisorLedger {
  std::vector<std::string> symbols;
  std::vector<ZVec> relations;
};

struct PicardPresentation {
  int free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  /// Class of each symbol: torsion coordinates (mod the factors) then free coordinates.
  std::vector<ZVec> images;
};

/// Smith-normal-form cokernel; each free coordinate is oriented so its first nonzero image is positive.
PicardPresentation picard_presentation(const DivisorLedger& ledger);

/// Rows f = alpha_k of the root lattice: entry <rho(D), alpha_k> for each symbol.
DivisorLedger wonderful_divisor_ledger(const RootSystem& rs);

/// Symbols OG(1), D(omega_1)..D(omega_n) with rows -delta_{1k} OG(1) + sum_j <alpha_k, alpha_j^vee> D(omega_j) (type B_n).
DivisorLedger spinor_divisor_ledger(int n);

using FormalDivisor = std::vector<std::pair<std::string, Integer>>;

/// sum m_D D over colors plus every colorless ray's boundary divisor with coefficient 1.
/// Throws InvalidInput when a color lacks an m value or a colorless ray has no symbol.
FormalDivisor anticanonical_divisor(const ColoredFan& f, const std::map<std::string, Integer>& m_table);

/// Weight of each symbol of the wonderful compactification (D(omega_j) -> omega_j,
/// D_k -> alpha_k), in fundamental-weight coordinates, read off the divisor relations.
std::map<std::string, QVec> wonderful_divisor_weights(const RootSystem& rs);

QVec divisor_weight(const FormalDivisor& d, const std::map<std::string, QVec>& weights);

struct OrbitPoset {
  std::vector<ColoredCone> nodes;                        // fan order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (face, cone) Hasse edges
};

OrbitPoset orbit_poset(const ColoredFan& f);
bool is_chain(const OrbitPoset& p);
/// Isomorphic to the subsets of a rank-sized set ordered by inclusion.
bool is_boolean_lattice(const OrbitPoset& p, std::size_t rank);

/// (-w_0 omega_k, omega_k) in fundamental-weight coordinates; k is 1-based.
std::pair<LatticeVector, LatticeVector> closed_orbit_restriction(const RootSystemPtr& rs, int k);

Json to_json(const ColoredFan& f);
ColoredFan colored_fan_from_json(const Json& j);
std::string to_string(const ColoredCone& c);

}  // namespace wk
