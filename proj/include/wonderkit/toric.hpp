#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wonderkit/polyhedra.hpp"
#include "wonderkit/rootsys.hpp"

namespace wk {

/// Complete smooth fan in a rank-2 lattice with one named boundary divisor per ray.
class ToricSurface {
 public:
  /// Names default to D1..Dr in ray order. Throws InvalidInput unless the fan is
  /// two-dimensional, complete and smooth.
  explicit ToricSurface(Fan fan, std::vector<std::string> divisor_names = {});

  const Fan& fan() const { return fan_; }
  const std::vector<std::string>& divisor_names() const { return names_; }

 private:
  Fan fan_;
  std::vector<std::string> names_;
};

/// Chambers w(sum Q+ omega_i^vee), w in W, in the coweight lattice.
Fan weyl_chamber_fan(const RootSystem& rs, std::size_t bound = kDefaultWeylBound);

/// Translates w(Q+ p_1 + Q+ p_2) of the cone on the plane basis, in the lattice Z p_1 + Z p_2.
/// Throws InvalidInput when some w fails to stabilize that lattice or the translates
/// do not form a complete fan.
Fan subtorus_closure_fan(const std::vector<QVec>& plane_basis, const std::vector<WeylElement>& group);

/// #rays - 2.
int picard_number(const ToricSurface& s);

/// Permutation of the ray list induced by each group element (images normalized to
/// primitive lattice vectors). Throws InvalidInput when an image is not a ray.
std::vector<std::vector<std::size_t>> ray_permutations(const Fan& f, const std::vector<WeylElement>& group);

/// Sorted orbit sizes of the rays.
std::vector<std::size_t> ray_orbit_partition(const ToricSurface& s, const std::vector<WeylElement>& group);

/// Rows sum_j <m_i, v_j> D_j over the dual lattice basis m_i (v_j in lattice coordinates).
std::vector<ZVec> toric_relations(const Fan& f);

/// Rank of ((Z^basis_size / relations) (x) Q)^G for the group generated by `action`.
/// Throws InvalidInput when the action does not preserve the relation span.
int invariant_picard_rank(std::size_t basis_size, const std::vector<std::vector<std::size_t>>& action,
                          const std::vector<ZVec>& relations);

struct BlowupRecord {
  std::string point_id;
  std::vector<std::string> through;
  std::string exceptional;
};

/// Boundary components of a surface with their -K coefficients and pairwise
/// intersection counts; blowups follow the strict-transform convention.
struct SurfaceBlowupLedger {
  std::vector<std::pair<std::string, long>> components;
  std::map<std::pair<std::string, std::string>, int> meetings;  // key ordered, count of intersection points
  std::vector<BlowupRecord> history;

  long coefficient(const std::string& name) const;
};

SurfaceBlowupLedger projective_plane_ledger();        // {H:3}
SurfaceBlowupLedger quadric_surface_ledger();         // {H1:2, H2:2}, H1 meets H2 once
SurfaceBlowupLedger hirzebruch_ledger(long k);        // {H1:k+2, H2:2}, H1 meets H2 once

/// New exceptional component E_i with coefficient sum(through) - 1. A two-component
/// center must be an intersection point of those components. Throws InvalidInput
/// when |through| is not 1 or 2.
SurfaceBlowupLedger blowup_boundary_point(const SurfaceBlowupLedger& ledger, const std::string& point_id,
                                          const std::set<std::string>& through);

struct CoefficientSpectrum {
  std::map<long, int> multiplicity;    // coefficient -> count
  std::vector<std::string> violations; // components with coefficient < 2
};

CoefficientSpectrum coefficient_spectrum(const SurfaceBlowupLedger& ledger);

/// "3 H + 2 E1" style, components in ledger order.
std::string anticanonical_expression(const SurfaceBlowupLedger& ledger);

Json to_json(const SurfaceBlowupLedger& ledger);

}  // namespace wk
