#pragma once

#include <optional>
#include <vector>

#include "wonderkit/json_io.hpp"
#include "wonderkit/linalg.hpp"
#include "wonderkit/rational.hpp"

namespace wk {

/// Free Z-module spanned by independent basis vectors of Q^d.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::vector<QVec> basis, std::size_t ambient_dim);
  static Lattice standard(std::size_t d);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }

  /// Coordinates in the lattice basis, or nullopt outside the rational span.
  std::optional<QVec> coordinates(const QVec& v) const;
  QVec from_coordinates(const QVec& c) const;
  bool in_span(const QVec& v) const { return coordinates(v).has_value(); }
  bool contains_point(const QVec& v) const;

  /// The primitive lattice vector on the ray through v (v nonzero, in the span).
  QVec primitive(const QVec& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::vector<QVec> basis_;
  std::size_t ambient_dim_ = 0;
};

/// Simplicial cone with primitive, independent generators in canonical order.
class RationalCone {
 public:
  RationalCone() = default;
  /// Normalizes generators to primitive lattice vectors and sorts them; throws
  /// InvalidInput for zero, dependent or off-lattice-span generators.
  RationalCone(std::vector<QVec> generators, Lattice lattice);

  const std::vector<QVec>& generators() const { return generators_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t dim() const { return generators_.size(); }
  std::size_t ambient_dim() const { return lattice_.ambient_dim(); }

  /// x in the cone iff equalities(x) = 0 and coordinates(x) >= 0.
  /// Rows of coordinate_forms give the generator coefficients of x in span.
  const std::vector<QVec>& coordinate_forms() const { return coordinate_forms_; }
  const std::vector<QVec>& span_equations() const { return span_equations_; }

  /// Generator coefficients of v, or nullopt outside the span.
  std::optional<QVec> generator_coefficients(const QVec& v) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.lattice_ == b.lattice_ && a.generators_ == b.generators_;
  }
  friend bool operator<(const RationalCone& a, const RationalCone& b);

 private:
  std::vector<QVec> generators_;
  Lattice lattice_;
  std::vector<QVec> coordinate_forms_;
  std::vector<QVec> span_equations_;
};

/// strict = relative-interior membership.
bool contains(const RationalCone& c, const QVec& v, bool strict = false);

/// Every generator subset as a cone, smallest first; the zero cone comes first.
std::vector<RationalCone> faces(const RationalCone& c);

bool is_face_of(const RationalCone& face, const RationalCone& c);

/// Generators extend to a basis of the reference lattice.
bool is_smooth(const RationalCone& c);

/// A point in the relative interior of every `interior_of` cone and inside every
/// `closed` cone, or nullopt. With no interior cones the origin is returned.
std::optional<QVec> common_interior_point(const std::vector<const RationalCone*>& interior_of,
                                          const std::vector<const RationalCone*>& closed = {});

/// c1 and c2 meet exactly in the cone on their common generators.
bool intersect_properly(const RationalCone& c1, const RationalCone& c2);

struct CoverDecision {
  bool covered = false;
  std::optional<QVec> uncovered_point;  // ambient witness when not covered
};

/// Exact decision whether target lies in the union of the cover cones (cell method).
CoverDecision cover_decision(const RationalCone& target, const std::vector<RationalCone>& cover);
bool covered_by(const RationalCone& target, const std::vector<RationalCone>& cover);

class Fan {
 public:
  Fan() = default;
  /// Drops cones that are faces of other given cones and validates pairwise
  /// proper intersection; throws InvalidInput on failure.
  Fan(std::vector<RationalCone> cones, Lattice lattice);

  const Lattice& lattice() const { return lattice_; }
  std::size_t ambient_dim() const { return lattice_.ambient_dim(); }
  /// Canonical order.
  const std::vector<RationalCone>& maximal_cones() const { return maximal_; }
  /// Primitive ray generators, canonical order.
  const std::vector<QVec>& rays() const { return rays_; }
  std::size_t ray_index(const QVec& primitive_ray) const;  // throws when absent
  std::vector<std::size_t> ray_indices(const RationalCone& c) const;

  /// All faces of all maximal cones, deduplicated, canonical order.
  std::vector<RationalCone> all_cones() const;
  bool has_cone(const RationalCone& c) const;
  /// Some cone of the fan contains v.
  bool in_support(const QVec& v) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.lattice_ == b.lattice_ && a.maximal_ == b.maximal_;
  }

 private:
  Lattice lattice_;
  std::vector<RationalCone> maximal_;
  std::vector<QVec> rays_;
};

bool is_complete(const Fan& f);
bool is_smooth(const Fan& f);

/// Replaces every cone containing the ray by the joins of the ray with the facets
/// avoiding it. Existing rays leave the fan unchanged. Throws outside the support.
Fan star_subdivision(const Fan& f, const QVec& ray);

Json to_json(const Fan& f);
Fan fan_from_json(const Json& j);
Json to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j, std::size_t ambient_dim, const std::string& where);

}  // namespace wk
