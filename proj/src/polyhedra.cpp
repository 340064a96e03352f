#include "wonderkit/polyhedra.hpp"

#include <algorithm>
#include <set>

#include "wonderkit/errors.hpp"
#include "wonderkit/feasibility.hpp"
#include "wonderkit/smith.hpp"

namespace wk {

namespace {

std::size_t rank_of_columns(const std::vector<QVec>& cols, std::size_t rows) {
  if (cols.empty()) return 0;
  return rank(QMat::from_columns(cols, rows));
}

}  // namespace

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(std::vector<QVec> basis, std::size_t ambient_dim) : basis_(std::move(basis)), ambient_dim_(ambient_dim) {
  for (const auto& b : basis_)
    if (b.size() != ambient_dim_) throw InvalidInput("lattice basis vector has wrong dimension");
  if (rank_of_columns(basis_, ambient_dim_) != basis_.size())
    throw InvalidInput("lattice basis vectors are linearly dependent");
}

Lattice Lattice::standard(std::size_t d) {
  std::vector<QVec> b;
  for (std::size_t i = 0; i < d; ++i) b.push_back(unit_vec(d, i));
  return Lattice(std::move(b), d);
}

std::optional<QVec> Lattice::coordinates(const QVec& v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("vector dimension differs from the lattice's ambient dimension");
  if (basis_.empty()) {
    if (is_zero(v)) return QVec{};
    return std::nullopt;
  }
  return solve(QMat::from_columns(basis_, ambient_dim_), v);
}

QVec Lattice::from_coordinates(const QVec& c) const {
  if (c.size() != basis_.size()) throw InvalidInput("lattice coordinate count mismatch");
  QVec v = zero_vec(ambient_dim_);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) v += c[i] * basis_[i];
  return v;
}

bool Lattice::contains_point(const QVec& v) const {
  auto c = coordinates(v);
  return c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return is_integer(x); });
}

QVec Lattice::primitive(const QVec& v) const {
  auto c = coordinates(v);
  if (!c) throw InvalidInput(to_string(v) + " is outside the span of the lattice");
  if (is_zero(*c)) throw InvalidInput("the zero vector spans no ray");
  return from_coordinates(to_qvec(primitive_integer(*c)));
}

// ---------------------------------------------------------------- RationalCone

RationalCone::RationalCone(std::vector<QVec> generators, Lattice lattice) : lattice_(std::move(lattice)) {
  const std::size_t d = lattice_.ambient_dim();
  for (auto& g : generators) {
    if (g.size() != d) throw InvalidInput("cone generator has wrong dimension");
    generators_.push_back(lattice_.primitive(g));
  }
  std::sort(generators_.begin(), generators_.end(), QVecLess{});
  if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end())
    throw InvalidInput("repeated cone generator");
  if (rank_of_columns(generators_, d) != generators_.size())
    throw InvalidInput("cone generators are linearly dependent (only simplicial cones are supported)");

  std::vector<QVec> cols = generators_;
  for (auto& c : complement_columns(QMat::from_columns(generators_, d))) cols.push_back(std::move(c));
  const QMat inv = *inverse(QMat::from_columns(cols, d));
  for (std::size_t r = 0; r < d; ++r)
    (r < generators_.size() ? coordinate_forms_ : span_equations_).push_back(inv.row(r));
}

std::optional<QVec> RationalCone::generator_coefficients(const QVec& v) const {
  if (v.size() != ambient_dim()) throw InvalidInput("vector dimension differs from the cone's ambient dimension");
  for (const auto& e : span_equations_)
    if (dot(e, v) != 0) return std::nullopt;
  QVec c;
  for (const auto& f : coordinate_forms_) c.push_back(dot(f, v));
  return c;
}

bool operator<(const RationalCone& a, const RationalCone& b) {
  if (a.generators_.size() != b.generators_.size()) return a.generators_.size() < b.generators_.size();
  return std::lexicographical_compare(a.generators_.begin(), a.generators_.end(), b.generators_.begin(),
                                      b.generators_.end(), QVecLess{});
}

bool contains(const RationalCone& c, const QVec& v, bool strict) {
  auto coeffs = c.generator_coefficients(v);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(),
                     [strict](const Rational& x) { return strict ? x > 0 : x >= 0; });
}

std::vector<RationalCone> faces(const RationalCone& c) {
  const std::size_t m = c.dim();
  if (m > 20) throw BoundExceeded("face enumeration of a cone with more than 20 generators");
  std::vector<unsigned long> masks;
  for (unsigned long s = 0; s < (1UL << m); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned long a, unsigned long b) { return __builtin_popcountl(a) < __builtin_popcountl(b); });
  std::vector<RationalCone> out;
  for (unsigned long s : masks) {
    std::vector<QVec> g;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (1UL << i)) g.push_back(c.generators()[i]);
    out.emplace_back(std::move(g), c.lattice());
  }
  return out;
}

bool is_face_of(const RationalCone& face, const RationalCone& c) {
  if (!(face.lattice() == c.lattice())) return false;
  const auto& g = c.generators();
  return std::all_of(face.generators().begin(), face.generators().end(),
                     [&](const QVec& v) { return std::binary_search(g.begin(), g.end(), v, QVecLess{}); });
}

bool is_smooth(const RationalCone& c) {
  if (c.dim() == 0) return true;
  std::vector<ZVec> rows;
  for (const auto& g : c.generators()) {
    ZVec z;
    const QVec coords = *c.lattice().coordinates(g);
    for (const auto& x : coords) z.push_back(x.get_num());
    rows.push_back(std::move(z));
  }
  const SmithForm s = smith_normal_form(ZMat::from_rows(rows));
  if (s.invariant_factors.size() != c.dim()) return false;
  return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(), [](const Integer& d) { return d == 1; });
}

std::optional<QVec> common_interior_point(const std::vector<const RationalCone*>& interior_of,
                                          const std::vector<const RationalCone*>& closed) {
  std::size_t d = 0;
  for (const auto* c : interior_of) d = c->ambient_dim();
  for (const auto* c : closed) d = c->ambient_dim();
  if (interior_of.empty()) return zero_vec(d);
  for (const auto* c : interior_of)
    if (c->dim() == 0) {
      // relative interior of the zero cone is the origin
      for (const auto* o : interior_of)
        if (o->dim() != 0) return std::nullopt;
      return zero_vec(d);
    }

  // Every constraint is homogeneous, so strict positivity can be rescaled to >= 1.
  std::vector<LinearConstraint> ineq, eq;
  for (const auto* c : interior_of) {
    for (const auto& f : c->coordinate_forms()) ineq.push_back({f, Rational(1)});
    for (const auto& e : c->span_equations()) eq.push_back({e, Rational(0)});
  }
  for (const auto* c : closed) {
    for (const auto& f : c->coordinate_forms()) ineq.push_back({f, Rational(0)});
    for (const auto& e : c->span_equations()) eq.push_back({e, Rational(0)});
  }
  return feasible_point(d, ineq, eq);
}

bool intersect_properly(const RationalCone& c1, const RationalCone& c2) {
  const auto& g1 = c1.generators();
  const auto& g2 = c2.generators();
  const std::size_t m1 = g1.size(), m2 = g2.size(), d = c1.ambient_dim();
  std::vector<bool> shared(m1);
  bool any_private = false;
  for (std::size_t i = 0; i < m1; ++i) {
    shared[i] = std::binary_search(g2.begin(), g2.end(), g1[i], QVecLess{});
    any_private = any_private || !shared[i];
  }
  if (!any_private) return true;  // c1 is a face of c2

  // Feasible iff some point of c1 n c2 uses a generator of c1 outside c2:
  // sum y g1 = sum z g2, y, z >= 0, sum_{private} y = 1.
  const std::size_t nv = m1 + m2;
  std::vector<LinearConstraint> ineq, eq;
  for (std::size_t i = 0; i < nv; ++i) ineq.push_back({unit_vec(nv, i), Rational(0)});
  for (std::size_t r = 0; r < d; ++r) {
    QVec a(nv);
    for (std::size_t i = 0; i < m1; ++i) a[i] = g1[i][r];
    for (std::size_t j = 0; j < m2; ++j) a[m1 + j] = -g2[j][r];
    eq.push_back({std::move(a), Rational(0)});
  }
  QVec s(nv);
  for (std::size_t i = 0; i < m1; ++i)
    if (!shared[i]) s[i] = 1;
  eq.push_back({std::move(s), Rational(1)});
  return !feasible_point(nv, ineq, eq).has_value();
}

// ---------------------------------------------------------------- covered_by

namespace {

// Hyperplane normal up to nonzero scaling: primitive integer, first nonzero entry positive.
QVec canonical_normal(const QVec& h) {
  ZVec z = primitive_integer(h);
  for (const auto& x : z) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : z) y = -y;
    break;
  }
  return to_qvec(z);
}

bool is_unit_direction(const QVec& h) {
  std::size_t nonzero = 0;
  for (const auto& x : h)
    if (x != 0) ++nonzero;
  return nonzero == 1;
}

struct Cell {
  std::vector<int> signs;
  QVec witness;  // target-generator coordinates, strictly inside the cell
};

}  // namespace

CoverDecision cover_decision(const RationalCone& target, const std::vector<RationalCone>& cover) {
  for (const auto& c : cover)
    if (c.ambient_dim() != target.ambient_dim()) throw InvalidInput("cover cone in a different ambient space");
  const std::size_t m = target.dim();
  const auto& t = target.generators();
  if (m == 0) {
    if (!cover.empty()) return {true, std::nullopt};
    return {false, zero_vec(target.ambient_dim())};
  }
  auto ambient = [&](const QVec& y) {
    QVec x = zero_vec(target.ambient_dim());
    for (std::size_t i = 0; i < m; ++i) x += y[i] * t[i];
    return x;
  };

  // Cones whose span misses part of span(target) meet the target in a nowhere-dense
  // closed set and cannot change the answer.
  std::vector<const RationalCone*> relevant;
  std::set<QVec, QVecLess> normals;
  for (const auto& c : cover) {
    bool spans = true;
    for (const auto& e : c.span_equations())
      for (const auto& g : t)
        if (dot(e, g) != 0) spans = false;
    if (!spans) continue;
    relevant.push_back(&c);
    for (const auto& f : c.coordinate_forms()) {
      QVec h(m);
      for (std::size_t i = 0; i < m; ++i) h[i] = dot(f, t[i]);
      if (is_zero(h) || is_unit_direction(h)) continue;
      normals.insert(canonical_normal(h));
    }
  }
  if (relevant.empty()) return {false, ambient(QVec(m, Rational(1)))};

  const std::vector<QVec> hyper(normals.begin(), normals.end());
  std::vector<Cell> cells{{{}, QVec(m, Rational(1))}};
  for (std::size_t k = 0; k < hyper.size(); ++k) {
    std::vector<Cell> next;
    for (const auto& cell : cells) {
      const Rational at = dot(hyper[k], cell.witness);
      for (int s : {1, -1}) {
        Cell split{cell.signs, cell.witness};
        split.signs.push_back(s);
        if (s * at <= 0) {
          std::vector<LinearConstraint> ineq;
          for (std::size_t i = 0; i < m; ++i) ineq.push_back({unit_vec(m, i), Rational(1)});
          for (std::size_t j = 0; j <= k; ++j)
            ineq.push_back({Rational(split.signs[j]) * hyper[j], Rational(1)});
          auto y = feasible_point(m, ineq);
          if (!y) continue;
          split.witness = std::move(*y);
        }
        next.push_back(std::move(split));
      }
    }
    cells = std::move(next);
  }

  for (const auto& cell : cells) {
    const QVec x = ambient(cell.witness);
    const bool hit = std::any_of(relevant.begin(), relevant.end(), [&](const RationalCone* c) { return contains(*c, x); });
    if (!hit) return {false, x};
  }
  return {true, std::nullopt};
}

bool covered_by(const RationalCone& target, const std::vector<RationalCone>& cover) {
  return cover_decision(target, cover).covered;
}

// ---------------------------------------------------------------- Fan

Fan::Fan(std::vector<RationalCone> cones, Lattice lattice) : lattice_(std::move(lattice)) {
  if (cones.empty()) cones.emplace_back(std::vector<QVec>{}, lattice_);
  for (const auto& c : cones)
    if (!(c.lattice() == lattice_)) throw InvalidInput("fan cones use different reference lattices");
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool is_face = false;
    for (std::size_t j = 0; j < cones.size() && !is_face; ++j)
      is_face = i != j && is_face_of(cones[i], cones[j]);
    if (!is_face) maximal_.push_back(cones[i]);
  }
  std::sort(maximal_.begin(), maximal_.end(), [](const RationalCone& a, const RationalCone& b) {
    return std::lexicographical_compare(a.generators().begin(), a.generators().end(), b.generators().begin(),
                                        b.generators().end(), QVecLess{});
  });
  for (std::size_t i = 0; i < maximal_.size(); ++i)
    for (std::size_t j = i + 1; j < maximal_.size(); ++j)
      if (!intersect_properly(maximal_[i], maximal_[j]))
        throw InvalidInput("cones " + std::to_string(i) + " and " + std::to_string(j) +
                           " do not meet in a common face");
  std::set<QVec, QVecLess> rays;
  for (const auto& c : maximal_) rays.insert(c.generators().begin(), c.generators().end());
  rays_.assign(rays.begin(), rays.end());
}

std::size_t Fan::ray_index(const QVec& r) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), r, QVecLess{});
  if (it == rays_.end() || *it != r) throw InvalidInput(to_string(r) + " is not a ray of the fan");
  return static_cast<std::size_t>(it - rays_.begin());
}

std::vector<std::size_t> Fan::ray_indices(const RationalCone& c) const {
  std::vector<std::size_t> idx;
  for (const auto& g : c.generators()) idx.push_back(ray_index(g));
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<RationalCone> Fan::all_cones() const {
  std::vector<RationalCone> out;
  for (const auto& c : maximal_)
    for (auto& f : faces(c)) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Fan::has_cone(const RationalCone& c) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const RationalCone& m) { return is_face_of(c, m); });
}

bool Fan::in_support(const QVec& v) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const RationalCone& m) { return contains(m, v); });
}

namespace {

// Half-plane index then counter-clockwise order from the positive first axis.
bool angular_less(const QVec& a, const QVec& b) {
  auto half = [](const QVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace

bool is_complete(const Fan& f) {
  const Lattice& lat = f.lattice();
  const std::size_t k = lat.rank();
  if (k == 0) return true;
  if (k == 2) {
    std::vector<QVec> coords;
    for (const auto& r : f.rays()) coords.push_back(*lat.coordinates(r));
    if (coords.size() < 3) return false;
    std::sort(coords.begin(), coords.end(), angular_less);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const QVec& a = coords[i];
      const QVec& b = coords[(i + 1) % coords.size()];
      if (a[0] * b[1] - a[1] * b[0] <= 0) return false;
      if (!f.has_cone(RationalCone({lat.from_coordinates(a), lat.from_coordinates(b)}, lat))) return false;
    }
    return true;
  }
  // The k+1 simplicial cones on {e_1..e_k, -sum e_i} cover the span.
  std::vector<QVec> pts;
  QVec neg = zero_vec(k);
  for (std::size_t i = 0; i < k; ++i) {
    pts.push_back(lat.basis()[i]);
    neg[i] = -1;
  }
  pts.push_back(lat.from_coordinates(neg));
  for (std::size_t skip = 0; skip <= k; ++skip) {
    std::vector<QVec> g;
    for (std::size_t i = 0; i <= k; ++i)
      if (i != skip) g.push_back(pts[i]);
    if (!covered_by(RationalCone(std::move(g), lat), f.maximal_cones())) return false;
  }
  return true;
}

bool is_smooth(const Fan& f) {
  return std::all_of(f.maximal_cones().begin(), f.maximal_cones().end(),
                     [](const RationalCone& c) { return is_smooth(c); });
}

Fan star_subdivision(const Fan& f, const QVec& ray) {
  const QVec r = f.lattice().primitive(ray);
  if (std::binary_search(f.rays().begin(), f.rays().end(), r, QVecLess{})) return f;
  std::vector<RationalCone> cones;
  bool hit = false;
  for (const auto& c : f.maximal_cones()) {
    auto coeffs = c.generator_coefficients(r);
    const bool inside =
        coeffs && std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& x) { return x >= 0; });
    if (!inside) {
      cones.push_back(c);
      continue;
    }
    hit = true;
    for (std::size_t s = 0; s < c.dim(); ++s) {
      if ((*coeffs)[s] == 0) continue;
      std::vector<QVec> g = c.generators();
      g[s] = r;
      cones.emplace_back(std::move(g), f.lattice());
    }
  }
  if (!hit) throw InvalidInput("ray " + to_string(ray) + " lies outside the support of the fan");
  return Fan(std::move(cones), f.lattice());
}

// ---------------------------------------------------------------- JSON

Json to_json(const Lattice& l) {
  Json b = Json::array();
  for (const auto& v : l.basis()) b.push_back(to_json(v));
  return b;
}

Lattice lattice_from_json(const Json& j, std::size_t ambient_dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of basis vectors");
  std::vector<QVec> basis;
  for (std::size_t i = 0; i < j.size(); ++i) {
    QVec v = qvec_from_json(j[i], where + "[" + std::to_string(i) + "]");
    if (v.size() != ambient_dim)
      throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(ambient_dim) + " entries");
    basis.push_back(std::move(v));
  }
  try {
    return Lattice(std::move(basis), ambient_dim);
  } catch (const InvalidInput& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json to_json(const Fan& f) {
  Json j;
  j["ambient_dim"] = f.ambient_dim();
  j["lattice"] = to_json(f.lattice());
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(to_json(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : f.maximal_cones()) cones.push_back(f.ray_indices(c));
  j["maximal_cones"] = cones;
  return j;
}

Fan fan_from_json(const Json& j) {
  const Json& dim = require_field(j, "ambient_dim", "fan");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0 || dim.get<std::size_t>() > 64)
    throw ParseError("fan.ambient_dim: expected an integer between 1 and 64");
  const std::size_t d = dim.get<std::size_t>();
  Lattice lat = Lattice::standard(d);
  if (auto it = j.find("lattice"); it != j.end()) lat = lattice_from_json(*it, d, "fan.lattice");

  const Json& rays_j = require_field(j, "rays", "fan");
  if (!rays_j.is_array()) throw ParseError("fan.rays: expected an array");
  std::vector<QVec> rays;
  for (std::size_t i = 0; i < rays_j.size(); ++i) {
    const std::string where = "fan.rays[" + std::to_string(i) + "]";
    QVec v = qvec_from_json(rays_j[i], where);
    if (v.size() != d) throw ParseError(where + ": expected " + std::to_string(d) + " entries");
    rays.push_back(std::move(v));
  }
  const Json& cones_j = require_field(j, "maximal_cones", "fan");
  if (!cones_j.is_array()) throw ParseError("fan.maximal_cones: expected an array");
  std::vector<RationalCone> cones;
  for (std::size_t i = 0; i < cones_j.size(); ++i) {
    const std::string where = "fan.maximal_cones[" + std::to_string(i) + "]";
    if (!cones_j[i].is_array()) throw ParseError(where + ": expected an array of ray indices");
    std::vector<QVec> g;
    for (const auto& idx : cones_j[i]) {
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= rays.size())
        throw ParseError(where + ": ray index out of range");
      g.push_back(rays[idx.get<std::size_t>()]);
    }
    cones.emplace_back(std::move(g), lat);
  }
  return Fan(std::move(cones), lat);
}

}  // namespace wk
