#include "wonderkit/toric.hpp"

#include <algorithm>
#include <numeric>

#include "wonderkit/errors.hpp"

namespace wk {

ToricSurface::ToricSurface(Fan fan, std::vector<std::string> divisor_names)
    : fan_(std::move(fan)), names_(std::move(divisor_names)) {
  if (fan_.lattice().rank() != 2) throw InvalidInput("a toric surface needs a rank-2 fan");
  if (!is_complete(fan_)) throw InvalidInput("toric surface fan is not complete");
  if (!is_smooth(fan_)) throw InvalidInput("toric surface fan is not smooth");
  if (names_.empty())
    for (std::size_t i = 0; i < fan_.rays().size(); ++i) names_.push_back("D" + std::to_string(i + 1));
  if (names_.size() != fan_.rays().size()) throw InvalidInput("one divisor name per ray required");
}

Fan weyl_chamber_fan(const RootSystem& rs, std::size_t bound) {
  const auto group = weyl_enumerate(rs, bound);
  std::vector<QVec> coweights;
  for (int i = 0; i < rs.rank(); ++i) coweights.push_back(rs.fundamental_coweight(i));
  Lattice lat(coweights, rs.ambient_dim());
  std::vector<RationalCone> chambers;
  for (const auto& w : group) {
    std::vector<QVec> g;
    for (const auto& c : coweights) g.push_back(w.matrix * c);
    chambers.emplace_back(std::move(g), lat);
  }
  return Fan(std::move(chambers), lat);
}

Fan subtorus_closure_fan(const std::vector<QVec>& plane_basis, const std::vector<WeylElement>& group) {
  if (plane_basis.empty()) throw InvalidInput("empty plane basis");
  Lattice lat(plane_basis, plane_basis.front().size());
  std::vector<RationalCone> cones;
  for (const auto& w : group) {
    std::vector<QVec> g;
    for (const auto& b : plane_basis) {
      QVec img = w.matrix * b;
      if (!lat.contains_point(img))
        throw InvalidInput("group element maps " + to_string(b) + " to " + to_string(img) +
                           ", outside the lattice of the plane");
      g.push_back(std::move(img));
    }
    cones.emplace_back(std::move(g), lat);
  }
  Fan f(std::move(cones), lat);
  if (!is_complete(f)) throw InvalidInput("translates of the plane cone do not cover the plane");
  return f;
}

int picard_number(const ToricSurface& s) { return static_cast<int>(s.fan().rays().size()) - 2; }

std::vector<std::vector<std::size_t>> ray_permutations(const Fan& f, const std::vector<WeylElement>& group) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : group) {
    std::vector<std::size_t> p;
    for (const auto& r : f.rays()) {
      const QVec img = g.matrix * r;
      if (!f.lattice().in_span(img)) throw InvalidInput("group element moves a ray out of the fan's span");
      p.push_back(f.ray_index(f.lattice().primitive(img)));
    }
    perms.push_back(std::move(p));
  }
  return perms;
}

namespace {

std::vector<std::size_t> orbit_labels(std::size_t n, const std::vector<std::vector<std::size_t>>& perms) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : perms)
    for (std::size_t i = 0; i < n; ++i) parent[find(i)] = find(p[i]);
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = find(i);
  return label;
}

void check_permutation(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) throw InvalidInput("permutation of the wrong size");
  std::vector<bool> hit(n);
  for (std::size_t x : p) {
    if (x >= n || hit[x]) throw InvalidInput("action entry is not a permutation");
    hit[x] = true;
  }
}

// (g.v)[g(j)] = v[j]
QVec permuted(const std::vector<std::size_t>& g, const QVec& v) {
  QVec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[g[j]] = v[j];
  return out;
}

}  // namespace

std::vector<std::size_t> ray_orbit_partition(const ToricSurface& s, const std::vector<WeylElement>& group) {
  const auto perms = ray_permutations(s.fan(), group);
  const auto label = orbit_labels(s.fan().rays().size(), perms);
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t l : label) ++sizes[l];
  std::vector<std::size_t> out;
  for (const auto& [l, c] : sizes) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZVec> toric_relations(const Fan& f) {
  const std::size_t k = f.lattice().rank();
  std::vector<ZVec> rows(k);
  for (const auto& r : f.rays()) {
    const QVec c = *f.lattice().coordinates(r);
    for (std::size_t i = 0; i < k; ++i) rows[i].push_back(c[i].get_num());
  }
  return rows;
}

int invariant_picard_rank(std::size_t basis_size, const std::vector<std::vector<std::size_t>>& action,
                          const std::vector<ZVec>& relations) {
  for (const auto& p : action) check_permutation(p, basis_size);
  std::vector<QVec> rel;
  for (const auto& r : relations) {
    if (r.size() != basis_size) throw InvalidInput("relation of the wrong length");
    rel.push_back(to_qvec(r));
  }
  const std::size_t rel_rank = rel.empty() ? 0 : rank(QMat::from_rows(rel, basis_size));
  for (const auto& p : action)
    for (const auto& r : rel) {
      auto extended = rel;
      extended.push_back(permuted(p, r));
      if (rank(QMat::from_rows(extended, basis_size)) != rel_rank)
        throw InvalidInput("the action does not preserve the relation span");
    }

  // Close the generators into the full permutation group.
  std::vector<std::size_t> id(basis_size);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<std::size_t>> group{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& g : frontier)
      for (const auto& p : action) {
        std::vector<std::size_t> h(basis_size);
        for (std::size_t j = 0; j < basis_size; ++j) h[j] = p[g[j]];
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    if (group.size() > 100000) throw BoundExceeded("permutation group larger than 100000");
    frontier = std::move(next);
  }

  const auto label = orbit_labels(basis_size, action);
  const std::size_t orbits = std::set<std::size_t>(label.begin(), label.end()).size();

  // Invariants of the quotient = invariants of the free part modulo averaged relations.
  std::vector<QVec> averaged;
  for (const auto& r : rel) {
    QVec s(basis_size);
    for (const auto& g : group) s += permuted(g, r);
    averaged.push_back(std::move(s));
  }
  const std::size_t avg_rank = averaged.empty() ? 0 : rank(QMat::from_rows(averaged, basis_size));
  return static_cast<int>(orbits - avg_rank);
}

long SurfaceBlowupLedger::coefficient(const std::string& name) const {
  for (const auto& [n, c] : components)
    if (n == name) return c;
  throw InvalidInput("unknown boundary component '" + name + "'");
}

namespace {

std::pair<std::string, std::string> edge(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

SurfaceBlowupLedger projective_plane_ledger() { return {{{"H", 3}}, {}, {}}; }

SurfaceBlowupLedger quadric_surface_ledger() { return {{{"H1", 2}, {"H2", 2}}, {{edge("H1", "H2"), 1}}, {}}; }

SurfaceBlowupLedger hirzebruch_ledger(long k) {
  if (k < 0) throw InvalidInput("Hirzebruch index must be nonnegative");
  return {{{"H1", k + 2}, {"H2", 2}}, {{edge("H1", "H2"), 1}}, {}};
}

SurfaceBlowupLedger blowup_boundary_point(const SurfaceBlowupLedger& ledger, const std::string& point_id,
                                          const std::set<std::string>& through) {
  if (through.size() >= 3)
    throw InvalidInput("blowup point '" + point_id + "' lies on " + std::to_string(through.size()) +
                       " components; the boundary would not be simple normal crossing");
  if (through.empty()) throw InvalidInput("blowup point '" + point_id + "' lies on no boundary component");
  SurfaceBlowupLedger out = ledger;
  long coeff = -1;
  for (const auto& n : through) coeff += ledger.coefficient(n);
  if (through.size() == 2) {
    auto key = edge(*through.begin(), *through.rbegin());
    auto it = out.meetings.find(key);
    if (it == out.meetings.end() || it->second == 0)
      throw InvalidInput("components " + key.first + " and " + key.second + " do not meet at a free point");
    if (--it->second == 0) out.meetings.erase(it);
  }
  const std::string e = "E" + std::to_string(ledger.history.size() + 1);
  out.components.emplace_back(e, coeff);
  for (const auto& n : through) ++out.meetings[edge(n, e)];
  out.history.push_back({point_id, {through.begin(), through.end()}, e});
  return out;
}

CoefficientSpectrum coefficient_spectrum(const SurfaceBlowupLedger& ledger) {
  CoefficientSpectrum s;
  for (const auto& [n, c] : ledger.components) {
    ++s.multiplicity[c];
    if (c < 2) s.violations.push_back(n);
  }
  return s;
}

std::string anticanonical_expression(const SurfaceBlowupLedger& ledger) {
  std::string out;
  for (const auto& [n, c] : ledger.components) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + " " + n;
  }
  return out;
}

Json to_json(const SurfaceBlowupLedger& ledger) {
  Json comps = Json::array();
  for (const auto& [n, c] : ledger.components) comps.push_back({{"name", n}, {"coefficient", c}});
  Json hist = Json::array();
  for (const auto& h : ledger.history)
    hist.push_back({{"point", h.point_id}, {"through", h.through}, {"exceptional", h.exceptional}});
  Json j;
  j["components"] = comps;
  j["history"] = hist;
  return j;
}

}  // namespace wk
