#include "wonderkit/spherical.hpp"

#include <algorithm>

#include "wonderkit/errors.hpp"
#include "wonderkit/lattice.hpp"
#include "wonderkit/smith.hpp"

namespace wk {

namespace {

// a = t b for some t > 0.
bool same_ray(const QVec& a, const QVec& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  std::optional<Rational> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) {
      if (a[i] != 0) return false;
      continue;
    }
    const Rational r = a[i] / b[i];
    if (r <= 0 || (t && *t != r)) return false;
    t = r;
  }
  return true;
}

std::string color_name(int j) { return "D(omega_" + std::to_string(j) + ")"; }
std::string boundary_name(int i) { return "D_" + std::to_string(i); }

QVec coroot_in_coweights(const std::vector<std::vector<int>>& cartan, std::size_t j) {
  QVec v;
  for (const auto& row : cartan) v.push_back(Rational(row[j]));  // column j
  return v;
}

bool all_in(const std::vector<QVec>& gens, const RationalCone& c) {
  return std::all_of(gens.begin(), gens.end(), [&](const QVec& g) { return contains(c, g); });
}

bool interior_meets(const RationalCone& face, const RationalCone& valuation_cone) {
  if (all_in(face.generators(), valuation_cone)) return true;
  return common_interior_point({&face}, {&valuation_cone}).has_value();
}

}  // namespace

// ---------------------------------------------------------------- RhoTable

RhoTable::RhoTable(std::vector<RhoEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> names;
  for (const auto& e : entries_) {
    if (!names.insert(e.symbol).second) throw InvalidInput("duplicate divisor symbol '" + e.symbol + "'");
    if (e.value.size() != entries_.front().value.size()) throw InvalidInput("rho images of different dimensions");
  }
}

const RhoEntry& RhoTable::at(const std::string& symbol) const {
  for (const auto& e : entries_)
    if (e.symbol == symbol) return e;
  throw InvalidInput("unknown divisor symbol '" + symbol + "'");
}

bool RhoTable::has(const std::string& symbol) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const RhoEntry& e) { return e.symbol == symbol; });
}

std::optional<std::string> RhoTable::boundary_symbol_on_ray(const QVec& v) const {
  for (const auto& e : entries_)
    if (e.kind == DivisorKind::boundary && same_ray(e.value, v)) return e.symbol;
  return std::nullopt;
}

bool operator==(const RhoTable& a, const RhoTable& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto &x = a.entries_[i], &y = b.entries_[i];
    if (x.symbol != y.symbol || x.kind != y.kind || x.value != y.value) return false;
  }
  return true;
}

// ---------------------------------------------------------------- colored cones

bool operator<(const ColoredCone& a, const ColoredCone& b) {
  if (a.cone < b.cone) return true;
  if (b.cone < a.cone) return false;
  return a.colors < b.colors;
}

std::string colored_cone_defect(const ColoredCone& c, const RationalCone& valuation_cone, const RhoTable& rho) {
  for (const auto& d : c.colors) {
    if (!rho.has(d)) return "unknown color " + d;
    const RhoEntry& e = rho.at(d);
    if (e.kind != DivisorKind::color) return d + " is not a color";
    if (is_zero(e.value)) return "color " + d + " has zero image";
    if (!contains(c.cone, e.value)) return "image of " + d + " lies outside the cone";
  }
  for (const auto& g : c.cone.generators()) {
    const bool from_color = std::any_of(c.colors.begin(), c.colors.end(),
                                        [&](const std::string& d) { return same_ray(rho.at(d).value, g); });
    if (!from_color && !contains(valuation_cone, g))
      return "generator " + to_string(g) + " is neither a color image nor in the valuation cone";
  }
  if (!interior_meets(c.cone, valuation_cone)) return "relative interior misses the valuation cone";
  return {};
}

std::vector<ColoredCone> colored_faces(const ColoredCone& c, const RationalCone& valuation_cone, const RhoTable& rho) {
  std::vector<ColoredCone> out;
  for (auto& f : faces(c.cone)) {
    if (!interior_meets(f, valuation_cone)) continue;
    std::set<std::string> colors;
    for (const auto& d : c.colors)
      if (contains(f, rho.at(d).value)) colors.insert(d);
    out.push_back({std::move(f), std::move(colors)});
  }
  return out;
}

bool is_colored_face(const ColoredCone& face, const ColoredCone& c, const RationalCone& valuation_cone,
                     const RhoTable& rho) {
  if (!is_face_of(face.cone, c.cone)) return false;
  const auto all = colored_faces(c, valuation_cone, rho);
  return std::find(all.begin(), all.end(), face) != all.end();
}

std::string to_string(const ColoredCone& c) {
  std::string s = "(cone{";
  for (std::size_t i = 0; i < c.cone.generators().size(); ++i)
    s += (i ? ", " : "") + to_string(c.cone.generators()[i]);
  s += "}, {";
  bool first = true;
  for (const auto& d : c.colors) {
    s += (first ? "" : ", ") + d;
    first = false;
  }
  return s + "})";
}

// ---------------------------------------------------------------- ColoredFan

ColoredFan::ColoredFan(std::vector<ColoredCone> generating, RationalCone valuation_cone, RhoTable rho)
    : valuation_(std::move(valuation_cone)), rho_(std::move(rho)) {
  if (generating.empty()) throw InvalidInput("a colored fan needs at least one colored cone");
  std::vector<std::size_t> origin;  // generating cone each entry came from
  for (std::size_t g = 0; g < generating.size(); ++g) {
    const auto& c = generating[g];
    if (c.cone.ambient_dim() != valuation_.ambient_dim()) throw InvalidInput("colored cone in a different space");
    if (auto defect = colored_cone_defect(c, valuation_, rho_); !defect.empty())
      throw InvalidInput("invalid colored cone " + to_string(c) + ": " + defect);
    for (auto& f : colored_faces(c, valuation_, rho_)) {
      cones_.push_back(std::move(f));
      origin.push_back(g);
    }
  }
  // Disjoint relative interiors inside the valuation cone; faces of one simplicial
  // cone are disjoint automatically.
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (std::size_t j = i + 1; j < cones_.size(); ++j) {
      if (cones_[i].cone == cones_[j].cone) {
        if (cones_[i].colors != cones_[j].colors)
          throw InvalidInput("cone " + to_string(cones_[i]) + " appears with two color sets");
        continue;
      }
      if (origin[i] == origin[j]) continue;
      if (common_interior_point({&cones_[i].cone, &cones_[j].cone}, {&valuation_}))
        throw InvalidInput("colored cones " + to_string(cones_[i]) + " and " + to_string(cones_[j]) +
                           " overlap inside the valuation cone");
    }
  std::sort(cones_.begin(), cones_.end());
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

std::vector<ColoredCone> ColoredFan::maximal_cones() const {
  std::vector<ColoredCone> out;
  for (const auto& c : cones_) {
    const bool below = std::any_of(cones_.begin(), cones_.end(), [&](const ColoredCone& o) {
      return o.cone.dim() > c.cone.dim() && is_face_of(c.cone, o.cone);
    });
    if (!below) out.push_back(c);
  }
  return out;
}

RhoTable wonderful_rho_table(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<RhoEntry> e;
  for (std::size_t i = 0; i < n; ++i)
    e.push_back({boundary_name(static_cast<int>(i + 1)), DivisorKind::boundary, -unit_vec(n, i)});
  for (std::size_t j = 0; j < n; ++j)
    e.push_back({color_name(static_cast<int>(j + 1)), DivisorKind::color, coroot_in_coweights(rs.cartan(), j)});
  return RhoTable(std::move(e));
}

RationalCone valuation_cone(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<QVec> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(-unit_vec(n, i));
  return RationalCone(std::move(g), Lattice::standard(n));
}

ColoredFan wonderful_colored_fan(const RootSystem& rs) {
  RationalCone v = valuation_cone(rs);
  return ColoredFan({{v, {}}}, v, wonderful_rho_table(rs));
}

bool is_complete_embedding(const ColoredFan& f) {
  std::vector<RationalCone> cover;
  for (const auto& c : f.maximal_cones()) cover.push_back(c.cone);
  return covered_by(f.valuation_cone(), cover);
}

ColoredCone z_chain_cone(const RootSystem& rs, int k) {
  if (rs.type().family != Family::C) throw InvalidInput("the chain cones are defined in type C");
  if (k < 1 || k > rs.rank()) throw InvalidInput("chain index out of range");
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<QVec> g{-unit_vec(n, 0)};
  std::set<std::string> colors;
  for (int j = 1; j < k; ++j) {
    g.push_back(coroot_in_coweights(rs.cartan(), static_cast<std::size_t>(j - 1)));
    colors.insert(color_name(j));
  }
  return {RationalCone(std::move(g), Lattice::standard(n)), std::move(colors)};
}

ColoredFan z_colored_fan(int n) {
  if (n < 2) throw InvalidInput("the type C fan of Z needs n >= 2");
  const auto rs = build_root_system(TypeLabel{Family::C, n});
  return ColoredFan({z_chain_cone(*rs, n)}, valuation_cone(*rs), wonderful_rho_table(*rs));
}

std::vector<ColoredFan> blowup_chain_fans(int n) {
  if (n < 2) throw InvalidInput("the blowup chain needs n >= 2");
  const auto rs = build_root_system(TypeLabel{Family::C, n});
  const auto N = static_cast<std::size_t>(n);
  const RationalCone v = valuation_cone(*rs);
  const RhoTable rho = wonderful_rho_table(*rs);
  std::vector<ColoredFan> out;
  for (int i = 0; i < n; ++i) {
    std::vector<QVec> g;
    std::set<std::string> colors;
    for (int j = 1; j <= i; ++j) {
      g.push_back(coroot_in_coweights(rs->cartan(), static_cast<std::size_t>(j - 1)));
      colors.insert(color_name(j));
    }
    g.push_back(-unit_vec(N, 0));
    for (int j = i + 2; j <= n; ++j) g.push_back(-unit_vec(N, static_cast<std::size_t>(j - 1)));
    out.emplace_back(std::vector<ColoredCone>{{RationalCone(std::move(g), Lattice::standard(N)), std::move(colors)}}, v,
                     rho);
  }
  return out;
}

ExtensionDecision extension_decision(const ColoredFan& source, const ColoredFan& target, const QMat& map,
                                     const std::set<std::string>& dominant_colors) {
  if (map.cols() != source.dim() || map.rows() != target.dim())
    throw InvalidInput("lattice map has the wrong shape");
  for (const auto& c : source.cones()) {
    std::vector<QVec> images;
    for (const auto& g : c.cone.generators()) images.push_back(map * g);
    std::set<std::string> needed;
    for (const auto& d : c.colors)
      if (!dominant_colors.count(d)) needed.insert(d);
    const bool ok = std::any_of(target.cones().begin(), target.cones().end(), [&](const ColoredCone& t) {
      return all_in(images, t.cone) && std::includes(t.colors.begin(), t.colors.end(), needed.begin(), needed.end());
    });
    if (!ok) return {false, "no target colored cone receives " + to_string(c)};
  }
  return {true, {}};
}

bool extends_to_morphism(const ColoredFan& source, const ColoredFan& target, const QMat& map,
                         const std::set<std::string>& dominant_colors) {
  return extension_decision(source, target, map, dominant_colors).extends;
}

std::vector<ColoredCone> intermediate_colored_cones(const ColoredCone& lower, const ColoredCone& upper,
                                                    const RationalCone& valuation_cone, const RhoTable& rho) {
  const Lattice& lat = upper.cone.lattice();
  std::set<QVec, QVecLess> pool;
  for (const auto& e : rho.entries())
    if (!is_zero(e.value) && lat.in_span(e.value)) pool.insert(lat.primitive(e.value));
  pool.insert(lower.cone.generators().begin(), lower.cone.generators().end());
  pool.insert(upper.cone.generators().begin(), upper.cone.generators().end());
  std::vector<QVec> cand;
  for (const auto& p : pool)
    if (contains(upper.cone, p)) cand.push_back(p);
  if (cand.size() > 20) throw BoundExceeded("too many candidate rays for intermediate cones");

  QVec lower_point = zero_vec(lat.ambient_dim());
  for (const auto& g : lower.cone.generators()) lower_point += g;
  const std::vector<std::string> upper_colors(upper.colors.begin(), upper.colors.end());

  std::set<ColoredCone> found;
  for (unsigned long s = 1; s < (1UL << cand.size()); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountl(s)) > upper.cone.dim()) continue;
    std::vector<QVec> g;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (s & (1UL << i)) g.push_back(cand[i]);
    if (rank(QMat::from_columns(g, lat.ambient_dim())) != g.size()) continue;
    RationalCone c(std::move(g), lat);
    if (!all_in(lower.cone.generators(), c) || !contains(c, lower_point, true)) continue;
    for (unsigned long t = 0; t < (1UL << upper_colors.size()); ++t) {
      ColoredCone cc{c, {}};
      for (std::size_t i = 0; i < upper_colors.size(); ++i)
        if (t & (1UL << i)) cc.colors.insert(upper_colors[i]);
      if (!std::includes(cc.colors.begin(), cc.colors.end(), lower.colors.begin(), lower.colors.end())) continue;
      if (cc == lower || cc == upper) continue;
      if (colored_cone_defect(cc, valuation_cone, rho).empty()) found.insert(std::move(cc));
    }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------- Picard groups

PicardPresentation picard_presentation(const DivisorLedger& ledger) {
  const std::size_t s = ledger.symbols.size();
  for (const auto& r : ledger.relations)
    if (r.size() != s) throw InvalidInput("relation length differs from the number of symbols");
  PicardPresentation p;
  if (ledger.relations.empty()) {
    p.free_rank = static_cast<int>(s);
    for (std::size_t j = 0; j < s; ++j) {
      ZVec e(s, Integer(0));
      e[j] = 1;
      p.images.push_back(std::move(e));
    }
    return p;
  }
  // D = U R V; symbol j maps to row j of V modulo the diagonal.
  const SmithForm sf = smith_normal_form(ZMat::from_rows(ledger.relations, s));
  const std::size_t r = sf.invariant_factors.size();
  std::vector<std::size_t> torsion_cols;
  for (std::size_t i = 0; i < r; ++i)
    if (sf.invariant_factors[i] > 1) {
      torsion_cols.push_back(i);
      p.torsion.push_back(sf.invariant_factors[i]);
    }
  p.free_rank = static_cast<int>(s - r);
  std::vector<Integer> sign(s, Integer(1));
  for (std::size_t c = r; c < s; ++c)
    for (std::size_t j = 0; j < s; ++j)
      if (sf.right(j, c) != 0) {
        sign[c] = sf.right(j, c) > 0 ? 1 : -1;
        break;
      }
  for (std::size_t j = 0; j < s; ++j) {
    ZVec img;
    for (std::size_t t = 0; t < torsion_cols.size(); ++t) {
      Integer m;
      mpz_fdiv_r(m.get_mpz_t(), sf.right(j, torsion_cols[t]).get_mpz_t(), p.torsion[t].get_mpz_t());
      img.push_back(m);
    }
    for (std::size_t c = r; c < s; ++c) img.push_back(sign[c] * sf.right(j, c));
    p.images.push_back(std::move(img));
  }
  return p;
}

namespace {

DivisorLedger ledger_from_rho(const RhoTable& rho, std::size_t n) {
  DivisorLedger l;
  for (const auto& e : rho.entries()) l.symbols.push_back(e.symbol);
  for (std::size_t k = 0; k < n; ++k) {
    ZVec row;
    for (const auto& e : rho.entries()) {
      if (!is_integer(e.value[k])) throw InvalidInput("rho image " + e.symbol + " is not integral");
      row.push_back(e.value[k].get_num());  // <rho(D), alpha_k> is the k-th coweight coordinate
    }
    l.relations.push_back(std::move(row));
  }
  return l;
}

}  // namespace

DivisorLedger wonderful_divisor_ledger(const RootSystem& rs) {
  return ledger_from_rho(wonderful_rho_table(rs), static_cast<std::size_t>(rs.rank()));
}

DivisorLedger spinor_divisor_ledger(int n) {
  const auto a = dynkin_cartan(TypeLabel{Family::B, n});
  DivisorLedger l;
  l.symbols.push_back("OG(1)");
  for (int j = 1; j <= n; ++j) l.symbols.push_back(color_name(j));
  for (int k = 0; k < n; ++k) {
    ZVec row{Integer(k == 0 ? -1 : 0)};
    for (int j = 0; j < n; ++j) row.push_back(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    l.relations.push_back(std::move(row));
  }
  return l;
}

FormalDivisor anticanonical_divisor(const ColoredFan& f, const std::map<std::string, Integer>& m_table) {
  FormalDivisor out;
  for (const auto& e : f.rho_table().entries()) {
    if (e.kind != DivisorKind::color) continue;
    auto it = m_table.find(e.symbol);
    if (it == m_table.end()) throw InvalidInput("missing coefficient m for color " + e.symbol);
    out.emplace_back(e.symbol, it->second);
  }
  std::vector<std::string> boundary;
  for (const auto& c : f.cones()) {
    if (c.cone.dim() != 1 || !c.colors.empty()) continue;
    auto sym = f.rho_table().boundary_symbol_on_ray(c.cone.generators().front());
    if (!sym) throw InvalidInput("colorless ray " + to_string(c.cone.generators().front()) + " has no divisor symbol");
    boundary.push_back(*sym);
  }
  for (const auto& e : f.rho_table().entries())
    if (std::find(boundary.begin(), boundary.end(), e.symbol) != boundary.end()) out.emplace_back(e.symbol, 1);
  return out;
}

std::map<std::string, QVec> wonderful_divisor_weights(const RootSystem& rs) {
  const RhoTable rho = wonderful_rho_table(rs);
  const DivisorLedger l = ledger_from_rho(rho, static_cast<std::size_t>(rs.rank()));
  const auto n = static_cast<std::size_t>(rs.rank());
  std::map<std::string, QVec> w;
  std::size_t next_color = 0;
  for (const auto& e : rho.entries())
    if (e.kind == DivisorKind::color) w[e.symbol] = unit_vec(n, next_color++);
  // Each relation pins down the one boundary symbol it involves.
  for (const auto& row : l.relations) {
    std::optional<std::size_t> b;
    QVec rest = zero_vec(n);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      const RhoEntry& e = rho.entries()[j];
      if (e.kind == DivisorKind::boundary) {
        if (b) throw InvariantViolation("relation involves two boundary divisors");
        b = j;
      } else {
        rest += Rational(row[j]) * w.at(e.symbol);
      }
    }
    if (!b) throw InvariantViolation("relation without a boundary divisor");
    w[rho.entries()[*b].symbol] = Rational(-1) / Rational(row[*b]) * rest;
  }
  for (const auto& row : l.relations) {
    QVec s = zero_vec(n);
    for (std::size_t j = 0; j < row.size(); ++j) s += Rational(row[j]) * w.at(rho.entries()[j].symbol);
    if (!is_zero(s)) throw InvariantViolation("divisor weights violate a relation");
  }
  return w;
}

QVec divisor_weight(const FormalDivisor& d, const std::map<std::string, QVec>& weights) {
  QVec s;
  for (const auto& [sym, c] : d) {
    auto it = weights.find(sym);
    if (it == weights.end()) throw InvalidInput("no weight for divisor " + sym);
    if (s.empty()) s = zero_vec(it->second.size());
    s += Rational(c) * it->second;
  }
  return s;
}

OrbitPoset orbit_poset(const ColoredFan& f) {
  OrbitPoset p{f.cones(), {}};
  const std::size_t n = p.nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));  // below[i][j]: i proper face of j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      below[i][j] = i != j && p.nodes[i].cone.dim() < p.nodes[j].cone.dim() &&
                    is_face_of(p.nodes[i].cone, p.nodes[j].cone) &&
                    std::includes(p.nodes[j].colors.begin(), p.nodes[j].colors.end(), p.nodes[i].colors.begin(),
                                  p.nodes[i].colors.end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) direct = !(below[i][k] && below[k][j]);
      if (direct) p.covers.emplace_back(i, j);
    }
  return p;
}

bool is_chain(const OrbitPoset& p) {
  if (p.covers.size() + 1 != p.nodes.size()) return false;
  std::vector<int> up(p.nodes.size()), down(p.nodes.size());
  for (const auto& [a, b] : p.covers) {
    if (++up[a] > 1 || ++down[b] > 1) return false;
  }
  return true;
}

bool is_boolean_lattice(const OrbitPoset& p, std::size_t rank) {
  if (rank >= 31 || p.nodes.size() != (std::size_t{1} << rank)) return false;
  auto top = std::find_if(p.nodes.begin(), p.nodes.end(), [&](const ColoredCone& c) { return c.cone.dim() == rank; });
  if (top == p.nodes.end()) return false;
  return std::all_of(p.nodes.begin(), p.nodes.end(), [&](const ColoredCone& c) { return is_face_of(c.cone, top->cone); });
}

std::pair<LatticeVector, LatticeVector> closed_orbit_restriction(const RootSystemPtr& rs, int k) {
  if (k < 1 || k > rs->rank()) throw InvalidInput("closed orbit weight index out of range");
  const auto p = weight_involution(*rs);
  const auto n = static_cast<std::size_t>(rs->rank());
  return {LatticeVector{unit_vec(n, static_cast<std::size_t>(p[static_cast<std::size_t>(k - 1)])), Basis::fund_weight, rs},
          LatticeVector{unit_vec(n, static_cast<std::size_t>(k - 1)), Basis::fund_weight, rs}};
}

// ---------------------------------------------------------------- JSON

Json to_json(const ColoredFan& f) {
  const auto maximal = f.maximal_cones();
  std::set<QVec, QVecLess> ray_set;
  for (const auto& c : f.cones()) ray_set.insert(c.cone.generators().begin(), c.cone.generators().end());
  const std::vector<QVec> rays(ray_set.begin(), ray_set.end());
  Json j;
  j["ambient_dim"] = f.dim();
  j["lattice"] = to_json(f.valuation_cone().lattice());
  Json rj = Json::array();
  for (const auto& r : rays) rj.push_back(to_json(r));
  j["rays"] = rj;
  Json cones = Json::array(), colors = Json::array();
  for (const auto& c : maximal) {
    std::vector<std::size_t> idx;
    for (const auto& g : c.cone.generators())
      idx.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), g, QVecLess{}) - rays.begin()));
    std::sort(idx.begin(), idx.end());
    cones.push_back(idx);
    colors.push_back(std::vector<std::string>(c.colors.begin(), c.colors.end()));
  }
  j["maximal_cones"] = cones;
  j["colors"] = colors;
  Json v = Json::array();
  for (const auto& g : f.valuation_cone().generators()) v.push_back(to_json(g));
  j["valuation_cone"] = v;
  Json rho = Json::array();
  for (const auto& e : f.rho_table().entries())
    rho.push_back({{"symbol", e.symbol},
                   {"kind", e.kind == DivisorKind::color ? "color" : "boundary"},
                   {"value", to_json(e.value)}});
  j["rho_table"] = rho;
  return j;
}

ColoredFan colored_fan_from_json(const Json& j) {
  const Json& dim = require_field(j, "ambient_dim", "colored fan");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0 || dim.get<std::size_t>() > 64)
    throw ParseError("colored fan.ambient_dim: expected an integer between 1 and 64");
  const std::size_t d = dim.get<std::size_t>();
  Lattice lat = Lattice::standard(d);
  if (auto it = j.find("lattice"); it != j.end()) lat = lattice_from_json(*it, d, "colored fan.lattice");

  auto vectors = [&](const Json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + ": expected an array");
    std::vector<QVec> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      QVec v = qvec_from_json(arr[i], where + "[" + std::to_string(i) + "]");
      if (v.size() != d) throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(d) + " entries");
      out.push_back(std::move(v));
    }
    return out;
  };
  const auto rays = vectors(require_field(j, "rays", "colored fan"), "colored fan.rays");
  const Json& cones_j = require_field(j, "maximal_cones", "colored fan");
  const Json& colors_j = require_field(j, "colors", "colored fan");
  if (!cones_j.is_array() || !colors_j.is_array() || cones_j.size() != colors_j.size())
    throw ParseError("colored fan: maximal_cones and colors must be arrays of equal length");

  std::vector<RhoEntry> entries;
  const Json& rho_j = require_field(j, "rho_table", "colored fan");
  if (!rho_j.is_array()) throw ParseError("colored fan.rho_table: expected an array");
  for (std::size_t i = 0; i < rho_j.size(); ++i) {
    const std::string where = "colored fan.rho_table[" + std::to_string(i) + "]";
    const Json& sym = require_field(rho_j[i], "symbol", where);
    const Json& kind = require_field(rho_j[i], "kind", where);
    if (!sym.is_string() || !kind.is_string() || (kind != "color" && kind != "boundary"))
      throw ParseError(where + ": expected a string symbol and kind \"color\" or \"boundary\"");
    QVec value = qvec_from_json(require_field(rho_j[i], "value", where), where + ".value");
    if (value.size() != d) throw ParseError(where + ".value: expected " + std::to_string(d) + " entries");
    entries.push_back({sym.get<std::string>(), kind == "color" ? DivisorKind::color : DivisorKind::boundary, value});
  }

  std::vector<ColoredCone> generating;
  for (std::size_t i = 0; i < cones_j.size(); ++i) {
    const std::string where = "colored fan.maximal_cones[" + std::to_string(i) + "]";
    if (!cones_j[i].is_array()) throw ParseError(where + ": expected an array of ray indices");
    std::vector<QVec> g;
    for (const auto& idx : cones_j[i]) {
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= rays.size())
        throw ParseError(where + ": ray index out of range");
      g.push_back(rays[idx.get<std::size_t>()]);
    }
    std::set<std::string> colors;
    if (!colors_j[i].is_array()) throw ParseError("colored fan.colors[" + std::to_string(i) + "]: expected an array");
    for (const auto& c : colors_j[i]) {
      if (!c.is_string()) throw ParseError("colored fan.colors[" + std::to_string(i) + "]: expected strings");
      colors.insert(c.get<std::string>());
    }
    generating.push_back({RationalCone(std::move(g), lat), std::move(colors)});
  }
  RationalCone v(vectors(require_field(j, "valuation_cone", "colored fan"), "colored fan.valuation_cone"), lat);
  return ColoredFan(std::move(generating), std::move(v), RhoTable(std::move(entries)));
}

}  // namespace wk
