#include "wonderkit/casebook.hpp"

#include <algorithm>
#include <map>

#include "wonderkit/errors.hpp"
#include "wonderkit/isotropic.hpp"
#include "wonderkit/lattice.hpp"
#include "wonderkit/polyhedra.hpp"
#include "wonderkit/rootsys.hpp"
#include "wonderkit/spherical.hpp"
#include "wonderkit/toric.hpp"

namespace wk {

namespace {

constexpr std::size_t kSymplecticSamples = 1000;
constexpr std::size_t kOrthogonalSamples = 500;

Json jint(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json jq(const QVec& v) { return to_json(v); }

Json jqs(const std::vector<QVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

class Builder {
 public:
  Builder(std::string id, std::string statement, Json inputs) {
    r_.case_id = std::move(id);
    r_.statement = std::move(statement);
    r_.inputs = std::move(inputs);
  }
  void check(std::string name, Json computed, Json expected, Source s) {
    r_.checks.push_back({std::move(name), std::move(computed), std::move(expected), s});
  }
  CaseReport done() { return std::move(r_); }

 private:
  CaseReport r_;
};

QMat swap_matrix(std::size_t d, std::size_t i, std::size_t j) {
  QMat m = QMat::identity(d);
  m(i, i) = m(j, j) = 0;
  m(i, j) = m(j, i) = 1;
  return m;
}

QMat sign_matrix(std::size_t d, std::initializer_list<std::size_t> negated) {
  QMat m = QMat::identity(d);
  for (std::size_t i : negated) m(i, i) = -1;
  return m;
}

// tau_1 = (e_1, e_d), tau_2 = eps_1 eps_2.
std::vector<WeylElement> wprime_generators(const RootSystem& rs) {
  const std::size_t d = rs.ambient_dim();
  return {make_weyl_element(rs, swap_matrix(d, 0, d - 1)), make_weyl_element(rs, sign_matrix(d, {0, 1}))};
}

std::vector<QVec> pm_set(std::vector<QVec> vs) {
  std::sort(vs.begin(), vs.end(), QVecLess{});
  return vs;
}

// ---------------------------------------------------------------- g2-surface

CaseReport g2_surface(std::uint64_t) {
  Builder b("g2-surface", "The Weyl-chamber fan of G2 is a complete smooth toric surface of Picard number 10 whose rays form two W-orbits of size 6",
            Json{{"type", "G2"}});
  const auto rs = build_root_system("G2");
  const Fan f = weyl_chamber_fan(*rs);
  const auto w = weyl_enumerate(*rs);
  const bool complete = is_complete(f), smooth = is_smooth(f);
  b.check("maximal cones", f.maximal_cones().size(), 12, Source::reference);
  b.check("complete", complete, true, Source::reference);
  b.check("smooth", smooth, true, Source::reference);
  if (complete && smooth) {
    const ToricSurface s(f);
    b.check("Picard number", picard_number(s), 10, Source::reference);
    b.check("ray orbit sizes", ray_orbit_partition(s, w), std::vector<int>{6, 6}, Source::reference);
    b.check("Picard number + 2 = |W|", picard_number(s) + 2, jint(weyl_order(*rs)), Source::reference);
  }
  b.check("|W(G2)| by enumeration", w.size(), 12, Source::reference);
  return b.done();
}

// ---------------------------------------------------------------- f4-wprime

CaseReport f4_wprime(std::uint64_t) {
  Builder b("f4-wprime", "tau_1 = (e_1, e_4) and tau_2 = eps_1 eps_2 generate a subgroup W' of W(F4) of order 8 with the stated coweight orbits",
            Json{{"type", "F4"}});
  const auto rs = build_root_system("F4");
  const auto gens = wprime_generators(*rs);
  const auto group = subgroup_closure(gens);
  b.check("|W'|", group.size(), 8, Source::reference);

  // The eight words id, 1, 2, 21, 12, 121, 212, 2121 list W' without repetition.
  const std::vector<std::vector<int>> words{{}, {0}, {1}, {1, 0}, {0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 0, 1, 0}};
  std::set<QMat> products;
  for (const auto& word : words) {
    QMat m = QMat::identity(rs->ambient_dim());
    for (int g : word) m = m * gens[static_cast<std::size_t>(g)].matrix;
    products.insert(m);
  }
  std::set<QMat> elements;
  for (const auto& g : group) elements.insert(g.matrix);
  b.check("listed words are the distinct elements", products == elements, true, Source::reference);

  const QVec w1 = rs->fundamental_coweight(0), w4 = rs->fundamental_coweight(3);
  b.check("omega_1^vee", jq(w1), jq(from_ints({1, 0, 0, 1})), Source::elementary);
  b.check("omega_4^vee", jq(w4), jq(from_ints({0, 0, 0, 2})), Source::elementary);
  b.check("W' . omega_1^vee", jqs(orbit(group, w1)),
          jqs(pm_set({from_ints({1, 0, 0, 1}), from_ints({1, 0, 0, -1}), from_ints({-1, 0, 0, 1}), from_ints({-1, 0, 0, -1})})),
          Source::reference);
  b.check("W' . omega_4^vee", jqs(orbit(group, w4)),
          jqs(pm_set({from_ints({2, 0, 0, 0}), from_ints({-2, 0, 0, 0}), from_ints({0, 0, 0, 2}), from_ints({0, 0, 0, -2})})),
          Source::reference);
  const Lattice plane({w1, w4}, rs->ambient_dim());
  bool stable = true;
  for (const auto& g : group) stable = stable && plane.contains_point(g.matrix * w1) && plane.contains_point(g.matrix * w4);
  b.check("Z omega_1^vee + Z omega_4^vee is W'-stable", stable, true, Source::reference);
  return b.done();
}

// ---------------------------------------------------------------- subtorus fans

CaseReport subtorus_fan(const std::string& id, const std::string& type) {
  const auto rs = build_root_system(type);
  const int last = rs->rank() - 1;
  const std::size_t d = rs->ambient_dim();
  const std::string lname = "omega_" + std::to_string(last + 1) + "^vee";
  Builder b(id, "The closure of the rank-2 subtorus spanned by omega_1^vee and " + lname + " in the wonderful compactification of " + type +
                    " is a complete toric surface with 8 rays, Picard number 6, two W'-orbits of rays of size 4 and W'-invariant Picard rank 2",
            Json{{"type", type}, {"plane", Json::array({"omega_1^vee", lname})}});
  const auto gens = wprime_generators(*rs);
  const auto group = subgroup_closure(gens);
  b.check("|W'|", group.size(), 8, Source::reference);

  std::optional<Fan> f;
  try {
    f = subtorus_closure_fan({rs->fundamental_coweight(0), rs->fundamental_coweight(last)}, group);
  } catch (const InvalidInput&) {
  }
  b.check("complete fan from the W'-translates of the positive cone", f.has_value(), true, Source::reference);
  if (!f) return b.done();

  const QVec e1 = unit_vec(d, 0), ed = unit_vec(d, d - 1);
  b.check("rays", jqs(f->rays()),
          jqs(pm_set({Rational(2) * e1, Rational(-2) * e1, Rational(2) * ed, Rational(-2) * ed, e1 + ed, e1 - ed, ed - e1,
                      -e1 - ed})),
          Source::reference);
  b.check("maximal cones", f->maximal_cones().size(), 8, Source::elementary);
  b.check("smooth", is_smooth(*f), true, Source::reference);
  const ToricSurface s(*f);
  b.check("Picard number", picard_number(s), 6, Source::reference);
  const auto orbits = ray_orbit_partition(s, group);
  b.check("ray orbit sizes", orbits, std::vector<int>{4, 4}, Source::reference);
  b.check("every orbit has at least two rays", orbits.front() >= 2, true, Source::reference);
  b.check("Picard number + 2 = |W'|", picard_number(s) + 2, group.size(), Source::reference);
  b.check("W'-invariant Picard rank",
          invariant_picard_rank(f->rays().size(), ray_permutations(*f, gens), toric_relations(*f)), 2, Source::reference);

  // Same fan as the Weyl chambers of B2, in lattice coordinates.
  const auto b2 = build_root_system("B2");
  const Fan chambers = weyl_chamber_fan(*b2);
  auto coordinate_cones = [](const Fan& g, bool swap) {
    std::set<std::set<QVec, QVecLess>> cones;
    for (const auto& c : g.maximal_cones()) {
      std::set<QVec, QVecLess> rays;
      for (const auto& r : c.generators()) {
        QVec x = *g.lattice().coordinates(r);
        if (swap) std::swap(x[0], x[1]);
        rays.insert(x);
      }
      cones.insert(rays);
    }
    return cones;
  };
  // omega_1^vee is the short-orbit coweight for F4 and the long-orbit one for E8.
  const bool swap = f->lattice().coordinates(Rational(2) * e1) != std::optional<QVec>(from_ints({2, -1}));
  b.check(std::string("fan equals the B2 chamber fan with omega_1^vee, ") + lname + " -> " +
              (swap ? "omega_2^vee, omega_1^vee" : "omega_1^vee, omega_2^vee"),
          coordinate_cones(*f, swap) == coordinate_cones(chambers, false), true, Source::cross_check);
  return b.done();
}

CaseReport f4_subtorus_fan(std::uint64_t) { return subtorus_fan("f4-subtorus-fan", "F4"); }
CaseReport e8_subtorus_fan(std::uint64_t) { return subtorus_fan("e8-subtorus-fan", "E8"); }

// ---------------------------------------------------------------- e8-weyl-order

Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

CaseReport e8_weyl_order(std::uint64_t) {
  Builder b("e8-weyl-order", "|W(E8)| = 2^14 * 3^5 * 5^2 * 7 = 696729600", Json{{"type", "E8"}});
  const auto e8 = build_root_system("E8"), e7 = build_root_system("E7");
  const Integer order = weyl_order(*e8);
  Integer factored;
  {
    Integer p;
    mpz_ui_pow_ui(factored.get_mpz_t(), 2, 14);
    mpz_ui_pow_ui(p.get_mpz_t(), 3, 5);
    factored *= p;
    factored *= 25 * 7;
  }
  b.check("|W(E8)|", jint(order), 696729600L, Source::reference);
  b.check("|W(E8)| = 2^14 * 3^5 * 5^2 * 7", order == factored, true, Source::reference);
  b.check("|R(E8)|", e8->roots().size(), 240, Source::reference);
  b.check("exponents of E8", exponents(*e8), std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}, Source::cross_check);
  // The highest root has stabilizer W(E7) in W(E8) and W(D6) in W(E7); W acts transitively on roots here.
  const Integer d6 = Integer(32) * factorial(6);
  b.check("|W(D6)| = 2^5 6!", jint(weyl_order(*build_root_system("D6"))), jint(d6), Source::cross_check);
  b.check("|W(E7)| = |R(E7)| |W(D6)|", jint(weyl_order(*e7)), jint(Integer(static_cast<long>(e7->roots().size())) * d6),
          Source::cross_check);
  b.check("|W(E8)| = |R(E8)| |W(E7)|", jint(order),
          jint(Integer(static_cast<long>(e8->roots().size())) * weyl_order(*e7)), Source::cross_check);
  return b.done();
}

// ---------------------------------------------------------------- lattice-coincidence

Integer index_oracle(const TypeLabel& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 9 - t.rank;
    case Family::F:
    case Family::G: return 1;
  }
  return 0;
}

CaseReport lattice_coincidence(std::uint64_t) {
  Builder b("lattice-coincidence",
            "Among simple types of rank <= 8 the weight and root lattices coincide exactly for G2, F4 and E8, and every simple root is "
            "primitive in the weight lattice except the long simple root of type C",
            Json{{"max_rank", 8}});
  std::vector<std::string> coincide, exceptions, expected_exceptions;
  Json indices = Json::object(), oracle = Json::object();
  for (const auto& t : all_types_up_to_rank(8)) {
    const auto rs = build_root_system(t);
    const Integer idx = weight_root_index(*rs);
    indices[t.str()] = jint(idx);
    oracle[t.str()] = jint(index_oracle(t));
    if (idx == 1) coincide.push_back(t.str());
    for (int i = 0; i < rs->rank(); ++i)
      if (!is_primitive_in_weight_lattice(make_vector(rs, Basis::ambient, rs->simple_root(i))))
        exceptions.push_back(t.str() + ":alpha_" + std::to_string(i + 1));
    // The long simple root of C_n, with A1 = C1 and B2 = C2.
    if (t.family == Family::C) expected_exceptions.push_back(t.str() + ":alpha_" + std::to_string(t.rank));
    if (t == TypeLabel{Family::A, 1} || t == TypeLabel{Family::B, 2}) expected_exceptions.push_back(t.str() + ":alpha_1");
  }
  std::sort(coincide.begin(), coincide.end());
  std::sort(exceptions.begin(), exceptions.end());
  std::sort(expected_exceptions.begin(), expected_exceptions.end());
  b.check("types with weight/root index 1", coincide, std::vector<std::string>{"E8", "F4", "G2"}, Source::reference);
  b.check("index = det of the Cartan matrix, all types", indices, oracle, Source::cross_check);
  b.check("simple roots not primitive in the weight lattice", exceptions, expected_exceptions, Source::reference);
  return b.done();
}

// ---------------------------------------------------------------- typeA-pullback

CaseReport type_a_pullback(std::uint64_t) {
  Builder b("typeA-pullback",
            "In type A_n, omega_1 = sum (1 - i/(n+1)) alpha_i and the boundary divisors meet a minimal rational curve in degrees (1, 0, ..., 0, 1)",
            Json{{"n", "2..12"}});
  for (int n = 2; n <= 12; ++n) {
    const auto rs = build_root_system(TypeLabel{Family::A, n});
    const auto w1 = to_basis(make_vector(rs, Basis::ambient, rs->fundamental_weight(0)), Basis::simple_root);
    QVec expected, degrees, expected_degrees;
    Rational consistency = 0;
    for (int i = 1; i <= n; ++i) {
      expected.push_back(1 - Rational(i) / (n + 1));
      const Rational deg = minimal_curve_degree(make_vector(rs, Basis::ambient, rs->simple_root(i - 1)));
      degrees.push_back(deg);
      expected_degrees.push_back((i == 1 || i == n) ? 1 : 0);
      consistency += w1.coords[static_cast<std::size_t>(i - 1)] * deg;
    }
    const std::string tag = " (n=" + std::to_string(n) + ")";
    b.check("omega_1 in simple roots" + tag, jq(w1.coords), jq(expected), Source::reference);
    b.check("degrees <alpha_i, theta^vee>" + tag, jq(degrees), jq(expected_degrees), Source::reference);
    b.check("sum of coefficient * degree = <omega_1, theta^vee>" + tag, to_json(consistency),
            to_json(minimal_curve_degree(make_vector(rs, Basis::ambient, rs->fundamental_weight(0)))), Source::cross_check);
  }
  return b.done();
}

// ---------------------------------------------------------------- typeB-spinor-pic

CaseReport type_b_spinor_pic(std::uint64_t) {
  Builder b("typeB-spinor-pic",
            "In type B_n, omega_n = (1/2) sum k alpha_k, the spinor divisor presentation has cokernel Z with OG(1) -> 2 and D(omega_n) -> 1, "
            "and <omega_n, theta^vee> = 1",
            Json{{"n", "2..12"}});
  for (int n = 2; n <= 12; ++n) {
    const auto rs = build_root_system(TypeLabel{Family::B, n});
    const std::string tag = " (n=" + std::to_string(n) + ")";
    const auto wn = make_vector(rs, Basis::ambient, rs->fundamental_weight(n - 1));
    QVec half;
    for (int k = 1; k <= n; ++k) half.push_back(Rational(k) / 2);
    b.check("omega_n in simple roots" + tag, jq(to_basis(wn, Basis::simple_root).coords), jq(half), Source::reference);
    b.check("<omega_n, theta^vee>" + tag, to_json(minimal_curve_degree(wn)), to_json(Rational(1)), Source::reference);

    const auto p = picard_presentation(spinor_divisor_ledger(n));
    b.check("Picard group: free rank, torsion" + tag, Json::array({p.free_rank, p.torsion.size()}), Json::array({1, 0}),
            Source::reference);
    if (p.free_rank != 1 || !p.torsion.empty()) continue;
    b.check("class of OG(1)" + tag, jint(p.images[0][0]), 2, Source::reference);
    b.check("class of D(omega_n)" + tag, jint(p.images[static_cast<std::size_t>(n)][0]), 1, Source::reference);
    std::vector<Json> middle, twos;
    for (int j = 1; j < n; ++j) {
      middle.push_back(jint(p.images[static_cast<std::size_t>(j)][0]));
      twos.push_back(2);
    }
    b.check("classes of D(omega_j), j < n" + tag, middle, twos, Source::cross_check);
  }
  return b.done();
}

// ---------------------------------------------------------------- typeC-contraction

CaseReport type_c_contraction(std::uint64_t) {
  Builder b("typeC-contraction",
            "In type C_n the wonderful compactification X maps onto Z: rho(D_k) lies in the relative interior of the chain cone c_k, "
            "X -> Z and each step of the blowup chain of colored fans extend to morphisms while the reverse maps do not, and Z is complete",
            Json{{"n", "2..6"}, {"complete_up_to", 4}});
  for (int n = 2; n <= 6; ++n) {
    const auto rs = build_root_system(TypeLabel{Family::C, n});
    const auto N = static_cast<std::size_t>(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    const RhoTable rho = wonderful_rho_table(*rs);
    const QVec d1 = rho.at("D_1").value;

    Json lhs = Json::array(), rhs = Json::array();
    bool interior = true;
    for (int k = 1; k <= n; ++k) {
      QVec sum = Rational(k) * d1;
      for (int j = 1; j < k; ++j) sum += Rational(k - j) * rho.at("D(omega_" + std::to_string(j) + ")").value;
      const QVec dk = rho.at("D_" + std::to_string(k)).value;
      if (k < n) {
        lhs.push_back(jq(dk));
        rhs.push_back(jq(sum));
      } else {
        b.check("k rho(D_1) + sum (k-j) rho(D(omega_j)) at k = n equals 2 rho(D_n)" + tag, jq(sum), jq(Rational(2) * dk),
                Source::cross_check);
      }
      interior = interior && contains(z_chain_cone(*rs, k).cone, dk, true);
    }
    b.check("rho(D_k) = k rho(D_1) + sum (k-j) rho(D(omega_j)), k < n" + tag, lhs, rhs, Source::reference);
    b.check("rho(D_k) in the relative interior of c_k for all k" + tag, interior, true, Source::reference);

    const ColoredFan x = wonderful_colored_fan(*rs);
    std::optional<ColoredFan> z;
    try {
      z = z_colored_fan(n);
    } catch (const InvalidInput&) {
    }
    b.check("fan of Z is a valid colored fan" + tag, z.has_value(), true, Source::reference);
    if (!z) continue;
    const auto poset = orbit_poset(*z);
    b.check("orbits of Z form a chain of length n+1" + tag, Json::array({is_chain(poset), poset.nodes.size()}),
            Json::array({true, n + 1}), Source::reference);
    const QMat id = QMat::identity(N);
    b.check("X -> Z extends" + tag, extends_to_morphism(x, *z, id, {}), true, Source::reference);
    b.check("Z -> X extends" + tag, extends_to_morphism(*z, x, id, {}), false, Source::elementary);

    const auto chain = blowup_chain_fans(n);
    b.check("chain starts at X and ends at Z" + tag, Json::array({chain.front() == x, chain.back() == *z}),
            Json::array({true, true}), Source::reference);
    Json fwd = Json::array(), back = Json::array(), yes = Json::array(), no = Json::array();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      fwd.push_back(extends_to_morphism(chain[i], chain[i + 1], id, {}));
      back.push_back(extends_to_morphism(chain[i + 1], chain[i], id, {}));
      yes.push_back(true);
      no.push_back(false);
    }
    b.check("each chain step extends" + tag, fwd, yes, Source::reference);
    b.check("no reverse chain step extends" + tag, back, no, Source::reference);
    if (n <= 4) b.check("valuation cone covered by the fan of Z" + tag, is_complete_embedding(*z), true, Source::reference);

    if (n == 3) {
      // The orbit of D_2 against the first blowup center: nothing strictly in between.
      const ColoredCone lower{RationalCone({rho.at("D_2").value}, Lattice::standard(N)), {}};
      const ColoredCone upper{RationalCone({d1, rho.at("D(omega_1)").value}, Lattice::standard(N)), {"D(omega_1)"}};
      Json found = Json::array();
      for (const auto& c : intermediate_colored_cones(lower, upper, x.valuation_cone(), rho)) found.push_back(to_string(c));
      b.check("colored cones strictly between (cone{-omega_2^vee}, {}) and c''_1" + tag, found, Json::array(),
              Source::reference);
    }
  }
  return b.done();
}

// ---------------------------------------------------------------- orbit cases

CaseReport lg_orbits(std::uint64_t seed) {
  Builder b("lg-orbits",
            "Orbits LG(k) of Sp(W) x Sp(W) on Lagrangians of W1 + W2 have codimension k^2, dim V n W1 = dim V n W2, and tau fixes V exactly when k = n",
            Json{{"table_n", "1..6"}, {"consistency_n", "1..25"}, {"samples", kSymplecticSamples}, {"seed", seed}});
  Json codims = Json::array(), squares = Json::array(), closed = Json::array(), closed_expected = Json::array();
  for (int n = 1; n <= 6; ++n) {
    Json row = Json::array(), sq = Json::array();
    for (int k = 0; k <= n; ++k) {
      row.push_back(lg_orbit_data(n, k).codim);
      sq.push_back(k * k);
    }
    codims.push_back(row);
    squares.push_back(sq);
    closed.push_back(lg_orbit_dim(n, n));
    closed_expected.push_back(n * (n + 1));
  }
  b.check("codim LG(k), n <= 6", codims, squares, Source::reference);
  b.check("dim LG(0) at n = 3", lg_orbit_dim(3, 0), 21, Source::reference);
  b.check("codim LG(1) at n = 3", lg_orbit_data(3, 1).codim, 1, Source::reference);
  bool big = true;
  for (int n = 2; n <= 25; ++n)
    for (int k = 2; k <= n; ++k) big = big && lg_orbit_data(n, k).codim >= 4;
  b.check("codim LG(k) >= 4 for k >= 2", big, true, Source::reference);
  b.check("dim LG(n) = 2 dim LG(n, W)", closed, closed_expected, Source::cross_check);
  bool consistent = true;
  for (int n = 1; n <= 25; ++n)
    for (int k = 0; k <= n; ++k) {
      try {
        const auto d = lg_orbit_data(n, k);
        consistent = consistent && d.codim == static_cast<long>(k) * k;
      } catch (const InvariantViolation&) {
        consistent = false;
      }
    }
  b.check("closed form = base + fiber, n <= 25", consistent, true, Source::cross_check);
  for (int n : {2, 3}) {
    const auto space = DoubledSpace::symplectic(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    b.check("dim V n W1 = dim V n W2 violations" + tag, equal_intersection_check(space, kSymplecticSamples, seed).violations,
            0, Source::reference);
    b.check("tau-fixed iff k = n violations" + tag, tau_fixed_locus_check(space, kSymplecticSamples, seed).violations, 0,
            Source::reference);
  }
  return b.done();
}

CaseReport og_orbits(std::uint64_t seed) {
  Builder b("og-orbits",
            "Orbits OG(k) on the family of W' in W1 + W2 orthogonal: dimensions n(2n+1) - k^2 from base and fiber, and dim V n W1 = dim V n W2",
            Json{{"table_n", "1..6"}, {"samples", kOrthogonalSamples}, {"seed", seed}});
  Json dims = Json::array(), expected = Json::array();
  for (int n = 1; n <= 6; ++n) {
    Json row = Json::array(), ex = Json::array();
    for (int k = 0; k <= n; ++k) {
      row.push_back(to_json(og_orbit_data(n, k)));
      const long total = static_cast<long>(n) * (2 * n + 1) - static_cast<long>(k) * k;
      const long m = n - k;
      ex.push_back(Json{{"n", n}, {"k", k}, {"dim", total}, {"codim", static_cast<long>(k) * k},
                        {"base", static_cast<long>(k) * (4 * n + 1 - 3 * k)}, {"fiber", m * (2 * m + 1)}});
    }
    dims.push_back(row);
    expected.push_back(ex);
  }
  b.check("orbit dimensions, n <= 6", dims, expected, Source::cross_check);
  b.check("dim OG(0) = n(2n+1) at n = 3", og_orbit_data(3, 0).total, 21, Source::reference);
  const auto space = DoubledSpace::orthogonal(2);
  b.check("dim V n W1 = dim V n W2 violations (n=2)", equal_intersection_check(space, kOrthogonalSamples, seed).violations, 0,
          Source::reference);
  const IsotropicSubspace w = diagonal_subspace(space);
  std::size_t outside = 0;
  for (int k = 0; k <= space.n(); ++k)
    for (std::uint64_t s = 0; s < 10; ++s)
      if (!same_family(space, w, random_stratum_subspace(space, k, seed + s))) ++outside;
  b.check("stratum samples outside the family of W'", outside, 0, Source::cross_check);
  return b.done();
}

// ---------------------------------------------------------------- surface-blowup-cases

Json coefficient_map(const SurfaceBlowupLedger& l) {
  Json j = Json::object();
  std::map<std::string, long> sorted(l.components.begin(), l.components.end());
  for (const auto& [n, c] : sorted) j[n] = c;
  return j;
}

// A fresh center on each coefficient-2 component alone yields coefficient 1.
Json forced_violations(const SurfaceBlowupLedger& l) {
  Json out = Json::array();
  for (const auto& [name, c] : l.components) {
    if (c != 2) continue;
    const auto next = blowup_boundary_point(l, "p_" + name, {name});
    out.push_back(coefficient_spectrum(next).violations.size() == 1 && next.components.back().second == 1);
  }
  return out;
}

Json all_true(const Json& a) {
  Json t = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) t.push_back(true);
  return t;
}

CaseReport surface_blowup_cases(std::uint64_t) {
  Builder b("surface-blowup-cases",
            "Boundary blowups of P^2, P^1 x P^1 and F_1 keeping at most two anticanonical coefficients give -K = 3H + 2 sum E_i, "
            "3E_1 + 2(H_1 + H_2 + sum E_j) and 3H_1 + 2(H_2 + sum E_j); a center on a single coefficient-2 component forces coefficient 1",
            Json{{"extra_blowups", 2}});
  {
    auto l = blowup_boundary_point(projective_plane_ledger(), "y0", {"H"});
    b.check("P^2 after one blowup", coefficient_map(l), Json{{"E1", 2}, {"H", 3}}, Source::reference);
    l = blowup_boundary_point(blowup_boundary_point(l, "y1", {"H"}), "y2", {"H"});
    b.check("P^2 after centers on H only", coefficient_map(l), Json{{"E1", 2}, {"E2", 2}, {"E3", 2}, {"H", 3}},
            Source::reference);
    b.check("P^2 expression", anticanonical_expression(l), "3 H + 2 E1 + 2 E2 + 2 E3", Source::elementary);
    const auto corner = blowup_boundary_point(l, "y3", {"H", "E1"});
    b.check("P^2: center at H n E1 adds a third coefficient", corner.components.back().second, 4, Source::reference);
    const auto f = forced_violations(l);
    b.check("P^2: forced coefficient-1 violations", f, all_true(f), Source::reference);
  }
  {
    auto l = blowup_boundary_point(quadric_surface_ledger(), "y0", {"H1", "H2"});
    b.check("P^1 x P^1 after blowing up H1 n H2", coefficient_map(l), Json{{"E1", 3}, {"H1", 2}, {"H2", 2}},
            Source::reference);
    l = blowup_boundary_point(blowup_boundary_point(l, "y1", {"E1"}), "y2", {"E1"});
    b.check("P^1 x P^1 after centers on E1 only", coefficient_map(l), Json{{"E1", 3}, {"E2", 2}, {"E3", 2}, {"H1", 2}, {"H2", 2}},
            Source::reference);
    b.check("P^1 x P^1: H1 and H2 no longer meet", l.meetings.count({"H1", "H2"}), 0, Source::elementary);
    const auto f = forced_violations(l);
    b.check("P^1 x P^1: forced coefficient-1 violations", f, all_true(f), Source::reference);
  }
  {
    auto l = blowup_boundary_point(hirzebruch_ledger(1), "y0", {"H1"});
    l = blowup_boundary_point(blowup_boundary_point(l, "y1", {"H1"}), "y2", {"H1"});
    b.check("F_1 after centers on H1 only", coefficient_map(l), Json{{"E1", 2}, {"E2", 2}, {"E3", 2}, {"H1", 3}, {"H2", 2}},
            Source::reference);
    const auto f = forced_violations(l);
    b.check("F_1: forced coefficient-1 violations", f, all_true(f), Source::reference);
    Json distinct = Json::array(), three = Json::array();
    for (long k = 2; k <= 5; ++k) {
      const auto m = blowup_boundary_point(hirzebruch_ledger(k), "y0", {"H1"});
      distinct.push_back(coefficient_spectrum(m).multiplicity.size());
      three.push_back(3);
    }
    b.check("F_k, k = 2..5: one blowup on H1 gives three coefficients", distinct, three, Source::reference);
  }
  return b.done();
}

// ---------------------------------------------------------------- wonderful-anticanonical

CaseReport wonderful_anticanonical(std::uint64_t) {
  Builder b("wonderful-anticanonical",
            "For every simple type of rank <= 8 the divisor 2 sum D(omega_i) + sum D_j of the wonderful compactification has weight "
            "2 rho + sum alpha_i, which is regular dominant; for A1 it has degree 4 on a line of P^3",
            Json{{"max_rank", 8}});
  Json weights = Json::object(), oracle = Json::object(), divisors = Json::object(), divisor_expected = Json::object();
  for (const auto& t : all_types_up_to_rank(8)) {
    const auto rs = build_root_system(t);
    const ColoredFan x = wonderful_colored_fan(*rs);
    std::map<std::string, Integer> m;
    for (int i = 1; i <= rs->rank(); ++i) m["D(omega_" + std::to_string(i) + ")"] = 2;
    const FormalDivisor d = anticanonical_divisor(x, m);
    std::string text, expected_text;
    for (const auto& [sym, c] : d) text += (text.empty() ? "" : " + ") + c.get_str() + " " + sym;
    for (int i = 1; i <= rs->rank(); ++i) expected_text += (i > 1 ? " + 2 D(omega_" : "2 D(omega_") + std::to_string(i) + ")";
    for (int i = 1; i <= rs->rank(); ++i) expected_text += " + 1 D_" + std::to_string(i);
    divisors[t.str()] = text;
    divisor_expected[t.str()] = expected_text;
    const QVec w = divisor_weight(d, wonderful_divisor_weights(*rs));
    weights[t.str()] = jq(w);
    QVec direct;
    try {
      direct = anticanonical_weight(rs).coords;
    } catch (const InvariantViolation&) {
      direct = {};  // not regular dominant
    }
    oracle[t.str()] = jq(direct);
  }
  b.check("anticanonical divisor", divisors, divisor_expected, Source::reference);
  b.check("weight of the divisor = 2 rho + sum alpha_i (regular dominant)", weights, oracle, Source::reference);
  const auto a1 = build_root_system("A1");
  b.check("A1: <2 rho + alpha, theta^vee>", to_json(minimal_curve_degree(anticanonical_weight(a1))), to_json(Rational(4)),
          Source::reference);
  return b.done();
}

// ---------------------------------------------------------------- ihss-table

CaseReport ihss(std::uint64_t) {
  Builder b("ihss-table", "Bundled list of irreducible Hermitian symmetric spaces of rank >= 2 with their VMRT and rank",
            Json{{"rows", ihss_table().size()}});
  b.check("rows", ihss_table().size(), 6, Source::reference);
  auto row = [](const IhssRow& r) { return Json::array({r.space, r.vmrt, r.embedding, r.rank}); };
  b.check("Gr(a, a+b)", row(ihss_lookup("Gr(a, a+b)")), Json::array({"Gr(a, a+b)", "P^{a-1} x P^{b-1}", "Segre", "min{a, b}"}),
          Source::reference);
  b.check("D_n/P_n", row(ihss_lookup("D_n/P_n")), Json::array({"D_n/P_n", "Gr(2, n)", "Pluecker", "[n/2]"}), Source::reference);
  b.check("C_n/P_n", row(ihss_lookup("C_n/P_n")), Json::array({"C_n/P_n", "P^{n-1}", "second Veronese", "n"}),
          Source::reference);
  b.check("Q^r", row(ihss_lookup("Q^r")), Json::array({"Q^r", "Q^{r-2}", "Hyperquadric", "2"}), Source::reference);
  b.check("E_6/P_1", row(ihss_lookup("E_6/P_1")), Json::array({"E_6/P_1", "D_5/P_5", "Spinor", "2"}), Source::reference);
  b.check("E_7/P_7", row(ihss_lookup("E_7/P_7")), Json::array({"E_7/P_7", "E_6/P_1", "Severi", "3"}), Source::reference);
  return b.done();
}

struct Entry {
  const char* id;
  const char* statement;
  CaseReport (*run)(std::uint64_t);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"g2-surface", "G2 Weyl-chamber fan: complete, smooth, Picard 10, ray orbits {6, 6}", g2_surface},
      {"f4-wprime", "W' = <tau_1, tau_2> in W(F4) has order 8 and the stated coweight orbits", f4_wprime},
      {"f4-subtorus-fan", "F4 subtorus fan: complete, 8 rays, Picard 6, orbits {4, 4}, invariant Picard rank 2", f4_subtorus_fan},
      {"e8-subtorus-fan", "E8 subtorus fan: complete, 8 rays, Picard 6, orbits {4, 4}, invariant Picard rank 2", e8_subtorus_fan},
      {"e8-weyl-order", "|W(E8)| = 2^14 3^5 5^2 7 with recursive cross-checks", e8_weyl_order},
      {"lattice-coincidence", "weight/root index 1 exactly for G2, F4, E8; simple-root primitivity table", lattice_coincidence},
      {"typeA-pullback", "type A: omega_1 coefficients and minimal-curve degrees", type_a_pullback},
      {"typeB-spinor-pic", "type B: omega_n, spinor Picard cokernel, <omega_n, theta^vee> = 1", type_b_spinor_pic},
      {"typeC-contraction", "type C: rho identities, fan of Z, extension X -> Z, blowup chain, completeness", type_c_contraction},
      {"lg-orbits", "LG(k) dimensions and sampled symplectic checks", lg_orbits},
      {"og-orbits", "OG(k) dimensions and sampled orthogonal checks", og_orbits},
      {"surface-blowup-cases", "anticanonical ledgers of boundary blowups of P^2, P^1 x P^1, F_k", surface_blowup_cases},
      {"wonderful-anticanonical", "anticanonical divisor and weight of wonderful compactifications, rank <= 8", wonderful_anticanonical},
      {"ihss-table", "reference table of irreducible Hermitian symmetric spaces", ihss},
  };
  return e;
}

}  // namespace

std::string to_string(Source s) {
  switch (s) {
    case Source::reference: return "reference";
    case Source::elementary: return "elementary";
    case Source::cross_check: return "cross-check";
  }
  return "?";
}

bool CaseReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CaseCheck& c) { return c.pass(); });
}

std::vector<CaseInfo> list_cases() {
  std::vector<CaseInfo> out;
  for (const auto& e : entries()) out.push_back({e.id, e.statement});
  return out;
}

CaseReport run_case(const std::string& case_id, std::uint64_t seed) {
  for (const auto& e : entries())
    if (case_id == e.id) return e.run(seed);
  throw InvalidInput("unknown case '" + case_id + "'");
}

std::vector<CaseReport> run_all(std::uint64_t seed) {
  std::vector<CaseReport> out;
  for (const auto& e : entries()) out.push_back(e.run(seed));
  return out;
}

std::string to_text(const CaseReport& r) {
  std::string s = std::string(r.pass() ? "PASS " : "FAIL ") + r.case_id + ": " + r.statement + "\n";
  for (const auto& c : r.checks) {
    s += std::string(c.pass() ? "  ok   " : "  FAIL ") + c.name + ": " + c.computed.dump();
    if (!c.pass()) s += " (expected " + c.expected.dump() + ")";
    s += " [" + to_string(c.source) + "]\n";
  }
  return s;
}

Json to_json(const CaseReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"source", to_string(c.source)},
                          {"pass", c.pass()}});
  return Json{{"case", r.case_id},
              {"statement", r.statement},
              {"inputs", r.inputs},
              {"checks", checks},
              {"verdict", r.pass() ? "pass" : "fail"}};
}

const std::vector<IhssRow>& ihss_table() {
  static const std::vector<IhssRow> rows{
      {"Gr(a, a+b)", "P^{a-1} x P^{b-1}", "Segre", "min{a, b}"},
      {"D_n/P_n", "Gr(2, n)", "Pluecker", "[n/2]"},
      {"C_n/P_n", "P^{n-1}", "second Veronese", "n"},
      {"Q^r", "Q^{r-2}", "Hyperquadric", "2"},
      {"E_6/P_1", "D_5/P_5", "Spinor", "2"},
      {"E_7/P_7", "E_6/P_1", "Severi", "3"},
  };
  return rows;
}

const IhssRow& ihss_lookup(const std::string& space) {
  for (const auto& r : ihss_table())
    if (r.space == space) return r;
  throw InvalidInput("no Hermitian symmetric space named '" + space + "' in the table");
}

}  // namespace wk
