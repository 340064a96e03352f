#include <doctest.h>

#include "wonderkit/errors.hpp"
#include "wonderkit/lattice.hpp"
#include "wonderkit/linalg.hpp"
#include "wonderkit/spherical.hpp"

using namespace wk;

namespace {

std::string color(int j) { return "D(omega_" + std::to_string(j) + ")"; }
std::string boundary(int i) { return "D_" + std::to_string(i); }

RationalCone cone_of(std::vector<QVec> gens, std::size_t d) { return RationalCone(std::move(gens), Lattice::standard(d)); }

}  // namespace

TEST_CASE("wonderful rho table") {
  for (const auto& t : all_types_up_to_rank(6)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const auto n = static_cast<std::size_t>(rs->rank());
    const RhoTable rho = wonderful_rho_table(*rs);
    const auto cartan = dynkin_cartan(t);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(rho.at(boundary(static_cast<int>(i) + 1)).value == -unit_vec(n, i));
      CHECK(rho.at(boundary(static_cast<int>(i) + 1)).kind == DivisorKind::boundary);
      // alpha_j^vee = sum_i <alpha_i, alpha_j^vee> omega_i^vee.
      QVec col(n);
      for (std::size_t k = 0; k < n; ++k) col[k] = cartan[k][i];
      CHECK(rho.at(color(static_cast<int>(i) + 1)).value == col);
    }
    CHECK(rho.boundary_symbol_on_ray(Rational(-3) * unit_vec(n, n - 1)) ==
          std::optional<std::string>(boundary(static_cast<int>(n))));
    CHECK_FALSE(rho.boundary_symbol_on_ray(unit_vec(n, 0)).has_value());
    CHECK_THROWS_AS(rho.at("D_99"), InvalidInput);
  }
}

TEST_CASE("valuation cone is the negative chamber") {
  const auto rs = build_root_system("B3");
  const RationalCone v = valuation_cone(*rs);
  CHECK(v.generators().size() == 3);
  CHECK(contains(v, from_ints({-1, -2, -3}), true));
  CHECK_FALSE(contains(v, from_ints({1, -2, -3})));
}

TEST_CASE("colored cone conditions") {
  const auto rs = build_root_system("A2");
  const RhoTable rho = wonderful_rho_table(*rs);
  const RationalCone v = valuation_cone(*rs);
  const QVec d1 = rho.at("D_1").value, c1 = rho.at(color(1)).value;

  CHECK(colored_cone_defect({v, {}}, v, rho).empty());
  CHECK(colored_cone_defect({cone_of({d1, c1}, 2), {color(1)}}, v, rho).empty());
  // A generator outside the valuation cone needs a color.
  CHECK_FALSE(colored_cone_defect({cone_of({d1, c1}, 2), {}}, v, rho).empty());
  // A color whose image is not in the cone.
  CHECK_FALSE(colored_cone_defect({cone_of({d1}, 2), {color(2)}}, v, rho).empty());
  // A cone meeting the valuation cone only at the origin.
  CHECK_FALSE(colored_cone_defect({cone_of({c1}, 2), {color(1)}}, v, rho).empty());
}

TEST_CASE("colored faces") {
  const auto rs = build_root_system("A2");
  const RhoTable rho = wonderful_rho_table(*rs);
  const RationalCone v = valuation_cone(*rs);
  const ColoredCone c{cone_of({rho.at("D_1").value, rho.at(color(1)).value}, 2), {color(1)}};
  const auto fs = colored_faces(c, v, rho);
  // The ray of the color alone misses the valuation cone.
  CHECK(fs.size() == 3);
  const ColoredCone ray{cone_of({rho.at("D_1").value}, 2), {}};
  CHECK(is_colored_face(ray, c, v, rho));
  CHECK_FALSE(is_colored_face(ColoredCone{cone_of({rho.at("D_1").value}, 2), {color(1)}}, c, v, rho));
}

TEST_CASE("wonderful colored fan: boolean orbit lattice, complete") {
  for (const auto& t : all_types_up_to_rank(4)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const ColoredFan f = wonderful_colored_fan(*rs);
    CHECK(f.cones().size() == (std::size_t{1} << rs->rank()));
    CHECK(f.maximal_cones().size() == 1);
    CHECK(is_complete_embedding(f));
    CHECK(is_boolean_lattice(orbit_poset(f), static_cast<std::size_t>(rs->rank())));
  }
}

TEST_CASE("overlapping colored cones are rejected") {
  const auto rs = build_root_system("A2");
  const RhoTable rho = wonderful_rho_table(*rs);
  const RationalCone v = valuation_cone(*rs);
  const QVec d1 = rho.at("D_1").value, d2 = rho.at("D_2").value;
  const ColoredCone a{cone_of({d1, d2}, 2), {}};
  const ColoredCone b{cone_of({d1, d1 + d2 + d2}, 2), {}};
  CHECK_THROWS_AS(ColoredFan({a, b}, v, rho), InvalidInput);
}

TEST_CASE("type C: chain cones, the fan of Z and the blowup chain") {
  for (int n = 2; n <= 5; ++n) {
    INFO(n);
    const auto rs = build_root_system(TypeLabel{Family::C, n});
    const RhoTable rho = wonderful_rho_table(*rs);
    for (int k = 1; k <= n; ++k) {
      const ColoredCone c = z_chain_cone(*rs, k);
      CHECK(c.cone.dim() == static_cast<std::size_t>(k));
      CHECK(c.colors.size() == static_cast<std::size_t>(k - 1));
      CHECK(contains(c.cone, rho.at(boundary(k)).value, true));
    }
    const ColoredFan z = z_colored_fan(n);
    const auto poset = orbit_poset(z);
    CHECK(is_chain(poset));
    CHECK(poset.nodes.size() == static_cast<std::size_t>(n + 1));
    if (n <= 4) CHECK(is_complete_embedding(z));

    const ColoredFan x = wonderful_colored_fan(*rs);
    const QMat id = QMat::identity(static_cast<std::size_t>(n));
    CHECK(extends_to_morphism(x, x, id, {}));
    CHECK(extends_to_morphism(x, z, id, {}));
    const ExtensionDecision back = extension_decision(z, x, id, {});
    CHECK_FALSE(back.extends);
    CHECK_FALSE(back.obstruction.empty());

    const auto chain = blowup_chain_fans(n);
    CHECK(chain.size() == static_cast<std::size_t>(n));
    CHECK(chain.front() == x);
    CHECK(chain.back() == z);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      CHECK(extends_to_morphism(chain[i], chain[i + 1], id, {}));
      CHECK_FALSE(extends_to_morphism(chain[i + 1], chain[i], id, {}));
    }
  }
}

TEST_CASE("dominant colors relax the extension condition") {
  const auto rs = build_root_system(TypeLabel{Family::C, 2});
  const ColoredFan x = wonderful_colored_fan(*rs);
  const ColoredFan z = z_colored_fan(2);
  const QMat id = QMat::identity(2);
  CHECK_FALSE(extends_to_morphism(z, x, id, {}));
  // Colors mapped dominantly impose nothing, but the cone condition remains.
  CHECK_FALSE(extends_to_morphism(z, x, id, {color(1)}));
}

TEST_CASE("intermediate colored cones") {
  const auto rs = build_root_system("A3");
  const RhoTable rho = wonderful_rho_table(*rs);
  const RationalCone v = valuation_cone(*rs);
  // The open ray through -e1 - e2 lies in the relative interior of cone{-e1, -e2} only.
  const ColoredCone lower{cone_of({from_ints({-1, -1, 0})}, 3), {}};
  const auto found = intermediate_colored_cones(lower, ColoredCone{v, {}}, v, rho);
  std::vector<std::string> names;
  for (const auto& c : found) names.push_back(to_string(c));
  CHECK(names == std::vector<std::string>{"(cone{(-1, 0, 0), (0, -1, 0)}, {})"});

  // A ray that is a face of every candidate is in no relative interior.
  const ColoredCone face{cone_of({rho.at("D_1").value}, 3), {}};
  CHECK(intermediate_colored_cones(face, ColoredCone{v, {}}, v, rho).empty());
}

TEST_CASE("Picard presentations") {
  for (const auto& t : all_types_up_to_rank(6)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const auto n = static_cast<std::size_t>(rs->rank());
    const DivisorLedger ledger = wonderful_divisor_ledger(*rs);
    const PicardPresentation p = picard_presentation(ledger);
    CHECK(p.free_rank == rs->rank());
    CHECK(p.torsion.empty());
    // The colors form a basis of Pic.
    QMat colors(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto pos = std::find(ledger.symbols.begin(), ledger.symbols.end(), color(static_cast<int>(j) + 1));
      REQUIRE(pos != ledger.symbols.end());
      const ZVec& img = p.images[static_cast<std::size_t>(pos - ledger.symbols.begin())];
      for (std::size_t i = 0; i < n; ++i) colors(i, j) = Rational(img[i]);
    }
    CHECK(abs(determinant(colors)) == 1);
  }
  for (int n = 2; n <= 8; ++n) {
    INFO(n);
    const PicardPresentation p = picard_presentation(spinor_divisor_ledger(n));
    CHECK(p.free_rank == 1);
    CHECK(p.torsion.empty());
    CHECK(p.images.front() == ZVec{2});
    CHECK(p.images.back() == ZVec{1});
  }
  // Z/2 from a single relation 2 D = 0.
  const PicardPresentation tors = picard_presentation({{"D"}, {ZVec{2}}});
  CHECK(tors.free_rank == 0);
  CHECK(tors.torsion == std::vector<Integer>{2});
}

TEST_CASE("divisor weights and the anticanonical divisor") {
  for (const auto& t : all_types_up_to_rank(6)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const auto n = static_cast<std::size_t>(rs->rank());
    const auto cartan = dynkin_cartan(t);
    const auto weights = wonderful_divisor_weights(*rs);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(weights.at(color(static_cast<int>(j) + 1)) == unit_vec(n, j));
      QVec alpha(n);
      for (std::size_t i = 0; i < n; ++i) alpha[i] = cartan[j][i];
      CHECK(weights.at(boundary(static_cast<int>(j) + 1)) == alpha);
    }
    std::map<std::string, Integer> m;
    for (std::size_t j = 0; j < n; ++j) m[color(static_cast<int>(j) + 1)] = 2;
    const FormalDivisor k = anticanonical_divisor(wonderful_colored_fan(*rs), m);
    CHECK(k.size() == 2 * n);
    CHECK(divisor_weight(k, weights) == anticanonical_weight(rs).coords);
  }
  CHECK_THROWS_AS(anticanonical_divisor(z_colored_fan(2), {}), InvalidInput);
}

TEST_CASE("closed orbit restriction") {
  const auto a3 = build_root_system("A3");
  const auto [left, right] = closed_orbit_restriction(a3, 1);
  CHECK(left.coords == from_ints({0, 0, 1}));
  CHECK(right.coords == from_ints({1, 0, 0}));
  const auto b3 = build_root_system("B3");
  const auto [l2, r2] = closed_orbit_restriction(b3, 2);
  CHECK(l2.coords == r2.coords);
}

TEST_CASE("colored fan JSON round-trips byte for byte") {
  for (const ColoredFan& f : {wonderful_colored_fan(*build_root_system("G2")), z_colored_fan(3), blowup_chain_fans(4)[1]}) {
    const Json j = to_json(f);
    const ColoredFan back = colored_fan_from_json(j);
    CHECK(back == f);
    CHECK(dump(to_json(back)) == dump(j));
  }
  CHECK_THROWS_AS(colored_fan_from_json(Json{{"ambient_dim", 2}}), ParseError);
}
