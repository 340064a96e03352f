#include <doctest.h>

#include <random>

#include "wonderkit/errors.hpp"
#include "wonderkit/lattice.hpp"
#include "wonderkit/linalg.hpp"

using namespace wk;

namespace {

const Basis kCoordinateBases[] = {Basis::simple_root, Basis::fund_weight, Basis::simple_coroot, Basis::fund_coweight};

Integer det_of(const std::vector<std::vector<int>>& a) {
  QMat m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i][j];
  return determinant(m).get_num();
}

}  // namespace

TEST_CASE("basis changes round-trip on random vectors") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), pick(0, 3);
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    for (int trial = 0; trial < 100; ++trial) {
      QVec c(static_cast<std::size_t>(rs->rank()));
      for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
      }
      const Basis from = kCoordinateBases[pick(rng)], to = kCoordinateBases[pick(rng)];
      const LatticeVector v = make_vector(rs, from, c);
      const LatticeVector w = to_basis(v, to);
      CHECK(w.ambient() == v.ambient());
      CHECK(to_basis(w, from).coords == c);
      CHECK(to_basis(to_basis(v, Basis::ambient), from).coords == c);
    }
  }
}

TEST_CASE("E6 and E7 vectors outside their span are rejected") {
  const auto e6 = build_root_system("E6");
  const LatticeVector off = make_vector(e6, Basis::ambient, unit_vec(8, 7));
  CHECK_THROWS_AS(to_basis(off, Basis::fund_weight), InvalidInput);
}

TEST_CASE("pairing and coroots") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const auto n = static_cast<std::size_t>(rs->rank());
    for (std::size_t i = 0; i < n; ++i) {
      const LatticeVector wi = make_vector(rs, Basis::fund_weight, unit_vec(n, i));
      for (std::size_t j = 0; j < n; ++j) {
        const LatticeVector aj = coroot(make_vector(rs, Basis::simple_root, unit_vec(n, j)));
        CHECK(pair(wi, aj) == (i == j ? 1 : 0));
      }
    }
  }
  CHECK_THROWS_AS(pair(make_vector(build_root_system("A2"), Basis::fund_weight, from_ints({1, 0})),
                       make_vector(build_root_system("G2"), Basis::fund_weight, from_ints({0, 1}))),
                  InvalidInput);
}

TEST_CASE("weight/root index is the determinant of the Cartan matrix") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    CHECK(weight_root_index(*rs) == det_of(dynkin_cartan(t)));
  }
  CHECK(weight_root_index(*build_root_system("A5")) == 6);
  CHECK(weight_root_index(*build_root_system("D6")) == 4);
  CHECK(weight_root_index(*build_root_system("E7")) == 2);
}

TEST_CASE("primitivity in the weight lattice") {
  const auto c3 = build_root_system("C3");
  CHECK(is_primitive_in_weight_lattice(make_vector(c3, Basis::ambient, c3->simple_root(0))));
  CHECK_FALSE(is_primitive_in_weight_lattice(make_vector(c3, Basis::ambient, c3->simple_root(2))));
  CHECK_FALSE(is_primitive_in_weight_lattice(make_vector(c3, Basis::fund_weight, zero_vec(3))));
  CHECK_THROWS_AS(is_primitive_in_weight_lattice(make_vector(c3, Basis::fund_weight, QVec{Rational(1, 2), 0, 0})),
                  InvalidInput);
}

TEST_CASE("minimal curve degree") {
  // <theta, theta^vee> = 2 in every type.
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    CHECK(minimal_curve_degree(highest_root(rs)) == 2);
  }
}

TEST_CASE("anticanonical weight 2 rho + sum alpha_i") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const auto cartan = dynkin_cartan(t);
    const auto n = static_cast<std::size_t>(rs->rank());
    // Column sums of the Cartan matrix give sum alpha_i in fundamental weights.
    QVec oracle(n);
    for (std::size_t j = 0; j < n; ++j) {
      long s = 2;
      for (std::size_t i = 0; i < n; ++i) s += cartan[i][j];
      oracle[j] = s;
    }
    CHECK(anticanonical_weight(rs).coords == oracle);
  }
  CHECK(minimal_curve_degree(anticanonical_weight(build_root_system("A1"))) == 4);
}
