#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wonderkit/errors.hpp"
#include "wonderkit/feasibility.hpp"
#include "wonderkit/json_io.hpp"
#include "wonderkit/linalg.hpp"
#include "wonderkit/rational.hpp"
#include "wonderkit/smith.hpp"

using namespace wk;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

QMat random_qmat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  QMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng);
  return m;
}

// Leibniz expansion over all permutations.
Rational leibniz_det(const QMat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Integer zdet(const ZMat& z) {
  QMat q(z.rows, z.cols);
  for (std::size_t i = 0; i < z.rows; ++i)
    for (std::size_t j = 0; j < z.cols; ++j) q(i, j) = Rational(z(i, j));
  return determinant(q).get_num();
}

}  // namespace

TEST_CASE("rationals print canonically") {
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+5")) == "5/1");
  CHECK(to_string(parse_rational("0/7")) == "0/1");
}

TEST_CASE("malformed rational literals are rejected") {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.5", "/3", "3/", " 1", "4/-6"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("rational text round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational q = random_rational(rng) / (1 + i % 7);
    CHECK(parse_rational(to_string(q)) == q);
    CHECK(rational_from_json(to_json(q), "q") == q);
  }
}

TEST_CASE("primitive integer vectors") {
  CHECK(primitive_integer(from_ints({4, -6, 0})) == ZVec{2, -3, 0});
  CHECK(primitive_integer(QVec{Rational(1, 2), Rational(1, 3)}) == ZVec{3, 2});
  CHECK_THROWS_AS(primitive_integer(zero_vec(3)), InvalidInput);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const QMat m = random_qmat(rng, n, n);
    CHECK(determinant(m) == leibniz_det(m));
  }
}

TEST_CASE("inverse, solve and kernel") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 4), c = 1 + static_cast<std::size_t>((trial / 4) % 5);
    const QMat a = random_qmat(rng, r, c);
    const auto ker = kernel(a);
    CHECK(ker.size() + rank(a) == c);
    for (const auto& v : ker) CHECK(is_zero(a * v));

    QVec x(c);
    for (auto& e : x) e = random_rational(rng);
    const QVec b = a * x;
    const auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);

    if (r == c) {
      const auto inv = inverse(a);
      CHECK(inv.has_value() == (determinant(a) != 0));
      if (inv) CHECK(a * *inv == QMat::identity(r));
    }
  }
  const QMat singular = QMat::from_rows({from_ints({1, 2}), from_ints({2, 4})});
  CHECK_FALSE(inverse(singular).has_value());
  CHECK_FALSE(solve(singular, from_ints({1, 0})).has_value());
}

TEST_CASE("row space basis is canonical") {
  const QMat a = QMat::from_rows({from_ints({1, 2, 3}), from_ints({2, 4, 7})});
  const QMat b = QMat::from_rows({from_ints({3, 6, 10}), from_ints({0, 0, 1})});
  CHECK(row_space_basis(a) == row_space_basis(b));
}

TEST_CASE("Smith normal form") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 4), c = 1 + static_cast<std::size_t>((trial / 4) % 4);
    ZMat a(r, c);
    for (auto& x : a.data) x = entry(rng);
    const SmithForm s = smith_normal_form(a);
    CHECK((s.left * a * s.right).data == s.diagonal.data);
    CHECK(abs(zdet(s.left)) == 1);
    CHECK(abs(zdet(s.right)) == 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
      CHECK(s.invariant_factors[i] > 0);
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    }
    if (r == c) {
      Integer prod = 1;
      for (const auto& d : s.invariant_factors) prod *= d;
      const Integer det = abs(zdet(a));
      CHECK((det == 0 ? s.invariant_factors.size() < r : prod == det));
    }
  }
}

TEST_CASE("Smith normal form of a known matrix") {
  ZMat a(3, 3);
  const int v[] = {2, 4, 4, -6, 6, 12, 10, -4, -16};
  for (std::size_t i = 0; i < 9; ++i) a.data[i] = v[i];
  CHECK(smith_normal_form(a).invariant_factors == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("feasibility returns witnesses or proves emptiness") {
  // x >= 1, y >= 1, x + y <= 3
  const std::vector<LinearConstraint> box{{from_ints({1, 0}), 1}, {from_ints({0, 1}), 1}, {from_ints({-1, -1}), -3}};
  const auto p = feasible_point(2, box);
  REQUIRE(p.has_value());
  for (const auto& c : box) CHECK(dot(c.a, *p) >= c.b);

  CHECK_FALSE(feasible_point(1, {{from_ints({1}), 1}, {from_ints({-1}), 0}}).has_value());

  // x, y, z >= 0 on the plane x + y + z = 2, with z >= 3 making it empty.
  std::vector<LinearConstraint> orthant;
  for (std::size_t i = 0; i < 3; ++i) orthant.push_back({unit_vec(3, i), 0});
  const std::vector<LinearConstraint> plane{{from_ints({1, 1, 1}), 2}};
  const auto q = feasible_point(3, orthant, plane);
  REQUIRE(q.has_value());
  CHECK(dot(plane[0].a, *q) == 2);
  for (const auto& c : orthant) CHECK(dot(c.a, *q) >= c.b);
  orthant.push_back({unit_vec(3, 2), 3});
  CHECK_FALSE(feasible_point(3, orthant, plane).has_value());
}

TEST_CASE("malformed JSON reports a location") {
  try {
    parse_json_text("{\"a\": [1, 2", "input.json");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("input.json") != std::string::npos);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}
