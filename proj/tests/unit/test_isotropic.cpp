#include <doctest.h>

#include "wonderkit/errors.hpp"
#include "wonderkit/isotropic.hpp"

using namespace wk;

namespace {

QVec concat(const QVec& a, const QVec& b) {
  QVec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

QMat diag(const QVec& d) {
  QMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("doubled spaces") {
  for (int n = 1; n <= 4; ++n) {
    const auto sp = DoubledSpace::symplectic(n);
    CHECK(sp.dim() == static_cast<std::size_t>(4 * n));
    const QMat& j = sp.half_form();
    for (std::size_t r = 0; r < j.rows(); ++r)
      for (std::size_t c = 0; c < j.cols(); ++c) CHECK(j(r, c) == -j(c, r));
    const auto so = DoubledSpace::orthogonal(n);
    CHECK(so.dim() == static_cast<std::size_t>(4 * n + 2));
    CHECK(so.half_form().transpose() == so.half_form());
    CHECK(determinant(sp.form()) != 0);
    CHECK(determinant(so.form()) != 0);
  }
}

TEST_CASE("isotropic subspaces validate their rows") {
  const auto sp = DoubledSpace::symplectic(1);
  // (e1, 0) and (e2, 0) pair to 1 in W1.
  CHECK_THROWS_AS(IsotropicSubspace(sp, {from_ints({1, 0, 0, 0}), from_ints({0, 1, 0, 0})}), InvalidInput);
  CHECK_THROWS_AS(IsotropicSubspace(sp, {from_ints({1, 0, 0, 0}), from_ints({2, 0, 0, 0})}), InvalidInput);
  CHECK_THROWS_AS(IsotropicSubspace(sp, {from_ints({1, 0, 0})}), InvalidInput);
  const IsotropicSubspace v(sp, {from_ints({1, 0, 0, 0})});
  CHECK_FALSE(is_maximal(sp, v));
  CHECK_THROWS_AS(intersection_invariant(sp, v), InvalidInput);
  // Same span, different rows: equal after reduction.
  CHECK(IsotropicSubspace(sp, {from_ints({1, 0, 1, 0}), from_ints({0, 1, 0, 1})}) ==
        IsotropicSubspace(sp, {from_ints({1, 1, 1, 1}), from_ints({1, -1, 1, -1})}));
}

TEST_CASE("stratum representatives realize every k") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& space : {DoubledSpace::symplectic(n), DoubledSpace::orthogonal(n)})
      for (int k = 0; k <= n; ++k) {
        INFO("n=" << n << " k=" << k);
        const auto v = stratum_representative(space, k);
        CHECK(is_maximal(space, v));
        CHECK(intersection_invariant(space, v) == k);
        if (space.kind() == FormKind::orthogonal) CHECK(same_family(space, diagonal_subspace(space), v));
      }
  const auto sp = DoubledSpace::symplectic(2);
  CHECK(intersection_invariant(sp, diagonal_subspace(sp)) == 0);
  CHECK(split_subspace(sp) == stratum_representative(sp, 2));
  CHECK_THROWS_AS(split_subspace(DoubledSpace::orthogonal(2)), InvalidInput);
}

TEST_CASE("tau fixes exactly the split stratum representatives") {
  for (int n = 1; n <= 3; ++n) {
    const auto sp = DoubledSpace::symplectic(n);
    for (int k = 0; k <= n; ++k) {
      const auto v = stratum_representative(sp, k);
      CHECK((apply_tau(sp, v) == v) == (k == n));
    }
  }
}

TEST_CASE("random samplers stay in their stratum") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& space : {DoubledSpace::symplectic(n), DoubledSpace::orthogonal(n)})
      for (int k = 0; k <= n; ++k)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const auto v = random_stratum_subspace(space, k, seed);
          CHECK(is_maximal(space, v));
          CHECK(intersection_invariant(space, v) == k);
          const auto g = random_maximal_isotropic(space, seed);
          CHECK(is_maximal(space, g));
          const auto [a, b] = intersection_dims(space, g);
          CHECK(a == b);
        }
}

TEST_CASE("graphs of isometries") {
  const auto sp = DoubledSpace::symplectic(2);
  CHECK(graph_subspace(sp, QMat::identity(4)) == diagonal_subspace(sp));
  CHECK_THROWS_AS(graph_subspace(sp, diag(from_ints({2, 1, 1, 1}))), InvalidInput);
}

TEST_CASE("degeneration of graphs into the codimension-one stratum") {
  // g_t = diag(t, 1, 1/t, 1) preserves J, so its graph is Lagrangian in LG(0).
  const auto sp = DoubledSpace::symplectic(2);
  for (const Rational& t : {Rational(1), Rational(2), Rational(1, 3), Rational(-5, 2)}) {
    const auto v = graph_subspace(sp, diag(QVec{t, 1, 1 / t, 1}));
    CHECK(intersection_invariant(sp, v) == 0);
    // Rescaled basis (e1, t e1), (e2, e2), (t e3, e3), (e4, e4) spans the same graph.
    const IsotropicSubspace rescaled(sp, {concat(from_ints({1, 0, 0, 0}), QVec{t, 0, 0, 0}),
                                          concat(from_ints({0, 1, 0, 0}), from_ints({0, 1, 0, 0})),
                                          concat(QVec{0, 0, t, 0}, from_ints({0, 0, 1, 0})),
                                          concat(from_ints({0, 0, 0, 1}), from_ints({0, 0, 0, 1}))});
    CHECK(rescaled == v);
  }
  // t -> 0 in the rescaled basis.
  const IsotropicSubspace limit(sp, {concat(from_ints({1, 0, 0, 0}), from_ints({0, 0, 0, 0})),
                                     concat(from_ints({0, 1, 0, 0}), from_ints({0, 1, 0, 0})),
                                     concat(from_ints({0, 0, 0, 0}), from_ints({0, 0, 1, 0})),
                                     concat(from_ints({0, 0, 0, 1}), from_ints({0, 0, 0, 1}))});
  CHECK(is_maximal(sp, limit));
  CHECK(intersection_invariant(sp, limit) == 1);
}

TEST_CASE("orbit dimension tables") {
  for (int n = 1; n <= 25; ++n)
    for (int k = 0; k <= n; ++k) {
      const long nn = n, kk = k, m = n - k;
      const auto lg = lg_orbit_data(n, k);
      CHECK(lg.total == 2 * nn * nn + nn - kk * kk);
      CHECK(lg.codim == kk * kk);
      CHECK(lg.base + lg.fiber == lg.total);
      CHECK(lg.base == kk * (4 * nn + 1 - 3 * kk));
      CHECK(lg.fiber == m * (2 * m + 1));
      CHECK(lg_orbit_dim(n, k) == lg.total);
      const auto og = og_orbit_data(n, k);
      CHECK(og.total == nn * (2 * nn + 1) - kk * kk);
      CHECK(og.base + og.fiber == og.total);
    }
  CHECK(lg_orbit_dim(3, 0) == 21);
  CHECK_THROWS_AS(lg_orbit_data(2, 3), InvalidInput);
  CHECK_THROWS_AS(og_orbit_data(2, -1), InvalidInput);
}

TEST_CASE("sampled checks are seed-deterministic and cover all strata") {
  const auto sp = DoubledSpace::symplectic(2);
  const auto a = equal_intersection_check(sp, 40, 9);
  const auto b = equal_intersection_check(sp, 40, 9);
  CHECK(dump(to_json(a)) == dump(to_json(b)));
  CHECK(a.violations == 0);
  CHECK(a.strata.size() == 3);
  std::size_t total = 0;
  for (const auto& [k, count] : a.strata) total += count;
  CHECK(total == 40);
  CHECK(tau_fixed_locus_check(sp, 40, 9).violations == 0);
  CHECK_THROWS_AS(tau_fixed_locus_check(DoubledSpace::orthogonal(2), 4, 0), InvalidInput);
}
