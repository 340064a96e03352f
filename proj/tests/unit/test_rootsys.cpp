#include <doctest.h>

#include <set>

#include "wonderkit/errors.hpp"
#include "wonderkit/rootsys.hpp"

using namespace wk;

namespace {

// Independent closed forms for |R+| and |W|.
long positive_root_count(const TypeLabel& t) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer weyl_order_oracle(const TypeLabel& t) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (Integer(1) << static_cast<mp_bitcnt_t>(n)) * factorial(n);
    case Family::D: return (Integer(1) << static_cast<mp_bitcnt_t>(n - 1)) * factorial(n);
    case Family::E: return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

QVec reflect(const QVec& v, const QVec& root) { return v - (2 * dot(v, root) / dot(root, root)) * root; }

}  // namespace

TEST_CASE("type labels") {
  CHECK(TypeLabel::parse("E8").str() == "E8");
  CHECK(TypeLabel::parse("c_3").str() == "C3");
  for (const char* bad : {"A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H3", "X", "A", "Ax", ""}) {
    INFO(bad);
    CHECK_THROWS_AS(TypeLabel::parse(bad), InvalidInput);
  }
  CHECK(all_types_up_to_rank(8).size() == 8 + 7 + 7 + 5 + 3 + 1 + 1);
}

TEST_CASE("bundled models: Cartan matrix, root counts, Weyl order") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    CHECK(rs->cartan() == dynkin_cartan(t));
    CHECK(static_cast<long>(rs->positive_root_coords().size()) == positive_root_count(t));
    CHECK(rs->roots().size() == 2 * rs->positive_root_coords().size());
    CHECK(weyl_order(*rs) == weyl_order_oracle(t));

    long exp_sum = 0;
    for (int m : exponents(*rs)) exp_sum += m;
    CHECK(exp_sum == positive_root_count(t));
  }
}

TEST_CASE("Bourbaki conventions for the doubly laced types") {
  const auto b3 = build_root_system("B3");
  CHECK(b3->cartan()[1][2] == -2);
  CHECK(b3->cartan()[2][1] == -1);
  const auto c3 = build_root_system("C3");
  CHECK(c3->cartan()[2][1] == -2);
  CHECK(c3->cartan()[1][2] == -1);
  const auto g2 = build_root_system("G2");
  CHECK(g2->cartan()[1][0] == -3);
}

TEST_CASE("root sets are closed under their reflections") {
  for (const auto& t : all_types_up_to_rank(6)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    bool closed = true;
    for (const auto& a : rs->roots())
      for (const auto& b : rs->roots()) closed = closed && rs->is_root(reflect(b, a));
    CHECK(closed);
  }
}

TEST_CASE("simple reflections and fundamental weights") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    for (int i = 0; i < rs->rank(); ++i) {
      CHECK(rs->reflection(i) * rs->simple_root(i) == -rs->simple_root(i));
      for (int j = 0; j < rs->rank(); ++j) {
        CHECK(rs->coroot_pairing(rs->fundamental_weight(i), j) == (i == j ? 1 : 0));
        CHECK(dot(rs->fundamental_coweight(i), rs->simple_root(j)) == (i == j ? 1 : 0));
        CHECK(rs->coroot_pairing(rs->simple_root(i), j) == rs->cartan()[i][j]);
      }
    }
    QVec sum = zero_vec(rs->ambient_dim());
    for (int i = 0; i < rs->rank(); ++i) sum += rs->fundamental_weight(i);
    CHECK(sum == rs->rho());
  }
}

TEST_CASE("highest root dominates every positive root") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const auto theta = rs->positive_root_coords().back();
    for (const auto& c : rs->positive_root_coords())
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] <= theta[i]);
  }
}

TEST_CASE("weyl_enumerate matches weyl_order for rank <= 4") {
  for (const auto& t : all_types_up_to_rank(4)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const auto w = weyl_enumerate(*rs);
    CHECK(Integer(static_cast<long>(w.size())) == weyl_order(*rs));
    std::set<QMat> distinct;
    for (const auto& g : w) distinct.insert(g.matrix);
    CHECK(distinct.size() == w.size());
  }
  CHECK_THROWS_AS(weyl_enumerate(*build_root_system("E6")), BoundExceeded);
}

TEST_CASE("longest element") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const WeylElement w0 = longest_element(*rs);
    CHECK(w0.word.size() == rs->positive_root_coords().size());
    CHECK(w0.matrix * rs->rho() == -rs->rho());
  }
}

TEST_CASE("weight involution -w_0") {
  auto id = [](int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
  };
  CHECK(weight_involution(*build_root_system("A4")) == std::vector<int>{3, 2, 1, 0});
  CHECK(weight_involution(*build_root_system("D5")) == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(weight_involution(*build_root_system("D4")) == id(4));
  CHECK(weight_involution(*build_root_system("E6")) == std::vector<int>{5, 1, 4, 3, 2, 0});
  for (const char* t : {"B3", "C4", "E7", "E8", "F4", "G2"}) {
    INFO(t);
    const auto rs = build_root_system(t);
    CHECK(weight_involution(*rs) == id(rs->rank()));
  }
}

TEST_CASE("subgroup closure and orbits") {
  const auto rs = build_root_system("B2");
  const auto w = subgroup_closure({simple_reflection(*rs, 0), simple_reflection(*rs, 1)});
  CHECK(w.size() == 8);
  CHECK(orbit(w, rs->simple_root(0)).size() == 4);
  CHECK(orbit(w, rs->simple_root(1)).size() == 4);
  CHECK(orbit(w, rs->rho()).size() == 8);
}

TEST_CASE("weyl elements are validated") {
  const auto rs = build_root_system("A2");
  QMat scale = QMat::identity(rs->ambient_dim());
  scale(0, 0) = 2;
  CHECK_THROWS_AS(make_weyl_element(*rs, scale), InvalidInput);
  const WeylElement s = simple_reflection(*rs, 1);
  const WeylElement back = weyl_element_from_json(*rs, to_json(s));
  CHECK(back == s);
}

TEST_CASE("root system JSON round-trips") {
  for (const auto& t : all_types_up_to_rank(8)) {
    INFO(t.str());
    const auto rs = build_root_system(t);
    const Json j = to_json(*rs);
    const auto back = root_system_from_json(j);
    CHECK(dump(to_json(*back)) == dump(j));
  }
  CHECK_THROWS_AS(root_system_from_json(Json{{"rank", 2}}), ParseError);
  // Simple roots that do not realize the label's Cartan matrix.
  const Json wrong{{"type", "A2"}, {"simple_roots", Json::array({Json::array({1, 0}), Json::array({0, 1})})}};
  CHECK_THROWS_AS(root_system_from_json(wrong), InvalidInput);
}
