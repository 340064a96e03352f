#include "wonderkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

#include "wonderkit/errors.hpp"

namespace wk {

namespace {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

QVec halves(std::initializer_list<long> twice) {
  QVec v;
  for (long x : twice) {
    Rational q(x, 2);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

std::vector<QVec> bundled_simple_roots(const TypeLabel& t) {
  const int n = t.rank;
  const auto N = static_cast<std::size_t>(n);
  std::vector<QVec> s;
  auto e_diff = [](std::size_t dim, std::size_t i, std::size_t j) {
    QVec v = zero_vec(dim);
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i < N; ++i) s.push_back(e_diff(N + 1, i, i + 1));
      break;
    case Family::B:
    case Family::C:
      for (std::size_t i = 0; i + 1 < N; ++i) s.push_back(e_diff(N, i, i + 1));
      s.push_back(Rational(t.family == Family::B ? 1 : 2) * unit_vec(N, N - 1));
      break;
    case Family::D: {
      for (std::size_t i = 0; i + 1 < N; ++i) s.push_back(e_diff(N, i, i + 1));
      QVec last = zero_vec(N);
      last[N - 2] = 1;
      last[N - 1] = 1;
      s.push_back(last);
      break;
    }
    case Family::E: {
      // E8 model in Q^8; E6, E7 are the sub-systems on the first 6, 7 simple roots.
      std::vector<QVec> e8;
      e8.push_back(halves({1, 1, -1, -1, -1, -1, -1, -1}));
      e8.push_back(from_ints({0, 1, 1, 0, 0, 0, 0, 0}));
      for (std::size_t k = 3; k <= 8; ++k) e8.push_back(e_diff(8, k - 1, k - 2));
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case Family::F:
      s = {from_ints({1, -1, 0, 0}), from_ints({0, 1, -1, 0}), from_ints({0, 0, 1, 0}),
           halves({-1, -1, -1, 1})};
      break;
    case Family::G:
      s = {from_ints({1, -1, 0}), from_ints({-1, 2, -1})};
      break;
  }
  return s;
}

// <beta, alpha_i^vee> for beta in simple-root coordinates.
long cartan_pairing(const std::vector<std::vector<int>>& a, const std::vector<long>& beta, std::size_t i) {
  long s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * a[j][i];
  return s;
}

long height(const std::vector<long>& c) { return std::accumulate(c.begin(), c.end(), 0L); }

}  // namespace

void TypeLabel::validate(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw InvalidInput(std::string("invalid simple type ") + family_letter(family) + std::to_string(rank) +
                       " (valid: A1.., B2.., C2.., D4.., E6-E8, F4, G2)");
}

TypeLabel TypeLabel::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidInput("invalid type label '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw InvalidInput("unknown root system family '" + std::string(text) + "'");
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("invalid rank in type label '" + std::string(text) + "'");
  TypeLabel t{static_cast<Family>(letter - 'A'), std::stoi(std::string(digits))};
  validate(t.family, t.rank);
  return t;
}

std::string TypeLabel::str() const { return family_letter(family) + std::to_string(rank); }

std::vector<std::vector<int>> dynkin_cartan(const TypeLabel& t) {
  TypeLabel::validate(t.family, t.rank);
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto bond = [&](std::size_t i, std::size_t j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (std::size_t i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[1][2] = -2;  // alpha_1, alpha_2 long
      break;
    case Family::G:
      a[0][1] = -1;  // alpha_1 short
      a[1][0] = -3;
      break;
  }
  return a;
}

std::vector<TypeLabel> all_types_up_to_rank(int max_rank) {
  std::vector<TypeLabel> out;
  for (int f = 0; f <= static_cast<int>(Family::G); ++f)
    for (int r = 1; r <= max_rank; ++r) {
      try {
        TypeLabel::validate(static_cast<Family>(f), r);
        out.push_back({static_cast<Family>(f), r});
      } catch (const InvalidInput&) {
      }
    }
  return out;
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::ambient: return "ambient";
    case Basis::simple_root: return "simple_root";
    case Basis::fund_weight: return "fund_weight";
    case Basis::simple_coroot: return "simple_coroot";
    case Basis::fund_coweight: return "fund_coweight";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  for (Basis b : {Basis::ambient, Basis::simple_root, Basis::fund_weight, Basis::simple_coroot, Basis::fund_coweight})
    if (to_string(b) == text) return b;
  throw InvalidInput("unknown basis '" + std::string(text) +
                     "' (expected ambient, simple_root, fund_weight, simple_coroot or fund_coweight)");
}

QVec LatticeVector::ambient() const {
  if (!rs) throw InvalidInput("lattice vector without a root system");
  return rs->basis_matrix(basis) * coords;
}

RootSystem::RootSystem(TypeLabel type, std::vector<QVec> simple_roots)
    : type_(type), simple_roots_(std::move(simple_roots)) {
  TypeLabel::validate(type_.family, type_.rank);
  const auto n = static_cast<std::size_t>(type_.rank);
  if (simple_roots_.size() != n)
    throw InvalidInput(type_.str() + " needs " + std::to_string(n) + " simple roots, got " +
                       std::to_string(simple_roots_.size()));
  for (const auto& a : simple_roots_) {
    if (a.size() != simple_roots_.front().size()) throw InvalidInput("simple roots of different dimensions");
    if (is_zero(a)) throw InvalidInput("zero simple root");
  }

  cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = 2 * dot(simple_roots_[i], simple_roots_[j]) / dot(simple_roots_[j], simple_roots_[j]);
      if (!is_integer(c) || !c.get_num().fits_sint_p())
        throw InvalidInput("Cartan integer <alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(j + 1) +
                           "^vee> = " + to_string(c) + " is not an integer");
      cartan_[i][j] = static_cast<int>(c.get_num().get_si());
    }
  if (cartan_ != dynkin_cartan(type_))
    throw InvalidInput("simple roots do not realize the Cartan matrix of " + type_.str());
  // Positive-definite Gram matrix: leading principal minors > 0.
  {
    QMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(simple_roots_[i], simple_roots_[j]);
    for (std::size_t k = 1; k <= n; ++k) {
      QMat minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
      if (determinant(minor) <= 0) throw InvalidInput("simple roots are not linearly independent");
    }
  }

  // Root closure in simple-root coordinates.
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    for (long sign : {1L, -1L}) {
      std::vector<long> v = e;
      for (auto& x : v) x *= sign;
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto img = beta;
      img[i] -= cartan_pairing(cartan_, beta, i);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  for (const auto& c : seen) {
    const bool pos = std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
    const bool neg = std::all_of(c.begin(), c.end(), [](long x) { return x <= 0; });
    if (!pos && !neg) throw InvariantViolation("root with mixed-sign simple coordinates");
    if (pos) positive_coords_.push_back(c);
    QVec amb = ambient_from_simple_coords(c);
    root_set_.insert(amb);
  }
  roots_.assign(root_set_.begin(), root_set_.end());
  std::stable_sort(positive_coords_.begin(), positive_coords_.end(),
                   [](const auto& a, const auto& b) { return height(a) < height(b); });

  const std::size_t d = ambient_dim();
  for (std::size_t i = 0; i < n; ++i) {
    const QVec& a = simple_roots_[i];
    const Rational f = 2 / dot(a, a);
    QMat s = QMat::identity(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) s(r, c) -= f * a[r] * a[c];
    reflections_.push_back(std::move(s));
  }

  // omega_i = sum_j (A^-1)_ij alpha_j ; omega_i^vee = sum_j (A^-1)_ji alpha_j^vee.
  QMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
  const QMat ainv = *inverse(a);
  std::vector<QVec> coroots, weights, coweights;
  for (std::size_t i = 0; i < n; ++i)
    coroots.push_back(Rational(2) / dot(simple_roots_[i], simple_roots_[i]) * simple_roots_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    QVec w = zero_vec(d), cw = zero_vec(d);
    for (std::size_t j = 0; j < n; ++j) {
      w += ainv(i, j) * simple_roots_[j];
      cw += ainv(j, i) * coroots[j];
    }
    weights.push_back(std::move(w));
    coweights.push_back(std::move(cw));
  }
  simple_root_basis_ = QMat::from_columns(simple_roots_);
  coroot_basis_ = QMat::from_columns(coroots);
  weight_basis_ = QMat::from_columns(weights);
  coweight_basis_ = QMat::from_columns(coweights);
  ambient_basis_ = QMat::identity(d);
}

QVec RootSystem::simple_coroot(int i) const { return coroot_basis_.col(static_cast<std::size_t>(i)); }
QVec RootSystem::fundamental_weight(int i) const { return weight_basis_.col(static_cast<std::size_t>(i)); }
QVec RootSystem::fundamental_coweight(int i) const { return coweight_basis_.col(static_cast<std::size_t>(i)); }

QVec RootSystem::rho() const {
  QVec r = zero_vec(ambient_dim());
  for (int i = 0; i < rank(); ++i) r += fundamental_weight(i);
  return r;
}

const QMat& RootSystem::basis_matrix(Basis b) const {
  switch (b) {
    case Basis::ambient: return ambient_basis_;
    case Basis::simple_root: return simple_root_basis_;
    case Basis::fund_weight: return weight_basis_;
    case Basis::simple_coroot: return coroot_basis_;
    case Basis::fund_coweight: return coweight_basis_;
  }
  throw InvalidInput("unknown basis");
}

Rational RootSystem::coroot_pairing(const QVec& v, int i) const {
  const QVec& a = simple_root(i);
  return 2 * dot(v, a) / dot(a, a);
}

QVec RootSystem::ambient_from_simple_coords(const std::vector<long>& coords) const {
  QVec v = zero_vec(ambient_dim());
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) v += Rational(coords[j]) * simple_roots_[j];
  return v;
}

RootSystemPtr build_root_system(const TypeLabel& type) {
  TypeLabel::validate(type.family, type.rank);
  return std::make_shared<const RootSystem>(type, bundled_simple_roots(type));
}

RootSystemPtr build_root_system(std::string_view label) { return build_root_system(TypeLabel::parse(label)); }

std::vector<LatticeVector> positive_roots(const RootSystemPtr& rs) {
  std::vector<LatticeVector> out;
  for (const auto& c : rs->positive_root_coords()) {
    QVec q;
    for (long x : c) q.push_back(Rational(x));
    out.push_back({std::move(q), Basis::simple_root, rs});
  }
  return out;
}

LatticeVector highest_root(const RootSystemPtr& rs) {
  const auto& pos = rs->positive_root_coords();
  const long h = height(pos.back());
  if (pos.size() >= 2 && height(pos[pos.size() - 2]) == h)
    throw InvariantViolation("maximal height attained by two positive roots");
  return positive_roots(rs).back();
}

std::vector<int> exponents(const RootSystem& rs) {
  std::map<long, int> per_height;
  for (const auto& c : rs.positive_root_coords()) ++per_height[height(c)];
  std::vector<int> counts;
  for (const auto& [h, c] : per_height) counts.push_back(c);
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[i - 1]) throw InvariantViolation("height distribution is not a partition");
  std::vector<int> ex;
  for (int j = 1; j <= counts.front(); ++j)
    ex.push_back(static_cast<int>(std::count_if(counts.begin(), counts.end(), [j](int c) { return c >= j; })));
  std::sort(ex.begin(), ex.end());
  if (ex.size() != static_cast<std::size_t>(rs.rank())) throw InvariantViolation("exponent count differs from rank");
  return ex;
}

Integer weyl_order(const RootSystem& rs) {
  Integer order = 1;
  for (int m : exponents(rs)) order *= m + 1;
  return order;
}

WeylElement make_weyl_element(const RootSystem& rs, QMat matrix, std::vector<int> word) {
  const std::size_t d = rs.ambient_dim();
  if (matrix.rows() != d || matrix.cols() != d)
    throw InvalidInput("Weyl element must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  if (matrix.transpose() * matrix != QMat::identity(d))
    throw InvalidInput("matrix does not preserve the inner product");
  for (const auto& r : rs.roots())
    if (!rs.is_root(matrix * r)) throw InvalidInput("matrix does not permute the root set (image of " + to_string(r) + ")");
  for (int i : word)
    if (i < 0 || i >= rs.rank()) throw InvalidInput("word index out of range");
  return {std::move(matrix), std::move(word)};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw InvalidInput("simple reflection index out of range");
  return {rs.reflection(i), {i}};
}

namespace {

std::vector<WeylElement> closure(const std::vector<QMat>& gens, std::size_t dim, std::size_t bound) {
  std::vector<WeylElement> out;
  std::set<QMat> seen;
  WeylElement id{QMat::identity(dim), {}};
  seen.insert(id.matrix);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      QMat m = out[head].matrix * gens[g];
      if (seen.count(m)) continue;
      if (out.size() >= bound)
        throw BoundExceeded("group closure exceeds bound " + std::to_string(bound));
      seen.insert(m);
      auto word = out[head].word;
      word.push_back(static_cast<int>(g));
      out.push_back({std::move(m), std::move(word)});
    }
  }
  return out;
}

}  // namespace

std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, std::size_t bound) {
  const Integer order = weyl_order(rs);
  if (order > Integer(std::to_string(bound)))
    throw BoundExceeded("|W(" + rs.type().str() + ")| = " + order.get_str() + " exceeds bound " +
                        std::to_string(bound));
  std::vector<QMat> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(rs.reflection(i));
  auto out = closure(gens, rs.ambient_dim(), bound);
  if (Integer(std::to_string(out.size())) != order)
    throw InvariantViolation("enumerated " + std::to_string(out.size()) + " elements but |W| = " + order.get_str());
  return out;
}

std::vector<WeylElement> subgroup_closure(const std::vector<WeylElement>& generators, std::size_t bound) {
  if (generators.empty()) throw InvalidInput("subgroup closure needs at least one generator");
  std::vector<QMat> gens;
  for (const auto& g : generators) {
    if (g.matrix.rows() != generators.front().matrix.rows() || g.matrix.rows() != g.matrix.cols())
      throw InvalidInput("generators must be square matrices of one size");
    gens.push_back(g.matrix);
  }
  return closure(gens, gens.front().rows(), bound);
}

std::vector<QVec> orbit(const std::vector<WeylElement>& group, const QVec& v) {
  std::set<QVec, QVecLess> pts;
  for (const auto& g : group) pts.insert(g.matrix * v);
  return {pts.begin(), pts.end()};
}

WeylElement longest_element(const RootSystem& rs) {
  QVec lambda = rs.rho();
  std::vector<int> descents;
  for (;;) {
    int next = -1;
    for (int i = 0; i < rs.rank() && next < 0; ++i)
      if (rs.coroot_pairing(lambda, i) > 0) next = i;
    if (next < 0) break;
    lambda = rs.reflection(next) * lambda;
    descents.push_back(next);
  }
  if (lambda != -rs.rho()) throw InvariantViolation("greedy descent did not reach -rho");
  if (descents.size() != rs.positive_root_coords().size())
    throw InvariantViolation("longest element length differs from |R+|");
  std::vector<int> word(descents.rbegin(), descents.rend());
  QMat m = QMat::identity(rs.ambient_dim());
  for (int i : word) m = m * rs.reflection(i);
  return {std::move(m), std::move(word)};
}

std::vector<int> weight_involution(const RootSystem& rs) {
  const WeylElement w0 = longest_element(rs);
  std::vector<int> p;
  for (int i = 0; i < rs.rank(); ++i) {
    const QVec img = -(w0.matrix * rs.fundamental_weight(i));
    int match = -1;
    for (int j = 0; j < rs.rank(); ++j)
      if (img == rs.fundamental_weight(j)) match = j;
    if (match < 0) throw InvariantViolation("-w0 does not permute the fundamental weights");
    p.push_back(match);
  }
  return p;
}

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();  // beyond 64 bits: decimal string
}

}  // namespace

Json to_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type().str();
  j["rank"] = rs.rank();
  j["ambient_dim"] = rs.ambient_dim();
  Json simple = Json::array();
  for (const auto& a : rs.simple_roots()) simple.push_back(to_json(a));
  j["simple_roots"] = simple;
  j["cartan_matrix"] = rs.cartan();
  Json pos = Json::array();
  for (const auto& c : rs.positive_root_coords()) pos.push_back(to_json(rs.ambient_from_simple_coords(c)));
  j["positive_roots"] = pos;
  j["highest_root"] = to_json(rs.ambient_from_simple_coords(rs.positive_root_coords().back()));
  j["rho"] = to_json(rs.rho());
  Json w = Json::array(), cw = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    w.push_back(to_json(rs.fundamental_weight(i)));
    cw.push_back(to_json(rs.fundamental_coweight(i)));
  }
  j["fundamental_weights"] = w;
  j["fundamental_coweights"] = cw;
  j["weyl_order"] = integer_json(weyl_order(rs));
  return j;
}

Json to_json(const WeylElement& w) {
  Json j;
  j["matrix"] = to_json(w.matrix);
  j["word"] = w.word;
  return j;
}

RootSystemPtr root_system_from_json(const Json& j) {
  const Json& type = require_field(j, "type", "root system");
  if (!type.is_string()) throw ParseError("root system.type: expected a string");
  const TypeLabel label = TypeLabel::parse(type.get<std::string>());
  auto it = j.find("simple_roots");
  if (it == j.end()) return build_root_system(label);
  if (!it->is_array()) throw ParseError("root system.simple_roots: expected an array");
  std::vector<QVec> simple;
  for (std::size_t i = 0; i < it->size(); ++i)
    simple.push_back(qvec_from_json((*it)[i], "root system.simple_roots[" + std::to_string(i) + "]"));
  return std::make_shared<const RootSystem>(label, std::move(simple));
}

WeylElement weyl_element_from_json(const RootSystem& rs, const Json& j) {
  QMat m = qmat_from_json(require_field(j, "matrix", "weyl element"), "weyl element.matrix");
  std::vector<int> word;
  if (auto it = j.find("word"); it != j.end()) {
    if (!it->is_array()) throw ParseError("weyl element.word: expected an array");
    for (const auto& x : *it) {
      if (!x.is_number_integer()) throw ParseError("weyl element.word: expected integers");
      word.push_back(x.get<int>());
    }
  }
  return make_weyl_element(rs, std::move(m), std::move(word));
}

}  // namespace wk
