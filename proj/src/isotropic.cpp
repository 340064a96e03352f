#include "wonderkit/isotropic.hpp"

#include <random>

#include "wonderkit/errors.hpp"

namespace wk {

namespace {

constexpr int kCayleyRetries = 32;

QMat block_diag(const QMat& a, const QMat& b) {
  QMat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

QMat scaled(const QMat& a, const Rational& s) {
  QMat m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return m;
}

QMat added(const QMat& a, const QMat& b, int sign) {
  QMat m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += sign * b(i, j);
  return m;
}

QVec concat(const QVec& a, const QVec& b) {
  QVec v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

void require_range(int n, int k) {
  if (n < 1) throw InvalidInput("half-rank n must be positive");
  if (k < 0 || k > n) throw InvalidInput("stratum index k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
}

// Small rationals: numerators |p| <= 9, denominators 1..4.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  Rational rational(bool nonzero) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    int p = num(rng_);
    while (nonzero && p == 0) p = num(rng_);
    Rational q(p, den(rng_));
    q.canonicalize();
    return q;
  }
  int small() { return std::uniform_int_distribution<int>(-1, 1)(rng_); }
  std::uint64_t next_seed() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

// x -> x + c F(v, x) v on every row; preserves an alternating form F.
void transvect(std::vector<QVec>& rows, const QMat& form, const QVec& v, const Rational& c) {
  const QVec fv = form.transpose() * v;  // F(v, x) = v^T F x
  for (auto& x : rows) {
    const Rational s = c * dot(fv, x);
    if (s != 0) x += s * v;
  }
}

// v supported on [offset, offset + len) with entries in {-1, 0, 1}, not all zero.
QVec random_direction(Draw& d, std::size_t dim, std::size_t offset, std::size_t len) {
  QVec v = zero_vec(dim);
  while (is_zero(v))
    for (std::size_t i = 0; i < len; ++i) v[offset + i] = d.small();
  return v;
}

// (I - A)^{-1} (I + A) with A = F^{-1} S, S antisymmetric; lies in SO(F).
QMat random_cayley(Draw& d, const QMat& form) {
  const std::size_t m = form.rows();
  const QMat finv = *inverse(form);
  for (int attempt = 0; attempt < kCayleyRetries; ++attempt) {
    QMat s(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        s(i, j) = d.rational(false);
        s(j, i) = -s(i, j);
      }
    const QMat a = finv * s;
    const QMat id = QMat::identity(m);
    if (auto inv = inverse(added(id, a, -1))) return *inv * added(id, a, 1);
  }
  throw InvariantViolation("Cayley transform stayed singular after " + std::to_string(kCayleyRetries) + " draws");
}

std::vector<QVec> apply(const QMat& g, const QMat& rows) {
  std::vector<QVec> out;
  for (const auto& r : rows.row_list()) out.push_back(g * r);
  return out;
}

struct Sample {
  IsotropicSubspace v;
  bool generic;
};

Sample draw_sample(const DoubledSpace& space, std::size_t i, std::uint64_t sample_seed) {
  const auto period = static_cast<std::size_t>(space.n() + 2);
  const int r = static_cast<int>(i % period);
  if (r == space.n() + 1) return {random_maximal_isotropic(space, sample_seed), true};
  return {random_stratum_subspace(space, r, sample_seed), false};
}

std::string space_label(const DoubledSpace& s) {
  return std::string(s.kind() == FormKind::symplectic ? "symplectic" : "orthogonal") + " n=" + std::to_string(s.n());
}

}  // namespace

// ---------------------------------------------------------------- spaces

DoubledSpace::DoubledSpace(FormKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw InvalidInput("half-rank n must be positive");
  const auto N = static_cast<std::size_t>(n);
  if (kind == FormKind::symplectic) {
    half_ = QMat(2 * N, 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
      half_(i, N + i) = 1;
      half_(N + i, i) = -1;
    }
  } else {
    half_ = QMat(2 * N + 1, 2 * N + 1);
    for (std::size_t i = 0; i < N; ++i) half_(i, N + i) = half_(N + i, i) = 1;
    half_(2 * N, 2 * N) = 1;
  }
  total_ = block_diag(half_, scaled(half_, -1));
}

DoubledSpace DoubledSpace::symplectic(int n) { return DoubledSpace(FormKind::symplectic, n); }
DoubledSpace DoubledSpace::orthogonal(int n) { return DoubledSpace(FormKind::orthogonal, n); }

std::size_t DoubledSpace::half_dim() const {
  const auto N = static_cast<std::size_t>(n_);
  return kind_ == FormKind::symplectic ? 2 * N : 2 * N + 1;
}

Rational DoubledSpace::pairing(const QVec& x, const QVec& y) const { return dot(x, total_ * y); }

IsotropicSubspace::IsotropicSubspace(const DoubledSpace& space, const std::vector<QVec>& rows) {
  for (const auto& r : rows)
    if (r.size() != space.dim()) throw InvalidInput("vector of length " + std::to_string(r.size()) + " in a space of dimension " + std::to_string(space.dim()));
  const QMat m = QMat::from_rows(rows, space.dim());
  if (rank(m) != rows.size()) throw InvalidInput("subspace rows are linearly dependent");
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      if (space.pairing(rows[i], rows[j]) != 0) throw InvalidInput("subspace is not isotropic");
  basis_ = row_space_basis(m);
}

bool is_maximal(const DoubledSpace& space, const IsotropicSubspace& v) { return v.dim() == space.half_dim(); }

std::pair<int, int> intersection_dims(const DoubledSpace& space, const IsotropicSubspace& v) {
  const std::size_t h = space.half_dim(), m = v.dim();
  QMat top(m, h), bottom(m, h);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      top(i, j) = v.basis()(i, j);
      bottom(i, j) = v.basis()(i, h + j);
    }
  // V n W1 = combinations with vanishing W2 part, and symmetrically.
  return {static_cast<int>(m - rank(bottom)), static_cast<int>(m - rank(top))};
}

int intersection_invariant(const DoubledSpace& space, const IsotropicSubspace& v) {
  if (!is_maximal(space, v))
    throw InvalidInput("subspace of dimension " + std::to_string(v.dim()) + " is not maximal isotropic");
  const auto [a, b] = intersection_dims(space, v);
  if (a != b)
    throw InvariantViolation("dim V n W1 = " + std::to_string(a) + " but dim V n W2 = " + std::to_string(b));
  return a;
}

IsotropicSubspace diagonal_subspace(const DoubledSpace& space) {
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < space.half_dim(); ++i)
    rows.push_back(concat(unit_vec(space.half_dim(), i), unit_vec(space.half_dim(), i)));
  return IsotropicSubspace(space, rows);
}

IsotropicSubspace split_subspace(const DoubledSpace& space) {
  if (space.kind() != FormKind::symplectic) throw InvalidInput("split Lagrangians exist only in the symplectic case");
  return stratum_representative(space, space.n());
}

IsotropicSubspace graph_subspace(const DoubledSpace& space, const QMat& g) {
  const std::size_t h = space.half_dim();
  if (g.rows() != h || g.cols() != h) throw InvalidInput("graph map has the wrong size");
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < h; ++i) rows.push_back(concat(unit_vec(h, i), g.col(i)));
  return IsotropicSubspace(space, rows);
}

IsotropicSubspace stratum_representative(const DoubledSpace& space, int k) {
  require_range(space.n(), k);
  const std::size_t h = space.half_dim(), n = static_cast<std::size_t>(space.n()), K = static_cast<std::size_t>(k);
  const QVec zero = zero_vec(h);
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < K; ++i) {
    rows.push_back(concat(unit_vec(h, i), zero));
    rows.push_back(concat(zero, unit_vec(h, i)));
  }
  const bool reflect = space.kind() == FormKind::orthogonal && k % 2 == 1;
  for (std::size_t i = K; i < n; ++i) {
    rows.push_back(concat(unit_vec(h, i), unit_vec(h, i)));
    rows.push_back(concat(unit_vec(h, n + i), unit_vec(h, n + i)));
  }
  if (space.kind() == FormKind::orthogonal)
    rows.push_back(concat(unit_vec(h, 2 * n), (reflect ? Rational(-1) : Rational(1)) * unit_vec(h, 2 * n)));
  return IsotropicSubspace(space, rows);
}

IsotropicSubspace random_maximal_isotropic(const DoubledSpace& space, std::uint64_t seed) {
  Draw d(seed);
  if (space.kind() == FormKind::orthogonal) {
    const QMat g = random_cayley(d, space.form());
    return IsotropicSubspace(space, apply(g, diagonal_subspace(space).basis()));
  }
  std::vector<QVec> rows = split_subspace(space).basis().row_list();
  const std::size_t count = static_cast<std::size_t>(space.n() * (2 * space.n() + 1));
  for (std::size_t t = 0; t < count; ++t)
    transvect(rows, space.form(), random_direction(d, space.dim(), 0, space.dim()), d.rational(true));
  return IsotropicSubspace(space, rows);
}

IsotropicSubspace random_stratum_subspace(const DoubledSpace& space, int k, std::uint64_t seed) {
  Draw d(seed);
  const IsotropicSubspace rep = stratum_representative(space, k);
  const std::size_t h = space.half_dim();
  if (space.kind() == FormKind::orthogonal) {
    const QMat g = block_diag(random_cayley(d, space.half_form()), random_cayley(d, space.half_form()));
    return IsotropicSubspace(space, apply(g, rep.basis()));
  }
  std::vector<QVec> rows = rep.basis().row_list();
  const std::size_t count = static_cast<std::size_t>(space.n() * (2 * space.n() + 1));
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t t = 0; t < count; ++t)
      transvect(rows, space.form(), random_direction(d, space.dim(), half * h, h), d.rational(true));
  return IsotropicSubspace(space, rows);
}

bool same_family(const DoubledSpace& space, const IsotropicSubspace& a, const IsotropicSubspace& b) {
  if (space.kind() != FormKind::orthogonal) throw InvalidInput("families are defined for orthogonal spaces");
  if (!is_maximal(space, a) || !is_maximal(space, b)) throw InvalidInput("families need maximal isotropic subspaces");
  std::vector<QVec> rows = a.basis().row_list();
  for (const auto& r : b.basis().row_list()) rows.push_back(r);
  const std::size_t meet = 2 * a.dim() - rank(QMat::from_rows(rows, space.dim()));
  return meet % 2 == a.dim() % 2;
}

IsotropicSubspace apply_tau(const DoubledSpace& space, const IsotropicSubspace& v) {
  std::vector<QVec> rows = v.basis().row_list();
  for (auto& r : rows)
    for (std::size_t j = space.half_dim(); j < r.size(); ++j) r[j] = -r[j];
  return IsotropicSubspace(space, rows);
}

// ---------------------------------------------------------------- sampled checks

Json to_json(const SampleReport& r) {
  Json strata = Json::object();
  for (const auto& [k, c] : r.strata) strata[std::to_string(k)] = c;
  return Json{{"lemma", r.lemma}, {"space", r.space},     {"samples", r.samples},
              {"violations", r.violations}, {"seed", r.seed}, {"strata", strata}};
}

SampleReport equal_intersection_check(const DoubledSpace& space, std::size_t sample_count, std::uint64_t seed) {
  SampleReport rep{"dim V n W1 = dim V n W2 for maximal isotropic V", space_label(space), sample_count, 0, seed, {}};
  Draw seeds(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const Sample s = draw_sample(space, i, seeds.next_seed());
    const auto [a, b] = intersection_dims(space, s.v);
    if (a != b || !is_maximal(space, s.v)) ++rep.violations;
    ++rep.strata[a];
  }
  return rep;
}

SampleReport tau_fixed_locus_check(const DoubledSpace& space, std::size_t sample_count, std::uint64_t seed) {
  if (space.kind() != FormKind::symplectic) throw InvalidInput("the tau check is stated for symplectic spaces");
  SampleReport rep{"tau(V) = V exactly when k = n", space_label(space), sample_count, 0, seed, {}};
  Draw seeds(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const Sample s = draw_sample(space, i, seeds.next_seed());
    const int k = intersection_invariant(space, s.v);
    const bool fixed = apply_tau(space, s.v) == s.v;
    if (fixed != (k == space.n())) ++rep.violations;
    ++rep.strata[k];
  }
  return rep;
}

// ---------------------------------------------------------------- dimensions

namespace {

OrbitDimensions orbit_data(int n, int k) {
  require_range(n, k);
  const long N = n, K = k, m = n - k;
  OrbitDimensions d;
  d.n = n;
  d.k = k;
  // Isotropic k-planes in a 2n- or (2n+1)-dimensional space: k(4n+1-3k)/2 in both cases.
  const long ig2 = K * (4 * N + 1 - 3 * K);
  if (ig2 % 2 != 0) throw InvariantViolation("isotropic Grassmannian dimension is not an integer");
  d.base = ig2;
  d.fiber = m * (2 * m + 1);  // dim Sp(2m) = dim SO(2m+1)
  d.total = d.base + d.fiber;
  d.codim = N * (2 * N + 1) - d.total;
  if (d.total != 2 * N * N + N - K * K)
    throw InvariantViolation("base + fiber count disagrees with 2n^2 + n - k^2");
  return d;
}

}  // namespace

long lg_orbit_dim(int n, int k) { return orbit_data(n, k).total; }
OrbitDimensions lg_orbit_data(int n, int k) { return orbit_data(n, k); }
OrbitDimensions og_orbit_data(int n, int k) { return orbit_data(n, k); }

Json to_json(const OrbitDimensions& d) {
  return Json{{"n", d.n},         {"k", d.k},       {"dim", d.total},
              {"codim", d.codim}, {"base", d.base}, {"fiber", d.fiber}};
}

}  // namespace wk
