#include "wonderkit/feasibility.hpp"

#include <map>

#include "wonderkit/errors.hpp"
#include "wonderkit/linalg.hpp"

namespace wk {

namespace {

// Scale by a positive factor so the last nonzero coefficient is +-1; rows without
// coefficients keep their constant.
LinearConstraint normalized(LinearConstraint c) {
  for (std::size_t i = c.a.size(); i-- > 0;) {
    if (c.a[i] == 0) continue;
    const Rational s = abs(c.a[i]);
    for (auto& x : c.a) x /= s;
    c.b /= s;
    break;
  }
  return c;
}

// Keeps only the tightest constant per coefficient vector.
std::vector<LinearConstraint> deduplicated(const std::vector<LinearConstraint>& rows) {
  std::map<QVec, Rational, QVecLess> best;
  for (const auto& r0 : rows) {
    LinearConstraint r = normalized(r0);
    auto [it, fresh] = best.emplace(r.a, r.b);
    if (!fresh && r.b > it->second) it->second = r.b;
  }
  std::vector<LinearConstraint> out;
  for (auto& [a, b] : best) out.push_back({a, b});
  return out;
}

std::optional<QVec> fourier_motzkin(std::size_t dim, std::vector<LinearConstraint> rows) {
  for (const auto& r : rows)
    if (r.a.size() != dim) throw InvalidInput("constraint dimension mismatch");
  // levels[k] holds constraints in the variables x_0..x_{k-1}.
  std::vector<std::vector<LinearConstraint>> levels(dim + 1);
  levels[dim] = deduplicated(rows);
  for (std::size_t k = dim; k-- > 0;) {
    std::vector<LinearConstraint> lower, upper, next;
    for (const auto& r : levels[k + 1]) {
      LinearConstraint t{QVec(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(k)), r.b};
      if (r.a[k] > 0) lower.push_back(r);
      else if (r.a[k] < 0) upper.push_back(r);
      else next.push_back(std::move(t));
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // lo.a[k] > 0, up.a[k] < 0: combine to cancel x_k.
        const Rational p = -up.a[k], q = lo.a[k];
        LinearConstraint c{QVec(k), p * lo.b + q * up.b};
        for (std::size_t i = 0; i < k; ++i) c.a[i] = p * lo.a[i] + q * up.a[i];
        next.push_back(std::move(c));
      }
    levels[k] = deduplicated(next);
  }
  for (const auto& r : levels[0])
    if (r.b > 0) return std::nullopt;

  QVec x;
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<Rational> lo, hi;
    for (const auto& r : levels[k + 1]) {
      if (r.a[k] == 0) continue;
      Rational rest = r.b;
      for (std::size_t i = 0; i < k; ++i) rest -= r.a[i] * x[i];
      const Rational bound = rest / r.a[k];
      if (r.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    Rational v = 0;
    if (lo && hi) v = (*lo + *hi) / 2;
    else if (lo) v = *lo;
    else if (hi) v = *hi;
    if (lo && hi && *lo > *hi) throw InvariantViolation("Fourier-Motzkin back-substitution found an empty interval");
    x.push_back(v);
  }
  return x;
}

}  // namespace

std::optional<QVec> feasible_point(std::size_t dim, const std::vector<LinearConstraint>& inequalities,
                                   const std::vector<LinearConstraint>& equalities) {
  if (equalities.empty()) return fourier_motzkin(dim, inequalities);

  // x = x0 + K t over the solution space of the equalities.
  std::vector<QVec> rows;
  QVec rhs;
  for (const auto& e : equalities) {
    if (e.a.size() != dim) throw InvalidInput("constraint dimension mismatch");
    rows.push_back(e.a);
    rhs.push_back(e.b);
  }
  const QMat e = QMat::from_rows(rows, dim);
  const auto x0 = solve(e, rhs);
  if (!x0) return std::nullopt;
  const std::vector<QVec> k = kernel(e);
  std::vector<LinearConstraint> reduced;
  for (const auto& c : inequalities) {
    if (c.a.size() != dim) throw InvalidInput("constraint dimension mismatch");
    LinearConstraint r{QVec(k.size()), c.b - dot(c.a, *x0)};
    for (std::size_t j = 0; j < k.size(); ++j) r.a[j] = dot(c.a, k[j]);
    reduced.push_back(std::move(r));
  }
  const auto t = fourier_motzkin(k.size(), reduced);
  if (!t) return std::nullopt;
  QVec x = *x0;
  for (std::size_t j = 0; j < k.size(); ++j) x += (*t)[j] * k[j];
  return x;
}

}  // namespace wk
