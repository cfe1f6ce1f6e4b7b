#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hurwitz/content.hpp"
#include "hurwitz/engine.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/linalg.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/query.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Canonical wall (I, J) as bitmasks over rows of x and y; I contains row 1
/// so each complementary pair (I, J) / (I^c, J^c) appears once.
struct WallIndex {
  unsigned rows_x = 0;
  unsigned rows_y = 0;

  friend auto operator<=>(const WallIndex&, const WallIndex&) = default;
};

inline std::vector<WallIndex> canonical_walls(int m, int n) {
  std::vector<WallIndex> walls;
  if (m < 2 || n < 2) return walls;
  for (unsigned i = 1; i + 1 < (1u << m); i += 2)
    for (unsigned j = 1; j + 1 < (1u << n); ++j) walls.push_back({i, j});
  return walls;
}

/// A lattice point of R_{m,n}, with the sign of sum_I x - sum_J y on every
/// canonical wall.
struct ChamberPoint {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> signs;  // aligned with canonical_walls(m, n)

  int m() const { return static_cast<int>(x.size()); }
  int n() const { return static_cast<int>(y.size()); }
  int d() const {
    int s = 0;
    for (int v : x) s += v;
    return s;
  }
  bool on_wall() const { return std::find(signs.begin(), signs.end(), 0) != signs.end(); }

  Partition alpha() const { return Partition(x); }
  Partition beta() const { return Partition(y); }

  friend bool operator==(const ChamberPoint& a, const ChamberPoint& b) { return a.x == b.x && a.y == b.y; }
};

namespace detail {

inline void check_region(const std::vector<int>& x, const std::vector<int>& y) {
  auto fail = [&](const std::string& why) {
    throw PreconditionViolation("point is not in R_{m,n}: " + why);
  };
  if (x.empty() || y.empty()) fail("m and n must be positive");
  if (x.size() > 16 || y.size() > 16) fail("too many coordinates");
  long sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || (i && x[i] > x[i - 1])) fail("x must be positive and weakly decreasing");
    sx += x[i];
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] < 1 || (j && y[j] > y[j - 1])) fail("y must be positive and weakly decreasing");
    sy += y[j];
  }
  if (sx != sy) fail("sum x != sum y");
}

inline int masked_sum(const std::vector<int>& v, unsigned mask) {
  int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mask >> i & 1u) s += v[i];
  return s;
}

}  // namespace detail

/// Sign vector over canonical_walls(m, n).
inline std::vector<int> wall_signs(const std::vector<int>& x, const std::vector<int>& y) {
  detail::check_region(x, y);
  std::vector<int> signs;
  for (const auto& w : canonical_walls(static_cast<int>(x.size()), static_cast<int>(y.size()))) {
    const int diff = detail::masked_sum(x, w.rows_x) - detail::masked_sum(y, w.rows_y);
    signs.push_back((diff > 0) - (diff < 0));
  }
  return signs;
}

inline ChamberPoint make_point(std::vector<int> x, std::vector<int> y) {
  auto signs = wall_signs(x, y);
  return {std::move(x), std::move(y), std::move(signs)};
}

inline ChamberPoint point_of(const Partition& alpha, const Partition& beta) {
  return make_point(alpha.parts(), beta.parts());
}

/// Operational chamber test: equal sign vectors.
inline bool same_chamber(const ChamberPoint& p, const ChamberPoint& q) {
  if (p.m() != q.m() || p.n() != q.n()) throw SizeMismatch("same_chamber: points live in different R_{m,n}");
  if (p.on_wall() || q.on_wall()) throw PreconditionViolation("same_chamber: a point lies on a wall");
  return p.signs == q.signs;
}

/// Canonical sign vector as a string of '+', '-', '0'.
inline std::string chamber_signature(const ChamberPoint& p) {
  std::string s;
  for (int v : p.signs) s += v > 0 ? '+' : (v < 0 ? '-' : '0');
  return s;
}

namespace detail {

inline void strictly_decreasing_tuples(int len, int bound, std::vector<int>& cur,
                                       const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == len) {
    emit(cur);
    return;
  }
  const int top = cur.empty() ? bound : cur.back() - 1;
  const int remaining = len - static_cast<int>(cur.size()) - 1;
  for (int v = top; v >= 1 + remaining; --v) {
    cur.push_back(v);
    strictly_decreasing_tuples(len, bound, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

/// `count` distinct lattice points in the chamber of `base` with strictly
/// decreasing parts on both sides and every coordinate <= bound. The choice
/// is a seeded Fisher-Yates draw over all candidates in canonical order.
inline std::vector<ChamberPoint> sample_chamber(const ChamberPoint& base, int count, int bound, std::uint64_t seed = 0) {
  if (base.on_wall()) throw PreconditionViolation("sample_chamber: base point lies on a wall");
  std::map<int, std::vector<std::vector<int>>> y_by_sum;
  std::vector<int> cur;
  detail::strictly_decreasing_tuples(base.n(), bound, cur, [&](const std::vector<int>& y) {
    int s = 0;
    for (int v : y) s += v;
    y_by_sum[s].push_back(y);
  });
  std::vector<ChamberPoint> candidates;
  cur.clear();
  detail::strictly_decreasing_tuples(base.m(), bound, cur, [&](const std::vector<int>& x) {
    int s = 0;
    for (int v : x) s += v;
    auto it = y_by_sum.find(s);
    if (it == y_by_sum.end()) return;
    for (const auto& y : it->second) {
      auto p = make_point(x, y);
      if (p.signs == base.signs) candidates.push_back(std::move(p));
    }
  });
  if (static_cast<int>(candidates.size()) < count) {
    throw Exhaustion("sample_chamber: only " + std::to_string(candidates.size()) +
                     " distinct-part lattice points with coordinates <= " + std::to_string(bound) +
                     " in this chamber, " + std::to_string(count) + " requested");
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = candidates.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(candidates[i - 1], candidates[j]);
  }
  candidates.resize(static_cast<std::size_t>(count));
  return candidates;
}

struct FitSample {
  ChamberPoint point;
  Rational target;
  Rational fitted;
};

/// Exact polynomial in the m + n coordinates. On R_{m,n} y_n is eliminated
/// through sum x = sum y, so its exponent is always 0.
struct PolynomialFit {
  int m = 0;
  int n = 0;
  int k = 0;
  int l = 0;
  int degree = 0;
  std::vector<std::vector<int>> monomials;
  std::vector<Rational> coefficients;
  std::vector<FitSample> training;
  std::vector<FitSample> validation;
  std::string chamber_signature;
  /// Per attempted degree below the accepted one: why it was rejected.
  std::vector<std::string> rejected;
};

namespace detail {

inline std::vector<std::vector<int>> monomials_up_to(int vars, int total_vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(total_vars), 0);
  for (int deg = 0; deg <= degree; ++deg) {
    // exactly `deg`: recurse with the remainder forced onto the last variable
    std::function<void(int, int)> exact = [&](int var, int left) {
      if (var == vars - 1) {
        e[static_cast<std::size_t>(var)] = left;
        out.push_back(e);
        e[static_cast<std::size_t>(var)] = 0;
        return;
      }
      for (int p = left; p >= 0; --p) {
        e[static_cast<std::size_t>(var)] = p;
        exact(var + 1, left - p);
      }
      e[static_cast<std::size_t>(var)] = 0;
    };
    if (vars == 0) {
      if (deg == 0) out.push_back(e);
    } else {
      exact(0, deg);
    }
  }
  return out;
}

inline std::vector<int> coordinates(const ChamberPoint& p) {
  std::vector<int> c = p.x;
  c.insert(c.end(), p.y.begin(), p.y.end());
  return c;
}

inline Rational monomial_value(const std::vector<int>& exps, const std::vector<int>& coords) {
  Integer v = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(coords[i]), static_cast<unsigned long>(exps[i]));
    v *= pw;
  }
  return Rational(v);
}

}  // namespace detail

/// Exact evaluation at a point of R_{m,n}.
inline Rational evaluate_fit(const PolynomialFit& fit, const ChamberPoint& point) {
  if (point.m() != fit.m || point.n() != fit.n) {
    throw SizeMismatch("evaluate_fit: fit has " + std::to_string(fit.m) + "+" + std::to_string(fit.n) +
                       " variables, point has " + std::to_string(point.m()) + "+" + std::to_string(point.n()));
  }
  const auto coords = detail::coordinates(point);
  Rational v = 0;
  for (std::size_t i = 0; i < fit.monomials.size(); ++i)
    v += fit.coefficients[i] * detail::monomial_value(fit.monomials[i], coords);
  return v;
}

inline constexpr int kDefaultDegreeCap = 12;
inline constexpr int kHeldOutPoints = 10;

/// Smallest total degree D <= cap whose exact interpolant through the
/// training points (all but the last `held_out`) also reproduces the target
/// at every held-out point.
inline PolynomialFit fit_polynomial(const std::vector<ChamberPoint>& points,
                                    const std::function<Rational(const ChamberPoint&)>& target,
                                    int degree_cap = kDefaultDegreeCap, int held_out = kHeldOutPoints) {
  if (points.empty()) throw PreconditionViolation("fit_polynomial: no points");
  if (static_cast<int>(points.size()) <= held_out) {
    throw PreconditionViolation("fit_polynomial: need more than " + std::to_string(held_out) + " points");
  }
  const auto& first = points.front();
  for (const auto& p : points) {
    if (p.m() != first.m() || p.n() != first.n()) throw SizeMismatch("fit_polynomial: mixed (m, n)");
    if (p.on_wall()) throw PreconditionViolation("fit_polynomial: a point lies on a wall");
    if (p.signs != first.signs) throw PreconditionViolation("fit_polynomial: points span several chambers");
  }
  const std::size_t n_train = points.size() - static_cast<std::size_t>(held_out);
  std::vector<Rational> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(target(p));
  std::vector<std::vector<int>> coords;
  for (const auto& p : points) coords.push_back(detail::coordinates(p));

  PolynomialFit fit;
  fit.m = first.m();
  fit.n = first.n();
  fit.chamber_signature = chamber_signature(first);
  const int free_vars = fit.m + fit.n - 1;
  for (int degree = 0; degree <= degree_cap; ++degree) {
    auto monomials = detail::monomials_up_to(free_vars, fit.m + fit.n, degree);
    if (monomials.size() > n_train) {
      fit.rejected.push_back("degree " + std::to_string(degree) + ": " + std::to_string(monomials.size()) +
                             " unknowns but only " + std::to_string(n_train) + " training points");
      break;
    }
    std::vector<std::vector<Rational>> a(n_train, std::vector<Rational>(monomials.size()));
    std::vector<Rational> b(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n_train));
    for (std::size_t i = 0; i < n_train; ++i)
      for (std::size_t j = 0; j < monomials.size(); ++j) a[i][j] = detail::monomial_value(monomials[j], coords[i]);
    auto solved = solve_exact(std::move(a), std::move(b));
    if (!solved.consistent) {
      fit.rejected.push_back("degree " + std::to_string(degree) + ": training system inconsistent");
      continue;
    }
    if (!solved.solution) {
      throw SingularSystem("fit_polynomial: degree " + std::to_string(degree) + " system has rank " +
                           std::to_string(solved.rank) + " < " + std::to_string(monomials.size()) +
                           " unknowns; resample the chamber");
    }
    fit.degree = degree;
    fit.monomials = std::move(monomials);
    fit.coefficients = std::move(*solved.solution);
    fit.training.clear();
    fit.validation.clear();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      FitSample s{points[i], values[i], evaluate_fit(fit, points[i])};
      if (s.fitted != s.target) ++bad;
      (i < n_train ? fit.training : fit.validation).push_back(std::move(s));
    }
    if (bad == 0) {
      // drop explicit zero coefficients from the reported polynomial
      std::vector<std::vector<int>> mono;
      std::vector<Rational> coef;
      for (std::size_t j = 0; j < fit.coefficients.size(); ++j) {
        if (fit.coefficients[j] == 0) continue;
        mono.push_back(fit.monomials[j]);
        coef.push_back(fit.coefficients[j]);
      }
      fit.monomials = std::move(mono);
      fit.coefficients = std::move(coef);
      return fit;
    }
    fit.rejected.push_back("degree " + std::to_string(degree) + ": " + std::to_string(bad) +
                           " held-out points with nonzero residual");
  }
  std::string why;
  for (const auto& r : fit.rejected) why += "\n  " + r;
  throw DegreeCapExceeded("no polynomial of degree <= " + std::to_string(degree_cap) + " fits the chamber " +
                          fit.chamber_signature + ":" + why);
}

/// Fits H^{k,l} (character formula) over same-chamber points.
inline PolynomialFit fit_chamber_polynomial(int k, int l, const std::vector<ChamberPoint>& points,
                                            int degree_cap = kDefaultDegreeCap) {
  auto fit = fit_polynomial(
      points,
      [&](const ChamberPoint& p) { return H_char(HurwitzQuery{k, l, p.alpha(), p.beta()}); },
      degree_cap);
  fit.k = k;
  fit.l = l;
  return fit;
}

inline nlohmann::json to_json(const ChamberPoint& p) {
  return {{"alpha", p.x}, {"beta", p.y}};
}

inline nlohmann::json to_json(const PolynomialFit& fit) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t i = 0; i < fit.monomials.size(); ++i)
    coeffs.push_back({{"monomial", fit.monomials[i]}, {"coeff", to_string(fit.coefficients[i])}});
  auto samples = [](const std::vector<FitSample>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : v) {
      out.push_back({{"alpha", s.point.x},
                     {"beta", s.point.y},
                     {"value", to_string(s.target)},
                     {"residual", to_string(Rational(s.fitted - s.target))}});
    }
    return out;
  };
  return {{"m", fit.m},
          {"n", fit.n},
          {"k", fit.k},
          {"l", fit.l},
          {"degree", fit.degree},
          {"coefficients", std::move(coeffs)},
          {"training", samples(fit.training)},
          {"validation", samples(fit.validation)},
          {"chamber_signature", fit.chamber_signature}};
}

}  // namespace hurwitz
