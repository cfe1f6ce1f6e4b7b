#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/content.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/group_algebra.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/query.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct WalkLimits {
  int max_d = kMaxAlgebraDegree;
  int max_steps = 5;
};

/// Sum of the permutations of cycle type mu, each with coefficient 1.
inline GroupAlgebraVector<Integer> class_sum(const Partition& mu) {
  auto v = GroupAlgebraVector<Integer>::zero(mu.size());
  const auto& g = v.group();
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.cycle_type(i) == mu) v[i] = 1;
  return v;
}

/// J_t = (1 t) + ... + (t-1 t) in Q S(d); J_1 = 0.
inline GroupAlgebraVector<Integer> jm_element(int t, int d) {
  if (d < 1 || d > kMaxAlgebraDegree || t < 1 || t > d) {
    throw LimitExceeded("jm_element: need 1 <= t <= d <= " + std::to_string(kMaxAlgebraDegree) + ", got t = " +
                        std::to_string(t) + ", d = " + std::to_string(d));
  }
  return GroupAlgebraVector<Integer>::identity(d).times_jm(t);
}

namespace detail {

inline void check_walk_limits(const HurwitzQuery& q, const WalkLimits& limits) {
  q.validate();
  if (q.d() > limits.max_d || q.d() > kMaxAlgebraDegree) {
    throw LimitExceeded("walk enumeration: d = " + std::to_string(q.d()) + " exceeds max_d = " +
                        std::to_string(std::min(limits.max_d, kMaxAlgebraDegree)));
  }
  if (q.k + q.l > limits.max_steps) {
    throw LimitExceeded("walk enumeration: k + l = " + std::to_string(q.k + q.l) + " exceeds max_steps = " +
                        std::to_string(limits.max_steps));
  }
}

// v * h_k(J_2, ..., J_d). cur[j] holds the contribution of j monotone steps
// so far; at each label t the ascending sweep lets J_t repeat.
template <typename Coeff>
GroupAlgebraVector<Coeff> times_complete_jm(const GroupAlgebraVector<Coeff>& v, int k) {
  std::vector<GroupAlgebraVector<Coeff>> cur(static_cast<std::size_t>(k) + 1, GroupAlgebraVector<Coeff>::zero(v.degree()));
  cur[0] = v;
  for (int t = 2; t <= v.degree(); ++t)
    for (int j = 1; j <= k; ++j) cur[static_cast<std::size_t>(j)] += cur[static_cast<std::size_t>(j - 1)].times_jm(t);
  return cur[static_cast<std::size_t>(k)];
}

// v * e_r(J_2, ..., J_d): descending sweep uses each J_t at most once.
template <typename Coeff>
GroupAlgebraVector<Coeff> times_elementary_jm(const GroupAlgebraVector<Coeff>& v, int r) {
  std::vector<GroupAlgebraVector<Coeff>> cur(static_cast<std::size_t>(r) + 1, GroupAlgebraVector<Coeff>::zero(v.degree()));
  cur[0] = v;
  for (int t = 2; t <= v.degree(); ++t)
    for (int j = r; j >= 1; --j) cur[static_cast<std::size_t>(j)] += cur[static_cast<std::size_t>(j - 1)].times_jm(t);
  return cur[static_cast<std::size_t>(r)];
}

// v * (J_2 + ... + J_d) = v * (sum of all transpositions).
template <typename Coeff>
GroupAlgebraVector<Coeff> times_all_transpositions(const GroupAlgebraVector<Coeff>& v) {
  std::vector<std::size_t> all(v.group().transpositions().size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return v.times_transpositions(all);
}

}  // namespace detail

/// C_alpha * h_k(Xi_d) * h_1(Xi_d)^l as a group-algebra vector: the
/// coefficient of sigma counts walks from C_alpha ending at sigma.
inline GroupAlgebraVector<Integer> walk_endpoints(const Partition& alpha, int k, int l) {
  auto v = detail::times_complete_jm(class_sum(alpha), k);
  for (int i = 0; i < l; ++i) v = detail::times_all_transpositions(v);
  return v;
}

/// Number of tuples (rho, (s_1 t_1), ..., (s_{k+l} t_{k+l})) with rho in
/// C_alpha, t_1 <= ... <= t_k and the product in C_beta.
inline Integer count_walks(const HurwitzQuery& q, const WalkLimits& limits = {}) {
  detail::check_walk_limits(q, limits);
  return walk_endpoints(q.alpha, q.k, q.l).class_coefficient_sum(q.beta);
}

/// Independent tuple-by-tuple enumeration; k + l <= 3.
inline Integer count_walks_direct(const HurwitzQuery& q, const WalkLimits& limits = {}) {
  WalkLimits direct = limits;
  direct.max_steps = std::min(limits.max_steps, 3);
  detail::check_walk_limits(q, direct);
  const auto group = symmetric_group(q.d());
  const auto& g = *group;
  const auto& trans = g.transpositions();
  const int steps = q.k + q.l;
  Integer count = 0;
  std::function<void(std::size_t, int, int)> walk = [&](std::size_t at, int step, int last_label) {
    if (step == steps) {
      if (g.cycle_type(at) == q.beta) ++count;
      return;
    }
    for (std::size_t j = 0; j < trans.size(); ++j) {
      const int label = trans[j][1];
      if (step < q.k && label < last_label) continue;
      walk(g.times_transposition(at, j), step + 1, step < q.k ? label : last_label);
    }
  };
  for (std::size_t rho = 0; rho < g.order(); ++rho)
    if (g.cycle_type(rho) == q.alpha) walk(rho, 0, 0);
  return count;
}

/// e_r(J_1, ..., J_d) in Z S(d).
inline GroupAlgebraVector<Integer> elementary_jm(int d, int r) {
  return detail::times_elementary_jm(GroupAlgebraVector<Integer>::identity(d), r);
}

/// Checks e_r(Xi_d) = sum of the class sums C_mu with l(mu) = d - r.
inline bool verify_jm_levels(int d, int r) {
  if (d < 1 || d > kMaxAlgebraDegree) {
    throw LimitExceeded("verify_jm_levels: d = " + std::to_string(d) + " exceeds " + std::to_string(kMaxAlgebraDegree));
  }
  if (r < 0 || r > d - 1) throw PreconditionViolation("verify_jm_levels: r must lie in 0..d-1");
  auto level = GroupAlgebraVector<Integer>::zero(d);
  for (const auto& mu : enumerate_partitions(d))
    if (mu.length() == d - r) level += class_sum(mu);
  return elementary_jm(d, r) == level;
}

/// f(Xi_d) computed directly in Q S(d).
inline GroupAlgebraVector<Rational> evaluate_on_jm(const RegularFunctionSpec& f, int d) {
  const auto one = GroupAlgebraVector<Rational>::identity(d);
  return f.evaluate(
      [&](const Generator& g) -> GroupAlgebraVector<Rational> {
        switch (g.kind) {
          case Generator::Kind::Complete: return detail::times_complete_jm(one, g.index);
          case Generator::Kind::Elementary: return detail::times_elementary_jm(one, g.index);
          case Generator::Kind::PowerSum: {
            auto total = GroupAlgebraVector<Rational>::zero(d);
            for (int t = 2; t <= d; ++t) {
              auto power = one;
              for (int i = 0; i < g.index; ++i) power = power.times_jm(t);
              total += power;
            }
            return total;
          }
          case Generator::Kind::Size: return Rational(d) * one;
        }
        return GroupAlgebraVector<Rational>::zero(d);
      },
      one);
}

inline constexpr int kMaxCentralCharacterDegree = 5;

/// Checks f(Xi_d) = sum_lambda f(Cont_lambda) (dim lambda / d!) sum_sigma
/// chi^lambda(sigma) sigma. The idempotent uses chi(sigma); chi is constant
/// on classes and sigma, sigma^{-1} share a class.
inline bool verify_central_character(int d, const RegularFunctionSpec& f) {
  if (d < 1 || d > kMaxCentralCharacterDegree) {
    throw LimitExceeded("verify_central_character: d = " + std::to_string(d) + " exceeds " +
                        std::to_string(kMaxCentralCharacterDegree));
  }
  const auto direct = evaluate_on_jm(f, d);
  const auto table = compute_character_table(d);
  auto spectral = GroupAlgebraVector<Rational>::zero(d);
  const auto& g = spectral.group();
  const Integer d_factorial = factorial(static_cast<unsigned>(d));
  std::vector<std::size_t> class_index(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) class_index[i] = table.index_of(g.cycle_type(i));
  for (std::size_t l = 0; l < table.rank(); ++l) {
    const auto& lambda = table.order()[l];
    Rational weight = eval_regular(f, lambda) * ratio(dimension(lambda), d_factorial);
    if (weight == 0) continue;
    for (std::size_t i = 0; i < g.order(); ++i) spectral[i] += weight * table.at(l, class_index[i]);
  }
  return direct == spectral;
}

}  // namespace hurwitz
