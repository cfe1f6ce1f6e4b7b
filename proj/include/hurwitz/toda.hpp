#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/content.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

inline constexpr int kMaxTauDegree = 8;

/// Which power sums p_1..p_{max_index} of each alphabet survive; the rest
/// are specialized to zero (a ring homomorphism commuting with d/dp_1).
struct VariableProfile {
  int max_index = 1;

  static VariableProfile first_power_sums() { return {1}; }
  static VariableProfile through_p2() { return {2}; }
  static VariableProfile all() { return {INT_MAX}; }

  bool retains(const Partition& mu) const { return mu.empty() || mu[0] <= max_index; }
};

/// s_lambda = sum_mu chi^lambda_mu / z_mu p_mu, restricted to the profile.
inline std::vector<std::pair<Partition, Rational>> schur_expansion(const Partition& lambda, const CharacterTable& table,
                                                                   const VariableProfile& profile) {
  std::vector<std::pair<Partition, Rational>> out;
  if (lambda.empty()) {
    out.emplace_back(Partition{}, Rational(1));
    return out;
  }
  const std::size_t row = table.index_of(lambda);
  for (std::size_t m = 0; m < table.rank(); ++m) {
    const auto& mu = table.order()[m];
    if (!profile.retains(mu) || table.at(row, m) == 0) continue;
    out.emplace_back(mu, ratio(Integer(table.at(row, m)), z_order(mu)));
  }
  return out;
}

namespace detail {

inline void check_tau_truncation(const Truncation& trunc) {
  if (trunc.z < 0 || trunc.t < 0 || trunc.u < 0) throw PreconditionViolation("truncation orders must be nonnegative");
  if (trunc.z > kMaxTauDegree) {
    throw LimitExceeded("tau function: Dz = " + std::to_string(trunc.z) + " exceeds kMaxTauDegree = " +
                        std::to_string(kMaxTauDegree));
  }
}

inline std::vector<CharacterTable> tables_through(int dz) {
  std::vector<CharacterTable> tables(static_cast<std::size_t>(dz) + 1);
  for (int d = 1; d <= dz; ++d) tables[static_cast<std::size_t>(d)] = compute_character_table(d);
  return tables;
}

// prod_{cells} e^{(c+n)u}/(1-(c+n)t) / z^{|lambda|}, truncated:
// sum_{i,j} h_i(C+n) S^j / j! t^i u^j with S = sum (c+n).
inline std::vector<std::vector<Rational>> content_weight(const Partition& lambda, int n, const Truncation& trunc) {
  ContentMultiset shifted = contents(lambda);
  for (int& c : shifted.values) c += n;
  ContentFunctions f(shifted);
  const Rational s(f.p(1));
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(trunc.t) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(trunc.u) + 1));
  Rational u_coeff = 1;
  std::vector<Rational> u_series;
  for (int j = 0; j <= trunc.u; ++j) {
    if (j > 0) u_coeff *= s / j;
    u_series.push_back(u_coeff);
  }
  for (int i = 0; i <= trunc.t; ++i)
    for (int j = 0; j <= trunc.u; ++j) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.h(i) * u_series[static_cast<std::size_t>(j)];
  return w;
}

}  // namespace detail

/// tau_n = sum_{|lambda| <= Dz} prod_{cells} y_{c+n} s_lambda(A) s_lambda(B)
/// with y_k = z e^{ku}/(1-kt), expanded formally in t and u.
inline TruncatedSeries build_tau(int n, const Truncation& trunc,
                                 const VariableProfile& profile = VariableProfile::first_power_sums()) {
  detail::check_tau_truncation(trunc);
  const auto tables = detail::tables_through(trunc.z);
  TruncatedSeries tau(trunc);
  for (int d = 0; d <= trunc.z; ++d) {
    for (const auto& lambda : enumerate_partitions(d)) {
      const auto schur = schur_expansion(lambda, tables[static_cast<std::size_t>(d)], profile);
      const auto weight = detail::content_weight(lambda, n, trunc);
      for (int i = 0; i <= trunc.t; ++i) {
        for (int j = 0; j <= trunc.u; ++j) {
          const Rational& w = weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (w == 0) continue;
          for (const auto& [mu, cmu] : schur)
            for (const auto& [nu, cnu] : schur) tau.add(SeriesKey{d, i, j, mu, nu}, w * cmu * cnu);
        }
      }
    }
  }
  return tau;
}

/// y_n = z e^{nu} / (1 - nt) as a series.
inline TruncatedSeries content_weight_series(int n, const Truncation& trunc) {
  TruncatedSeries y(trunc);
  const auto w = detail::content_weight(Partition{1}, n, trunc);
  for (int i = 0; i <= trunc.t; ++i)
    for (int j = 0; j <= trunc.u; ++j) y.add(SeriesKey{1, i, j, {}, {}}, w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return y;
}

struct TodaComparison {
  SeriesKey key;
  Rational lhs;
  Rational rhs;
};

/// Outcome of comparing tau_n d_x d_y tau_n - d_x tau_n d_y tau_n with
/// gamma tau_{n+1} tau_{n-1}, x = p_1(A), y = p_1(B).
struct TodaReport {
  int n = 0;
  Truncation truncation;
  TruncatedSeries gamma;
  bool gamma_matches_content_weight = false;  // gamma == y_n
  std::vector<TodaComparison> entries;         // union of both supports, sorted
  bool verdict = false;
};

/// gamma is read off the z^1 part of the left side, then the identity is
/// compared at every key of both sides.
inline TodaReport toda_first_equation_check(int n, const Truncation& trunc,
                                            const VariableProfile& profile = VariableProfile::first_power_sums()) {
  const auto tau = build_tau(n, trunc, profile);
  const auto tau_up = build_tau(n + 1, trunc, profile);
  const auto tau_down = build_tau(n - 1, trunc, profile);
  const auto dx = tau.derivative(Alphabet::A, 1);
  const auto dy = tau.derivative(Alphabet::B, 1);
  const auto lhs = series_mul(tau, dx.derivative(Alphabet::B, 1)) - series_mul(dx, dy);

  TodaReport report;
  report.n = n;
  report.truncation = trunc;
  report.gamma = lhs.z_part(1);
  bool gamma_is_scalar = true;
  for (const auto& [k, c] : report.gamma.terms()) gamma_is_scalar = gamma_is_scalar && k.a.empty() && k.b.empty();
  report.gamma_matches_content_weight = report.gamma == content_weight_series(n, trunc);
  const auto rhs = series_mul(report.gamma, series_mul(tau_up, tau_down));

  std::map<SeriesKey, TodaComparison> merged;
  for (const auto& [k, c] : lhs.terms()) merged[k] = {k, c, 0};
  for (const auto& [k, c] : rhs.terms()) {
    auto [it, inserted] = merged.try_emplace(k, TodaComparison{k, 0, 0});
    it->second.rhs = c;
  }
  report.verdict = gamma_is_scalar && !report.gamma.empty();
  for (auto& [k, cmp] : merged) {
    report.verdict = report.verdict && cmp.lhs == cmp.rhs;
    report.entries.push_back(std::move(cmp));
  }
  return report;
}

/// Substitutes z -> z e^{nu}/(1-nt), t -> t/(1-nt) into a series in z, t.
inline TruncatedSeries shift_substitute(const TruncatedSeries& tau0, int n) {
  const Truncation& trunc = tau0.truncation();
  const TruncatedSeries z_shift = content_weight_series(n, trunc);
  TruncatedSeries t_shift(trunc);
  // t/(1-nt) = sum_{i>=1} n^{i-1} t^i
  Rational coeff = 1;
  for (int i = 1; i <= trunc.t; ++i) {
    t_shift.add(SeriesKey{0, i, 0, {}, {}}, coeff);
    coeff *= n;
  }
  std::vector<TruncatedSeries> z_pow, t_pow;
  for (int a = 0; a <= trunc.z; ++a) z_pow.push_back(series_pow(z_shift, a));
  for (int b = 0; b <= trunc.t; ++b) t_pow.push_back(series_pow(t_shift, b));
  std::map<std::pair<int, int>, TruncatedSeries> zt;
  TruncatedSeries out(trunc);
  for (const auto& [k, c] : tau0.terms()) {
    auto it = zt.find({k.z, k.t});
    if (it == zt.end())
      it = zt.emplace(std::pair{k.z, k.t}, series_mul(z_pow[static_cast<std::size_t>(k.z)], t_pow[static_cast<std::size_t>(k.t)])).first;
    for (const auto& [m, cm] : it->second.terms()) out.add(SeriesKey{m.z, m.t, m.u + k.u, k.a, k.b}, c * cm);
  }
  return out;
}

/// tau_n(z, t, u) == tau_0(z e^{nu}/(1-nt), t/(1-nt), u) coefficientwise.
inline bool shift_substitution_check(int n, const Truncation& trunc,
                                     const VariableProfile& profile = VariableProfile::first_power_sums()) {
  return build_tau(n, trunc, profile) == shift_substitute(build_tau(0, trunc, profile), n);
}

inline nlohmann::json to_json(const TodaReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"z", e.key.z}, {"t", e.key.t}, {"u", e.key.u}, {"A", e.key.a.parts()}, {"B", e.key.b.parts()},
                       {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}, {"equal", e.lhs == e.rhs}});
  }
  return {{"n", r.n},
          {"dz", r.truncation.z},
          {"dt", r.truncation.t},
          {"du", r.truncation.u},
          {"gamma", to_json(r.gamma)},
          {"gamma_matches_content_weight", r.gamma_matches_content_weight},
          {"compared", r.entries.size()},
          {"entries", std::move(entries)},
          {"verdict", r.verdict}};
}

}  // namespace hurwitz
