#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/content.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/query.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// W^{k,l} (walk count), H^{k,l} (connected number) and whether (alpha, beta)
/// lies on a wall of the resonance arrangement.
struct HurwitzValue {
  Integer W;
  Rational H;
  bool on_wall = false;
};

namespace detail {

// sum_lambda chi^lambda_alpha f(lambda) chi^lambda_beta over the common
// support of the two character columns.
inline Rational character_pair_sum(const Partition& alpha, const Partition& beta,
                                   const std::function<Rational(const Partition&)>& f) {
  const auto col_a = character_column(alpha);
  const auto col_b = character_column(beta);
  Rational total = 0;
  for (const auto& [lambda, chi_a] : col_a) {
    auto it = col_b.find(lambda);
    if (it == col_b.end()) continue;
    const Rational value = f(lambda);
    if (value != 0) total += value * chi_a * it->second;
  }
  return total;
}

}  // namespace detail

/// W^{k,l}(alpha, beta) = |C_alpha| |C_beta| / d! sum_lambda chi^lambda_alpha
/// h_{(k,1^l)}(Cont_lambda) chi^lambda_beta. Throws InternalError if the sum
/// is not an integer.
inline Integer W_char(const HurwitzQuery& q) {
  q.validate();
  const Rational sum = detail::character_pair_sum(q.alpha, q.beta, [&](const Partition& lambda) {
    return eval_hook(lambda, q.k, q.l);
  });
  const Rational w = sum * ratio(class_size(q.alpha) * class_size(q.beta), factorial(static_cast<unsigned>(q.d())));
  if (!is_integer(w)) {
    throw InternalError("W_char: non-integral walk count " + to_string(w) + " for k=" + std::to_string(q.k) +
                        " l=" + std::to_string(q.l) + " alpha=" + q.alpha.str() + " beta=" + q.beta.str());
  }
  if (w < 0) throw InternalError("W_char: negative walk count " + to_string(w));
  return w.get_num();
}

/// S^f(alpha, beta) = 1/(z_alpha z_beta) sum_lambda chi^lambda_alpha f(lambda)
/// chi^lambda_beta, the smaller diagram padded with unicellular rows.
inline Rational S_transform(const RegularFunctionSpec& f, const Partition& alpha, const Partition& beta) {
  const int d = std::max(alpha.size(), beta.size());
  const Partition a = pad_with_ones(alpha, d);
  const Partition b = pad_with_ones(beta, d);
  const Rational sum = detail::character_pair_sum(a, b, [&](const Partition& lambda) { return eval_regular(f, lambda); });
  return sum / (z_order(a) * z_order(b));
}

/// A wall (I, J): proper nonempty index sets (1-based) with equal part sums.
struct Wall {
  std::vector<int> rows_alpha;
  std::vector<int> rows_beta;

  std::string str() const {
    auto set = [](const std::vector<int>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    return "I=" + set(rows_alpha) + " J=" + set(rows_beta);
  }
};

/// First wall containing (alpha, beta), if any. I always contains row 1.
inline std::optional<Wall> find_wall(const Partition& alpha, const Partition& beta) {
  if (alpha.size() != beta.size()) throw SizeMismatch("find_wall: |alpha| != |beta|");
  const int m = alpha.length(), n = beta.length();
  if (m < 2 || n < 2) return std::nullopt;
  std::map<int, unsigned> beta_sums;  // sum -> first proper subset mask
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    int s = 0;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) s += beta[static_cast<std::size_t>(j)];
    beta_sums.try_emplace(s, mask);
  }
  for (unsigned mask = 1; mask + 1 < (1u << m); mask += 2) {
    int s = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) s += alpha[static_cast<std::size_t>(i)];
    if (auto it = beta_sums.find(s); it != beta_sums.end()) {
      Wall w;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1u) w.rows_alpha.push_back(i + 1);
      for (int j = 0; j < n; ++j)
        if (it->second >> j & 1u) w.rows_beta.push_back(j + 1);
      return w;
    }
  }
  return std::nullopt;
}

inline bool is_on_wall(const Partition& alpha, const Partition& beta) { return find_wall(alpha, beta).has_value(); }

/// Character formula for H^{k,l}, valid off the walls.
inline Rational H_char(const HurwitzQuery& q) {
  q.validate();
  if (auto wall = find_wall(q.alpha, q.beta)) {
    throw PreconditionViolation("H_char: (" + q.alpha.str() + "),(" + q.beta.str() + ") lies on the wall " +
                                wall->str());
  }
  const Rational sum = detail::character_pair_sum(q.alpha, q.beta, [&](const Partition& lambda) {
    return eval_hook(lambda, q.k, q.l);
  });
  return sum / (z_order(q.alpha) * z_order(q.beta));
}

/// g = (l + 2 - l(alpha) - l(beta)) / 2.
inline Rational genus_classical(int l, int len_alpha, int len_beta) { return ratio(l + 2 - len_alpha - len_beta, 2); }

/// True when the sign homomorphism forces W^{k,l}(alpha, beta) = 0.
inline bool parity_vanishes(const HurwitzQuery& q) {
  q.validate();
  return ((q.k + q.l) % 2) != ((2 * q.d() - q.alpha.length() - q.beta.length()) % 2);
}

/// c_theta = |f^{-1}(theta)| prod theta_i! = d! / prod_i m_i(theta)!.
inline Integer c_theta(const Partition& theta) {
  Integer denom = 1;
  for (int m : theta.multiplicities()) denom *= factorial(static_cast<unsigned>(m));
  return factorial(static_cast<unsigned>(theta.size())) / denom;
}

/// All W^{k,l}(alpha, beta) for alpha, beta |- d, k <= kmax, l <= lmax,
/// indexed [k][l][alpha][beta] in table order. Same formula as W_char,
/// evaluated against the full character table.
struct WBlock {
  int d = 0;
  std::vector<Partition> order;
  std::vector<std::vector<std::vector<std::vector<Integer>>>> values;
};

inline WBlock w_block(int d, int kmax, int lmax, const CharacterTableOptions& tables = {}) {
  const auto table = character_table(d, tables);
  const std::size_t r = table.rank();
  WBlock block{d, table.order(), {}};
  std::vector<std::vector<std::vector<Rational>>> hooks(r);  // [lambda][k][l]
  for (std::size_t x = 0; x < r; ++x) {
    ContentFunctions cf(table.order()[x]);
    hooks[x].assign(static_cast<std::size_t>(kmax) + 1, std::vector<Rational>(static_cast<std::size_t>(lmax) + 1));
    for (int k = 0; k <= kmax; ++k)
      for (int l = 0; l <= lmax; ++l) hooks[x][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = eval_hook(cf, k, l);
  }
  std::vector<Integer> sizes;
  for (const auto& p : table.order()) sizes.push_back(class_size(p));
  const Integer d_factorial = factorial(static_cast<unsigned>(d));
  block.values.assign(static_cast<std::size_t>(kmax) + 1,
                      std::vector<std::vector<std::vector<Integer>>>(
                          static_cast<std::size_t>(lmax) + 1, std::vector<std::vector<Integer>>(r, std::vector<Integer>(r))));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const Rational scale = ratio(sizes[a] * sizes[b], d_factorial);
      for (int k = 0; k <= kmax; ++k) {
        for (int l = 0; l <= lmax; ++l) {
          Rational s = 0;
          for (std::size_t x = 0; x < r; ++x) {
            const auto prod = table.at(x, a) * table.at(x, b);
            if (prod != 0) s += hooks[x][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] * prod;
          }
          s *= scale;
          if (!is_integer(s)) throw InternalError("w_block: non-integral walk count " + to_string(s));
          block.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)][a][b] = s.get_num();
        }
      }
    }
  }
  return block;
}

/// W(z,t,u,A,B) = 1 + sum_d z^d/d! sum_{k,l} t^k u^l/l! sum W^{k,l} p_alpha(A) p_beta(B).
inline TruncatedSeries w_series(const Truncation& trunc, const CharacterTableOptions& tables = {}) {
  TruncatedSeries w = TruncatedSeries::one(trunc);
  for (int d = 1; d <= trunc.z; ++d) {
    const auto block = w_block(d, trunc.t, trunc.u, tables);
    const Integer d_factorial = factorial(static_cast<unsigned>(d));
    for (int k = 0; k <= trunc.t; ++k) {
      for (int l = 0; l <= trunc.u; ++l) {
        const Integer norm = d_factorial * factorial(static_cast<unsigned>(l));
        for (std::size_t a = 0; a < block.order.size(); ++a)
          for (std::size_t b = 0; b < block.order.size(); ++b) {
            const Integer& value = block.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)][a][b];
            if (value != 0) w.add(SeriesKey{d, k, l, block.order[a], block.order[b]}, ratio(value, norm));
          }
      }
    }
  }
  return w;
}

struct EngineLimits {
  int max_d = 8;
  int max_k = 6;
  int max_l = 6;
};

/// Connected numbers from H = log W. The logarithm is computed once per
/// truncation and grown on demand; W^{k,l} is rebuilt from H through the
/// exponential formula as an independent check.
class HurwitzEngine {
 public:
  explicit HurwitzEngine(EngineLimits limits = {}, CharacterTableOptions tables = {})
      : limits_(limits), tables_(std::move(tables)) {}

  const EngineLimits& limits() const { return limits_; }

  /// H^{k,l}(alpha, beta) = l! [z^d t^k u^l p_alpha(A) p_beta(B)] log W.
  Rational H_connected(const HurwitzQuery& q) {
    q.validate();
    check_limits(q);
    const auto& h = log_series({q.d(), q.k, q.l});
    return h.coefficient(SeriesKey{q.d(), q.k, q.l, q.alpha, q.beta}) * factorial(static_cast<unsigned>(q.l));
  }

  /// log W truncated at least to `trunc`.
  const TruncatedSeries& log_series(const Truncation& trunc) {
    std::lock_guard lock(mutex_);
    const Truncation& have = h_.truncation();
    if (!h_built_ || trunc.z > have.z || trunc.t > have.t || trunc.u > have.u) {
      const Truncation grown{std::max(trunc.z, h_built_ ? have.z : 0), std::max(trunc.t, h_built_ ? have.t : 0),
                             std::max(trunc.u, h_built_ ? have.u : 0)};
      h_ = series_log(w_series(grown, tables_));
      h_built_ = true;
    }
    return h_;
  }

  /// W^{k,l}(alpha, beta) = sum_theta c_theta sum_{(zeta^j), (eta^j)} sum over
  /// compositions of k and l of (l; l_1..l_r) prod_j H^{k_j,l_j}(zeta^j, eta^j).
  Integer reconstruct_W_from_H(const HurwitzQuery& q) {
    q.validate();
    check_limits(q);
    log_series({q.d(), q.k, q.l});
    Rational total = 0;
    for (const auto& theta : enumerate_partitions(q.d())) {
      Rational theta_sum = 0;
      for (const auto& zetas : splittings(q.alpha, theta)) {
        for (const auto& etas : splittings(q.beta, theta)) theta_sum += connected_product(zetas, etas, q.k, q.l);
      }
      total += theta_sum * c_theta(theta);
    }
    if (!is_integer(total)) {
      throw InternalError("reconstruct_W_from_H: non-integral result " + to_string(total));
    }
    return total.get_num();
  }

 private:
  void check_limits(const HurwitzQuery& q) const {
    if (q.d() > limits_.max_d) {
      throw LimitExceeded("series engine: d = " + std::to_string(q.d()) + " exceeds max_d = " + std::to_string(limits_.max_d));
    }
    if (q.k > limits_.max_k) {
      throw LimitExceeded("series engine: k = " + std::to_string(q.k) + " exceeds max_k = " + std::to_string(limits_.max_k));
    }
    if (q.l > limits_.max_l) {
      throw LimitExceeded("series engine: l = " + std::to_string(q.l) + " exceeds max_l = " + std::to_string(limits_.max_l));
    }
  }

  // Sequences (zeta^1, ..., zeta^r), zeta^j |- theta_j, whose union is alpha.
  static std::vector<std::vector<Partition>> splittings(const Partition& alpha, const Partition& theta) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> current;
    std::vector<int> remaining = alpha.parts();  // weakly decreasing
    std::function<void(std::size_t)> place = [&](std::size_t j) {
      if (j == theta.parts().size()) {
        if (remaining.empty()) out.push_back(current);
        return;
      }
      // choose a sub-multiset of `remaining` summing to theta_j, as a
      // weakly decreasing sequence of distinct multiset picks
      std::vector<int> chosen;
      std::function<void(int, int)> pick = [&](int need, int max_part) {
        if (need == 0) {
          const auto saved = remaining;
          for (int p : chosen) remaining.erase(std::find(remaining.begin(), remaining.end(), p));
          current.emplace_back(chosen);
          place(j + 1);
          current.pop_back();
          remaining = saved;
          return;
        }
        int prev = 0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          const int p = remaining[i];
          if (p > need || p > max_part || p == prev) continue;
          prev = p;
          const auto used = std::count(chosen.begin(), chosen.end(), p);
          if (std::count(remaining.begin(), remaining.end(), p) <= used) continue;
          chosen.push_back(p);
          pick(need - p, p);
          chosen.pop_back();
        }
      };
      pick(theta[j], theta[j]);
    };
    place(0);
    return out;
  }

  // sum over compositions of k and l into r parts, weighted by the
  // multinomial in l, of prod_j H^{k_j,l_j}(zeta^j, eta^j).
  Rational connected_product(const std::vector<Partition>& zetas, const std::vector<Partition>& etas, int k, int l) {
    // acc[a][b]: contribution with a monotone and b free steps so far,
    // in the u^b/b! normalization.
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(k) + 1, std::vector<Rational>(static_cast<std::size_t>(l) + 1));
    acc[0][0] = 1;
    for (std::size_t j = 0; j < zetas.size(); ++j) {
      std::vector<std::vector<Rational>> next(static_cast<std::size_t>(k) + 1, std::vector<Rational>(static_cast<std::size_t>(l) + 1));
      for (int kj = 0; kj <= k; ++kj) {
        for (int lj = 0; lj <= l; ++lj) {
          const Rational h = H_connected(HurwitzQuery{kj, lj, zetas[j], etas[j]});
          if (h == 0) continue;
          for (int a = 0; a + kj <= k; ++a)
            for (int b = 0; b + lj <= l; ++b) {
              const Rational& prev = acc[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
              if (prev == 0) continue;
              next[static_cast<std::size_t>(a + kj)][static_cast<std::size_t>(b + lj)] +=
                  prev * h * binomial(static_cast<unsigned>(b + lj), static_cast<unsigned>(lj));
            }
        }
      }
      acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }

  EngineLimits limits_;
  CharacterTableOptions tables_;
  std::mutex mutex_;
  bool h_built_ = false;
  TruncatedSeries h_;
};

inline nlohmann::json to_json(const HurwitzQuery& q, const HurwitzValue& v, const std::string& method) {
  return {{"d", q.d()},
          {"k", q.k},
          {"l", q.l},
          {"alpha", q.alpha.parts()},
          {"beta", q.beta.parts()},
          {"W", to_string(v.W)},
          {"H", to_string(v.H)},
          {"on_wall", v.on_wall},
          {"method", method}};
}

}  // namespace hurwitz
