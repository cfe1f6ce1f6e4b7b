#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Exponents of z, t, u together with the monomials p_A(A) and p_B(B).
struct SeriesKey {
  int z = 0;
  int t = 0;
  int u = 0;
  Partition a;
  Partition b;

  /// Degree used by the log/exp recurrences.
  int grade() const { return z + t + u; }

  friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
  friend auto operator<=>(const SeriesKey& x, const SeriesKey& y) {
    if (auto c = std::tie(x.z, x.t, x.u) <=> std::tie(y.z, y.t, y.u); c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
};

struct SeriesKeyHash {
  std::size_t operator()(const SeriesKey& k) const noexcept {
    PartitionHash ph;
    std::size_t h = static_cast<std::size_t>(k.z) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::size_t>(k.t) * 0xc2b2ae3d27d4eb4full + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(k.u) * 0x165667b19e3779f9ull + (h << 6) + (h >> 2);
    h ^= ph(k.a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= ph(k.b) * 31 + (h << 6) + (h >> 2);
    return h;
  }
};

/// Inclusive maximal exponents of z, t and u. Power-sum monomials are not
/// truncated; every series used here has |A|, |B| <= z-degree.
struct Truncation {
  int z = 0;
  int t = 0;
  int u = 0;

  bool admits(int zz, int tt, int uu) const { return zz <= z && tt <= t && uu <= u; }
  bool admits(const SeriesKey& k) const { return admits(k.z, k.t, k.u); }

  friend Truncation meet(const Truncation& a, const Truncation& b) {
    return {std::min(a.z, b.z), std::min(a.t, b.t), std::min(a.u, b.u)};
  }
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Which side a power-sum derivative acts on.
enum class Alphabet { A, B };

/// Sparse series in Q[[z, t, u, p(A), p(B)]] modulo the truncation ideal.
/// Zero coefficients are never stored.
class TruncatedSeries {
 public:
  using Terms = std::unordered_map<SeriesKey, Rational, SeriesKeyHash>;

  TruncatedSeries() = default;
  explicit TruncatedSeries(Truncation trunc) : trunc_(trunc) {}

  static TruncatedSeries one(Truncation trunc) {
    TruncatedSeries s(trunc);
    s.add(SeriesKey{}, 1);
    return s;
  }

  static TruncatedSeries monomial(Truncation trunc, SeriesKey key, const Rational& c = 1) {
    TruncatedSeries s(trunc);
    s.add(std::move(key), c);
    return s;
  }

  const Truncation& truncation() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Rational coefficient(const SeriesKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c to the coefficient of key; keys beyond the truncation vanish.
  void add(SeriesKey key, const Rational& c) {
    if (c == 0 || !trunc_.admits(key)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Terms sorted by key.
  std::vector<std::pair<SeriesKey, Rational>> sorted_terms() const {
    std::vector<std::pair<SeriesKey, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  TruncatedSeries truncated(Truncation trunc) const {
    TruncatedSeries r(meet(trunc, trunc_));
    for (const auto& [k, c] : terms_) r.add(k, c);
    return r;
  }

  /// Terms of grade g only.
  TruncatedSeries homogeneous_part(int g) const {
    TruncatedSeries r(trunc_);
    for (const auto& [k, c] : terms_)
      if (k.grade() == g) r.terms_.emplace(k, c);
    return r;
  }

  /// Terms whose z exponent equals zdeg.
  TruncatedSeries z_part(int zdeg) const {
    TruncatedSeries r(trunc_);
    for (const auto& [k, c] : terms_)
      if (k.z == zdeg) r.terms_.emplace(k, c);
    return r;
  }

  /// d/dp_k on the given alphabet: p_mu -> m_k(mu) p_{mu \ k}.
  TruncatedSeries derivative(Alphabet side, int k) const {
    TruncatedSeries r(trunc_);
    for (const auto& [key, c] : terms_) {
      const Partition& mono = side == Alphabet::A ? key.a : key.b;
      auto parts = mono.parts();
      const auto count = std::count(parts.begin(), parts.end(), k);
      if (count == 0) continue;
      parts.erase(std::find(parts.begin(), parts.end(), k));
      SeriesKey nk = key;
      (side == Alphabet::A ? nk.a : nk.b) = Partition(std::move(parts));
      r.add(std::move(nk), c * static_cast<long>(count));
    }
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    trunc_ = meet(trunc_, o.trunc_);
    std::erase_if(terms_, [this](const auto& kv) { return !trunc_.admits(kv.first); });
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    trunc_ = meet(trunc_, o.trunc_);
    std::erase_if(terms_, [this](const auto& kv) { return !trunc_.admits(kv.first); });
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) {
    if (c == 0) return TruncatedSeries(a.trunc_);
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.terms_ == b.terms_; }

 private:
  Truncation trunc_;
  Terms terms_;
};

/// Product with power-sum monomials combining by partition union. The
/// result carries the componentwise minimum truncation.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const TruncatedSeries& small = a.size() <= b.size() ? a : b;
  const TruncatedSeries& large = a.size() <= b.size() ? b : a;
  const Truncation trunc = meet(a.truncation(), b.truncation());
  TruncatedSeries r(trunc);
  for (const auto& [ks, cs] : small.terms()) {
    for (const auto& [kl, cl] : large.terms()) {
      const int z = ks.z + kl.z, t = ks.t + kl.t, u = ks.u + kl.u;
      if (!trunc.admits(z, t, u)) continue;
      r.add(SeriesKey{z, t, u, union_of(ks.a, kl.a), union_of(ks.b, kl.b)}, cs * cl);
    }
  }
  return r;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

namespace detail {

inline int max_grade(const Truncation& t) { return t.z + t.t + t.u; }

inline std::vector<TruncatedSeries> graded_parts(const TruncatedSeries& s) {
  std::vector<TruncatedSeries> parts(static_cast<std::size_t>(max_grade(s.truncation())) + 1,
                                     TruncatedSeries(s.truncation()));
  for (const auto& [k, c] : s.terms()) parts[static_cast<std::size_t>(k.grade())].add(k, c);
  return parts;
}

}  // namespace detail

/// log(a) for a with constant term 1. Uses E(log a) * a = E(a), E the
/// Euler operator in (z, t, u), solved grade by grade:
///   g L_g = g A_g - sum_{j=1}^{g-1} j L_j A_{g-j}.
inline TruncatedSeries series_log(const TruncatedSeries& a) {
  const auto parts = detail::graded_parts(a);
  const auto& a0 = parts[0];
  if (a0.size() != 1 || a0.coefficient(SeriesKey{}) != 1) {
    throw PreconditionViolation("series_log: constant term must be exactly 1");
  }
  const int top = detail::max_grade(a.truncation());
  std::vector<TruncatedSeries> log_parts(static_cast<std::size_t>(top) + 1, TruncatedSeries(a.truncation()));
  TruncatedSeries result(a.truncation());
  for (int g = 1; g <= top; ++g) {
    TruncatedSeries acc = Rational(g) * parts[static_cast<std::size_t>(g)];
    for (int j = 1; j < g; ++j) {
      const auto& lj = log_parts[static_cast<std::size_t>(j)];
      const auto& ag = parts[static_cast<std::size_t>(g - j)];
      if (lj.empty() || ag.empty()) continue;
      acc -= Rational(j) * series_mul(lj, ag);
    }
    log_parts[static_cast<std::size_t>(g)] = ratio(1, g) * acc;
    result += log_parts[static_cast<std::size_t>(g)];
  }
  return result;
}

/// exp(l) for l without constant term: g X_g = sum_{j=1}^{g} j L_j X_{g-j}.
inline TruncatedSeries series_exp(const TruncatedSeries& l) {
  const auto parts = detail::graded_parts(l);
  if (!parts[0].empty()) throw PreconditionViolation("series_exp: argument must have no grade-0 terms");
  const int top = detail::max_grade(l.truncation());
  std::vector<TruncatedSeries> exp_parts(static_cast<std::size_t>(top) + 1, TruncatedSeries(l.truncation()));
  exp_parts[0] = TruncatedSeries::one(l.truncation());
  TruncatedSeries result = exp_parts[0];
  for (int g = 1; g <= top; ++g) {
    TruncatedSeries acc(l.truncation());
    for (int j = 1; j <= g; ++j) {
      const auto& lj = parts[static_cast<std::size_t>(j)];
      const auto& xg = exp_parts[static_cast<std::size_t>(g - j)];
      if (lj.empty() || xg.empty()) continue;
      acc += Rational(j) * series_mul(lj, xg);
    }
    exp_parts[static_cast<std::size_t>(g)] = ratio(1, g) * acc;
    result += exp_parts[static_cast<std::size_t>(g)];
  }
  return result;
}

/// b^e with b^0 = 1.
inline TruncatedSeries series_pow(const TruncatedSeries& b, int e) {
  TruncatedSeries r = TruncatedSeries::one(b.truncation());
  for (int i = 0; i < e; ++i) r = series_mul(r, b);
  return r;
}

/// Sorted array of {z, t, u, A, B, coeff}.
inline nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : s.sorted_terms()) {
    out.push_back({{"z", k.z}, {"t", k.t}, {"u", k.u}, {"A", k.a.parts()}, {"B", k.b.parts()}, {"coeff", to_string(c)}});
  }
  return out;
}

inline TruncatedSeries series_from_json(const nlohmann::json& j, Truncation trunc) {
  TruncatedSeries s(trunc);
  for (const auto& e : j) {
    SeriesKey k{e.at("z").get<int>(), e.at("t").get<int>(), e.at("u").get<int>(),
                Partition::from_unsorted(e.at("A").get<std::vector<int>>()),
                Partition::from_unsorted(e.at("B").get<std::vector<int>>())};
    s.add(std::move(k), parse_rational(e.at("coeff").get<std::string>()));
  }
  return s;
}

}  // namespace hurwitz
