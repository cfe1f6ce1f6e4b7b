#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

namespace detail {

// Beta-set (abacus) form of a partition with `beads` entries:
// b_i = lambda_i - i + beads, i = 1..beads, strictly decreasing.
inline std::vector<int> beta_set(const Partition& lambda, int beads) {
  std::vector<int> b(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) {
    const int part = i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0;
    b[static_cast<std::size_t>(i)] = part - (i + 1) + beads;
  }
  return b;
}

inline Partition from_beta_set(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int beads = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < beads; ++i) {
    const int part = b[static_cast<std::size_t>(i)] + (i + 1) - beads;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

struct RimHookMove {
  Partition shape;
  int sign;  // (-1)^{height}
};

// Moves one bead by `shift` (positive: add a rim hook, negative: remove one).
inline std::vector<RimHookMove> move_beads(const Partition& lambda, int shift, int beads) {
  std::vector<RimHookMove> out;
  const auto b = beta_set(lambda, beads);
  std::vector<char> occupied;
  int top = 0;
  for (int x : b) top = std::max(top, x);
  occupied.assign(static_cast<std::size_t>(top + std::abs(shift) + 1), 0);
  for (int x : b) occupied[static_cast<std::size_t>(x)] = 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int from = b[i];
    const int to = from + shift;
    if (to < 0 || occupied[static_cast<std::size_t>(to)]) continue;
    int jumped = 0;
    for (int y = std::min(from, to) + 1; y < std::max(from, to); ++y) jumped += occupied[static_cast<std::size_t>(y)];
    auto moved = b;
    moved[i] = to;
    out.push_back({from_beta_set(std::move(moved)), (jumped % 2 == 0) ? 1 : -1});
  }
  return out;
}

}  // namespace detail

/// Every way to add a rim hook (border strip) of `size` cells to lambda.
inline std::vector<detail::RimHookMove> add_rim_hooks(const Partition& lambda, int size) {
  return detail::move_beads(lambda, size, lambda.length() + size);
}

/// Every way to remove a rim hook of `size` cells from lambda.
inline std::vector<detail::RimHookMove> remove_rim_hooks(const Partition& lambda, int size) {
  return detail::move_beads(lambda, -size, lambda.length());
}

/// (-1)^{d - l(mu)}: the parity of any permutation of cycle type mu.
inline int sign_of_class(const Partition& mu) { return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1; }

namespace detail {

class BorderStripRecursion {
 public:
  explicit BorderStripRecursion(const Partition& mu) : mu_(mu) {}

  std::int64_t value(const Partition& lambda) { return eval(lambda, 0); }

 private:
  // Removes the parts of mu left to right; the remaining shape and the
  // position in mu determine the state.
  std::int64_t eval(const Partition& lambda, std::size_t next) {
    if (next == mu_.parts().size()) return lambda.empty() ? 1 : 0;
    auto& memo = memo_[next];
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (const auto& move : remove_rim_hooks(lambda, mu_[next])) total += move.sign * eval(move.shape, next + 1);
    memo.emplace(lambda, total);
    return total;
  }

  Partition mu_;
  std::map<std::size_t, std::unordered_map<Partition, std::int64_t, PartitionHash>> memo_;
};

}  // namespace detail

/// chi^lambda_mu by border-strip removal.
inline std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw SizeMismatch("character: |lambda| = " + std::to_string(lambda.size()) + " but |mu| = " +
                       std::to_string(mu.size()));
  }
  return detail::BorderStripRecursion(mu).value(lambda);
}

/// All nonzero chi^lambda_mu for fixed mu, lambda ranging over partitions of
/// |mu|. Built by adding rim hooks of the sizes of mu to the empty diagram,
/// so the cost follows the number of reachable shapes rather than p(|mu|).
inline std::map<Partition, Integer> character_column(const Partition& mu) {
  std::map<Partition, Integer> layer{{Partition{}, Integer(1)}};
  for (auto it = mu.parts().rbegin(); it != mu.parts().rend(); ++it) {
    std::map<Partition, Integer> next;
    for (const auto& [shape, value] : layer) {
      for (const auto& move : add_rim_hooks(shape, *it)) {
        auto& slot = next[move.shape];
        if (move.sign > 0)
          slot += value;
        else
          slot -= value;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    layer = std::move(next);
  }
  return layer;
}

/// The full table chi^lambda_mu over lambda, mu |- d. Rows and columns
/// both follow enumerate_partitions(d).
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(int d, std::vector<Partition> order, std::vector<std::int64_t> entries)
      : d_(d), order_(std::move(order)), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace(order_[i], i);
  }

  int d() const { return d_; }
  const std::vector<Partition>& order() const { return order_; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t rank() const { return order_.size(); }

  std::size_t index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw SizeMismatch("partition " + p.str() + " is not a partition of " + std::to_string(d_));
    return it->second;
  }

  std::int64_t at(std::size_t lambda, std::size_t mu) const { return entries_[lambda * rank() + mu]; }
  std::int64_t operator()(const Partition& lambda, const Partition& mu) const {
    return at(index_of(lambda), index_of(mu));
  }

  /// Sum_mu chi^a_mu chi^b_mu / z_mu == delta_ab for all rows.
  bool row_orthogonal() const {
    std::vector<Integer> z;
    for (const auto& mu : order_) z.push_back(z_order(mu));
    for (std::size_t a = 0; a < rank(); ++a) {
      for (std::size_t b = a; b < rank(); ++b) {
        Rational s = 0;
        for (std::size_t m = 0; m < rank(); ++m) {
          s += ratio(Integer(at(a, m) * at(b, m)), z[m]);
        }
        if (s != (a == b ? 1 : 0)) return false;
      }
    }
    return true;
  }

  /// Sum_lambda chi^lambda_a chi^lambda_b == z_a delta_ab.
  bool column_orthogonal() const {
    for (std::size_t a = 0; a < rank(); ++a) {
      for (std::size_t b = a; b < rank(); ++b) {
        Integer s = 0;
        for (std::size_t l = 0; l < rank(); ++l) s += at(l, a) * at(l, b);
        if (s != (a == b ? z_order(order_[a]) : Integer(0))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.d_ == b.d_ && a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  int d_ = 0;
  std::vector<Partition> order_;
  std::vector<std::int64_t> entries_;
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

inline CharacterTable compute_character_table(int d) {
  auto order = enumerate_partitions(d);
  const std::size_t n = order.size();
  std::vector<std::int64_t> entries(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    detail::BorderStripRecursion rec(order[m]);
    for (std::size_t l = 0; l < n; ++l) entries[l * n + m] = rec.value(order[l]);
  }
  return CharacterTable(d, std::move(order), std::move(entries));
}

inline constexpr int kCharacterCacheVersion = 1;

inline nlohmann::json to_json(const CharacterTable& table) {
  nlohmann::json order = nlohmann::json::array();
  for (const auto& p : table.order()) order.push_back(p.parts());
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t l = 0; l < table.rank(); ++l) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t m = 0; m < table.rank(); ++m) row.push_back(table.at(l, m));
    rows.push_back(std::move(row));
  }
  return {{"version", kCharacterCacheVersion}, {"d", table.d()}, {"order", std::move(order)}, {"entries", std::move(rows)}};
}

/// Returns nullopt for anything that is not a well-formed, orthogonal table
/// for this d.
inline std::optional<CharacterTable> character_table_from_json(const nlohmann::json& j, int d) {
  try {
    if (!j.is_object() || j.at("version").get<int>() != kCharacterCacheVersion || j.at("d").get<int>() != d) {
      return std::nullopt;
    }
    const auto expected = enumerate_partitions(d);
    const auto& order = j.at("order");
    const auto& rows = j.at("entries");
    if (order.size() != expected.size() || rows.size() != expected.size()) return std::nullopt;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (order[i].get<std::vector<int>>() != expected[i].parts()) return std::nullopt;
    }
    std::vector<std::int64_t> entries;
    for (const auto& row : rows) {
      if (row.size() != expected.size()) return std::nullopt;
      for (const auto& x : row) entries.push_back(x.get<std::int64_t>());
    }
    CharacterTable table(d, expected, std::move(entries));
    if (!table.column_orthogonal()) return std::nullopt;
    return table;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

/// One JSON file per d under a directory. Unreadable or inconsistent files
/// are recomputed and overwritten.
class CharacterTableCache {
 public:
  explicit CharacterTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path file_for(int d) const { return dir_ / ("characters-d" + std::to_string(d) + ".json"); }

  std::optional<CharacterTable> load(int d) const {
    std::ifstream in(file_for(d));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return std::nullopt;
    return character_table_from_json(j, d);
  }

  // Written to a temporary sibling, then renamed into place.
  void store(const CharacterTable& table) const {
    std::filesystem::create_directories(dir_);
    const auto target = file_for(table.d());
    std::random_device rd;
    const auto tmp = target.string() + ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw Error("cannot write character cache file " + tmp);
      out << to_json(table).dump();
      if (!out) throw Error("cannot write character cache file " + tmp);
    }
    std::filesystem::rename(tmp, target);
  }

 private:
  std::filesystem::path dir_;
};

struct CharacterTableOptions {
  int max_d = 10;
  std::optional<std::filesystem::path> cache_dir;
};

inline CharacterTable character_table(int d, const CharacterTableOptions& options = {}) {
  if (d < 1 || d > options.max_d) {
    throw LimitExceeded("character_table: d = " + std::to_string(d) + " outside 1..max_d = " +
                        std::to_string(options.max_d));
  }
  if (!options.cache_dir) return compute_character_table(d);
  CharacterTableCache cache(*options.cache_dir);
  if (auto cached = cache.load(d)) return std::move(*cached);
  auto table = compute_character_table(d);
  cache.store(table);
  return table;
}

}  // namespace hurwitz
