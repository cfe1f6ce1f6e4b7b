#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a regular value of size 0.
class Partition {
 public:
  Partition() = default;

  /// Throws PreconditionViolation unless `parts` is weakly decreasing and
  /// positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw PreconditionViolation("partition parts must be positive and weakly decreasing: " +
                                    str());
      }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts `parts` into weakly decreasing order first.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// The partition (1^d).
  static Partition ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// m_i for i = 0..max part (index 0 unused).
  std::vector<int> multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
  }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
  }

  /// Comma separated parts, "" for the empty partition.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// Parses "3,1,1"; parts may be given in any order. "" is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string token(text.substr(pos, comma - pos));
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw ParseError("invalid partition '" + std::string(text) + "'");
      }
      if (used != token.size() || value < 1) {
        throw ParseError("invalid partition '" + std::string(text) + "'");
      }
      parts.push_back(value);
      pos = comma + 1;
      if (comma + 1 == text.size()) throw ParseError("trailing comma in '" + std::string(text) + "'");
    }
    return from_unsorted(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts. The canonical enumeration order is the reverse
  /// of this one.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.str() << ')'; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

/// Every partition of d, in reverse lexicographic order: (d), (d-1,1), ...
/// (1^d). d = 0 gives the single empty partition.
inline std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw PreconditionViolation("enumerate_partitions: d must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

/// z_alpha = prod_i i^{m_i} m_i!, so that |C_alpha| = d!/z_alpha.
inline Integer z_order(const Partition& alpha) {
  Integer z = 1;
  const auto m = alpha.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Integer ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
    z *= ipow * factorial(static_cast<unsigned>(m[i]));
  }
  return z;
}

inline Integer class_size(const Partition& alpha) {
  return factorial(static_cast<unsigned>(alpha.size())) / z_order(alpha);
}

/// Multiset of contents c = column - row over the cells of a diagram.
struct ContentMultiset {
  std::vector<int> values;

  std::size_t cardinality() const { return values.size(); }

  friend bool operator==(const ContentMultiset& a, const ContentMultiset& b) {
    auto x = a.values, y = b.values;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }
};

/// Row by row, left to right.
inline ContentMultiset contents(const Partition& lambda) {
  ContentMultiset c;
  c.values.reserve(static_cast<std::size_t>(lambda.size()));
  for (int row = 0; row < lambda.length(); ++row)
    for (int col = 0; col < lambda[static_cast<std::size_t>(row)]; ++col) c.values.push_back(col - row);
  return c;
}

/// Parts of both partitions merged into weakly decreasing order.
inline Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

/// Appends unicellular rows until the size is d.
inline Partition pad_with_ones(const Partition& lambda, int d) {
  if (d < lambda.size()) {
    throw PreconditionViolation("pad_with_ones: target size " + std::to_string(d) + " is below |lambda| = " +
                                std::to_string(lambda.size()));
  }
  std::vector<int> parts = lambda.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(d - lambda.size()), 1);
  return Partition(std::move(parts));
}

/// dim V^lambda by the hook-length formula.
inline Integer dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

}  // namespace hurwitz
