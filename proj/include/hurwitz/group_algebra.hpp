#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Hard cap on the degree of symmetric groups materialized element by element.
inline constexpr int kMaxAlgebraDegree = 6;

/// A permutation of {1..d} in one-line notation: image[i-1] = sigma(i).
struct Permutation {
  std::vector<int> image;

  int degree() const { return static_cast<int>(image.size()); }

  static Permutation identity(int d) {
    Permutation p;
    p.image.resize(static_cast<std::size_t>(d));
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
  }

  static Permutation transposition(int d, int s, int t) {
    auto p = identity(d);
    std::swap(p.image[static_cast<std::size_t>(s - 1)], p.image[static_cast<std::size_t>(t - 1)]);
    return p;
  }

  /// Left to right: (a * b)(i) = b(a(i)), i.e. apply a first.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.image.resize(a.image.size());
    for (std::size_t i = 0; i < a.image.size(); ++i) r.image[i] = b.image[static_cast<std::size_t>(a.image[i] - 1)];
    return r;
  }

  Partition cycle_type() const {
    std::vector<char> seen(image.size(), 0);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j] - 1)) {
        seen[j] = 1;
        ++len;
      }
      lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// The elements of S(d) in lexicographic order of one-line notation, with
/// lookup tables for right multiplication by transpositions.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int d) : d_(d) {
    if (d < 1 || d > kMaxAlgebraDegree) {
      throw LimitExceeded("symmetric group degree " + std::to_string(d) + " outside 1..kMaxAlgebraDegree = " +
                          std::to_string(kMaxAlgebraDegree));
    }
    auto p = Permutation::identity(d);
    do {
      elements_.push_back(p);
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      rank_.emplace(key(elements_[i]), static_cast<std::uint32_t>(i));
      cycle_types_.push_back(elements_[i].cycle_type());
    }
    for (int t = 2; t <= d; ++t)
      for (int s = 1; s < t; ++s) transpositions_.push_back({s, t});
    right_by_transposition_.resize(elements_.size() * transpositions_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = 0; j < transpositions_.size(); ++j) {
        const auto [s, t] = transpositions_[j];
        right_by_transposition_[i * transpositions_.size() + j] =
            index_of(elements_[i] * Permutation::transposition(d, s, t));
      }
    }
  }

  int degree() const { return d_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const Partition& cycle_type(std::size_t i) const { return cycle_types_[i]; }

  std::uint32_t index_of(const Permutation& p) const {
    if (p.degree() != d_) throw SizeMismatch("permutation degree does not match S(" + std::to_string(d_) + ")");
    return rank_.at(key(p));
  }

  /// Transpositions (s t), s < t, ordered by t then s.
  const std::vector<std::array<int, 2>>& transpositions() const { return transpositions_; }

  std::uint32_t times_transposition(std::size_t element, std::size_t transposition) const {
    return right_by_transposition_[element * transpositions_.size() + transposition];
  }

  /// elements(i) * elements(j), built on first use.
  std::uint32_t product(std::size_t i, std::size_t j) const {
    std::call_once(product_once_, [this] {
      product_.resize(order() * order());
      for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b) product_[a * order() + b] = index_of(elements_[a] * elements_[b]);
    });
    return product_[i * order() + j];
  }

 private:
  static std::uint64_t key(const Permutation& p) {
    std::uint64_t k = 0;
    for (int x : p.image) k = k * 8 + static_cast<std::uint64_t>(x);
    return k;
  }

  int d_;
  std::vector<Permutation> elements_;
  std::vector<Partition> cycle_types_;
  std::map<std::uint64_t, std::uint32_t> rank_;
  std::vector<std::array<int, 2>> transpositions_;
  std::vector<std::uint32_t> right_by_transposition_;
  mutable std::once_flag product_once_;
  mutable std::vector<std::uint32_t> product_;
};

/// Shared, lazily built instance of S(d).
inline std::shared_ptr<const SymmetricGroup> symmetric_group(int d) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SymmetricGroup>> groups;
  std::lock_guard lock(mutex);
  auto& slot = groups[d];
  if (!slot) slot = std::make_shared<const SymmetricGroup>(d);
  return slot;
}

/// Element of the group algebra R S(d), stored densely over the elements of
/// S(d).
template <typename Coeff>
class GroupAlgebraVector {
 public:
  explicit GroupAlgebraVector(std::shared_ptr<const SymmetricGroup> group)
      : group_(std::move(group)), coeffs_(group_->order(), Coeff(0)) {}

  static GroupAlgebraVector zero(int d) { return GroupAlgebraVector(symmetric_group(d)); }

  static GroupAlgebraVector identity(int d) {
    GroupAlgebraVector v = zero(d);
    v.coeffs_[v.group_->index_of(Permutation::identity(d))] = 1;
    return v;
  }

  const SymmetricGroup& group() const { return *group_; }
  int degree() const { return group_->degree(); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
  Coeff& operator[](std::size_t i) { return coeffs_[i]; }
  const Coeff& coefficient(const Permutation& p) const { return coeffs_[group_->index_of(p)]; }

  std::size_t support_size() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c != 0; }));
  }

  /// Sum of the coefficients over permutations of cycle type mu.
  Coeff class_coefficient_sum(const Partition& mu) const {
    Coeff s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (group_->cycle_type(i) == mu) s += coeffs_[i];
    return s;
  }

  /// this * (s t), summed over the given transpositions (indices into
  /// SymmetricGroup::transpositions()).
  GroupAlgebraVector times_transpositions(const std::vector<std::size_t>& which) const {
    GroupAlgebraVector r(group_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j : which) r.coeffs_[group_->times_transposition(i, j)] += coeffs_[i];
    }
    return r;
  }

  /// this * J_t, where J_t = sum_{s<t} (s t) and J_1 = 0.
  GroupAlgebraVector times_jm(int t) const {
    std::vector<std::size_t> which;
    const auto& ts = group_->transpositions();
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (ts[j][1] == t) which.push_back(j);
    return times_transpositions(which);
  }

  friend GroupAlgebraVector operator+(GroupAlgebraVector a, const GroupAlgebraVector& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }

  friend GroupAlgebraVector operator-(GroupAlgebraVector a, const GroupAlgebraVector& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }

  GroupAlgebraVector& operator+=(const GroupAlgebraVector& b) {
    check_same(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }

  template <typename Scalar>
  friend GroupAlgebraVector operator*(const Scalar& c, GroupAlgebraVector a)
    requires(!std::is_same_v<Scalar, GroupAlgebraVector>)
  {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

  /// Convolution product, left-to-right composition.
  friend GroupAlgebraVector operator*(const GroupAlgebraVector& a, const GroupAlgebraVector& b) {
    a.check_same(b);
    GroupAlgebraVector r(a.group_);
    const auto& g = *a.group_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        r.coeffs_[g.product(i, j)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend bool operator==(const GroupAlgebraVector& a, const GroupAlgebraVector& b) {
    return a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same(const GroupAlgebraVector& b) const {
    if (degree() != b.degree()) throw SizeMismatch("group algebra vectors over different S(d)");
  }

  std::shared_ptr<const SymmetricGroup> group_;
  std::vector<Coeff> coeffs_;
};

}  // namespace hurwitz
