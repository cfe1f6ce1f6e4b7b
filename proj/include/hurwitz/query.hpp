#pragma once

#include <string>

#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"

namespace hurwitz {

/// Walks with k monotone steps followed by l free steps, from C_alpha to
/// C_beta.
struct HurwitzQuery {
  int k = 0;
  int l = 0;
  Partition alpha;
  Partition beta;

  int d() const { return alpha.size(); }

  /// Throws unless |alpha| = |beta| >= 1 and k, l >= 0.
  void validate() const {
    if (k < 0 || l < 0) throw PreconditionViolation("k and l must be nonnegative");
    if (alpha.size() != beta.size()) {
      throw SizeMismatch("|alpha| = " + std::to_string(alpha.size()) + " but |beta| = " + std::to_string(beta.size()));
    }
    if (alpha.size() < 1) throw PreconditionViolation("partitions must be nonempty");
  }
};

}  // namespace hurwitz
