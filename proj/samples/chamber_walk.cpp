// Walk counts for two-part profiles of d = 6, then the polynomial that
// H^{0,2} follows on the chamber containing ((5,1),(4,2)). The fit uses
// distinct parts only; on equal-part points such as beta = (3,3) the value
// differs by the extra multiplicity factor in z_beta.

#include <iostream>

#include "hurwitz/hurwitz.hpp"

using namespace hurwitz;

int main() {
  const Partition beta{4, 2};
  for (const auto& alpha : enumerate_partitions(6)) {
    if (alpha.length() != 2) continue;
    const HurwitzQuery q{0, 2, alpha, beta};
    std::cout << "W^{0,2}((" << alpha.str() << "),(" << beta.str() << ")) = " << count_walks(q)
              << (is_on_wall(alpha, beta) ? "  [wall]" : "") << '\n';
  }

  // x1 > y1 and x1 > y2: the sign vector (+,+)
  const auto base = make_point({5, 1}, {4, 2});
  const auto points = sample_chamber(base, 40, 30, 7);
  const auto fit = fit_chamber_polynomial(0, 2, points);
  std::cout << "chamber " << chamber_signature(base) << ": H^{0,2} =";
  const char* names[] = {"x1", "x2", "y1", "y2"};
  for (std::size_t i = 0; i < fit.monomials.size(); ++i) {
    std::cout << (i ? " + " : " ") << '(' << to_string(fit.coefficients[i]) << ')';
    for (std::size_t v = 0; v < fit.monomials[i].size(); ++v)
      for (int e = 0; e < fit.monomials[i][v]; ++e) std::cout << '*' << names[v];
  }
  std::cout << "  (degree " << fit.degree << ", " << fit.validation.size() << " held-out points exact)\n";

  const auto far = make_point({50, 11}, {40, 21});
  std::cout << "at ((50,11),(40,21)): fit " << to_string(evaluate_fit(fit, far)) << ", character formula "
            << to_string(H_char(HurwitzQuery{0, 2, far.alpha(), far.beta()})) << '\n';
  return evaluate_fit(fit, far) == H_char(HurwitzQuery{0, 2, far.alpha(), far.beta()}) ? 0 : 1;
}
