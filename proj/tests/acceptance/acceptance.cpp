// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/hurwitz.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

HurwitzQuery query(int k, int l, const Partition& a, const Partition& b) { return HurwitzQuery{k, l, a, b}; }

std::string describe(const HurwitzQuery& q) {
  return "k=" + std::to_string(q.k) + " l=" + std::to_string(q.l) + " alpha=(" + q.alpha.str() + ") beta=(" +
         q.beta.str() + ")";
}

// 1. W from characters equals the walk count
Outcome oracle_equivalence() {
  long checked = 0;
  for (int d = 1; d <= 6; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d))
        for (int k = 0; k <= 2; ++k)
          for (int l = 0; l <= 2; ++l) {
            const auto q = query(k, l, a, b);
            const Integer w = W_char(q), c = count_walks(q);
            if (w != c) return {false, describe(q) + ": W_char=" + to_string(w) + " walks=" + to_string(c)};
            ++checked;
          }
  return {true, std::to_string(checked) + " cases"};
}

// 2. off the walls the connected number is W / d! and the character formula
Outcome chamber_identity(HurwitzEngine& engine) {
  long checked = 0;
  for (int d = 1; d <= 6; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d)) {
        if (is_on_wall(a, b)) continue;
        for (int k = 0; k <= 4; ++k)
          for (int l = 0; k + l <= 4; ++l) {
            const auto q = query(k, l, a, b);
            const Rational h = engine.H_connected(q);
            const Integer w = W_char(q);
            if (h * factorial(static_cast<unsigned>(d)) != w)
              return {false, describe(q) + ": d! H_connected=" + to_string(Rational(h * factorial(static_cast<unsigned>(d)))) + " W=" + to_string(w)};
            const Rational hc = H_char(q);
            if (hc != h) return {false, describe(q) + ": H_char=" + to_string(hc) + " H_connected=" + to_string(h)};
            ++checked;
          }
      }
  return {true, std::to_string(checked) + " off-wall cases"};
}

// 3. rebuilding W from connected numbers
Outcome exponential_round_trip(HurwitzEngine& engine) {
  long checked = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d))
        for (int k = 0; k <= 2; ++k)
          for (int l = 0; l <= 2; ++l) {
            const auto q = query(k, l, a, b);
            const Integer r = engine.reconstruct_W_from_H(q), w = W_char(q);
            if (r != w) return {false, describe(q) + ": rebuilt=" + to_string(r) + " W=" + to_string(w)};
            ++checked;
          }
  return {true, std::to_string(checked) + " cases"};
}

// 4. e_r of the Jucys-Murphy elements is the level-r class sum
Outcome jm_levels() {
  long checked = 0;
  for (int d = 1; d <= 6; ++d)
    for (int r = 0; r < d; ++r) {
      if (!verify_jm_levels(d, r)) return {false, "d=" + std::to_string(d) + " r=" + std::to_string(r)};
      ++checked;
    }
  return {true, std::to_string(checked) + " (d, r) pairs"};
}

// 5. f(Xi_d) acts by f(Cont_lambda) on each isotypic component
Outcome central_characters() {
  long checked = 0;
  for (const char* text : {"E1", "E2", "H2", "H3", "P2", "H2*E1"}) {
    const auto f = RegularFunctionSpec::parse(text);
    for (int d = 1; d <= 5; ++d) {
      if (!verify_central_character(d, f)) return {false, std::string("f=") + text + " d=" + std::to_string(d)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (f, d) pairs"};
}

// 6. first 2-Toda equation and the shift substitution
Outcome toda() {
  std::ostringstream detail;
  std::size_t compared = 0;
  const std::vector<std::pair<const char*, VariableProfile>> profiles = {
      {"p1", VariableProfile::first_power_sums()}, {"p1,p2", VariableProfile::through_p2()}, {"all", VariableProfile::all()}};
  for (const auto& [label, profile] : profiles) {
    for (int n = -2; n <= 2; ++n) {
      const auto report = toda_first_equation_check(n, Truncation{5, 2, 2}, profile);
      const std::string where = std::string("profile ") + label + " n=" + std::to_string(n);
      if (!report.verdict) {
        for (const auto& e : report.entries)
          if (e.lhs != e.rhs) {
            return {false, where + " first mismatch at z^" + std::to_string(e.key.z) + " t^" + std::to_string(e.key.t) +
                               " u^" + std::to_string(e.key.u) + ": " + to_string(e.lhs) + " vs " + to_string(e.rhs)};
          }
        return {false, where + ": gamma is not a scalar series"};
      }
      compared += report.entries.size();
      if (!report.gamma_matches_content_weight) detail << "(gamma != y_n at " << where << ") ";
    }
  }
  for (int n = -2; n <= 2; ++n)
    if (!shift_substitution_check(n, Truncation{4, 2, 2})) return {false, "shift substitution fails at n=" + std::to_string(n)};
  detail << compared << " coefficients compared for n in -2..2 at Dz=5 Dt=2 Du=2 over profiles p1, p1+p2, all; "
         << "gamma = y_n throughout; shift check n in -2..2 at Dz=4";
  return {true, detail.str()};
}

// 7. log tau_0 against the connected numbers
Outcome series_cross_check(HurwitzEngine& engine) {
  const Truncation tr{5, 2, 2};
  const auto log_tau = series_log(build_tau(0, tr, VariableProfile::all()));
  long checked = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d))
        for (int k = 0; k <= 2; ++k)
          for (int l = 0; l <= 2; ++l) {
            const auto q = query(k, l, a, b);
            const Rational from_tau = log_tau.coefficient(SeriesKey{d, k, l, a, b}) * factorial(static_cast<unsigned>(l));
            const Rational h = engine.H_connected(q);
            if (from_tau != h) return {false, describe(q) + ": log tau_0 gives " + to_string(from_tau) + ", H=" + to_string(h)};
            ++checked;
          }
  for (const auto& [key, c] : log_tau.terms())
    if (key.a.size() != key.z || key.b.size() != key.z) return {false, "stray monomial in log tau_0"};
  return {true, std::to_string(checked) + " coefficients"};
}

// 8. exact polynomial fits in chambers
Outcome piecewise_polynomiality() {
  struct Case {
    std::vector<int> x, y;
    int points, bound;
  };
  const std::vector<Case> bases = {
      {{5}, {5}, 24, 60},
      {{3, 1}, {4}, 40, 30},
      {{3, 1}, {2, 2}, 60, 30},
      {{4, 3}, {5, 2}, 60, 30},
  };
  std::ostringstream detail;
  for (const auto& c : bases) {
    const auto base = make_point(c.x, c.y);
    const auto points = sample_chamber(base, c.points, c.bound, 2024);
    for (auto [k, l] : {std::pair{0, 2}, {2, 0}, {1, 1}}) {
      PolynomialFit fit;
      try {
        fit = fit_chamber_polynomial(k, l, points);
      } catch (const Error& e) {
        return {false, "(m,n)=(" + std::to_string(base.m()) + "," + std::to_string(base.n()) + ") k=" + std::to_string(k) +
                           " l=" + std::to_string(l) + ": " + e.what()};
      }
      if (fit.validation.size() < 10) return {false, "fewer than 10 held-out points"};
      for (const auto* set : {&fit.training, &fit.validation})
        for (const auto& s : *set)
          if (s.fitted != s.target) return {false, "nonzero residual"};
      const bool parity_zero = (k + l + base.m() + base.n()) % 2 != 0;
      detail << " (" << base.m() << "," << base.n() << ")[" << fit.chamber_signature << "] k=" << k << " l=" << l
             << " deg " << fit.degree << (parity_zero ? " (identically 0 by parity)" : "") << ";";
    }
  }
  return {true, "degrees:" + detail.str()};
}

// 9. symmetry, parity, small-step identities, orthogonality, integrality
Outcome structural_invariants() {
  long checked = 0;
  for (int d = 1; d <= 6; ++d) {
    const auto block = w_block(d, 3, 4);  // integrality is enforced while building
    const std::size_t r = block.order.size();
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        const auto& alpha = block.order[a];
        const auto& beta = block.order[b];
        for (int k = 0; k <= 3; ++k)
          for (int l = 0; l <= 4; ++l) {
            const auto& v = block.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            const auto q = query(k, l, alpha, beta);
            if (v[a][b] != v[b][a]) return {false, "asymmetric at " + describe(q)};
            if (parity_vanishes(q) && v[a][b] != 0) return {false, "parity violated at " + describe(q)};
            if (v[a][b] < 0) return {false, "negative at " + describe(q)};
            if (k <= 2 && l <= 2 && W_char(q) != v[a][b]) return {false, "column and table routes differ at " + describe(q)};
            ++checked;
          }
        const Integer diag = a == b ? class_size(alpha) : Integer(0);
        if (block.values[0][0][a][b] != diag) return {false, "W^{0,0} wrong at " + describe(query(0, 0, alpha, beta))};
        for (int l = 0; l < 4; ++l)
          if (block.values[1][static_cast<std::size_t>(l)][a][b] != block.values[0][static_cast<std::size_t>(l) + 1][a][b])
            return {false, "W^{1,l} != W^{0,l+1} at " + describe(query(1, l, alpha, beta))};
      }
  }
  for (int d = 1; d <= 8; ++d) {
    const auto t = compute_character_table(d);
    if (!t.row_orthogonal() || !t.column_orthogonal()) return {false, "orthogonality fails at d=" + std::to_string(d)};
  }
  return {true, std::to_string(checked) + " walk counts; orthogonality for d <= 8"};
}

}  // namespace

int main() {
  HurwitzEngine engine(EngineLimits{6, 4, 4});
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence W_char = count_walks (d<=6, k,l<=2)", oracle_equivalence},
      {"2 chamber identity d! H_connected = W_char, H_char = H_connected (off-wall, d<=6, k+l<=4)",
       [&] { return chamber_identity(engine); }},
      {"3 exponential formula round trip (d<=5, k,l<=2)", [&] { return exponential_round_trip(engine); }},
      {"4 Jucys-Murphy levels (d<=6, all r)", jm_levels},
      {"5 central characters (d<=5, E1 E2 H2 H3 P2 H2*E1)", central_characters},
      {"6 2-Toda first equation and shift substitution", toda},
      {"7 log tau_0 = H_connected (d<=5, k,l<=2)", [&] { return series_cross_check(engine); }},
      {"8 piecewise polynomial fits with >= 10 held-out points", piecewise_polynomiality},
      {"9 structural invariants (d<=6), orthogonality (d<=8), integrality", structural_invariants},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << name << " -- " << o.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures) << "/"
            << criteria.size() << std::endl;
  return failures ? 1 : 0;
}
