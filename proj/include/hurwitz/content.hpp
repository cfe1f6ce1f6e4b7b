#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Symmetric functions of a content multiset. Power sums are computed once
/// and extended on demand; h_k and e_k follow from Newton's identities.
class ContentFunctions {
 public:
  explicit ContentFunctions(ContentMultiset c) : c_(std::move(c)) {}
  explicit ContentFunctions(const Partition& lambda) : ContentFunctions(contents(lambda)) {}

  const ContentMultiset& multiset() const { return c_; }

  /// p_k = sum c^k (p_0 = cardinality).
  const Integer& p(int k) {
    extend_power_sums(k);
    return p_[static_cast<std::size_t>(k)];
  }

  /// Complete homogeneous h_k; k h_k = sum_{j=1..k} p_j h_{k-j}.
  const Rational& h(int k) {
    while (static_cast<int>(h_.size()) <= k) {
      const int n = static_cast<int>(h_.size());
      Rational acc = 0;
      for (int j = 1; j <= n; ++j) acc += p(j) * h_[static_cast<std::size_t>(n - j)];
      h_.push_back(acc / n);
    }
    return h_[static_cast<std::size_t>(k)];
  }

  /// Elementary e_r; r e_r = sum_{j=1..r} (-1)^{j-1} p_j e_{r-j}.
  const Rational& e(int r) {
    while (static_cast<int>(e_.size()) <= r) {
      const int n = static_cast<int>(e_.size());
      Rational acc = 0;
      for (int j = 1; j <= n; ++j) {
        const Rational term = p(j) * e_[static_cast<std::size_t>(n - j)];
        if (j % 2)
          acc += term;
        else
          acc -= term;
      }
      e_.push_back(acc / n);
    }
    return e_[static_cast<std::size_t>(r)];
  }

 private:
  void extend_power_sums(int k) {
    if (p_.empty()) p_.emplace_back(static_cast<unsigned long>(c_.cardinality()));
    if (pow_.empty()) pow_.assign(c_.values.size(), Integer(1));
    while (static_cast<int>(p_.size()) <= k) {
      Integer s = 0;
      for (std::size_t i = 0; i < pow_.size(); ++i) {
        pow_[i] *= c_.values[i];
        s += pow_[i];
      }
      p_.push_back(std::move(s));
    }
  }

  ContentMultiset c_;
  std::vector<Integer> p_;
  std::vector<Integer> pow_;
  std::vector<Rational> h_{Rational(1)};
  std::vector<Rational> e_{Rational(1)};
};

inline Rational eval_hk(const ContentMultiset& c, int k) { return ContentFunctions(c).h(k); }

inline Rational eval_er(const ContentMultiset& c, int r) { return ContentFunctions(c).e(r); }

inline Integer sum_contents(const ContentMultiset& c) {
  Integer s = 0;
  for (int v : c.values) s += v;
  return s;
}

/// h_{(k,1^l)}(Cont_lambda) = h_k * h_1^l. For k = 0 this is h_1^l, the
/// value carried by the u^l/l! terms with no monotone steps.
inline Rational eval_hook(ContentFunctions& f, int k, int l) {
  return f.h(k) * pow(Rational(f.p(1)), static_cast<unsigned>(l));
}

inline Rational eval_hook(const Partition& lambda, int k, int l) {
  ContentFunctions f(lambda);
  return eval_hook(f, k, l);
}

/// A generator of the algebra of regular functions on Young diagrams.
struct Generator {
  enum class Kind { Complete, Elementary, PowerSum, Size };
  Kind kind = Kind::Size;
  int index = 0;  // unused for Size

  std::string str() const {
    switch (kind) {
      case Kind::Complete: return "H" + std::to_string(index);
      case Kind::Elementary: return "E" + std::to_string(index);
      case Kind::PowerSum: return "P" + std::to_string(index);
      case Kind::Size: return "SIZE";
    }
    return {};
  }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A polynomial with rational coefficients in H_k, E_k, P_k (evaluated on
/// contents) and SIZE = |lambda|. Parses from strings such as
/// "3/2*H2*E1 + SIZE^2 - P3".
class RegularFunctionSpec {
 public:
  struct Term {
    Rational coeff;
    std::vector<std::pair<Generator, int>> factors;  // generator, power >= 1
  };

  RegularFunctionSpec() = default;
  explicit RegularFunctionSpec(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static RegularFunctionSpec constant(const Rational& c) { return RegularFunctionSpec({Term{c, {}}}); }
  static RegularFunctionSpec generator(Generator g) { return RegularFunctionSpec({Term{1, {{g, 1}}}}); }

  static RegularFunctionSpec parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      Rational c = t.coeff;
      if (i == 0) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      c = abs(c);
      bool need_star = false;
      if (c != 1 || t.factors.empty()) {
        s += c.get_str();
        need_star = true;
      }
      for (const auto& [g, power] : t.factors) {
        if (need_star) s += "*";
        s += g.str();
        if (power != 1) s += "^" + std::to_string(power);
        need_star = true;
      }
    }
    return s;
  }

  /// Evaluates in any commutative algebra V given the image of each
  /// generator. V needs V + V, V * V and Rational * V.
  template <typename V, typename GeneratorValue>
  V evaluate(GeneratorValue&& value_of, const V& one) const {
    std::map<Generator, V> cache;
    auto lookup = [&](const Generator& g) -> const V& {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, value_of(g)).first;
      return it->second;
    };
    V total = Rational(0) * one;
    for (const auto& term : terms_) {
      V product = one;
      for (const auto& [g, power] : term.factors)
        for (int i = 0; i < power; ++i) product = product * lookup(g);
      total = total + term.coeff * product;
    }
    return total;
  }

 private:
  std::vector<Term> terms_;
};

namespace detail {

class RegularFunctionParser {
 public:
  explicit RegularFunctionParser(std::string_view text) : text_(text) {}

  RegularFunctionSpec parse() {
    std::vector<RegularFunctionSpec::Term> terms;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (take() == '-');
    for (;;) {
      auto term = parse_term();
      if (negative) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = (op == '-');
    }
    return RegularFunctionSpec(std::move(terms));
  }

 private:
  RegularFunctionSpec::Term parse_term() {
    RegularFunctionSpec::Term term{1, {}};
    std::map<Generator, int> powers;
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Integer num(read_digits());
        Integer den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          take();
          skip_ws();
          den = Integer(read_digits());
          if (den == 0) fail("zero denominator");
        }
        term.coeff *= ratio(num, den);
      } else {
        const Generator g = read_generator();
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          take();
          skip_ws();
          power = read_small_int();
        }
        if (power > 0) powers[g] += power;
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
    }
    for (const auto& [g, p] : powers) term.factors.emplace_back(g, p);
    return term;
  }

  Generator read_generator() {
    if (text_.substr(pos_, 4) == "SIZE") {
      pos_ += 4;
      return {Generator::Kind::Size, 0};
    }
    Generator g;
    switch (take()) {
      case 'H': g.kind = Generator::Kind::Complete; break;
      case 'E': g.kind = Generator::Kind::Elementary; break;
      case 'P': g.kind = Generator::Kind::PowerSum; break;
      default: --pos_; fail("expected H<k>, E<k>, P<k>, SIZE or a number");
    }
    g.index = read_small_int();
    if (g.index < 1) fail("generator index must be at least 1");
    return g;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int read_small_int() {
    const std::string digits = read_digits();
    if (digits.size() > 6) fail("integer too large");
    return std::stoi(digits);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("regular function '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RegularFunctionSpec RegularFunctionSpec::parse(std::string_view text) {
  return detail::RegularFunctionParser(text).parse();
}

/// f(lambda) with H_k, E_k, P_k evaluated on the contents of lambda.
inline Rational eval_regular(const RegularFunctionSpec& f, ContentFunctions& cf, int size) {
  return f.evaluate(
      [&](const Generator& g) -> Rational {
        switch (g.kind) {
          case Generator::Kind::Complete: return cf.h(g.index);
          case Generator::Kind::Elementary: return cf.e(g.index);
          case Generator::Kind::PowerSum: return Rational(cf.p(g.index));
          case Generator::Kind::Size: return Rational(size);
        }
        return Rational(0);
      },
      Rational(1));
}

inline Rational eval_regular(const RegularFunctionSpec& f, const Partition& lambda) {
  ContentFunctions cf(lambda);
  return eval_regular(f, cf, lambda.size());
}

}  // namespace hurwitz
