// hurwitz_cli: command-line access to walk counts, connected numbers,
// identity checks and chamber fits.
//
// Exit status: 0 success, 1 verification failure, 2 usage or limit error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/hurwitz.hpp"

using namespace hurwitz;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kCliMaxD = 10;  // character-table cap

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string cache_dir;
  std::string format = "json";
  bool format_given = false;
  std::uint64_t seed = 0;
  int max_d = EngineLimits{}.max_d;

  CharacterTableOptions tables() const {
    CharacterTableOptions o;
    o.cache_dir = std::filesystem::path(cache_dir);
    return o;
  }
  EngineLimits engine_limits() const {
    EngineLimits l;
    l.max_d = max_d;
    return l;
  }
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("HURWITZ_CACHE_DIR"); env && *env) return env;
  return "./.hurwitz-cache";
}

Partition partition_flag(const std::string& flag, const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void check_d(const CliConfig& cfg, int d, const std::string& flag = "--d") {
  if (d < 1) throw UsageError(flag + " must be at least 1");
  if (d > cfg.max_d) {
    throw LimitExceeded(flag + " " + std::to_string(d) + " exceeds max-d = " + std::to_string(cfg.max_d));
  }
}

void check_steps(int k, int l) {
  if (k < 0) throw UsageError("--k must be nonnegative");
  if (l < 0) throw UsageError("--l must be nonnegative");
}

HurwitzQuery make_query(int d, int k, int l, const std::string& alpha, const std::string& beta) {
  check_steps(k, l);
  HurwitzQuery q{k, l, partition_flag("--alpha", alpha), partition_flag("--beta", beta)};
  if (q.alpha.size() != d) throw UsageError("--alpha " + alpha + " is not a partition of --d " + std::to_string(d));
  if (q.beta.size() != d) throw UsageError("--beta " + beta + " is not a partition of --d " + std::to_string(d));
  return q;
}

void emit_record(const CliConfig& cfg, const json& j, const std::vector<std::string>& columns) {
  if (cfg.format == "json") {
    std::cout << j.dump() << '\n';
    return;
  }
  auto cell = [&](const std::string& c) {
    const auto& v = j.at(c);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
      return cfg.format == "csv" ? "\"" + s + "\"" : s;
    }
    return v.dump();
  };
  if (cfg.format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
    std::cout << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << cell(columns[i]);
    std::cout << '\n';
  } else {
    for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? " " : "") << columns[i] << '=' << cell(columns[i]);
    std::cout << '\n';
  }
}

int emit_verdict(const CliConfig& cfg, const json& report) {
  const bool ok = report.at("verdict").get<bool>();
  if (cfg.format == "json") {
    std::cout << report.dump() << '\n';
  } else {
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// compute ---------------------------------------------------------------

struct ComputeArgs {
  int d = 0, k = 0, l = 0;
  std::string alpha, beta, method = "char";
};

const std::vector<std::string> kValueColumns = {"d", "k", "l", "alpha", "beta", "W", "H", "on_wall", "method"};

int run_compute(const CliConfig& cfg, const ComputeArgs& a) {
  check_d(cfg, a.d);
  const auto q = make_query(a.d, a.k, a.l, a.alpha, a.beta);
  HurwitzValue v;
  v.on_wall = is_on_wall(q.alpha, q.beta);
  if (a.method == "char") {
    v.W = W_char(q);
    if (v.on_wall) {
      HurwitzEngine engine(cfg.engine_limits(), cfg.tables());
      v.H = engine.H_connected(q);
    } else {
      v.H = H_char(q);
    }
  } else if (a.method == "series") {
    HurwitzEngine engine(cfg.engine_limits(), cfg.tables());
    v.H = engine.H_connected(q);
    v.W = engine.reconstruct_W_from_H(q);
  } else {
    v.W = count_walks(q);
    v.H = v.on_wall ? HurwitzEngine(cfg.engine_limits(), cfg.tables()).H_connected(q)
                    : Rational(v.W) / factorial(static_cast<unsigned>(q.d()));
  }
  emit_record(cfg, to_json(q, v, a.method), kValueColumns);
  return kExitOk;
}

// table -----------------------------------------------------------------

int run_table(const CliConfig& cfg, int d, int k, int l) {
  check_d(cfg, d);
  check_steps(k, l);
  const auto block = w_block(d, k, l, cfg.tables());
  std::optional<HurwitzEngine> engine;
  const auto& values = block.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  const std::string format = cfg.format_given ? cfg.format : "csv";
  json rows = json::array();
  if (format == "csv") std::cout << "alpha,beta,W,H,on_wall\n";
  for (std::size_t a = 0; a < block.order.size(); ++a) {
    for (std::size_t b = 0; b < block.order.size(); ++b) {
      const HurwitzQuery q{k, l, block.order[a], block.order[b]};
      const bool wall = is_on_wall(q.alpha, q.beta);
      Rational h;
      if (wall) {
        if (!engine) engine.emplace(cfg.engine_limits(), cfg.tables());
        h = engine->H_connected(q);
      } else {
        h = H_char(q);
      }
      const std::string w = to_string(values[a][b]);
      if (format == "csv") {
        std::cout << '"' << q.alpha.str() << "\",\"" << q.beta.str() << "\"," << w << ',' << to_string(h) << ','
                  << (wall ? "true" : "false") << '\n';
      } else if (format == "plain") {
        std::cout << '(' << q.alpha.str() << ") (" << q.beta.str() << ") W=" << w << " H=" << to_string(h)
                  << (wall ? " on_wall" : "") << '\n';
      } else {
        rows.push_back({{"alpha", q.alpha.parts()}, {"beta", q.beta.parts()}, {"W", w}, {"H", to_string(h)}, {"on_wall", wall}});
      }
    }
  }
  if (format == "json") std::cout << json{{"d", d}, {"k", k}, {"l", l}, {"rows", rows}}.dump() << '\n';
  return kExitOk;
}

// verify ----------------------------------------------------------------

int run_verify_toda(const CliConfig& cfg, int n, int dz, int dt, int du, const std::string& profile_name) {
  if (dz < 0 || dt < 0 || du < 0) throw UsageError("--dz, --dt and --du must be nonnegative");
  VariableProfile profile = VariableProfile::first_power_sums();
  if (profile_name == "p2") profile = VariableProfile::through_p2();
  if (profile_name == "all") profile = VariableProfile::all();
  const auto report = toda_first_equation_check(n, Truncation{dz, dt, du}, profile);
  auto j = to_json(report);
  j["profile"] = profile_name;
  return emit_verdict(cfg, j);
}

int run_verify_jm(const CliConfig& cfg, int d) {
  if (d < 1) throw UsageError("--d must be at least 1");
  if (d > kMaxAlgebraDegree) {
    throw LimitExceeded("--d " + std::to_string(d) + " exceeds the group-algebra cap kMaxAlgebraDegree = " +
                        std::to_string(kMaxAlgebraDegree));
  }
  json levels = json::array();
  bool all = true;
  for (int r = 0; r < d; ++r) {
    const bool ok = verify_jm_levels(d, r);
    all = all && ok;
    levels.push_back({{"r", r}, {"ok", ok}});
  }
  return emit_verdict(cfg, {{"d", d}, {"levels", levels}, {"verdict", all}});
}

int run_verify_central(const CliConfig& cfg, int d, const std::string& text) {
  if (d < 1) throw UsageError("--d must be at least 1");
  RegularFunctionSpec f;
  try {
    f = RegularFunctionSpec::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--f: ") + e.what());
  }
  const bool ok = verify_central_character(d, f);
  return emit_verdict(cfg, {{"d", d}, {"f", f.str()}, {"verdict", ok}});
}

int run_verify_expformula(const CliConfig& cfg, int d, int k, int l) {
  check_d(cfg, d);
  check_steps(k, l);
  HurwitzEngine engine(cfg.engine_limits(), cfg.tables());
  json mismatches = json::array();
  std::size_t checked = 0;
  for (const auto& a : enumerate_partitions(d))
    for (const auto& b : enumerate_partitions(d)) {
      const HurwitzQuery q{k, l, a, b};
      const Integer rebuilt = engine.reconstruct_W_from_H(q), w = W_char(q);
      ++checked;
      if (rebuilt != w)
        mismatches.push_back({{"alpha", a.parts()}, {"beta", b.parts()}, {"rebuilt", to_string(rebuilt)}, {"W", to_string(w)}});
    }
  return emit_verdict(cfg, {{"d", d}, {"k", k}, {"l", l}, {"checked", checked}, {"mismatches", mismatches},
                            {"verdict", mismatches.empty()}});
}

// fit -------------------------------------------------------------------

struct FitArgs {
  int m = 0, n = 0, k = 0, l = 0, points = 40, bound = 30, cap = kDefaultDegreeCap;
  std::string base;
};

int run_fit(const CliConfig& cfg, const FitArgs& a) {
  check_steps(a.k, a.l);
  const auto slash = a.base.find('/');
  if (slash == std::string::npos) throw UsageError("--base must look like alpha/beta, e.g. 3,1/2,2");
  const Partition alpha = partition_flag("--base", a.base.substr(0, slash));
  const Partition beta = partition_flag("--base", a.base.substr(slash + 1));
  if (alpha.length() != a.m) throw UsageError("--base has " + std::to_string(alpha.length()) + " parts on the left but --m is " + std::to_string(a.m));
  if (beta.length() != a.n) throw UsageError("--base has " + std::to_string(beta.length()) + " parts on the right but --n is " + std::to_string(a.n));
  if (a.points <= kHeldOutPoints) throw UsageError("--points must exceed the " + std::to_string(kHeldOutPoints) + " held-out points");
  if (a.bound < 1) throw UsageError("--bound must be positive");
  if (a.cap < 0) throw UsageError("--cap must be nonnegative");
  ChamberPoint base;
  try {
    base = point_of(alpha, beta);
  } catch (const Error& e) {
    throw UsageError(std::string("--base: ") + e.what());
  }
  const auto points = sample_chamber(base, a.points, a.bound, cfg.seed);
  const auto fit = fit_chamber_polynomial(a.k, a.l, points, a.cap);
  std::cout << to_json(fit).dump() << '\n';
  return kExitOk;
}

// oracle ----------------------------------------------------------------

int run_oracle(const CliConfig& cfg, const ComputeArgs& a) {
  check_d(cfg, a.d);
  const auto q = make_query(a.d, a.k, a.l, a.alpha, a.beta);
  const Integer w = count_walks(q);
  json j = {{"d", q.d()}, {"k", q.k}, {"l", q.l}, {"alpha", q.alpha.parts()}, {"beta", q.beta.parts()},
            {"W", to_string(w)}, {"method", "oracle"}};
  emit_record(cfg, j, {"d", "k", "l", "alpha", "beta", "W", "method"});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone and mixed double Hurwitz numbers: walk counts, connected numbers, checks and chamber fits"};
  app.require_subcommand(1);
  CliConfig cfg;
  cfg.cache_dir = default_cache_dir();
  app.add_option("--cache-dir", cfg.cache_dir, "character-table cache directory (env HURWITZ_CACHE_DIR)");
  auto* format_opt = app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--seed", cfg.seed, "seed for chamber sampling");
  app.add_option("--max-d", cfg.max_d, "largest d accepted by compute, table and expformula")
      ->check(CLI::Range(1, kCliMaxD));

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "W and H for one (alpha, beta)");
  c->add_option("--d", compute.d)->required();
  c->add_option("--k", compute.k)->required();
  c->add_option("--l", compute.l)->required();
  c->add_option("--alpha", compute.alpha)->required();
  c->add_option("--beta", compute.beta)->required();
  c->add_option("--method", compute.method)->check(CLI::IsMember({"char", "series", "oracle"}));

  int table_d = 0, table_k = 0, table_l = 0;
  auto* t = app.add_subcommand("table", "W and H over all pairs of partitions of d");
  t->add_option("--d", table_d)->required();
  t->add_option("--k", table_k)->required();
  t->add_option("--l", table_l)->required();

  auto* v = app.add_subcommand("verify", "identity checks");
  v->require_subcommand(1);
  int toda_n = 0, toda_dz = 0, toda_dt = 0, toda_du = 0;
  std::string toda_profile = "p1";
  auto* vt = v->add_subcommand("toda", "first 2-Toda equation");
  vt->add_option("--n", toda_n)->required();
  vt->add_option("--dz", toda_dz)->required();
  vt->add_option("--dt", toda_dt)->required();
  vt->add_option("--du", toda_du)->required();
  vt->add_option("--profile", toda_profile, "power sums kept: p1, p2 (p1 and p2) or all")
      ->check(CLI::IsMember({"p1", "p2", "all"}));
  int jm_d = 0;
  auto* vj = v->add_subcommand("jm", "e_r of Jucys-Murphy elements against class sums");
  vj->add_option("--d", jm_d)->required();
  int central_d = 0;
  std::string central_f;
  auto* vc = v->add_subcommand("central", "f(Jucys-Murphy) against central characters");
  vc->add_option("--d", central_d)->required();
  vc->add_option("--f", central_f)->required();
  int ef_d = 0, ef_k = 0, ef_l = 0;
  auto* ve = v->add_subcommand("expformula", "rebuild W from connected numbers");
  ve->add_option("--d", ef_d)->required();
  ve->add_option("--k", ef_k)->required();
  ve->add_option("--l", ef_l)->required();

  FitArgs fit;
  auto* f = app.add_subcommand("fit", "exact polynomial fit of H over one chamber");
  f->add_option("--m", fit.m)->required();
  f->add_option("--n", fit.n)->required();
  f->add_option("--k", fit.k)->required();
  f->add_option("--l", fit.l)->required();
  f->add_option("--base", fit.base)->required();
  f->add_option("--points", fit.points);
  f->add_option("--bound", fit.bound);
  f->add_option("--cap", fit.cap, "largest total degree tried");

  ComputeArgs oracle;
  auto* o = app.add_subcommand("oracle", "walk count by dynamic programming over S(d)");
  o->add_option("--d", oracle.d)->required();
  o->add_option("--k", oracle.k)->required();
  o->add_option("--l", oracle.l)->required();
  o->add_option("--alpha", oracle.alpha)->required();
  o->add_option("--beta", oracle.beta)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.format_given = format_opt->count() > 0;

  try {
    if (*c) return run_compute(cfg, compute);
    if (*t) return run_table(cfg, table_d, table_k, table_l);
    if (*vt) return run_verify_toda(cfg, toda_n, toda_dz, toda_dt, toda_du, toda_profile);
    if (*vj) return run_verify_jm(cfg, jm_d);
    if (*vc) return run_verify_central(cfg, central_d, central_f);
    if (*ve) return run_verify_expformula(cfg, ef_d, ef_k, ef_l);
    if (*f) return run_fit(cfg, fit);
    if (*o) return run_oracle(cfg, oracle);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Exhaustion& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeMismatch& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionViolation& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "fit failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const SingularSystem& e) {
    std::cerr << "fit failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
