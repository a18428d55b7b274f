// skewo: command-line front end.

#include "skewo/appendix.hpp"
#include "skewo/cato_a.hpp"
#include "skewo/expr.hpp"
#include "skewo/selftest.hpp"
#include "skewo/serialize.hpp"
#include "skewo/skew_o.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace skewo;

namespace {

struct RunConfig {
  std::string gamma;
  std::string weight;
  int depth = 12;
  std::string cache_dir;
  std::string format = "json";
  std::uint64_t seed = default_seed;
  std::size_t index = 0;
};

/// Thrown when a requested verification does not hold.
struct VerificationFailed {
  json detail;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

GammaSpec gamma_of(const RunConfig& cfg, const Weight& w) {
  if (cfg.gamma.empty()) return GammaSpec::trivial(static_cast<int>(w.size()));
  GammaSpec g = GammaSpec::parse(cfg.gamma);
  if (g.rank() != w.size()) throw std::invalid_argument("--weight has rank " + std::to_string(w.size()) +
                                                        " but --gamma has rank " + std::to_string(g.rank()));
  return g;
}

Weight weight_of(const RunConfig& cfg) {
  if (cfg.weight.empty()) throw std::invalid_argument("--weight is required");
  return parse_weight(cfg.weight);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw std::invalid_argument("--format " + cfg.format + " is not available for this command");
}

SimpleX chosen_simple(const RunConfig& cfg, const Weight& w, const GammaSpec& g) {
  const auto xs = classify_X_over(w, g);
  if (cfg.index >= xs.size())
    throw std::invalid_argument("--index " + std::to_string(cfg.index) + " out of range (" + std::to_string(xs.size()) +
                                " simples over this weight)");
  return xs[cfg.index];
}

void warm_cache(const RunConfig& cfg, const GammaSpec& g) {
  if (cfg.cache_dir.empty()) return;
  for (const auto& b : g.blocks())
    if (b.kind == GammaBlock::Kind::young)
      for (int s : b.sizes)
        if (s <= default_char_table_cap) char_table_cached(s, cfg.cache_dir);
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ',';
    first = false;
    out += c.find_first_of(",\"") == std::string::npos ? c : "\"" + c + "\"";
  }
  return out + "\n";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

void print_matrix(std::ostream& out, const char* name, const IntMatrix& m, bool csv) {
  out << name << (csv ? "\n" : ":\n");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? (csv ? "," : " ") : (csv ? "" : "  ")) << m(i, j);
    out << "\n";
  }
}

void cmd_simples(const RunConfig& cfg) {
  require_format(cfg, {"json", "text", "csv"});
  const Weight w = weight_of(cfg);
  const GammaSpec g = gamma_of(cfg, w);
  warm_cache(cfg, g);
  const auto xs = classify_X_over(w, g);
  if (cfg.format == "json") {
    json out{{"gamma", g.to_string()}, {"weight", format_weight(w)}};
    json list = json::array();
    for (const auto& x : xs) list.push_back(to_json(x, g));
    out["simples"] = list;
    out["count"] = xs.size();
    if (g.blocks().size() > 1) {
      std::vector<Weight> parts;
      for (const auto& b : g.blocks()) parts.push_back(w.segment(b.offset, b.width));
      out["setups"] = to_json(simples_over_four_setups(parts, g), g);
    }
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << csv_row({"orbit_rep", "stab", "irrep", "orbit_size", "dimM"});
    for (const auto& x : xs)
      std::cout << csv_row({format_weight(x.orbit_rep), x.stab.to_string(), join(irrep_labels(x.irrep), ";"),
                            std::to_string(orbit_size(x, g)), std::to_string(dim_m(x, g))});
  } else {
    for (const auto& x : xs) std::cout << describe(x) << "  dimM=" << dim_m(x, g) << "\n";
  }
}

void cmd_block(const RunConfig& cfg, bool matrices_only) {
  require_format(cfg, {"json", "dot", "text", "csv"});
  const Weight w = weight_of(cfg);
  const GammaSpec g = gamma_of(cfg, w);
  warm_cache(cfg, g);
  const auto b = block_matrices(chosen_simple(cfg, w, g), g);
  if (cfg.format == "json") {
    json out = to_json(b, g);
    if (matrices_only) out.erase("order");
    out["size"] = b.order.size();
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "dot") {
    if (matrices_only) throw std::invalid_argument("--format dot is not available for this command");
    std::cout << block_to_dot(b);
  } else {
    const bool csv = cfg.format == "csv";
    if (!matrices_only) {
      for (std::size_t i = 0; i < b.order.size(); ++i)
        std::cout << (csv ? "" : "  ") << i << (csv ? "," : ": ") << describe(b.order[i]) << "\n";
    }
    print_matrix(std::cout, "D", b.D, csv);
    print_matrix(std::cout, "F", b.F, csv);
    print_matrix(std::cout, "C", b.C, csv);
    print_matrix(std::cout, "Cprime", b.Cprime, csv);
  }
}

void cmd_char(const RunConfig& cfg, const std::string& module) {
  require_format(cfg, {"json", "text", "csv"});
  if (cfg.depth < 0) throw std::invalid_argument("--depth must be nonnegative");
  const Weight w = weight_of(cfg);
  const GammaSpec g = gamma_of(cfg, w);
  warm_cache(cfg, g);
  const SimpleX x = chosen_simple(cfg, w, g);
  const CharacterVB ch = module == "Z" ? ch_verma_skew(x, g) : ch_simple_skew(x, g);
  const auto dims = ch.weight_dims(cfg.depth);
  if (cfg.format == "json") {
    json table = json::array();
    for (const auto& [nu, d] : dims) table.push_back({{"weight", format_weight(nu)}, {"dim", d}});
    json out{{"module", module}, {"simple", to_json(x, g)}, {"depth", cfg.depth},
             {"character", to_json(ch)}, {"weights", table}};
    if (module == "V") {
      const auto dim = dim_simple_skew(x, g);
      out["dim"] = dim ? json(*dim) : json(nullptr);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    const bool csv = cfg.format == "csv";
    if (csv) std::cout << csv_row({"weight", "dim"});
    for (const auto& [nu, d] : dims)
      std::cout << (csv ? csv_row({format_weight(nu), std::to_string(d)}) : format_weight(nu) + "  " + std::to_string(d) + "\n");
  }
}

void cmd_cc(const RunConfig& cfg, const std::string& mu_text) {
  require_format(cfg, {"json", "text"});
  const Weight lambda = weight_of(cfg);
  const GammaSpec g = gamma_of(cfg, lambda);
  const Weight mu = parse_weight(mu_text);
  if (mu.size() != lambda.size()) throw std::invalid_argument("--mu has the wrong rank");
  const auto r = cc_equal(lambda, mu, g);
  if (cfg.format == "json") std::cout << to_json(r).dump(2) << "\n";
  else std::cout << "equal: " << (r.equal ? "true" : "false") << "\n";
}

void cmd_pbw(const RunConfig& cfg, int n, const std::string& expr) {
  require_format(cfg, {"json", "text"});
  if (n < 1) throw std::invalid_argument("--n must be positive");
  const GammaSpec g = cfg.gamma.empty() ? GammaSpec::symmetric(n) : GammaSpec::parse(cfg.gamma);
  if (g.rank() != n) throw std::invalid_argument("--gamma rank does not match --n");
  const auto a = parse_algebra_expr(expr, g);
  if (cfg.format == "json")
    std::cout << json{{"gamma", g.to_string()}, {"normal_form", a.to_string()}, {"terms", to_json(a)}}.dump(2) << "\n";
  else std::cout << a.to_string() << "\n";
}

void cmd_appendix(const RunConfig& cfg, int n, const std::string& f_text) {
  require_format(cfg, {"json", "text"});
  const auto r = verify_no_go(make_deformation(n, parse_rational_list(f_text)));
  const json out = to_json(r);
  if (cfg.format == "json") std::cout << out.dump(2) << "\n";
  else std::cout << "solution_space_dim: " << r.solution_space_dim << "\nforced_zero: " << join(r.forced_zero, ",") << "\n";
  const bool ok = r.consistent && r.solution_space_dim == 0 && r.forced_zero.size() == r.unknowns_summary.size() &&
                  r.c_forced_by_monomial && r.d_forced_given_c && r.uvw_forced_by_weights;
  if (!ok) throw VerificationFailed{{{"error", "verification_failed"}, {"command", "appendix"}, {"report", out}}};
}

void cmd_selftest(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const auto results = run_selftest(cfg.seed);
  json list = json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    list.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
  }
  if (cfg.format == "json") {
    std::cout << json{{"seed", cfg.seed}, {"passed", ok}, {"suites", list}}.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
  }
  if (!ok) throw VerificationFailed{{{"error", "verification_failed"}, {"command", "selftest"}, {"suites", list}}};
}

int fail(const json& j, int code) {
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Category O of skew group rings of U(sl2)^n"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  if (const char* env = std::getenv("SKEWO_CACHE_DIR")) cfg.cache_dir = env;
  app.add_option("--gamma", cfg.gamma, "Gamma, e.g. \"S:2,1;C:3;1:2\" (default: trivial)");
  app.add_option("--weight", cfg.weight, "weight, e.g. \"3,0,-1/2\"");
  app.add_option("--depth", cfg.depth, "character evaluation depth")->capture_default_str();
  app.add_option("--format", cfg.format, "json|dot|csv|text")
      ->check(CLI::IsMember({"json", "dot", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "character table cache (default: $SKEWO_CACHE_DIR)");
  app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--index", cfg.index, "which simple over --weight (canonical order)")->capture_default_str();

  std::string module = "V", mu, expr, f_text = "0";
  int n = 0;
  auto* simples = app.add_subcommand("simples", "simple objects over a weight orbit");
  auto* block = app.add_subcommand("block", "block of a simple: order, D, F, C, C'");
  auto* matrices = app.add_subcommand("matrices", "D, F, C, C' of a block");
  auto* chr = app.add_subcommand("char", "character to --depth");
  chr->add_option("--module", module, "V (simple) or Z (Verma)")->check(CLI::IsMember({"V", "Z"}))->capture_default_str();
  auto* cc = app.add_subcommand("cc", "compare central characters");
  cc->add_option("--mu", mu, "second weight")->required();
  auto* pbw = app.add_subcommand("pbw", "normal form of an expression");
  pbw->add_option("--n", n, "number of sl2 factors")->required();
  pbw->add_option("--expr", expr, "expression, e.g. \"[e1,f1]-h1\"")->required();
  auto* appendix = app.add_subcommand("appendix", "deformation obstruction report");
  appendix->add_option("--n", n, "number of factors (2 or 3)")->required();
  appendix->add_option("--f", f_text, "coefficients of f(Omega)")->capture_default_str();
  auto* selftest = app.add_subcommand("selftest", "seeded invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail({{"error", "usage"}, {"message", e.what()}}, 2);
  }

  try {
    if (*simples) cmd_simples(cfg);
    else if (*block) cmd_block(cfg, false);
    else if (*matrices) cmd_block(cfg, true);
    else if (*chr) cmd_char(cfg, module);
    else if (*cc) cmd_cc(cfg, mu);
    else if (*pbw) cmd_pbw(cfg, n, expr);
    else if (*appendix) cmd_appendix(cfg, n, f_text);
    else if (*selftest) cmd_selftest(cfg);
  } catch (const VerificationFailed& e) {
    return fail(e.detail, 1);
  } catch (const ParseError& e) {
    return fail({{"error", "parse"}, {"message", e.what()}, {"position", e.position()}, {"expected", e.expected()}}, 2);
  } catch (const ConsistencyError& e) {
    return fail({{"error", "consistency"}, {"message", e.what()}}, 3);
  } catch (const std::exception& e) {
    return fail({{"error", "invalid_argument"}, {"message", e.what()}}, 2);
  }
  return 0;
}
