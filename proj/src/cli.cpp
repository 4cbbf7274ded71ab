#include "padicfrob/cli.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "padicfrob/errors.hpp"
#include "padicfrob/frobenius.hpp"
#include "padicfrob/zeta_gamma.hpp"

namespace padicfrob {

namespace {

using ojson = nlohmann::ordered_json;

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string padic_digits(const PadicNum& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

void validate_config(const RunConfig& cfg, bool needs_prime) {
  if (cfg.family != "simplicial" && cfg.family != "hyperoctahedral" && cfg.family != "file")
    throw std::invalid_argument("unknown family '" + cfg.family + "'");
  if (cfg.format != "json" && cfg.format != "table") throw std::invalid_argument("--format must be json or table");
  if (cfg.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (cfg.precision < 1) throw std::invalid_argument("--precision must be positive");
  if (!needs_prime) return;
  if (!is_prime(cfg.p)) throw std::invalid_argument("--p must be prime");
  if (cfg.family == "simplicial" && cfg.p <= cfg.n + 1) throw std::invalid_argument("simplicial family needs p > n+1");
  if (cfg.family == "hyperoctahedral" && cfg.p <= cfg.n) throw std::invalid_argument("hyperoctahedral family needs p > n");
}

std::vector<PadicNum> closed_form_alpha(const std::string& family, int n, long p, int N) {
  std::vector<ZetaPoly> sym;
  if (family == "simplicial")
    sym = alpha_simplicial(n);
  else if (family == "hyperoctahedral")
    sym = alpha_hyperoctahedral(n - 1);
  else
    throw std::invalid_argument("no closed-form alpha for family '" + family + "'");
  std::vector<PadicNum> a;
  for (int j = 0; j < n; ++j) a.push_back(evaluate_zeta_poly(sym[j], p, N));
  return a;
}

std::vector<PadicNum> apply_perturbation(std::vector<PadicNum> alpha, const std::string& spec) {
  static const std::regex re(R"(alpha(\d+)(?:([=+])(-?\d+(?:/\d+)?))?)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw std::invalid_argument("bad --perturb '" + spec + "'");
  std::size_t j = std::stoul(m[1].str());
  if (j == 0 || j >= alpha.size()) throw std::invalid_argument("--perturb index out of range");
  const long p = alpha[j].prime();
  if (!m[2].matched)
    alpha[j] += PadicNum::exact(1, p);
  else if (m[2].str() == "=")
    alpha[j] = PadicNum::exact(parse_rational(m[3].str()), p);
  else
    alpha[j] += PadicNum::exact(parse_rational(m[3].str()), p);
  return alpha;
}

MumOperator config_operator(const RunConfig& cfg) {
  if (cfg.family == "simplicial") return simplicial_operator(cfg.n);
  if (cfg.family == "hyperoctahedral") return hyperoctahedral_operator(cfg.n);
  if (!cfg.operator_file) throw std::invalid_argument("family 'file' needs --operator-file");
  MumOperator L = operator_from_json(read_file(*cfg.operator_file));
  return L;
}

int cmd_alpha(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  validate_config(cfg, cfg.p_given);
  std::vector<ZetaPoly> sym;
  if (cfg.family == "simplicial") {
    sym = alpha_simplicial(cfg.n);
    if (cfg.jmax && *cfg.jmax + 1 < static_cast<int>(sym.size())) sym.resize(*cfg.jmax + 1);
  } else if (cfg.family == "hyperoctahedral") {
    sym = alpha_hyperoctahedral(cfg.jmax ? *cfg.jmax : cfg.n - 1);
  } else {
    throw std::invalid_argument("alpha needs family simplicial or hyperoctahedral");
  }
  ojson rows = ojson::array();
  for (std::size_t j = 0; j < sym.size(); ++j) {
    ojson r;
    r["j"] = j;
    r["symbolic"] = sym[j].to_string();
    if (cfg.p_given) {
      PadicNum v = evaluate_zeta_poly(sym[j], cfg.p, cfg.precision);
      r["value"] = padic_digits(v);
    }
    rows.push_back(r);
  }
  if (cfg.format == "json") {
    ojson j;
    j["family"] = cfg.family;
    if (cfg.family == "simplicial") j["n"] = cfg.n;
    if (cfg.p_given) {
      j["p"] = cfg.p;
      j["precision"] = cfg.precision;
    }
    j["alpha"] = rows;
    out << j.dump() << "\n";
  } else {
    for (const auto& r : rows) {
      out << "alpha_" << r["j"].get<std::size_t>() << " = " << r["symbolic"].get<std::string>();
      if (r.contains("value")) out << "    [" << r["value"].get<std::string>() << "]";
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate_config(cfg, true);
  if (cfg.family == "file") throw std::invalid_argument("verify needs closed-form alpha; use recover for operator files");
  MumOperator L = config_operator(cfg);
  auto alpha = closed_form_alpha(cfg.family, cfg.n, cfg.p, cfg.precision);
  if (cfg.perturb) alpha = apply_perturbation(alpha, *cfg.perturb);
  FrobeniusDecomposition dec = solve_A_series(L, cfg.p, cfg.M());
  IntegralityReport rep = check_integrality(dec, alpha, cfg.p, cfg.M());
  if (cfg.format == "json") {
    out << rep.to_json() << "\n";
  } else {
    out << "family " << cfg.family << "  n = " << cfg.n << "  p = " << cfg.p << "  M = " << rep.M << "\n";
    out << "verdict: " << rep.verdict() << "\n";
    out << "min valuation: " << (rep.min_valuation ? std::to_string(*rep.min_valuation) : "none") << "\n";
    if (rep.first_failure)
      out << "first failure: A_" << rep.first_failure->first << " at t^" << rep.first_failure->second << "\n";
  }
  if (!rep.integral) err << "non-integral Frobenius structure\n";
  return rep.integral ? kExitOk : kExitFailure;
}

int cmd_recover(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  validate_config(cfg, true);
  MumOperator L = config_operator(cfg);
  FrobeniusDecomposition dec = solve_A_series(L, cfg.p, cfg.M());
  AffineCoset coset = recover_alpha(dec, cfg.p, cfg.M());
  std::optional<std::vector<PadicNum>> closed;
  if (cfg.family != "file") closed = closed_form_alpha(cfg.family, L.n, cfg.p, cfg.precision);

  ojson rows = ojson::array();
  for (std::size_t i = 0; i < coset.representative.size(); ++i) {
    const int e = coset.exponent[i];
    BigInt mod = prime_power(cfg.p, e);
    BigInt rep = coset.representative[i] % mod;
    if (rep < 0) rep += mod;
    ojson r;
    r["j"] = i + 1;
    r["residue"] = to_string(rep);
    r["exponent"] = e;
    if (closed) {
      const PadicNum& a = (*closed)[i + 1];
      int ec = std::min(e, a.abs_precision());
      BigInt mc = prime_power(cfg.p, ec);
      BigInt want = a.residue(ec);
      BigInt have = rep % mc;
      r["closed_form"] = to_string(want);
      r["compared_exponent"] = ec;
      r["agrees"] = have == want;
    }
    rows.push_back(r);
  }
  if (cfg.format == "json") {
    ojson j;
    j["family"] = cfg.family;
    j["n"] = L.n;
    j["p"] = cfg.p;
    j["M"] = cfg.M();
    j["working_exponent"] = coset.working_exponent;
    j["alpha"] = rows;
    out << j.dump() << "\n";
  } else {
    for (const auto& r : rows) {
      out << "alpha_" << r["j"].get<std::size_t>() << " = " << r["residue"].get<std::string>() << " mod " << cfg.p
          << "^" << r["exponent"].get<int>();
      if (r.contains("agrees"))
        out << "    closed form " << r["closed_form"].get<std::string>() << ": "
            << (r["agrees"].get<bool>() ? "agrees" : "DISAGREES");
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_guess(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate_config(cfg, false);
  RationalSeries f;
  const std::size_t M = cfg.M();
  if (cfg.series_file)
    f = series_from_json(read_file(*cfg.series_file));
  else if (cfg.family == "simplicial")
    f = period_series_simplicial(cfg.n, M);
  else if (cfg.family == "hyperoctahedral")
    f = period_series_hyperoctahedral(cfg.n, M);
  else
    throw std::invalid_argument("family 'file' needs --series-file");
  MumOperator L = cfg.degree ? guess_operator(f, cfg.n, *cfg.degree) : guess_operator_auto(f, cfg.n, 2 * cfg.n + 2);
  std::string js = operator_to_json(L);
  if (cfg.format == "json") {
    out << js << "\n";
  } else {
    out << "order " << L.n << ", degree " << L.degree() << "\n";
    for (int i = L.n; i >= 0; --i) {
      out << "a_" << i << ":";
      for (const auto& c : L.coeffs[i]) out << " " << to_string(c);
      out << "\n";
    }
  }
  if (cfg.family == "hyperoctahedral" && !cfg.series_file && (cfg.n == 4 || cfg.n == 5)) {
    bool same = L == printed_hyperoctahedral_operator(cfg.n);
    err << (same ? "matches the printed operator\n" : "differs from the printed operator\n");
  }
  return kExitOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format != "json" && cfg.format != "table") throw std::invalid_argument("--format must be json or table");
  auto results = run_selftest(cfg.seed, cfg.quick, cfg.inject_fault);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (cfg.format == "json") {
    ojson j;
    j["seed"] = cfg.seed;
    j["quick"] = cfg.quick;
    ojson arr = ojson::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["suites"] = arr;
    j["ok"] = ok;
    out << j.dump() << "\n";
  } else {
    out << "seed " << cfg.seed << "\n";
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
  }
  if (!ok) {
    err << "failed suites:";
    for (const auto& r : results)
      if (!r.pass) err << " " << r.name;
    err << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic Frobenius structures for MUM differential operators"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "simplicial | hyperoctahedral | file");
    sub->add_option("--n", cfg.n, "order of the operator");
    sub->add_option("--format", cfg.format, "json | table");
    sub->add_option("--seed", cfg.seed, "seed for property tests");
  };
  auto add_padic = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime");
    sub->add_option("--t-order", cfg.t_order, "t-adic order M (default 10p)");
    sub->add_option("--precision", cfg.precision, "p-adic digits for alpha");
    sub->add_option("--operator-file", cfg.operator_file, "operator JSON (family file)");
  };
  CLI::App* alpha = app.add_subcommand("alpha", "closed-form Frobenius constants");
  add_common(alpha);
  add_padic(alpha);
  alpha->add_option("--jmax", cfg.jmax, "largest j");
  CLI::App* verify = app.add_subcommand("verify", "integrality of the Frobenius structure");
  add_common(verify);
  add_padic(verify);
  verify->add_option("--perturb", cfg.perturb, "alpha3 | alpha3=v | alpha3+k");
  CLI::App* recover = app.add_subcommand("recover", "alpha coset from integrality");
  add_common(recover);
  add_padic(recover);
  CLI::App* guess = app.add_subcommand("guess", "guess a MUM operator from a series");
  add_common(guess);
  guess->add_option("--p", cfg.p, "prime (sets the default t-order)");
  guess->add_option("--t-order", cfg.t_order, "number of series terms");
  guess->add_option("--series-file", cfg.series_file, "series JSON");
  guess->add_option("--degree", cfg.degree, "polynomial degree in t");
  CLI::App* selftest = app.add_subcommand("selftest", "invariant suites");
  add_common(selftest);
  selftest->add_flag("--quick", cfg.quick, "cheap subset");
  selftest->add_flag("--inject-fault", cfg.inject_fault, "corrupt one constant (negative control)");

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (CLI::App* sub : {alpha, verify, recover, guess})
    if (sub->parsed() && sub->count("--p")) cfg.p_given = true;

  try {
    if (alpha->parsed()) return cmd_alpha(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (recover->parsed()) return cmd_recover(cfg, out, err);
    if (guess->parsed()) return cmd_guess(cfg, out, err);
    return cmd_selftest(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const PrecisionBudgetExceeded& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const Inconsistent& e) {
    err << "inconsistent congruences (condition " << e.condition_index() << "): " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const NoOperatorFound& e) {
    err << "no operator found: " << e.what() << "\n";
    return kExitNoOperator;
  } catch (const AmbiguousNullspace& e) {
    err << "no unique operator: " << e.what() << "\n";
    return kExitNoOperator;
  } catch (const InsufficientOrder& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace padicfrob
