// kov: matrix Painleve-Kovalevskaya test driver.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kov/acceptance.hpp"
#include "kov/config.hpp"
#include "kov/errors.hpp"

using namespace kov;

namespace {

struct Options {
  std::string alpha = "-1", beta = "-1";
  int n = 2;
  std::string type = "1";
  int depth = -1;
  int trials = 20;
  int h2_exponent = 4;
  std::optional<std::uint64_t> seed;
  std::string out;
  int jobs = 1;
  std::string config;
  std::string family;
  std::string box = "-6,3";
  std::vector<int> expect_fail;
};

// Exit statuses.
constexpr int kOk = 0, kFailed = 1, kBadConfig = 2;

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("KOV_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("KOV_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

Rational flag_rational(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("--") + name + ": " + e.what());
  }
}

std::string matrix_text(const std::vector<std::vector<std::string>>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? ", " : "") + rows[i][j];
    s += "]";
  }
  return s + "]";
}

/// "1", "2", "3", "nc" (m = 1, k4 = n - 2), "diag:k1,k2,k3,k4" or "nc:m,k1,k2,k3,k4".
ResiduePair pick_residues(const Rational& a, const Rational& b, int n, const std::string& type) {
  auto ints = [](const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ConfigError("--type: bad integer '" + item + "'");
      }
    }
    return v;
  };
  if (type == "1" || type == "2" || type == "3") return diag_residues(n, ResidueShape::of_type(type[0] - '0', n));
  if (type == "nc") return noncommuting_residues(a, b, n, ResidueShape::noncommuting(1, 0, 0, 0, n - 2));
  if (type.rfind("diag:", 0) == 0) {
    const auto k = ints(type.substr(5));
    if (k.size() != 4) throw ConfigError("--type=diag: needs four sizes");
    const auto sh = ResidueShape::diag(k[0], k[1], k[2], k[3]);
    if (sh.size() != n) throw ConfigError("--type: sizes must add up to n");
    return diag_residues(n, sh);
  }
  if (type.rfind("nc:", 0) == 0) {
    const auto k = ints(type.substr(3));
    if (k.size() != 5) throw ConfigError("--type=nc: needs m and four sizes");
    const auto sh = ResidueShape::noncommuting(k[0], k[1], k[2], k[3], k[4]);
    if (sh.size() != n) throw ConfigError("--type: 2m + sizes must equal n");
    return noncommuting_residues(a, b, n, sh);
  }
  throw ConfigError("--type must be 1, 2, 3, nc, diag:k1,k2,k3,k4 or nc:m,k1,k2,k3,k4");
}

bool given(const CLI::App& cmd, const std::string& name) {
  const CLI::Option* opt = cmd.get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

/// The system from --config (flags override alpha/beta) or the homogeneous one.
SystemSpec pick_system(const Options& o, const CLI::App& cmd) {
  if (o.config.empty()) return SystemSpec::make_homogeneous(o.n, flag_rational(o.alpha, "alpha"), flag_rational(o.beta, "beta"));
  SystemSpec s = load_system_file(o.config);
  if (given(cmd, "--alpha")) s.alpha = flag_rational(o.alpha, "alpha");
  if (given(cmd, "--beta")) s.beta = flag_rational(o.beta, "beta");
  if (given(cmd, "--n") && o.n != s.n) throw ConfigError("--n disagrees with the config file");
  return s;
}

json base_config(const Options& o, const CLI::App& cmd) {
  json c = json::object();
  for (const auto* opt : cmd.get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "--out" || opt->get_name() == "--jobs" || !opt->count())
      continue;
    c[opt->get_name().substr(2)] = opt->as<std::string>();
  }
  if (!o.config.empty()) c["system"] = system_to_json(load_system_file(o.config));
  return c;
}

void emit(const Options& o, const std::string& command, const json& config, const json& result) {
  if (o.out.empty()) return;
  const std::string text = dump_report(make_report(command, config, result));
  if (o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << text;
}

// ---------------------------------------------------------------------------

int cmd_residues(const Options& o, const CLI::App& cmd) {
  const Rational a = flag_rational(o.alpha, "alpha"), b = flag_rational(o.beta, "beta");
  json res = json::object();
  std::cout << "(alpha, beta) = (" << to_string(a) << ", " << to_string(b) << "), n = " << o.n << "\n";
  try {
    const MuValues mu = mu_values(a, b);
    std::cout << "Delta = " << to_string(mu.delta) << ", mu = " << to_string(mu.mu1) << ", " << to_string(mu.mu2)
              << ", " << to_string(mu.mu3) << ", " << to_string(mu.mu4) << "\n";
    res["delta"] = report_json(mu.delta);
    res["mu"] = {report_json(mu.mu1), report_json(mu.mu2), report_json(mu.mu3), report_json(mu.mu4)};
  } catch (const DeltaZero&) {
    std::cout << "Delta = 0\n";
    res["delta"] = "0";
  }
  const bool nc = noncommuting_exists(a, b);
  std::cout << "non-commuting residues: " << (nc ? "yes" : "no") << "\n";
  res["noncommuting_exists"] = nc;
  json list = json::array();
  std::vector<std::string> types{"1", "2", "3"};
  if (nc && o.n >= 2) types.push_back("nc");
  for (const auto& t : types) {
    const ResiduePair p = pick_residues(a, b, o.n, t);
    const bool ok = check_residue_equations(p, a, b);
    std::cout << p.shape.to_string() << ": p = " << matrix_text(p.p.to_strings()) << ", q = " << matrix_text(p.q.to_strings())
              << (ok ? "" : "  (residue equations FAIL)") << "\n";
    json j = report_json(p);
    j["orbit_dim"] = orbit_dimension(p);
    j["satisfies_residue_equations"] = ok;
    list.push_back(j);
  }
  res["residues"] = list;
  emit(o, "residues", base_config(o, cmd), res);
  return kOk;
}

int cmd_spectrum(const Options& o, const CLI::App& cmd) {
  const Rational a = flag_rational(o.alpha, "alpha"), b = flag_rational(o.beta, "beta");
  const ResiduePair p = pick_residues(a, b, o.n, o.type);
  const LOperator l = build_L(p, a, b);
  json res{{"residues", report_json(p)}};
  if (p.shape.commuting) {
    const auto table = spectrum_dimensions(a, b, p.shape);
    std::cout << "eigenvalue table:";
    for (const auto& e : table) std::cout << "  " << to_string(e.lambda) << " (" << e.dim << ")";
    std::cout << "\n";
    res["table"] = report_json(table);
  }
  const int bound = 4 * o.n + 8;
  json nul = json::object(), mult = json::object();
  std::cout << "integer k with nullity(L - kI) > 0:";
  const auto nl = integer_nullities(l, -bound, bound);
  const auto ml = integer_multiplicities(l, -bound, bound);
  for (const auto& [k, d] : nl)
    if (d > 0 || ml.at(k) > 0) {
      std::cout << "  " << k << ": " << d;
      if (ml.at(k) != d) std::cout << " (algebraic " << ml.at(k) << ")";
      nul[std::to_string(k)] = d;
      mult[std::to_string(k)] = ml.at(k);
    }
  std::cout << "\n";
  const auto res_k = resonances(l);
  std::cout << "resonances:";
  for (int k : res_k) std::cout << " " << k;
  std::cout << "\n";
  res["nullities"] = nul;
  res["multiplicities"] = mult;
  res["resonances"] = res_k;
  emit(o, "spectrum", base_config(o, cmd), res);
  return kOk;
}

int cmd_expand(const Options& o, const CLI::App& cmd) {
  const SystemSpec sys = pick_system(o, cmd);
  const ResiduePair p = pick_residues(sys.alpha, sys.beta, sys.n, o.type);
  const SeriesSolution s = expand_series(sys, p, o.depth);
  const MaximalityVerdict v = maximality(s);
  for (std::size_t k = 0; k < s.x.size(); ++k)
    std::cout << "x_" << k << " = " << matrix_text(s.x[k].to_strings()) << "\ny_" << k << " = "
              << matrix_text(s.y[k].to_strings()) << "\n";
  std::cout << "free parameters:";
  for (const auto& f : s.free_params) std::cout << " " << f.name();
  std::cout << "\nobstructions: " << s.obstructions.size() << "\n";
  for (const auto& ob : s.obstructions)
    for (const auto& [label, poly] : ob.rows) std::cout << "  k=" << ob.k << " " << label << ": " << poly.to_string() << " = 0\n";
  const bool residual = residual_check(sys, s);
  std::cout << "parameters: " << v.total << " of " << v.target << " (coefficients " << v.param_count_in_coeffs
            << ", orbit " << v.orbit_dim << ", z0 1) -> " << (v.maximal ? "maximal" : "not maximal")
            << "; residual check " << (residual ? "ok" : "FAILED") << "\n";
  json res = report_json(s);
  res["residual_ok"] = residual;
  emit(o, "expand", base_config(o, cmd), res);
  return residual ? kOk : kFailed;
}

int cmd_scan(const Options& o, const CLI::App& cmd) {
  int lo = 0, hi = 0;
  {
    char comma = 0;
    std::istringstream ss(o.box);
    if (!(ss >> lo >> comma >> hi) || comma != ',' || !ss.eof() || lo > hi)
      throw ConfigError("--box must look like -6,3");
  }
  if (o.n < 2) throw ConfigError("scan needs n >= 2");
  const auto results = scan_sigma(lo, hi, o.n, o.jobs);
  json pts = json::array(), all = json::array();
  for (const auto& r : results) {
    all.push_back({{"point", {report_json(r.point.first), report_json(r.point.second)}},
                   {"maximal_types", r.maximal_types},
                   {"noncommuting_maximal", r.noncommuting_maximal},
                   {"total_maximal", r.total_maximal}});
    if (r.total_maximal < 3) continue;
    std::cout << "(" << to_string(r.point.first) << ", " << to_string(r.point.second) << "): types";
    for (int t : r.maximal_types) std::cout << " " << t;
    if (r.noncommuting_maximal) std::cout << " + non-commuting";
    std::cout << "\n";
    pts.push_back(all.back()["point"]);
  }
  std::cout << pts.size() << " points with three maximal solutions\n";
  emit(o, "scan", base_config(o, cmd), {{"sigma", pts}, {"points", all}});
  return kOk;
}

void print_candidates(const DeformationReport& rep) {
  for (const auto& c : rep.candidates)
    std::cout << "  " << c.name << ": " << c.verdict.total << "/" << c.verdict.target << " parameters, "
              << c.obstructions.size() << " obstructions" << (c.expanded && !c.residual_ok ? ", residual FAILED" : "")
              << " -> " << (c.verdict.maximal && c.residual_ok ? "maximal" : "NOT maximal") << "\n";
}

int cmd_verify_family(const Options& o, const CLI::App& cmd) {
  if (o.family.empty()) throw ConfigError("--family is required");
  const FamilyId id = parse_family(o.family);
  std::mt19937_64 rng(resolve_seed(o));
  DeformationReport rep;
  json config = base_config(o, cmd);
  config["seed"] = std::to_string(resolve_seed(o));
  if (!o.config.empty()) {
    SystemSpec sys = pick_system(o, cmd);
    const auto [a, b] = family_point(id);
    if (sys.alpha != a || sys.beta != b) throw ConfigError("config point differs from " + o.family + "'s");
    rep = verify_system(o.family + " (config)", sys, family_candidates(id, sys.n, &rng));
  } else {
    const auto f = default_family(id, o.n, rng);
    rep = verify_deformation(f, &rng);
    config["system"] = system_to_json(rep.system);
  }
  std::cout << rep.family << ", n = " << rep.system.n << ":\n";
  print_candidates(rep);
  std::cout << (rep.all_maximal ? "all candidates maximal" : "some candidate is not maximal") << "\n";
  emit(o, "verify-family", config, report_json(rep));
  return rep.all_maximal ? kOk : kFailed;
}

int cmd_reduce_check(const Options& o, const CLI::App& cmd) {
  std::mt19937_64 rng(resolve_seed(o));
  json config = base_config(o, cmd);
  config["seed"] = std::to_string(resolve_seed(o));
  SystemSpec sys;
  if (!o.config.empty()) {
    sys = pick_system(o, cmd);
  } else {
    if (o.family.empty()) throw ConfigError("reduce-check needs --family or --config");
    sys = family_system(default_family(parse_family(o.family), o.n, rng));
    config["system"] = system_to_json(sys);
  }
  const ReductionReport rep = reduce_second_order_check(sys, o.trials, rng);
  const auto& k = rep.coeffs;
  std::cout << "kappa = " << to_string(k.kappa) << "\nk1 = " << matrix_text(k.k1.to_strings())
            << "\nk2 = " << matrix_text(k.k2.to_strings()) << "\nk3 = " << matrix_text(k.k3.to_strings())
            << "\nk4 = " << matrix_text(k.k4.to_strings()) << "\nk5 = " << matrix_text(k.k5.to_strings()) << "\n"
            << rep.jets.passed << "/" << rep.jets.trials << " jets agree (" << rep.jets.resampled
            << " singular samples redrawn)\n";
  json res = report_json(rep);
  if (sys.n == 1 && o.config.empty()) {
    const auto id = scalar_reduction_identity();
    res["scalar_identity"] = {{"vs_reduced_form", id.vs_p4mat}, {"vs_scalar_p4", id.vs_scalar}};
  }
  emit(o, "reduce-check", config, res);
  return rep.jets.ok() ? kOk : kFailed;
}

int cmd_degenerate(const Options& o, const CLI::App& cmd) {
  if (o.family.empty()) throw ConfigError("--family is required");
  const DegenerationResult d = degenerate_to_p2(parse_degeneration(o.family), o.n, o.h2_exponent);
  std::cout << d.name << " -> " << p2_name(d.target) << " (kappa = " << to_string(d.kappa) << ")\n"
            << "f' = " << matrix_text(d.f_limit.to_strings()) << "\ng' = " << matrix_text(d.g_limit.to_strings())
            << "\nmatch: " << (d.match ? "true" : "false") << "\n";
  if (d.constraint_maps) std::cout << "side condition [a,b] = -2b inherited: " << (*d.constraint_maps ? "yes" : "no") << "\n";
  emit(o, "degenerate", base_config(o, cmd), report_json(d));
  return d.match && d.constraint_maps.value_or(true) ? kOk : kFailed;
}

int cmd_selftest(const Options& o, const CLI::App&) {
  AcceptanceOptions opts;
  opts.seed = resolve_seed(o);
  opts.jobs = o.jobs;
  opts.expect_fail = std::set<int>(o.expect_fail.begin(), o.expect_fail.end());
  opts.on_result = [&](const CriterionResult& r) { std::cout << format_line(r, opts.expect_fail) << std::endl; };
  const AcceptanceRun run = run_acceptance(opts);
  std::cout << (run.ok ? "selftest: OK" : "selftest: FAILED") << "\n";
  if (!o.out.empty()) {
    const std::string text = dump_report(run.report);
    if (o.out == "-") {
      std::cout << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw ConfigError("cannot write " + o.out);
      f << text;
    }
  }
  return run.ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix Painleve-Kovalevskaya test for quadratic matrix ODE systems"};
  app.require_subcommand(1);
  Options o;

  auto point = [&](CLI::App* c) {
    c->add_option("--alpha", o.alpha, "alpha (rational)");
    c->add_option("--beta", o.beta, "beta (rational)");
    c->add_option("--n", o.n, "matrix size")->check(CLI::Range(1, 8));
  };
  auto output = [&](CLI::App* c) { c->add_option("--out", o.out, "write the JSON report here ('-' for stdout)"); };
  auto seeded = [&](CLI::App* c) { c->add_option("--seed", o.seed, "random seed (default: $KOV_SEED, else 1)"); };
  const char* type_help = "1, 2, 3, nc, diag:k1,k2,k3,k4 or nc:m,k1,k2,k3,k4";

  auto* residues = app.add_subcommand("residues", "residue pairs at a point");
  point(residues);
  output(residues);

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of L for one residue pair");
  point(spectrum);
  spectrum->add_option("--type", o.type, type_help);
  output(spectrum);

  auto* expand = app.add_subcommand("expand", "Laurent series expansion and maximality verdict");
  point(expand);
  expand->add_option("--type", o.type, type_help);
  expand->add_option("--N", o.depth, "last order to compute (default: last resonance + 3)");
  expand->add_option("--config", o.config, "system file (JSON); default is the homogeneous system");
  output(expand);

  auto* scan = app.add_subcommand("scan", "classify every integer point of a box");
  scan->add_option("--box", o.box, "lo,hi for both alpha and beta");
  scan->add_option("--n", o.n, "matrix size")->check(CLI::Range(2, 8));
  scan->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
  output(scan);

  auto* verify = app.add_subcommand("verify-family", "check a deformed family keeps all maximal solutions");
  verify->add_option("--family", o.family, "P4_0, P4_1 or P4_2");
  verify->add_option("--n", o.n, "matrix size")->check(CLI::Range(1, 8));
  verify->add_option("--config", o.config, "verify this system instead of a random member");
  seeded(verify);
  output(verify);

  auto* reduce = app.add_subcommand("reduce-check", "check the second-order equation for u at random jets");
  reduce->add_option("--family", o.family, "P4_1 or P4_2 (random member)");
  reduce->add_option("--n", o.n, "matrix size")->check(CLI::Range(1, 8));
  reduce->add_option("--config", o.config, "system file instead of a family");
  reduce->add_option("--trials", o.trials, "number of jets")->check(CLI::Range(1, 100000));
  seeded(reduce);
  output(reduce);

  auto* degen = app.add_subcommand("degenerate", "eps -> 0 limit to a matrix P2 system");
  degen->add_option("--family", o.family, "scalar, P4_0, P4_1 or P4_2");
  degen->add_option("--n", o.n, "matrix size")->check(CLI::Range(1, 8));
  degen->add_option("--h2-exponent", o.h2_exponent, "P4_1 only: h2 = eps^e H (default 4)");
  output(degen);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  seeded(selftest);
  selftest->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
  selftest->add_option("--expect-fail", o.expect_fail, "criteria known to fail")->delimiter(',');
  output(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    const auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "residues") return cmd_residues(o, *cmd);
    if (name == "spectrum") return cmd_spectrum(o, *cmd);
    if (name == "expand") return cmd_expand(o, *cmd);
    if (name == "scan") return cmd_scan(o, *cmd);
    if (name == "verify-family") return cmd_verify_family(o, *cmd);
    if (name == "reduce-check") return cmd_reduce_check(o, *cmd);
    if (name == "degenerate") return cmd_degenerate(o, *cmd);
    return cmd_selftest(o, *cmd);
  } catch (const DivergentLimit& e) {
    std::cerr << "limit diverges: " << e.what() << "\n";
    return kFailed;
  } catch (const ConstraintViolated& e) {
    std::cerr << "constraint violated: " << e.what() << "\n";
    return kBadConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadConfig;
  }
}
