#include "divinfo/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "divinfo/acceptance.hpp"
#include "divinfo/errors.hpp"
#include "divinfo/extremal.hpp"
#include "divinfo/io.hpp"
#include "divinfo/measures.hpp"
#include "divinfo/quantum.hpp"
#include "divinfo/verify.hpp"

namespace divinfo::cli {

namespace {

using io::json;
namespace fs = std::filesystem;

struct Options {
  std::size_t n = 0;
  double k = 0.0;
  std::string in;
  std::string q;
  std::string out;
  std::string strategy = "auto";
  std::string theorem;
  std::string mode = "cyclic";
  std::string format;
  std::uint64_t seed = 1;
  bool all = false;
  std::optional<double> tol;
  std::optional<double> eq_tol;
  std::vector<std::size_t> n_values;
  std::vector<double> k_values;
  double n_bits = 0.0;
  double b = 0.0;
};

/// Relative --out paths are resolved against DIVINFO_OUTPUT_DIR when it is set.
fs::path output_path(const std::string& out) {
  fs::path p(out);
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0' && p.is_relative()) {
    return fs::path(dir) / p;
  }
  return p;
}

fs::path sidecar_path(const fs::path& out) {
  fs::path s = out;
  s.replace_extension(".profile.json");
  return s;
}

json bits_json(const ExtendedBits& b) {
  return b.is_infinite() ? json("inf") : json(b.value());
}

void emit(const json& j, const Options& opt, std::ostream& out) {
  if (opt.out.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::save_json(j, output_path(opt.out));
  }
}

verify::Tolerances tolerances(const Options& opt) {
  verify::Tolerances t;
  if (opt.tol) t.slack = *opt.tol;
  if (opt.eq_tol) t.equality = *opt.eq_tol;
  return t;
}

DivergenceStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return DivergenceStrategy::automatic;
  if (s == "exhaustive") return DivergenceStrategy::exhaustive;
  if (s == "uniform-average") return DivergenceStrategy::uniform_average;
  throw InvalidArgument("unknown strategy '" + s + "'");
}

int cmd_construct(const Options& opt, std::ostream& out) {
  const auto profile = build_profile(ExtremalParams(opt.n, opt.k));
  if (opt.out.empty()) {
    out << json{{"distribution", io::to_json(profile.dist)},
                {"profile", io::profile_sidecar(profile)}}
               .dump(2)
        << '\n';
  } else {
    const fs::path path = output_path(opt.out);
    io::save_distribution(profile.dist, path);
    io::save_json(io::profile_sidecar(profile), sidecar_path(path));
  }
  return kExitOk;
}

int cmd_measure(const Options& opt, std::ostream& out) {
  const Distribution p = io::load_distribution(opt.in);
  const Distribution u = Distribution::uniform(p.size());
  json j{{"n", p.size()},
         {"entropy", entropy(p)},
         {"rel_entropy_uniform", bits_json(relative_entropy(p, u))},
         {"divergence_uniform", divergence_uniform(p)}};
  if (!opt.q.empty()) {
    const Distribution q = io::load_distribution(opt.q);
    j["relative_entropy"] = bits_json(relative_entropy(p, q));
    j["divergence"] = bits_json(divergence_exact(p, q));
    j["majorizes"] = majorizes(p, q);
  }
  emit(j, opt, out);
  return kExitOk;
}

int cmd_ensemble(const Options& opt, std::ostream& out) {
  const Ensemble e = opt.mode == "cyclic-from"
                         ? cyclic_ensemble(io::load_distribution(opt.in))
                         : io::load_ensemble(opt.in);
  const Distribution avg = ensemble_average(e);
  json j{{"m", e.size()},
         {"n", e.support_size()},
         {"average", avg.values()},
         {"average_uniform", is_uniform(avg, kUniformAverageTolerance)},
         {"holevo", bits_json(holevo_information(e))},
         {"divergence_information", bits_json(divergence_information(e, parse_strategy(opt.strategy)))}};
  emit(j, opt, out);
  return kExitOk;
}

Distribution source_distribution(const Options& opt) {
  if (!opt.in.empty()) return io::load_distribution(opt.in);
  if (opt.n == 0) throw InvalidArgument("need --in or --n");
  if (opt.k > 0.0) return build_profile(ExtremalParams(opt.n, opt.k)).dist;
  Rng rng(opt.seed);
  return verify::random_distribution(opt.n, rng);
}

std::vector<BoundReport> run_theorem(const Options& opt) {
  const auto tol = tolerances(opt);
  const std::string& t = opt.theorem;
  if (t == "distribution") return verify::check_distribution_theorem(opt.n, opt.k, tol);
  if (t == "ensemble") return verify::check_ensemble_theorem(opt.n, opt.k, tol);
  if (t == "ub") {
    if (!opt.in.empty()) return {verify::check_ub_theorem(io::load_ensemble(opt.in), tol)};
    if (opt.mode != "cyclic" && opt.mode != "complement-pair") {
      throw InvalidArgument("--mode must be cyclic or complement-pair");
    }
    const auto mode = opt.mode == "cyclic" ? verify::UniformAverageMode::cyclic
                                           : verify::UniformAverageMode::complement_pair;
    return {verify::check_ub_theorem(verify::random_uniform_average_ensemble(opt.n, opt.seed, mode), tol)};
  }
  if (t == "majorization") return verify::check_majorization_extremality(source_distribution(opt), tol);
  if (t == "pairs") return verify::check_pair_relations(io::load_ensemble(opt.in), tol);
  if (t == "quantum") {
    const auto qe = quantum::conjugated_cyclic_qensemble(source_distribution(opt), opt.seed);
    return {quantum::check_quantum_ub(qe, tol.slack)};
  }
  throw InvalidArgument("unknown theorem '" + t + "'");
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.all) {
    json results = json::array();
    bool ok = true;
    for (const auto& r : verify::run_acceptance_suite()) {
      ok = ok && r.pass;
      err << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " -- " << r.detail << '\n';
      results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                         {"seconds", r.seconds}});
    }
    emit(results, opt, out);
    return ok ? kExitOk : kExitVerificationFailed;
  }
  if (opt.theorem.empty()) throw InvalidArgument("verify needs --theorem or --all");
  const auto reports = run_theorem(opt);
  emit(io::to_json(reports), opt, out);
  return all_pass(reports) ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const auto rows = verify::sweep(opt.n_values, opt.k_values, tolerances(opt));
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n}, {"k", r.k}, {"s1", r.s1}, {"crossover", r.crossover},
                   {"divergence", r.divergence}, {"rel_entropy", r.rel_entropy},
                   {"f_lower", r.f_lower}, {"f_upper", r.f_upper}, {"theta_ratio", r.theta_ratio},
                   {"theorem_regime", r.theorem_regime}, {"skipped", r.skipped}});
    }
    emit(j, opt, out);
  } else if (opt.out.empty()) {
    io::write_sweep_csv(rows, out);
  } else {
    io::emit_sweep_csv(rows, output_path(opt.out));
  }
  return kExitOk;
}

int cmd_qsc(const Options& opt, std::ostream& out) {
  const auto b = verify::qsc_min_binding({opt.n_bits, opt.b});
  if (opt.format == "json") {
    emit(json{{"harry", b.harry}, {"jain", b.jain}, {"jainchi", b.jainchi}}, opt, out);
    return kExitOk;
  }
  std::ostringstream csv;
  csv << "harry,jain,jainchi\n"
      << io::format_double(b.harry) << ',' << io::format_double(b.jain) << ','
      << io::format_double(b.jainchi) << '\n';
  if (opt.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(output_path(opt.out), std::ios::binary);
    if (!(f << csv.str())) throw io::IoError("cannot write " + opt.out);
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Observational divergence and Holevo information toolkit", "divinfo"};
  app.require_subcommand(1, 1);
  auto add_out = [&](CLI::App* c) { c->add_option("--out", opt.out, "Output file (default: stdout)"); };

  auto* construct = app.add_subcommand("construct", "Build the extremal distribution for (n, k)");
  construct->add_option("--n", opt.n, "Support size")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 26));
  construct->add_option("--k", opt.k, "Divergence budget in bits")->required()->check(CLI::PositiveNumber);
  add_out(construct);

  auto* measure = app.add_subcommand("measure", "Entropy, relative entropy and divergence of a distribution");
  measure->add_option("--in", opt.in, "Distribution JSON")->required();
  measure->add_option("--q", opt.q, "Reference distribution JSON");
  add_out(measure);

  auto* ensemble = app.add_subcommand("ensemble", "Holevo and divergence information of an ensemble");
  ensemble->add_option("--in", opt.in, "Ensemble JSON (or distribution JSON with --cyclic)")->required();
  ensemble->add_flag_callback("--cyclic", [&] { opt.mode = "cyclic-from"; },
                              "Treat --in as a distribution and use its cyclic ensemble");
  ensemble->add_option("--strategy", opt.strategy, "auto | exhaustive | uniform-average");
  add_out(ensemble);

  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem checker or the acceptance suite");
  verify_cmd->add_option("--theorem", opt.theorem,
                         "distribution | ensemble | ub | majorization | pairs | quantum");
  verify_cmd->add_flag("--all", opt.all, "Run every acceptance criterion");
  verify_cmd->add_option("--n", opt.n, "Support size / dimension");
  verify_cmd->add_option("--k", opt.k, "Divergence budget in bits");
  verify_cmd->add_option("--in", opt.in, "Input distribution or ensemble JSON");
  verify_cmd->add_option("--seed", opt.seed, "Seed for generated instances");
  verify_cmd->add_option("--mode", opt.mode, "cyclic | complement-pair (theorem ub)");
  verify_cmd->add_option("--tol", opt.tol, "Inequality slack override");
  verify_cmd->add_option("--eq-tol", opt.eq_tol, "Equality tolerance override");
  add_out(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Extremal-construction statistics over an (n, k) grid");
  sweep_cmd->add_option("--n", opt.n_values, "Support sizes")->required()->delimiter(',');
  sweep_cmd->add_option("--k", opt.k_values, "Divergence budgets")->required()->delimiter(',');
  sweep_cmd->add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--tol", opt.tol, "Sandwich slack override");
  add_out(sweep_cmd);

  auto* qsc = app.add_subcommand("qsc", "Binding parameters implied by the string-commitment trade-offs");
  qsc->add_option("--n-bits", opt.n_bits, "String length n")->required()->check(CLI::PositiveNumber);
  qsc->add_option("--b", opt.b, "Concealing parameter b")->required()->check(CLI::NonNegativeNumber);
  qsc->add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  add_out(qsc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "divinfo: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(opt, out);
    if (measure->parsed()) return cmd_measure(opt, out);
    if (ensemble->parsed()) return cmd_ensemble(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(opt, out);
    if (qsc->parsed()) return cmd_qsc(opt, out);
  } catch (const std::logic_error& e) {
    // An invariant the library asserts internally did not hold.
    err << "divinfo: verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "divinfo: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace divinfo::cli
