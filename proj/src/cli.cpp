#include "ffree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ffree/adversary.hpp"
#include "ffree/alteration.hpp"
#include "ffree/density.hpp"
#include "ffree/error.hpp"
#include "ffree/exact.hpp"
#include "ffree/kernels.hpp"
#include "ffree/report_json.hpp"
#include "ffree/sampling.hpp"
#include "ffree/subiso.hpp"
#include "ffree/thresholds.hpp"

namespace ffree {

namespace {

constexpr const char* kSchemaVersion = "/1";

struct RunConfig {
  std::string command;
  std::string pattern = "triangle";
  Vertex n = 0;
  std::vector<Vertex> n_list;
  std::optional<double> p;
  std::vector<double> p_grid;
  std::uint64_t trials = kDefaultTrials;
  std::optional<double> tolerance;
  std::string seed_text = "1";
  int workers = 0;
  std::string format = "json";
  std::string out_path;
  std::uint64_t trial_index = 0;
  std::size_t family_size = 1;
  std::string family_kind = "condition";
  Vertex block = 4;

  Seed seed() const { return parse_seed(seed_text); }
  double tol(double fallback) const { return tolerance.value_or(fallback); }
};

struct Output {
  Json doc;
  std::string csv;
  int exit_code = kExitOk;
};

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

Json base_doc(const RunConfig& cfg, Json config) {
  Json doc;
  doc["schema"] = "ffree." + cfg.command + kSchemaVersion;
  config["command"] = cfg.command;
  config["workers"] = cfg.workers;
  config["format"] = cfg.format;
  doc["config"] = std::move(config);
  return doc;
}

void merge(Json& doc, const Json& fields) {
  for (const auto& [key, value] : fields.items()) doc[key] = value;
}

double resolve_p(const RunConfig& cfg, const LemmaConstants& constants) {
  return cfg.p.value_or(constants.admissible_p_max);
}

// ---------------------------------------------------------------------------
// Subcommands

Output cmd_density(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern}});
  merge(out.doc, to_json(density_gap_check(f)));
  return out;
}

Output cmd_sample(const RunConfig& cfg) {
  const double p = cfg.p.value_or(0.5);
  const LabeledGraph g = sample_gnp(cfg.n, p, cfg.seed(), cfg.trial_index);
  Output out;
  out.doc = base_doc(cfg, {{"n", cfg.n}, {"p", p}, {"seed", cfg.seed_text}, {"trial", cfg.trial_index}});
  out.doc["seed"] = cfg.seed_text;
  out.doc["edge_count"] = g.edge_count();
  out.doc["pair_index"] = kPairIndexConvention;
  out.doc["edges"] = edge_ids_json(g);
  return out;
}

Output cmd_alter(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const double p = resolve_p(cfg, lemma_constants(f, cfg.n));
  const AlterationExperiment experiment(f, cfg.n, p);
  const auto run = experiment.alter(cfg.seed(), cfg.trial_index);
  const bool f_free = !contains_copy(run.packing.altered, f);

  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern},
                           {"n", cfg.n},
                           {"p", p},
                           {"seed", cfg.seed_text},
                           {"trial", cfg.trial_index}});
  out.doc["seed"] = cfg.seed_text;
  out.doc["constants"] = to_json(experiment.constants());
  out.doc["j"] = to_pattern_string(experiment.j());
  out.doc["in_regime"] = experiment.in_regime();
  out.doc["pair_index"] = kPairIndexConvention;
  out.doc["sampled_edges"] = edge_ids_json(run.sample);
  Json copies = Json::array();
  for (const Copy& c : run.packing.copies) {
    Json ids = Json::array();
    for (const EdgeId id : c.edge_ids) ids.push_back(id.index);
    copies.push_back(std::move(ids));
  }
  out.doc["packed_copies"] = std::move(copies);
  out.doc["altered_edges"] = edge_ids_json(run.packing.altered);
  out.doc["altered_f_free"] = f_free;
  if (!f_free) out.exit_code = kExitAssertion;
  return out;
}

Output cmd_mu_sweep(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  if (cfg.p_grid.empty()) throw Error(Errc::parameter, "mu-sweep needs --p-grid");
  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern},
                           {"n", cfg.n},
                           {"p_grid", cfg.p_grid},
                           {"trials", cfg.trials},
                           {"seed", cfg.seed_text}});
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "pattern,n,p,mu_hat,ci_lo,ci_hi,trials,seed\n";
  for (const double p : cfg.p_grid) {
    const MuEstimate est = estimate_mu(cfg.n, p, f, cfg.trials, cfg.seed());
    Json row = to_json(est);
    row["seed"] = cfg.seed_text;
    rows.push_back(std::move(row));
    csv << '"' << to_pattern_string(f) << "\"," << cfg.n << ',' << csv_number(p) << ','
        << csv_number(est.mu) << ',' << csv_number(est.ci.lo) << ',' << csv_number(est.ci.hi)
        << ',' << est.trials << ',' << cfg.seed_text << '\n';
  }
  out.doc["rows"] = std::move(rows);
  out.csv = csv.str();
  return out;
}

Output cmd_pc(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const double tol = cfg.tol(kDefaultRelativeTolerance);
  const ThresholdEstimate est = estimate_pc(cfg.n, f, cfg.trials, tol, cfg.seed());
  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern},
                           {"n", cfg.n},
                           {"trials", cfg.trials},
                           {"tol", tol},
                           {"seed", cfg.seed_text}});
  merge(out.doc, to_json(est, cfg.seed_text));
  std::ostringstream csv;
  csv << "pattern,n,p,mu_hat,ci_lo,ci_hi,trials,seed\n";
  csv << '"' << to_pattern_string(f) << "\"," << cfg.n << ',' << csv_number(est.p_hat) << ','
      << csv_number(est.at_p_hat.mu) << ',' << csv_number(est.at_p_hat.ci.lo) << ','
      << csv_number(est.at_p_hat.ci.hi) << ',' << est.trials << ',' << cfg.seed_text << '\n';
  out.csv = csv.str();
  return out;
}

Output cmd_scaling(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const double tol = cfg.tol(kDefaultRelativeTolerance);
  const ScalingFit fit = scaling_fit(f, cfg.n_list, cfg.trials, tol, cfg.seed());
  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern},
                           {"n_list", cfg.n_list},
                           {"trials", cfg.trials},
                           {"tol", tol},
                           {"seed", cfg.seed_text}});
  merge(out.doc, to_json(fit, cfg.seed_text));
  std::ostringstream csv;
  csv << "pattern,n,p_hat,mu_hat,ci_lo,ci_hi,trials,seed\n";
  for (const auto& est : fit.points) {
    csv << '"' << to_pattern_string(f) << "\"," << est.n << ',' << csv_number(est.p_hat) << ','
        << csv_number(est.at_p_hat.mu) << ',' << csv_number(est.at_p_hat.ci.lo) << ','
        << csv_number(est.at_p_hat.ci.hi) << ',' << est.trials << ',' << cfg.seed_text << '\n';
  }
  out.csv = csv.str();
  return out;
}

WeightedFamily build_family(const RunConfig& cfg, Vertex n, double p, double delta) {
  if (cfg.family_kind == "condition") {
    return condition_family(n, cfg.family_size, p, delta, cfg.seed());
  }
  if (cfg.family_kind == "cliques") {
    return clique_union_family(n, cfg.family_size, cfg.block, cfg.seed());
  }
  throw Error(Errc::parameter, "unknown family kind '" + cfg.family_kind + "'");
}

Json family_json(const WeightedFamily& family) {
  Json sizes = Json::array();
  for (const auto& h : family.members) sizes.push_back(h.edge_count());
  return {{"size", family.size()}, {"edge_counts", std::move(sizes)}};
}

Output cmd_lemma2(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const double p = resolve_p(cfg, lemma_constants(f, cfg.n));
  const AlterationExperiment experiment(f, cfg.n, p);
  const double delta = experiment.constants().delta;
  const WeightedFamily family = build_family(cfg, cfg.n, p, delta);
  const auto records = kernels::run_trials_parallel(experiment, family, cfg.seed(), 0, cfg.trials);

  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern},
                           {"n", cfg.n},
                           {"p", p},
                           {"trials", cfg.trials},
                           {"seed", cfg.seed_text},
                           {"family", cfg.family_kind},
                           {"family_size", cfg.family_size}});
  out.doc["constants"] = to_json(experiment.constants());
  out.doc["j"] = to_pattern_string(experiment.j());
  out.doc["in_regime"] = experiment.in_regime();
  out.doc["family"] = family_json(family);
  out.doc["condition_sum"] = family_condition_sum(family, p, delta);
  out.doc["condition_holds"] = check_family_condition(family, p, delta);

  std::uint64_t hit_all = 0, violations = 0;
  std::vector<std::uint64_t> not_e(family.size(), 0), not_d(family.size(), 0);
  Json trials = Json::array();
  std::ostringstream csv;
  csv << "trial,hit_all,missed_weight,identity_ok,sampled_edges,packed_copies\n";
  for (const TrialRecord& rec : records) {
    hit_all += rec.hit_all ? 1 : 0;
    violations += rec.identity_ok ? 0 : 1;
    for (const HitRecord& h : rec.hits) {
      not_e[h.h_index] += h.event_e ? 0 : 1;
      not_d[h.h_index] += h.event_d ? 0 : 1;
    }
    trials.push_back(to_json(rec, cfg.seed_text));
    csv << rec.trial_index << ',' << (rec.hit_all ? 1 : 0) << ',' << csv_number(rec.missed_weight)
        << ',' << (rec.identity_ok ? 1 : 0) << ',' << rec.sampled_edges << ','
        << rec.packed_copies << '\n';
  }
  Json envelopes = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double x = static_cast<double>(family.members[i].edge_count()) * p;
    envelopes.push_back({{"h_index", i},
                         {"not_E_rate", static_cast<double>(not_e[i]) / static_cast<double>(cfg.trials)},
                         {"not_E_bound", std::exp(-x / 8.0)},
                         {"not_D_rate", static_cast<double>(not_d[i]) / static_cast<double>(cfg.trials)},
                         {"not_D_bound", std::exp(-x / (3.0 * static_cast<double>(experiment.j().edge_count())))}});
  }
  out.doc["summary"] = {{"trials", cfg.trials},
                        {"hit_all", hit_all},
                        {"identity_violations", violations},
                        {"envelopes", std::move(envelopes)}};
  out.doc["records"] = std::move(trials);
  out.csv = csv.str();
  if (violations > 0) out.exit_code = kExitAssertion;
  return out;
}

Output cmd_refute(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const LemmaConstants constants = lemma_constants(f, cfg.n);
  const double p = resolve_p(cfg, constants);
  const WeightedFamily adversary = condition_family(cfg.n, cfg.family_size, p, constants.delta, cfg.seed());
  const WeightedFamily certificate = certificate_from_adversary(adversary);
  const RefuteOutcome outcome = refute_certificate(certificate, f, cfg.n, p, cfg.trials, cfg.seed());

  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern},
                           {"n", cfg.n},
                           {"p", p},
                           {"trials", cfg.trials},
                           {"seed", cfg.seed_text},
                           {"family_size", cfg.family_size}});
  out.doc["constants"] = to_json(constants);
  out.doc["certificate"] = family_json(certificate);
  out.doc["condition_sum"] = outcome.condition_sum;
  out.doc["success"] = outcome.success;
  out.doc["trials_run"] = outcome.trials_run;
  out.doc["pair_index"] = kPairIndexConvention;
  if (outcome.escaping) {
    const LabeledGraph& g = *outcome.escaping;
    out.doc["escaping_edges"] = edge_ids_json(g);
    out.doc["escaping_f_free"] = !contains_copy(g, f);
    out.doc["escapes_every_member"] =
        std::none_of(certificate.members.begin(), certificate.members.end(),
                     [&](const LabeledGraph& s) { return g.is_subgraph_of(s); });
  } else {
    out.doc["escaping_edges"] = nullptr;
  }
  Json diagnostics = Json::array();
  for (const auto& rec : outcome.diagnostics) {
    diagnostics.push_back({{"trial", rec.trial_index},
                           {"hit_all", rec.hit_all},
                           {"missed_weight", rec.missed_weight},
                           {"identity_ok", rec.identity_ok}});
  }
  out.doc["diagnostics"] = std::move(diagnostics);
  std::ostringstream csv;
  csv << "trial,hit_all,missed_weight,identity_ok\n";
  for (const auto& rec : outcome.diagnostics) {
    csv << rec.trial_index << ',' << (rec.hit_all ? 1 : 0) << ',' << csv_number(rec.missed_weight)
        << ',' << (rec.identity_ok ? 1 : 0) << '\n';
  }
  out.csv = csv.str();
  if (!outcome.success) out.exit_code = kExitAssertion;
  return out;
}

Json search_json(const ThresholdSearch& s) {
  return {{"value", s.value},
          {"bracket", {s.lo, s.hi}},
          {"degenerate", s.degenerate},
          {"evaluations", s.evaluations}};
}

Output cmd_exact_q(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const double tol = cfg.tol(kExactDefaultTolerance);
  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern}, {"n", cfg.n}, {"tol", tol}});
  if (cfg.p) {
    const Certificate cert = min_cover_certificate(cfg.n, *cfg.p, f);
    out.doc["p"] = *cfg.p;
    out.doc["min_cover_cost"] = cert.total_weight;
    out.doc["certificate"] = to_json(cert);
    out.doc["certificate_valid"] = verify_certificate(cert, f, cfg.n);
    return out;
  }
  const ThresholdSearch q = q_exact(cfg.n, f, tol);
  const Certificate cert = min_cover_certificate(cfg.n, q.hi, f);
  out.doc["q"] = search_json(q);
  out.doc["certificate"] = to_json(cert);
  out.doc["certificate_valid"] = verify_certificate(cert, f, cfg.n);
  return out;
}

Output cmd_exact_qf(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const double tol = cfg.tol(kExactDefaultTolerance);
  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern}, {"n", cfg.n}, {"tol", tol}});
  if (cfg.p) {
    const FractionalCertificate cert = lp_min_certificate(cfg.n, *cfg.p, f);
    out.doc["p"] = *cfg.p;
    out.doc["lp_min_cost"] = cert.total_cost;
    out.doc["certificate"] = to_json(cert);
    return out;
  }
  const ThresholdSearch qf = qf_exact(cfg.n, f, tol);
  out.doc["qf"] = search_json(qf);
  out.doc["certificate"] = to_json(lp_min_certificate(cfg.n, qf.hi, f));
  return out;
}

Output cmd_gap(const RunConfig& cfg) {
  const PatternGraph f = parse_pattern(cfg.pattern);
  const double tol = cfg.tol(kExactDefaultTolerance);
  const GapReport report = gap_report(cfg.n, f, tol);
  Output out;
  out.doc = base_doc(cfg, {{"pattern", cfg.pattern}, {"n", cfg.n}, {"tol", tol}});
  merge(out.doc, to_json(report));
  if (!report.chain_holds) out.exit_code = kExitAssertion;
  return out;
}

// ---------------------------------------------------------------------------

struct Command {
  const char* name;
  const char* help;
  Output (*run)(const RunConfig&);
};

constexpr Command kCommands[] = {
    {"density", "exact m(F), m2(F) and the m2 > m check", cmd_density},
    {"sample", "one seeded G(n,p) sample", cmd_sample},
    {"alter", "one alteration run: sample, pack J-copies, delete", cmd_alter},
    {"mu-sweep", "Monte Carlo F-free probability over a p grid", cmd_mu_sweep},
    {"pc", "bisection estimate of the threshold p_c", cmd_pc},
    {"scaling", "log-log fit of p_c against n", cmd_scaling},
    {"lemma2", "alteration trials against a generated adversary family", cmd_lemma2},
    {"refute", "search for a graph escaping a generated certificate", cmd_refute},
    {"exact-q", "exact expectation threshold at tiny n", cmd_exact_q},
    {"exact-qf", "exact fractional expectation threshold at tiny n", cmd_exact_qf},
    {"gap", "exact p_c, q_f, q and the chain p_c <= q_f <= q", cmd_gap},
};

void add_options(CLI::App& sub, RunConfig& cfg, const std::string& name) {
  const bool needs_pattern = name != "sample";
  if (needs_pattern) sub.add_option("--pattern", cfg.pattern, "pattern text or preset name");
  if (name != "density") {
    if (name == "scaling") {
      sub.add_option("--n-list", cfg.n_list, "increasing vertex counts")->delimiter(',')->required();
    } else {
      sub.add_option("--n", cfg.n, "vertex count")->required()->check(CLI::PositiveNumber);
    }
  }
  if (name == "mu-sweep") {
    sub.add_option("--p-grid", cfg.p_grid, "comma-separated probabilities")->delimiter(',')->required();
  } else if (name != "density" && name != "pc" && name != "scaling" && name != "gap") {
    sub.add_option("--p", cfg.p, "edge probability (default: admissible maximum where it applies)");
  }
  if (name == "mu-sweep" || name == "pc" || name == "scaling" || name == "lemma2" || name == "refute") {
    sub.add_option("--trials", cfg.trials, "trials per probe, or trial budget")->check(CLI::PositiveNumber);
  }
  if (name == "pc" || name == "scaling" || name == "exact-q" || name == "exact-qf" || name == "gap") {
    sub.add_option("--tol", cfg.tolerance, "bisection tolerance")->check(CLI::PositiveNumber);
  }
  if (name == "sample" || name == "alter" || name == "mu-sweep" || name == "pc" || name == "scaling" ||
      name == "lemma2" || name == "refute") {
    sub.add_option("--seed", cfg.seed_text, "master seed, decimal or 0x-hex");
  }
  if (name == "sample" || name == "alter") {
    sub.add_option("--trial", cfg.trial_index, "trial index within the seed's stream");
  }
  if (name == "lemma2" || name == "refute") {
    sub.add_option("--family-size", cfg.family_size, "number of adversary graphs")->check(CLI::PositiveNumber);
  }
  if (name == "lemma2") {
    sub.add_option("--family", cfg.family_kind, "condition | cliques")
        ->check(CLI::IsMember({"condition", "cliques"}));
    sub.add_option("--block", cfg.block, "clique size for --family cliques")->check(CLI::Range(2, 1 << 20));
  }
  sub.add_option("--workers", cfg.workers, "OpenMP worker count (0: runtime default)")->check(CLI::NonNegativeNumber);
  sub.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--out", cfg.out_path, "write the result here instead of standard output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thresholds of F-free graph down-sets: densities, alteration, exact thresholds", "ffree"};
  app.require_subcommand(1);
  RunConfig cfg;
  const Command* chosen = nullptr;
  for (const Command& command : kCommands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    add_options(*sub, cfg, command.name);
    sub->callback([&cfg, &chosen, &command] {
      cfg.command = command.name;
      chosen = &command;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (chosen == nullptr) return kExitUsage;

  try {
    if (cfg.format == "csv" && (cfg.command == "density" || cfg.command == "sample" ||
                                cfg.command == "alter" || cfg.command == "exact-q" ||
                                cfg.command == "exact-qf" || cfg.command == "gap")) {
      throw Error(Errc::parameter, cfg.command + " has no CSV output");
    }
    kernels::set_workers(cfg.workers);
    const Output result = chosen->run(cfg);
    const std::string body = cfg.format == "csv" ? result.csv : result.doc.dump(2) + "\n";
    if (cfg.out_path.empty()) {
      out << body;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw Error(Errc::parameter, "cannot open --out path '" + cfg.out_path + "'");
      file << body;
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == Errc::inapplicable ? kExitAssertion : kExitUsage;
  }
}

}  // namespace ffree
