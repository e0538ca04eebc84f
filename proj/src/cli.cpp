#include "hl/cli.hpp"
#include "hl/constants.hpp"
#include "hl/experiments.hpp"
#include "hl/exponents.hpp"
#include "hl/form_io.hpp"
#include "hl/parallel.hpp"
#include "hl/report_io.hpp"
#include "hl/special_functions.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace hl::cli {

namespace {

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(std::string const &text)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int const v = std::stoi(item, &used);
      if (used != item.size()) {
        throw UsageError("bad integer '" + item + "'");
      }
      out.push_back(v);
    } catch (std::logic_error const &) {
      throw UsageError("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) {
    throw UsageError("empty integer list");
  }
  return out;
}

ExtendedReal parse_p(std::string const &text)
{
  try {
    return ExtendedReal::parse(text);
  } catch (std::invalid_argument const &e) {
    throw UsageError("cannot parse p = '" + text + "': " + e.what());
  }
}

struct Common
{
  std::string format = "table";
};

void add_format(CLI::App *cmd, Common &common)
{
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
}

std::string const kSummaryPrefix = "# ";

// Emits rows plus summary key/values; table and csv put the summary in
// '#'-prefixed lines, json nests both under one object.
void emit(std::ostream &out, OutputFormat format, std::vector<Record> const &rows, Record const &summary,
          std::string const &rows_key)
{
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j[rows_key] = to_json(rows);
    j["summary"] = to_json(summary);
    out << j.dump(2) << '\n';
    return;
  }
  write_records(out, rows, format);
  for (auto const &[key, value] : summary.fields) {
    out << kSummaryPrefix << key << " = " << cell_string(value) << '\n';
  }
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Hardy-Littlewood constants, exponent ladders and empirical checks for m-linear forms"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  int threads = default_thread_count();
  app.add_option("--threads", threads, "Worker threads (default from HLBOUNDS_THREADS)")->check(CLI::PositiveNumber);

  std::function<int()> action;

  // constants
  int c_m = 2;
  std::string c_p = "inf";
  std::string c_field = "real";
  double c_kappa = 1.0;
  auto *constants = app.add_subcommand("constants", "Closed-form bounds for one (m, p, field)");
  constants->add_option("--m", c_m, "Order of the forms")->required();
  constants->add_option("--p", c_p, "p as integer, a/b, decimal or inf")->required();
  constants->add_option("--field", c_field, "real|complex")->check(CLI::IsMember({"real", "complex"}));
  constants->add_option("--kappa", c_kappa, "Envelope constant")->check(CLI::PositiveNumber);
  add_format(constants, common);
  constants->callback([&] {
    action = [&] {
      auto const p = parse_p(c_p);
      auto const report = bound_report(c_m, p, parse_field(c_field), c_kappa);
      write_records(out, {to_record(report)}, parse_output_format(common.format));
      return kExitOk;
    };
  });

  // exponents
  int e_m = 2;
  std::string e_p = "inf";
  auto *exponents = app.add_subcommand("exponents", "Exact exponent ladder for one (m, p)");
  exponents->add_option("--m", e_m, "Order of the forms")->required();
  exponents->add_option("--p", e_p, "p as integer, a/b, decimal or inf")->required();
  add_format(exponents, common);
  exponents->callback([&] {
    action = [&] {
      HLParams params{e_m, parse_p(e_p), Field::Real};
      auto const ladder = build_ladder(params);
      auto const check = check_interpolation(ladder, e_m);
      auto const identities = check_ladder_identities(ladder);
      Record summary;
      summary.add("interpolation", std::string(check ? "ok" : "FAILED"));
      summary.add("identities", std::string(identities ? "ok" : "FAILED"));
      emit(out, parse_output_format(common.format), {to_record(ladder)}, summary, "ladder");
      for (auto const &f : check.failures) {
        err << "interpolation: " << f << '\n';
      }
      for (auto const &f : identities.failures) {
        err << "identity: " << f << '\n';
      }
      return check && identities ? kExitOk : kExitViolation;
    };
  });

  // verify / sweep share the experiment flags
  struct ExperimentFlags
  {
    int m = 2;
    std::string p = "inf";
    std::string field = "real";
    std::string n = "2";
    int trials = 30;
    std::string dist = "rademacher";
    std::uint64_t seed = kDefaultSeed;
    int restarts = 64;
    int max_iters = 500;
  };
  auto add_experiment_flags = [&](CLI::App *cmd, ExperimentFlags &f) {
    cmd->add_option("--m", f.m, "Order of the forms")->required();
    cmd->add_option("--p", f.p, "p as integer, a/b, decimal or inf")->required();
    cmd->add_option("--field", f.field, "real|complex")->check(CLI::IsMember({"real", "complex"}));
    cmd->add_option("--n", f.n, "Dimension or comma-separated increasing list");
    cmd->add_option("--trials", f.trials, "Random forms per dimension");
    cmd->add_option("--dist", f.dist, "rademacher|gaussian")->check(CLI::IsMember({"rademacher", "gaussian"}));
    cmd->add_option("--seed", f.seed, fmt::format("Base seed (default {})", kDefaultSeed));
    cmd->add_option("--restarts", f.restarts, "Ascent restarts when no exact oracle applies")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", f.max_iters, "Ascent sweeps per restart")->check(CLI::PositiveNumber);
    add_format(cmd, common);
  };
  auto make_config = [&](ExperimentFlags const &f) {
    if (f.trials < 1) {
      throw UsageError("--trials must be >= 1");
    }
    ExperimentConfig config;
    config.params = HLParams{f.m, parse_p(f.p), parse_field(f.field)};
    config.n_values = parse_int_list(f.n);
    config.trials = f.trials;
    config.distribution = parse_distribution(f.dist);
    config.seed = f.seed;
    config.norm.ascent.restarts = f.restarts;
    config.norm.ascent.max_iters = f.max_iters;
    config.threads = threads;
    config.validate();
    return config;
  };

  ExperimentFlags v_flags;
  auto *verify = app.add_subcommand("verify", "Check hl_ratio <= bound on random forms");
  add_experiment_flags(verify, v_flags);
  verify->callback([&] {
    action = [&] {
      auto const config = make_config(v_flags);
      auto const result = search_lower_bound(config);
      std::vector<Record> rows;
      for (auto const &t : result.log) {
        rows.push_back(to_record(t));
      }
      std::string verdict = "PASS";
      int code = kExitOk;
      if (result.violations > 0) {
        verdict = "VIOLATION";
        code = kExitViolation;
      } else if (result.flags > 0) {
        verdict = "FLAG";
        code = kExitFlag;
      }
      Record summary;
      summary.add("seed", config.seed);
      summary.add("max_ratio", result.best.result.ratio);
      summary.add("bound", result.best.bound);
      summary.add("best_n", std::int64_t{result.best.n});
      summary.add("best_form_seed", result.best.form_seed);
      summary.add("flags", std::int64_t{result.flags});
      summary.add("violations", std::int64_t{result.violations});
      summary.add("verdict", verdict);
      auto const format = parse_output_format(common.format);
      emit(out, format, rows, summary, "trials");
      if (format != OutputFormat::Json) {
        out << fmt::format("max_ratio {:.9g} <= bound {:.9g}: {}\n", result.best.result.ratio, result.best.bound,
                           verdict);
      }
      return code;
    };
  });

  ExperimentFlags s_flags;
  s_flags.n = "4,8,16,32,64";
  s_flags.restarts = 32;
  double s_r = 0;
  auto *sweep = app.add_subcommand("sweep", "Exponent-optimality sweep: mixed_norm(T, r)/||T|| across n");
  add_experiment_flags(sweep, s_flags);
  sweep->add_option("--r", s_r, "Exponent r with 1 <= r <= rho")->required();
  sweep->callback([&] {
    action = [&] {
      auto const config = make_config(s_flags);
      auto const rows = exponent_optimality_sweep(config, s_r);
      std::vector<Record> records;
      bool increasing = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        records.push_back(to_record(rows[i]));
        if (i > 0 && !(rows[i].median_ratio > rows[i - 1].median_ratio)) {
          increasing = false;
        }
      }
      Record summary;
      summary.add("seed", config.seed);
      summary.add("rho", hl_exponent(config.params.m, config.params.p));
      summary.add("median_strictly_increasing", increasing);
      emit(out, parse_output_format(common.format), records, summary, "rows");
      return kExitOk;
    };
  });

  std::string g_rule = "square";
  std::string g_p = "inf";
  std::string g_c = "2";
  std::string g_field = "real";
  int g_m_min = 2;
  int g_m_max = 100;
  auto *growth = app.add_subcommand("growth", "Closed-form bound growth along p = rule(m)");
  growth->add_option("--rule", g_rule, "fixed|square|linear")->check(CLI::IsMember({"fixed", "square", "linear"}));
  growth->add_option("--p", g_p, "fixed rule: p value, or '<c>m' to tie p to m");
  growth->add_option("--c", g_c, "linear rule: p = c*m");
  growth->add_option("--field", g_field, "real|complex")->check(CLI::IsMember({"real", "complex"}));
  growth->add_option("--m-min", g_m_min, "Smallest m");
  growth->add_option("--m-max", g_m_max, "Largest m");
  add_format(growth, common);
  growth->callback([&] {
    action = [&] {
      PRule rule = PRule::square();
      auto parse_c = [](std::string const &text) {
        auto const c = parse_p(text);
        if (c.is_infinite()) {
          throw UsageError("c must be finite");
        }
        return c.rational();
      };
      if (g_rule == "linear") {
        rule = PRule::linear(parse_c(g_c));
      } else if (g_rule == "fixed") {
        if (!g_p.empty() && g_p.back() == 'm') {
          std::string const coeff = g_p.substr(0, g_p.size() - 1);
          rule = PRule::linear(coeff.empty() ? Rational(1) : parse_c(coeff));
        } else {
          rule = PRule::fixed(parse_p(g_p));
        }
      }
      auto const study = growth_study(g_m_min, g_m_max, rule, parse_field(g_field));
      std::vector<Record> rows;
      for (auto const &row : study.rows) {
        rows.push_back(to_record(row));
      }
      Record summary;
      summary.add("rule", rule.describe());
      summary.add("fit_m_min", std::int64_t{study.fit_m_min});
      summary.add("fit_m_max", std::int64_t{study.fit_m_max});
      summary.add("log2_linear_slope", study.log2_linear_slope);
      summary.add("loglog_slope", study.loglog_slope);
      emit(out, parse_output_format(common.format), rows, summary, "rows");
      return kExitOk;
    };
  });

  std::string r_form;
  std::string r_p = "inf";
  int r_restarts = 64;
  std::uint64_t r_seed = kDefaultSeed;
  auto *ratio = app.add_subcommand("ratio", "hl_ratio of a form stored in an hlform file");
  ratio->add_option("--form", r_form, "Path to an hlform file")->required();
  ratio->add_option("--p", r_p, "p as integer, a/b, decimal or inf")->required();
  ratio->add_option("--restarts", r_restarts, "Ascent restarts")->check(CLI::PositiveNumber);
  ratio->add_option("--seed", r_seed, "Ascent seed");
  add_format(ratio, common);
  ratio->callback([&] {
    action = [&] {
      auto const form = load_form(r_form);
      int const m = std::visit([](auto const &T) { return T.order(); }, form);
      HLParams const params{m, parse_p(r_p), field_of_form(form)};
      NormOptions opts;
      opts.ascent.restarts = r_restarts;
      opts.ascent.seed = r_seed;
      opts.ascent.threads = threads;
      auto const result = std::visit([&](auto const &T) { return hl_ratio(T, params, opts); }, form);
      TrialRecord rec;
      rec.n = std::visit([](auto const &T) { return T.dim(); }, form);
      rec.exponent = hl_exponent(params.m, params.p);
      rec.bound = hl_upper_bound(params.m, params.p, params.field);
      rec.result = result;
      bool const above = result.ratio > rec.bound * (1.0 + 1e-6);
      rec.status = !above ? Soundness::Pass
                          : (result.oracle == NormOracle::AlternatingAscent ? Soundness::Flag : Soundness::Violation);
      write_records(out, {to_record(rec)}, parse_output_format(common.format));
      if (rec.status == Soundness::Flag) {
        return kExitFlag;
      }
      return rec.status == Soundness::Violation ? kExitViolation : kExitOk;
    };
  });

  std::string f_dist = "rademacher";
  int f_m = 2;
  int f_n = 2;
  std::string f_field = "real";
  std::uint64_t f_seed = kDefaultSeed;
  std::string f_out;
  auto *random = app.add_subcommand("random-form", "Write a random form in hlform format");
  random->add_option("--dist", f_dist, "rademacher|gaussian")->check(CLI::IsMember({"rademacher", "gaussian"}));
  random->add_option("--m", f_m, "Order")->required();
  random->add_option("--n", f_n, "Dimension")->required();
  random->add_option("--field", f_field, "real|complex")->check(CLI::IsMember({"real", "complex"}));
  random->add_option("--seed", f_seed, "Seed");
  random->add_option("--out", f_out, "Output path (stdout when omitted)");
  random->callback([&] {
    action = [&] {
      auto const form = random_form(parse_distribution(f_dist), f_m, f_n, parse_field(f_field), f_seed);
      if (f_out.empty()) {
        write_form(out, form);
      } else {
        save_form(f_out, form);
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (UsageError const &e) {
    err << "error: " << e.what() << '\n';
  } catch (DomainError const &e) {
    err << "error: " << e.what() << '\n';
  } catch (SizeGuardError const &e) {
    err << "error: " << e.what() << '\n';
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

} // namespace hl::cli
