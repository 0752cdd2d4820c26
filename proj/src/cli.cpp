#include "qwt/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qwt/report_io.hpp"

namespace qwt {

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> items;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

Representations parse_representations(const std::string& spec) {
  Representations repr{false, false, false};
  for (const auto& token : split_list(spec)) {
    if (token == "full") {
      repr.full = true;
    } else if (token == "reduced") {
      repr.reduced = true;
    } else if (token == "analytic") {
      repr.analytic = true;
    } else {
      throw UsageError("--repr: unknown representation '" + token +
                       "' (expected full, reduced, analytic)");
    }
  }
  if (!repr.full && !repr.reduced && !repr.analytic) {
    throw UsageError("--repr: at least one representation is required");
  }
  return repr;
}

std::vector<int> parse_sweep_list(const std::string& spec) {
  std::vector<int> values;
  for (const auto& token : split_list(spec)) {
    try {
      std::size_t pos = 0;
      const int value = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      values.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("--sweep: '" + token + "' is not an integer");
    }
  }
  return values;
}

int verify_and_print(const RunConfig& cfg, std::ostream& os) {
  const auto results = run_verification(cfg.model, cfg.seed);
  bool all_passed = true;
  for (const auto& res : results) {
    char detail[96];
    std::snprintf(detail, sizeof(detail), "(measured %.3e, bound %.3e)",
                  res.measured, res.bound);
    os << (res.passed ? "PASS  " : "FAIL  ") << res.name;
    for (std::size_t pad = res.name.size(); pad < 26; ++pad) os << ' ';
    os << detail << '\n';
    all_passed = all_passed && res.passed;
  }
  return all_passed ? 0 : 1;
}

int execute(const RunConfig& cfg, std::ostream& os) {
  if (cfg.verify) {
    return verify_and_print(cfg, os);
  }
  if (!cfg.sweep_n.empty()) {
    const SweepReport report = sweep(cfg.model.family, cfg.sweep_n,
                                     cfg.model.sender, cfg.model.receiver);
    if (cfg.format == OutputFormat::Csv) {
      write_csv(os, report);
    } else {
      write_json(os, report);
    }
  } else {
    const int steps =
        cfg.steps ? *cfg.steps : 3 * transfer_time(cfg.model);
    const TransferReport report =
        run_transfer(cfg.model, steps, cfg.representations);
    if (cfg.format == OutputFormat::Csv) {
      write_csv(os, report);
    } else {
      write_json(os, report);
    }
  }
  os.flush();
  return os.good() ? 0 : 1;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Discrete-time quantum-walk state-transfer simulator"};
  app.get_formatter()->column_width(34);

  std::string model_name;
  std::string repr_spec = "full,reduced,analytic";
  std::string format_name = "csv";
  std::string sweep_spec;
  RunConfig cfg;
  int n = 0;
  int steps = -1;

  app.add_option("--model", model_name,
                 "walk family: star, complete-loops, szegedy")
      ->required();
  app.add_option("--n", n, "number of graph vertices");
  app.add_option("--sender", cfg.model.sender, "sender vertex label (1-based)")
      ->capture_default_str();
  app.add_option("--receiver", cfg.model.receiver,
                 "receiver vertex label (1-based)")
      ->capture_default_str();
  app.add_option("--steps", steps,
                 "steps to simulate (default: 3x predicted transfer time)");
  app.add_option("--repr", repr_spec,
                 "comma list of representations: full,reduced,analytic")
      ->capture_default_str();
  app.add_option("--format", format_name, "output format: csv or json")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output path, or - for stdout")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the --verify random checks")
      ->capture_default_str();
  app.add_flag("--verify", cfg.verify,
               "run the model's invariant suite and print PASS/FAIL lines");
  app.add_option("--sweep", sweep_spec,
                 "comma list of n values; runs one transfer per n");

  std::vector<const char*> argv;
  argv.push_back("qwt");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto family = family_from_name(model_name);
  if (!family) {
    throw UsageError("--model: unknown family '" + model_name +
                     "' (expected star, complete-loops, szegedy)");
  }
  cfg.model.family = *family;
  cfg.representations = parse_representations(repr_spec);

  if (format_name == "csv") {
    cfg.format = OutputFormat::Csv;
  } else if (format_name == "json") {
    cfg.format = OutputFormat::Json;
  } else {
    throw UsageError("--format: unknown format '" + format_name +
                     "' (expected csv or json)");
  }

  if (steps != -1) {
    if (steps < 0) throw UsageError("--steps: must be non-negative");
    cfg.steps = steps;
  }

  if (!sweep_spec.empty()) {
    if (cfg.verify) {
      throw UsageError("--sweep and --verify cannot be combined");
    }
    cfg.sweep_n = parse_sweep_list(sweep_spec);
    if (cfg.sweep_n.empty()) {
      throw UsageError("--sweep: the n list is empty");
    }
    int previous = 0;
    for (int value : cfg.sweep_n) {
      try {
        validate(WalkModel{cfg.model.family, value, cfg.model.sender,
                           cfg.model.receiver});
      } catch (const std::invalid_argument& e) {
        throw UsageError("--sweep: invalid n = " + std::to_string(value) +
                         " (" + e.what() + ")");
      }
      if (value <= previous) {
        throw UsageError("--sweep: n values must be strictly increasing");
      }
      previous = value;
    }
    cfg.model.n = cfg.sweep_n.front();
    return cfg;
  }

  if (app.count("--n") == 0) {
    throw UsageError("--n is required unless --sweep is given");
  }
  cfg.model.n = n;
  try {
    validate(cfg.model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid model: ") + e.what());
  }
  return cfg;
}

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  try {
    cfg = parse_args(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n'
              << "run with --help for usage\n";
    return 2;
  }

  try {
    if (cfg.out == "-") {
      return execute(cfg, std::cout);
    }
    std::ofstream file(cfg.out);
    if (!file) {
      std::cerr << "error: cannot open '" << cfg.out << "' for writing\n";
      return 1;
    }
    const int code = execute(cfg, file);
    if (code == 0 && !file.good()) {
      std::cerr << "error: write to '" << cfg.out << "' failed\n";
      return 1;
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qwt
