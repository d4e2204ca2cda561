// qhgerm command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qhgerm/cli.hpp"

namespace {

using namespace qhgerm;

int emit(const cli::CommandResult& r, bool json, bool batch = false) {
  if (batch) {
    std::cout << r.text;
  } else if (json) {
    std::cout << r.report.dump(2) << "\n";
  } else if (r.report.contains("error")) {
    std::cerr << r.text;
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

bool read_two_lines(const std::string& path, std::string& f, std::string& g) {
  std::ifstream in(path);
  if (!in) return false;
  return static_cast<bool>(std::getline(in, f)) && static_cast<bool>(std::getline(in, g));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-equivalence of quasihomogeneous plane curve germs", "qhgerm"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::RunConfig cfg;
  std::string mode = "auto";
  std::string weights_text;
  std::string file;
  long precision = 128;
  app.add_option("--weights", weights_text, "weights p,q (default: inferred)");
  app.add_flag("--witness", cfg.witness, "build and verify an explicit witness");
  app.add_option("--branch", cfg.branch, "scale branch in [0,d)");
  app.add_option("--mode", mode, "exact | numeric | auto")->check(CLI::IsMember({"exact", "numeric", "auto"}));
  auto* prec_opt = app.add_option("--precision", precision, "working precision in bits (>= 53)");
  app.add_option("--tol", cfg.tol, "numeric matching tolerance");
  app.add_option("--seed", cfg.seed, "seed for verification sample points");
  app.add_option("--samples", cfg.samples, "number of verification sample points");
  app.add_flag("--json", cfg.json, "emit JSON");
  app.add_option("--file", file, "read inputs from a file");

  std::string a_text, b_text;
  auto* analyze = app.add_subcommand("analyze", "weights, class, canonical form, order, height function");
  analyze->add_option("poly", a_text)->required();
  auto* decide = app.add_subcommand("decide", "decide right-equivalence of two germs");
  decide->add_option("F", a_text);
  decide->add_option("G", b_text);
  auto* roots = app.add_subcommand("roots", "ladder roots with multiplicities");
  roots->add_option("poly", a_text)->required();
  auto* whitney = app.add_subcommand("demo-whitney", "cross-ratio demo on X*Y*(Y-X)*(Y-t*X)");
  whitney->add_option("t", a_text)->required();
  whitney->add_option("s", b_text)->required();
  auto* batch = app.add_subcommand("decide-batch", "decide JSON-lines pairs from --file or stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }

  if (const char* env = std::getenv("QHGERM_PRECISION"); env != nullptr && prec_opt->count() == 0) {
    try {
      precision = std::stol(env);
    } catch (const std::exception&) {
      std::cerr << "QHGERM_PRECISION must be an integer\n";
      return cli::kUsage;
    }
  }
  if (precision < 53) {
    std::cerr << "--precision must be at least 53\n";
    return cli::kUsage;
  }
  if (!(cfg.tol > 0)) {
    std::cerr << "--tol must be positive\n";
    return cli::kUsage;
  }
  cfg.precision = precision;
  cfg.mode = mode == "exact" ? DecideMode::Exact : mode == "numeric" ? DecideMode::Numeric : DecideMode::Auto;
  if (!weights_text.empty()) {
    const auto comma = weights_text.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("comma");
      cfg.weights = std::pair{static_cast<unsigned>(std::stoul(weights_text.substr(0, comma))),
                              static_cast<unsigned>(std::stoul(weights_text.substr(comma + 1)))};
    } catch (const std::exception&) {
      std::cerr << "--weights expects p,q\n";
      return cli::kUsage;
    }
  }

  if (*analyze) return emit(cli::cmd_analyze(a_text, cfg), cfg.json);
  if (*roots) return emit(cli::cmd_roots(a_text, cfg), cfg.json);
  if (*whitney) return emit(cli::cmd_demo_whitney(a_text, b_text, cfg), cfg.json);
  if (*decide) {
    if (!file.empty()) {
      if (!read_two_lines(file, a_text, b_text)) {
        std::cerr << "--file must name a readable file with two lines (F and G)\n";
        return cli::kUsage;
      }
    } else if (decide->get_option("G")->count() == 0) {
      std::cerr << "decide needs F and G (or --file)\n";
      return cli::kUsage;
    }
    return emit(cli::cmd_decide(a_text, b_text, cfg), cfg.json);
  }
  if (*batch) {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "cannot read " << file << "\n";
        return cli::kUsage;
      }
      return emit(cli::cmd_decide_batch(in, cfg), cfg.json, true);
    }
    return emit(cli::cmd_decide_batch(std::cin, cfg), cfg.json, true);
  }
  return cli::kUsage;
}
