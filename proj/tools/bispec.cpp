// Copyright 2026 The bispec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bispec/constraints.hpp"
#include "bispec/format.hpp"
#include "bispec/parallel.hpp"
#include "bispec/verify.hpp"

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct ShowArgs {
  std::string kind;
  std::string family;
  int n = 0;
  int order = 16;
  std::string alpha = "1";
  std::string beta = "1";
  bool json = false;
};

struct VerifyArgs {
  std::string suite = "all";
  int n_max = 40;
  int order = 60;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
};

struct ParamsArgs {
  std::string family;
  std::string window;
  int order = 60;
  bool json = false;
  std::string out;
};

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw bispec::Error("cannot open output file: " + out_file);
  f << text;
}

int run_show(const ShowArgs& args) {
  using namespace bispec;
  if (args.n < 0 || args.order < 0 || args.order > 512) {
    std::cerr << "show: need n >= 0 and 0 <= order <= 512\n";
    return kExitUsage;
  }
  if (args.kind == "poly") {
    const FamilyId f = family_from_name(args.family);
    const Polynomial p =
        f == FamilyId::Hermite ? hermite_poly(args.n) : wronskian_eigen_poly(f, args.n);
    std::cout << (args.json ? to_json(p).dump(2) : to_string(p)) << "\n";
    return 0;
  }
  if (args.kind == "op") {
    const DiffOperator op = family_operator(family_from_name(args.family));
    std::cout << (args.json ? to_json(op).dump(2) : to_string(op)) << "\n";
    return 0;
  }
  if (args.kind == "series") {
    TruncatedSeries s = TruncatedSeries::zero(args.order);
    if (args.family == "hermite-psi") {
      s = psi_family(args.n, args.order);
    } else {
      const FamilyId f = family_from_name(args.family);
      s = series_family(f, args.n, Rational::from_string(args.alpha),
                        Rational::from_string(args.beta), args.order)
              .series;
    }
    std::cout << (args.json ? to_json(s).dump(2) : to_string(s)) << "\n";
    return 0;
  }
  std::cerr << "show: unknown kind '" << args.kind << "' (poly | op | series)\n";
  return kExitUsage;
}

int run_verify_cmd(const VerifyArgs& args) {
  using namespace bispec;
  if (args.n_max < 1 || args.order < 20 || args.n_max > 512 || args.order > 512) {
    std::cerr << "verify: need 1 <= nMax <= 512 and 20 <= order <= 512\n";
    return kExitUsage;
  }
  const auto& names = all_suite_names();
  if (args.suite != "all" &&
      std::find(names.begin(), names.end(), args.suite) == names.end()) {
    std::cerr << "verify: unknown suite '" << args.suite << "'\n";
    return kExitUsage;
  }
  VerifyOptions opts;
  opts.n_max = args.n_max;
  opts.order = args.order;
  opts.seed = args.seed;
  opts.threads = sweep_threads_from_env();
  const VerificationReport report = run_verify(args.suite, opts);
  if (args.json) {
    emit(report.to_json().dump(2) + "\n", args.out);
  } else {
    std::ostringstream text;
    report.render_text(text);
    emit(text.str(), args.out);
  }
  return report.failed() == 0 ? 0 : kExitVerificationFailed;
}

int run_params(const ParamsArgs& args) {
  using namespace bispec;
  const auto dots = args.window.find("..");
  if (dots == std::string::npos) {
    std::cerr << "params: window must look like 3..5\n";
    return kExitUsage;
  }
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(args.window.substr(0, dots));
    hi = std::stoi(args.window.substr(dots + 2));
  } catch (const std::exception&) {
    std::cerr << "params: window must look like 3..5\n";
    return kExitUsage;
  }
  if (lo < 0 || hi < lo || hi > 64 || args.order < 20 || args.order > 512) {
    std::cerr << "params: need 0 <= lo <= hi <= 64 and 20 <= order <= 512\n";
    return kExitUsage;
  }
  const FamilyId f = family_from_name(args.family);
  const ConstraintSet set = solve_free_params(f, builtin_recursion(f), lo, hi, args.order);
  if (args.json)
    emit(to_json(set).dump(2) + "\n", args.out);
  else
    emit(set.render() + "\n", args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the Hermite operator, its Darboux transforms, and their "
               "bispectral eigenfunction families"};
  app.require_subcommand(1);

  ShowArgs show_args;
  CLI::App* show = app.add_subcommand("show", "print an operator, polynomial, or series");
  show->add_option("kind", show_args.kind, "poly | op | series")->required();
  show->add_option("--family", show_args.family,
                   "hermite | one-gap | two-gap (series also: hermite-psi)")
      ->required();
  show->add_option("--n", show_args.n, "family index");
  show->add_option("--order", show_args.order, "series truncation order");
  show->add_option("--alpha", show_args.alpha, "even-part coefficient (series)");
  show->add_option("--beta", show_args.beta, "odd-part coefficient (series)");
  show->add_flag("--json", show_args.json, "machine-readable output");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", verify_args.suite,
                     "all | factorization | intertwine | eigen | recursion | params | hyp | "
                     "gauge | adcond | oracle");
  verify->add_option("--nMax", verify_args.n_max, "largest family index (default 40)");
  verify->add_option("--order", verify_args.order, "series truncation order (default 60)");
  verify->add_option("--seed", verify_args.seed, "seed for the documented LCG (default 0)");
  verify->add_flag("--json", verify_args.json, "machine-readable report");
  verify->add_option("--out", verify_args.out, "write the report to a file");

  ParamsArgs params_args;
  CLI::App* params = app.add_subcommand("params", "solve for free-parameter constraints");
  params->add_option("--family", params_args.family, "hermite | one-gap | two-gap")->required();
  params->add_option("--window", params_args.window, "recursion-row window, e.g. 3..5")
      ->required();
  params->add_option("--order", params_args.order, "series truncation order (default 60)");
  params->add_flag("--json", params_args.json, "machine-readable output");
  params->add_option("--out", params_args.out, "write the output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return kExitUsage;
  }

  try {
    if (show->parsed()) return run_show(show_args);
    if (verify->parsed()) return run_verify_cmd(verify_args);
    if (params->parsed()) return run_params(params_args);
  } catch (const bispec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
