// Copyright 2026 The lovasz-approx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: exact Möbius/zeta transforms, best min-polynomial
// approximations, interaction indices, evaluation and self-verification.
//
// Exit status: 0 on success, 1 when `verify` finds a failing check, 2 on
// malformed input or invalid arguments.

#include <lovasz/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_bad_input = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lovasz::document_error("cannot open input file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid coordinate \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("invalid coordinate \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

// "KEY=DELTA", e.g. "1,2=1/100".
std::pair<lovasz::Subset, lovasz::Rational> parse_perturbation(
    const std::string& text, unsigned n) {
  const auto eq = text.rfind('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("--debug-perturb expects KEY=DELTA");
  return {lovasz::parse_subset_key(text.substr(0, eq), n),
          lovasz::parse_rational(text.substr(eq + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Least-squares min-polynomial approximation of Lovász extensions and "
      "the interaction indices they induce"};
  app.require_subcommand(1);

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Input document (JSON); stdin if omitted");
  };

  auto* mobius = app.add_subcommand("mobius", "Game values -> Möbius coefficients");
  add_input(mobius);
  auto* zeta = app.add_subcommand("zeta", "Möbius coefficients -> game values");
  add_input(zeta);

  unsigned degree = 0;
  std::string method = "closed";
  auto* approx = app.add_subcommand("approx", "Best degree-k min-polynomial approximation");
  add_input(approx);
  approx->add_option("--degree", degree, "Degree bound k")->required();
  approx->add_option("--method", method, "closed | recursive | oracle")
      ->check(CLI::IsMember({"closed", "recursive", "oracle"}));

  std::string kind;
  std::string subset_text;
  auto* index = app.add_subcommand("index", "Power and interaction indices");
  add_input(index);
  index->add_option("--kind", kind, "banzhaf | im | shapley-power | banzhaf-power | im-power")
      ->required()
      ->check(CLI::IsMember({"banzhaf", "im", "shapley-power", "banzhaf-power", "im-power"}));
  auto* subset_opt = index->add_option("--subset", subset_text,
                                       "Single coalition, e.g. \"1,3\"; full table if omitted");

  auto* inverse = app.add_subcommand("inverse", "I_M index table -> Möbius coefficients");
  add_input(inverse);

  std::string point_text;
  std::string form = "lovasz";
  auto* eval = app.add_subcommand("eval", "Evaluate at a point of [0,1]^n");
  add_input(eval);
  eval->add_option("--point", point_text, "Comma-separated coordinates")->required();
  eval->add_option("--form", form, "lovasz | multilinear")
      ->check(CLI::IsMember({"lovasz", "multilinear"}));

  lovasz::VerifyOptions verify_opt;
  std::string perturb_text;
  auto* verify = app.add_subcommand("verify", "Run the exact and statistical self-checks");
  add_input(verify);
  verify->add_option("--degree", verify_opt.degree, "Degree bound k")->required();
  verify->add_option("--samples", verify_opt.samples, "Monte Carlo samples per pair");
  verify->add_option("--seed", verify_opt.seed, "Seed for all randomness");
  auto* perturb_opt = verify->add_option(
      "--debug-perturb", perturb_text,
      "Negative control: add DELTA to the projection coefficient of KEY (\"KEY=DELTA\")");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_input;
  }

  try {
    const lovasz::GameDocument doc = lovasz::parse_document(read_input(input));

    if (*mobius) {
      std::cout << lovasz::format_document(lovasz::cmd_mobius(doc));
    } else if (*zeta) {
      std::cout << lovasz::format_document(lovasz::cmd_zeta(doc));
    } else if (*approx) {
      const std::map<std::string, lovasz::ApproxMethod> methods = {
          {"closed", lovasz::ApproxMethod::closed},
          {"recursive", lovasz::ApproxMethod::recursive},
          {"oracle", lovasz::ApproxMethod::oracle}};
      std::cout << lovasz::format_document(
          lovasz::cmd_approx(doc, degree, methods.at(method)));
    } else if (*index) {
      std::optional<lovasz::Subset> subset;
      if (*subset_opt) subset = lovasz::parse_subset_key(subset_text, doc.n);
      std::cout << lovasz::format_document(lovasz::cmd_index(doc, kind, subset));
    } else if (*inverse) {
      std::cout << lovasz::format_document(lovasz::cmd_inverse(doc));
    } else if (*eval) {
      const auto f = form == "lovasz" ? lovasz::EvalForm::lovasz
                                      : lovasz::EvalForm::multilinear;
      std::cout << lovasz::format_value(lovasz::cmd_eval(doc, parse_point(point_text), f))
                << "\n";
    } else if (*verify) {
      if (*perturb_opt) verify_opt.perturb = parse_perturbation(perturb_text, doc.n);
      const lovasz::VerifyReport report = lovasz::cmd_verify(doc, verify_opt);
      std::cout << report.to_text();
      return report.passed() ? exit_ok : exit_verify_failed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
  return exit_ok;
}
