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

/**
 * \file lovasz/commands.hpp
 *
 * \brief Subcommands of the `lovasz` command-line tool, as plain functions
 *  from documents to documents (or reports).
 */

#ifndef LOVASZ_COMMANDS_HPP
#define LOVASZ_COMMANDS_HPP

#include <lovasz/approximation.hpp>
#include <lovasz/document.hpp>
#include <lovasz/geometry.hpp>
#include <lovasz/interaction.hpp>
#include <lovasz/rational.hpp>
#include <lovasz/set_function.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lovasz {

enum class ApproxMethod { closed, recursive, oracle };

enum class EvalForm { lovasz, multilinear };

/// Möbius coefficients of a game or Möbius document.
inline MobiusRep coefficients_of(const GameDocument& doc) {
  switch (doc.representation) {
    case Representation::game:
      return mobius_transform(to_table<game_tag>(doc));
    case Representation::mobius:
      return to_table<mobius_tag>(doc);
    case Representation::index:
      break;
  }
  throw document_error("expected a game or mobius document, got an index table");
}

inline SetFunction game_of(const GameDocument& doc) {
  return zeta_transform(coefficients_of(doc));
}

inline GameDocument cmd_mobius(const GameDocument& in) {
  if (in.representation != Representation::game)
    throw document_error("mobius expects a document with representation \"game\"");
  return from_table(mobius_transform(to_table<game_tag>(in)),
                    Representation::mobius);
}

inline GameDocument cmd_zeta(const GameDocument& in) {
  if (in.representation != Representation::mobius)
    throw document_error("zeta expects a document with representation \"mobius\"");
  return from_table(zeta_transform(to_table<mobius_tag>(in)),
                    Representation::game);
}

inline MinPolynomial approximate(const MobiusRep& a, unsigned k,
                                 ApproxMethod method) {
  switch (method) {
    case ApproxMethod::closed:
      return approx_closed_form(a, k);
    case ApproxMethod::recursive:
      return approx_recursive(a, k);
    case ApproxMethod::oracle:
      return approx_normal_equations(a, k);
  }
  throw std::invalid_argument("unknown approximation method");
}

inline GameDocument cmd_approx(const GameDocument& in, unsigned k,
                               ApproxMethod method) {
  const MobiusRep a = coefficients_of(in);
  if (k > a.n())
    throw std::out_of_range("degree " + std::to_string(k) + " out of range 0.." +
                            std::to_string(a.n()));
  return from_table(approximate(a, k, method).coefficients(),
                    Representation::mobius);
}

inline constexpr std::string_view index_kinds[] = {
    "banzhaf", "im", "shapley-power", "banzhaf-power", "im-power"};

/// Interaction kinds emit one value per coalition (or the requested one);
/// power kinds emit one value per player keyed by the singleton.
inline GameDocument cmd_index(const GameDocument& in, std::string_view kind,
                              std::optional<Subset> subset = std::nullopt) {
  const SetFunction v = game_of(in);
  const unsigned n = v.n();
  if (subset) check_subset(*subset, n);

  GameDocument out;
  out.n = n;
  out.representation = Representation::index;
  out.kind = std::string(kind);

  if (kind == "banzhaf" || kind == "im") {
    const IndexKind k = kind == "im" ? IndexKind::im : IndexKind::banzhaf;
    if (subset) {
      out.entries.emplace(*subset, k == IndexKind::im
                                       ? im_index(v, *subset)
                                       : banzhaf_interaction(v, *subset));
    } else {
      const InteractionTable table = interaction_table(v, k);
      for (Subset s = 0; s < table.values.size(); ++s)
        out.entries.emplace(s, table[s]);
    }
    return out;
  }

  Rational (*power)(const SetFunction&, unsigned) = nullptr;
  if (kind == "shapley-power")
    power = shapley_power;
  else if (kind == "banzhaf-power")
    power = banzhaf_power;
  else if (kind == "im-power")
    power = im_power;
  else
    throw std::invalid_argument("unknown index kind \"" + std::string(kind) + "\"");

  if (subset) {
    if (cardinality(*subset) != 1)
      throw std::invalid_argument("power indices take a single player");
    const unsigned player = members(*subset).front();
    out.entries.emplace(*subset, power(v, player));
  } else {
    for (unsigned i = 1; i <= n; ++i) out.entries.emplace(singleton(i), power(v, i));
  }
  return out;
}

/// Möbius document recovered from a full I_M index document.
inline GameDocument cmd_inverse(const GameDocument& in) {
  if (in.representation != Representation::index || in.kind != "im")
    throw document_error("inverse expects an index document of kind \"im\"");
  const InteractionTable table{IndexKind::im, to_table<mobius_tag>(in)};
  return from_table(im_inverse(table), Representation::mobius);
}

inline double cmd_eval(const GameDocument& in, const std::vector<double>& point,
                       EvalForm form) {
  const MobiusRep a = coefficients_of(in);
  const PointVector x(point);
  return form == EvalForm::lovasz ? eval_lovasz_minpoly(a, x)
                                  : eval_multilinear(a, x);
}

/// Value printed with 15 significant digits.
inline std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

struct CheckResult {
  std::string name;
  enum class Status { pass, fail, skipped } status = Status::pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckResult::Status::fail) return false;
    return true;
  }

  std::string to_text() const {
    std::ostringstream os;
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& c : checks) {
      const char* tag = "PASS";
      if (c.status == CheckResult::Status::fail) {
        tag = "FAIL";
        ++fail;
      } else if (c.status == CheckResult::Status::skipped) {
        tag = "SKIP";
        ++skipped;
      } else {
        ++pass;
      }
      os << tag << "  " << c.name << ": " << c.detail << "\n";
    }
    os << "summary: " << pass << " passed, " << fail << " failed, " << skipped
       << " skipped\n";
    return os.str();
  }
};

struct VerifyOptions {
  unsigned degree = 0;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
  std::size_t mc_pairs = 8;
  double z_threshold = 4.0;
  /// Added to one coefficient of the projection before the orthogonality
  /// check. Only useful as a negative control.
  std::optional<std::pair<Subset, Rational>> perturb;
};

inline constexpr unsigned verify_exact_max_players = 10;
inline constexpr unsigned verify_orthogonality_max_players = 12;

inline VerifyReport cmd_verify(const GameDocument& in, const VerifyOptions& opt) {
  using Status = CheckResult::Status;
  const MobiusRep a = coefficients_of(in);
  const unsigned n = a.n();
  const unsigned k = opt.degree;
  if (k > n)
    throw std::out_of_range("degree " + std::to_string(k) + " out of range 0.." +
                            std::to_string(n));
  if (opt.samples < 100)
    throw std::invalid_argument("--samples must be at least 100");
  if (opt.perturb && cardinality(opt.perturb->first) > k)
    throw std::invalid_argument("perturbed coalition exceeds the degree");

  VerifyReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back(
        {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    report.checks.push_back({std::move(name), Status::skipped, std::move(why)});
  };

  const MinPolynomial closed = approx_closed_form(a, k);
  add("closed form = recursive chain", closed == approx_recursive(a, k),
      "degree " + std::to_string(k));

  if (n <= normal_equations_max_players)
    add("closed form = normal equations", closed == approx_normal_equations(a, k),
        "exact Gram solve of dimension " +
            std::to_string(canonical_order(n, k).size()));
  else
    skip("closed form = normal equations",
         "n > " + std::to_string(normal_equations_max_players));

  if (n <= verify_orthogonality_max_players) {
    MobiusRep projection = closed.coefficients();
    if (opt.perturb)
      projection.set(opt.perturb->first,
                     projection[opt.perturb->first] + opt.perturb->second);
    std::vector<Rational> residual(a.size());
    for (Subset s = 0; s < a.size(); ++s) residual[s] = a[s] - projection[s];
    const MobiusRep r(n, std::move(residual));
    std::size_t nonzero = 0;
    Rational worst = 0;
    const auto basis = canonical_order(n, k);
    for (Subset t : basis) {
      const Rational ip = inner_product_with_min(r, t);
      if (ip != 0) {
        ++nonzero;
        if (abs(ip) > worst) worst = abs(ip);
      }
    }
    add("residual orthogonal to V_k", nonzero == 0,
        std::to_string(nonzero) + " of " + std::to_string(basis.size()) +
            " inner products nonzero, max |<r,min_T>| = " + to_string(worst));
  } else {
    skip("residual orthogonal to V_k",
         "n > " + std::to_string(verify_orthogonality_max_players));
  }

  {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<Subset> pick(0, full_set(n));
    double worst_z = 0.0;
    std::string worst_pair;
    bool ok = true;
    for (std::size_t p = 0; p < opt.mc_pairs; ++p) {
      const Subset s = pick(rng);
      const Subset t = pick(rng);
      const McEstimate est = mc_inner_product(s, t, n, opt.samples, opt.seed + 1 + p);
      const double exact = to_real<double>(inner_product_min(s, t, n));
      double z = 0.0;
      if (est.std_error > 0)
        z = std::abs(est.mean - exact) / est.std_error;
      else if (std::abs(est.mean - exact) > 1e-12)
        z = INFINITY;
      if (z > opt.z_threshold) ok = false;
      if (p == 0 || z > worst_z) {
        worst_z = z;
        worst_pair = "{" + subset_key(s) + "},{" + subset_key(t) + "}";
      }
    }
    add("Monte Carlo inner products", ok,
        std::to_string(opt.mc_pairs) + " pairs x " + std::to_string(opt.samples) +
            " samples, max |z| = " + format_value(worst_z) + " at " + worst_pair);
  }

  if (n <= verify_exact_max_players) {
    const SetFunction v = zeta_transform(a);
    const auto bz = interaction_table(v, IndexKind::banzhaf, IndexForm::mobius);
    add("Banzhaf interaction dual forms",
        bz.values ==
            interaction_table(v, IndexKind::banzhaf, IndexForm::derivative).values,
        "Möbius and derivative sums over all coalitions");
    const auto im = interaction_table(v, IndexKind::im, IndexForm::mobius);
    add("I_M dual forms",
        im.values == interaction_table(v, IndexKind::im, IndexForm::derivative).values,
        "Möbius and derivative sums over all coalitions");

    bool leading = true;
    for (unsigned s = 0; s <= n && leading; ++s) {
      const MinPolynomial as = approx_closed_form(a, s);
      for (Subset c : canonical_order(n, s))
        if (cardinality(c) == s && as[c] != im[c]) leading = false;
    }
    add("I_M = leading approximation coefficients", leading, "all coalitions");
    add("I_M inverse transform", im_inverse(im) == a, "recovers the Möbius table");
  } else {
    skip("index identities", "n > " + std::to_string(verify_exact_max_players));
  }
  return report;
}

}  // namespace lovasz

#endif  // LOVASZ_COMMANDS_HPP
