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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. The optional first argument is the path of the
// `lovasz` executable, used by the negative-control criterion.

#include <lovasz/commands.hpp>
#include <lovasz/lovasz.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "../test_support.hpp"

namespace {

using namespace lovasz;
using testing::R;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double max_seconds;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

struct CorpusItem {
  MobiusRep a;
};

// 20 random rational Möbius inputs at each n in {2,...,6}.
const std::vector<CorpusItem>& corpus() {
  static const std::vector<CorpusItem> items = [] {
    std::vector<CorpusItem> out;
    std::mt19937_64 rng(20260101);
    for (unsigned n = 2; n <= 6; ++n)
      for (int i = 0; i < 20; ++i) out.push_back({testing::random_mobius(n, rng)});
    return out;
  }();
  return items;
}

Outcome worked_example() {
  const MobiusRep a = testing::worked_example();
  Outcome o;
  auto expect = [&](const MinPolynomial& p, Subset s, const Rational& want) {
    if (p[s] != want) {
      o.ok = false;
      o.detail += "k=" + std::to_string(p.degree()) + " S={" + subset_key(s) + "}: got " +
                  to_string(p[s]) + ", want " + to_string(want) + "; ";
    }
  };
  const MinPolynomial a0 = approx_closed_form(a, 0);
  const MinPolynomial a1 = approx_closed_form(a, 1);
  const MinPolynomial a2 = approx_closed_form(a, 2);
  expect(a0, empty_set, R(137, 250));
  expect(a1, empty_set, R(1, 100));
  expect(a2, empty_set, R(-27, 700));
  for (unsigned i = 1; i <= 3; ++i) {
    expect(a1, singleton(i), R(89, 250));
    expect(a2, singleton(i), R(803, 1750));
    expect(a2, singleton(i) | singleton(4), R(2, 175));
  }
  expect(a1, singleton(4), R(1, 125));
  expect(a2, singleton(4), R(-8, 875));
  for (Subset pair : {make_subset({1, 2}), make_subset({1, 3}), make_subset({2, 3})})
    expect(a2, pair, R(-19, 175));
  // No stray terms beyond the listed ones.
  std::size_t nonzero = 0;
  for (const auto& [s, c] : a2.terms()) nonzero += c != 0;
  if (nonzero != 1 + 4 + 6) {
    o.ok = false;
    o.detail += "degree-2 result has " + std::to_string(nonzero) + " nonzero terms; ";
  }
  if (o.ok) o.detail = "k=0,1,2 reproduced exactly";
  return o;
}

Outcome oracle_equivalence() {
  std::size_t cases = 0;
  for (const auto& item : corpus())
    for (unsigned k = 0; k <= item.a.n(); ++k) {
      const MinPolynomial closed = approx_closed_form(item.a, k);
      if (closed != approx_recursive(item.a, k))
        return {false, "recursive chain differs at n=" + std::to_string(item.a.n()) +
                           " k=" + std::to_string(k)};
      if (closed != approx_normal_equations(item.a, k))
        return {false, "normal equations differ at n=" + std::to_string(item.a.n()) +
                           " k=" + std::to_string(k)};
      ++cases;
    }
  return {true, std::to_string(cases) + " (input, k) cases identical across 3 methods"};
}

Outcome orthogonality() {
  std::size_t products = 0;
  for (const auto& item : corpus()) {
    const unsigned n = item.a.n();
    for (unsigned k = 0; k <= n; ++k) {
      const MobiusRep proj = approx_closed_form(item.a, k).coefficients();
      MobiusRep residual(n);
      for (Subset s = 0; s < residual.size(); ++s) residual.set(s, item.a[s] - proj[s]);
      for (Subset t : canonical_order(n, k)) {
        if (inner_product_with_min(residual, t) != 0)
          return {false, "nonzero <r, min_T> at n=" + std::to_string(n) + " k=" +
                             std::to_string(k) + " T={" + subset_key(t) + "}"};
        ++products;
      }
    }
  }
  return {true, std::to_string(products) + " inner products exactly 0"};
}

Outcome monte_carlo() {
  constexpr int cases = 50;
  constexpr int required = 48;
  constexpr std::uint64_t samples = 100000;
  constexpr double max_z = 4.0;
  std::mt19937_64 rng(777);
  int within = 0;
  double worst = 0.0;
  for (int c = 0; c < cases; ++c) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
    const Subset s = static_cast<Subset>(rng() % lattice_size(n));
    const Subset t = static_cast<Subset>(rng() % lattice_size(n));
    const McEstimate est = mc_inner_product(s, t, n, samples, 5000 + c);
    const double exact = to_real<double>(inner_product_min(s, t, n));
    const double err = std::abs(est.mean - exact);
    const bool ok = est.std_error > 0 ? err <= max_z * est.std_error : err <= 1e-12;
    if (est.std_error > 0) worst = std::max(worst, err / est.std_error);
    within += ok;
  }
  return {within >= required, std::to_string(within) + "/" + std::to_string(cases) +
                                  " within 4 standard errors (need " +
                                  std::to_string(required) + "), max |z| = " +
                                  format_value(worst)};
}

Outcome index_identities() {
  std::size_t checked = 0;
  for (const auto& item : corpus()) {
    const SetFunction v = zeta_transform(item.a);
    const unsigned n = item.a.n();
    const auto banzhaf = interaction_table(v, IndexKind::banzhaf);
    const auto im = interaction_table(v, IndexKind::im);
    for (unsigned k = 0; k <= n; ++k) {
      const MultilinearPolynomial hh = hammer_holzman(item.a, k);
      const MinPolynomial lov = approx_closed_form(item.a, k);
      for (Subset s : canonical_order(n, k)) {
        if (cardinality(s) != k) continue;
        if (banzhaf[s] != hh[s] || banzhaf_interaction(v, s) != hh[s])
          return {false, "Banzhaf mismatch at n=" + std::to_string(n) + " S={" +
                             subset_key(s) + "}"};
        if (im[s] != lov[s] || im_index(v, s) != lov[s])
          return {false, "I_M mismatch at n=" + std::to_string(n) + " S={" +
                             subset_key(s) + "}"};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " coalitions, both identities exact"};
}

Outcome dual_forms_and_inverse() {
  std::mt19937_64 rng(4242);
  std::size_t games = 0;
  for (unsigned n = 0; n <= 7; ++n)
    for (int i = 0; i < 5; ++i) {
      const SetFunction v = testing::random_game(n, rng);
      for (IndexKind kind : {IndexKind::banzhaf, IndexKind::im})
        if (interaction_table(v, kind, IndexForm::mobius).values !=
            interaction_table(v, kind, IndexForm::derivative).values)
          return {false, std::string(to_string(kind)) + " forms differ at n=" +
                             std::to_string(n)};
      if (im_inverse(interaction_table(v, IndexKind::im)) != mobius_transform(v))
        return {false, "im_inverse is not a left inverse at n=" + std::to_string(n)};
      ++games;
    }
  return {true, std::to_string(games) + " games n<=7: dual forms equal, inverse exact"};
}

Outcome coefficient_laws() {
  std::size_t checks = 0;
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned s = 0; s <= n; ++s) {
      if (q_coefficient(s, n) != p_coefficient(s, n - s, n))
        return {false, "q != p at s=" + std::to_string(s) + " t=" + std::to_string(n)};
      Rational total = 0;
      const auto via_moments = q_to_p(im_moments(s, n), n);
      for (unsigned t = 0; t <= n - s; ++t) {
        const Rational p = p_coefficient(s, t, n);
        if (p <= 0) return {false, "nonpositive p"};
        if (via_moments[t] != p) return {false, "q_to_p differs from beta closed form"};
        total += Rational(binomial(n - s, t)) * p;
        ++checks;
      }
      if (total != 1)
        return {false, "binomial-weighted sum " + to_string(total) + " at s=" +
                           std::to_string(s) + " n=" + std::to_string(n)};
    }
  return {true, std::to_string(checks) + " coefficients, all laws exact"};
}

Outcome hausdorff() {
  for (unsigned s = 0; s <= 4; ++s)
    if (!hausdorff_check(im_moments(s, 16), 8))
      return {false, "I_M moments rejected at s=" + std::to_string(s)};
  const MomentSequence bad{0, {R(1), R(9, 10), R(1, 2)}};
  if (hausdorff_check(bad, 2)) return {false, "violating sequence accepted"};
  return {true, "s<=4 to t=16 pass at m_max=8; 1, 9/10, 1/2 rejected"};
}

Outcome symmetry() {
  std::mt19937_64 rng(9090);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 5);
    const Permutation sigma = testing::random_permutation(n, rng);
    const MobiusRep base = testing::random_mobius(n, rng);
    MobiusRep sym(n);
    MobiusRep orbit = base;
    do {
      for (Subset s = 0; s < sym.size(); ++s) sym.set(s, sym[s] + orbit[s]);
      orbit = apply_permutation(orbit, sigma);
    } while (orbit != base);
    if (!is_symmetric(sym, sigma)) return {false, "symmetrization failed"};
    for (unsigned k = 0; k <= n; ++k)
      if (!is_symmetric(approx_closed_form(sym, k).coefficients(), sigma))
        return {false, "symmetry lost at trial " + std::to_string(trial) + " k=" +
                           std::to_string(k)};
  }
  return {true, "20 symmetrized inputs, every degree fixed by its generator"};
}

Outcome negative_control(const std::string& cli) {
  VerifyOptions clean;
  clean.degree = 2;
  VerifyOptions dirty = clean;
  dirty.perturb = std::make_pair(make_subset({1, 4}), R(1, 1000));
  const GameDocument doc = from_table(testing::worked_example(), Representation::mobius);
  if (!cmd_verify(doc, clean).passed()) return {false, "clean input failed verification"};
  if (cmd_verify(doc, dirty).passed()) return {false, "perturbation not detected"};
  if (cli.empty()) return {true, "library report fails (CLI path not given)"};

  const auto path = std::filesystem::temp_directory_path() / "lovasz_acceptance_example.json";
  std::ofstream(path) << format_document(doc);
  const std::string cmd = "\"" + cli + "\" verify --degree 2 --debug-perturb 1,4=1/1000 --input \"" +
                          path.string() + "\"";
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "could not run " + cli};
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  std::filesystem::remove(path);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  const bool reported = output.find("FAIL  residual orthogonal") != std::string::npos;
  return {code != 0 && reported,
          "CLI exit status " + std::to_string(code) +
              (reported ? ", orthogonality failure reported" : ", no orthogonality failure in report")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "worked example reproduced exactly", 1.0, worked_example},
      {2, "closed form = recurrence = normal equations", 30.0, oracle_equivalence},
      {3, "residual orthogonal to V_k", 0.0, orthogonality},
      {4, "inner-product closed form vs Monte Carlo", 60.0, monte_carlo},
      {5, "Banzhaf and I_M as leading coefficients", 0.0, index_identities},
      {6, "dual forms and I_M inverse", 0.0, dual_forms_and_inverse},
      {7, "coefficient laws for s <= n <= 12", 0.0, coefficient_laws},
      {8, "Hausdorff truncation", 0.0, hausdorff},
      {9, "symmetry preservation", 0.0, symmetry},
      {10, "verify negative control", 0.0, [&] { return negative_control(cli); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.max_seconds > 0 && secs >= c.max_seconds) {
      o.ok = false;
      o.detail += " [runtime " + format_value(secs) + " s exceeds " +
                  format_value(c.max_seconds) + " s]";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": "
              << o.detail << " (" << timing << ")\n";
    failures += !o.ok;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
