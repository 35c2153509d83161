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
 * \file lovasz/geometry.hpp
 *
 * \brief L2 geometry of min-polynomials on [0,1]^n.
 *
 * All inner products are exact and come from the closed form
 *   <min_S, min_T> = 1/(|S∪T|+2) * (1/(s+1) + 1/(t+1)),
 * which depends only on |S|, |T| and |S∪T|. A Monte Carlo estimator is
 * provided as an independent check of that closed form.
 */

#ifndef LOVASZ_GEOMETRY_HPP
#define LOVASZ_GEOMETRY_HPP

#include <lovasz/linear_solve.hpp>
#include <lovasz/rational.hpp>
#include <lovasz/set_function.hpp>
#include <lovasz/subset.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lovasz {

/// <min_S, min_T> over [0,1]^n, exact. min_∅ is the constant 1.
inline Rational inner_product_min(Subset s, Subset t, unsigned n) {
  check_player_count(n);
  check_subset(s, n);
  check_subset(t, n);
  const long cs = cardinality(s);
  const long ct = cardinality(t);
  const long cu = cardinality(s | t);
  return make_rational(cs + ct + 2, (cu + 2) * (cs + 1) * (ct + 1));
}

/// <f, min_t> for f = sum_S a(S) min_S.
inline Rational inner_product_with_min(const MobiusRep& a, Subset t) {
  Rational sum = 0;
  for (Subset s = 0; s < a.size(); ++s)
    if (a[s] != 0) sum += a[s] * inner_product_min(s, t, a.n());
  return sum;
}

/// <f, g> for two min-polynomials given by their coefficient tables.
inline Rational inner_product(const MobiusRep& a, const MobiusRep& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("inner_product: player counts differ");
  std::vector<Subset> support_b;
  for (Subset t = 0; t < b.size(); ++t)
    if (b[t] != 0) support_b.push_back(t);
  Rational sum = 0;
  for (Subset s = 0; s < a.size(); ++s) {
    if (a[s] == 0) continue;
    for (Subset t : support_b) sum += a[s] * b[t] * inner_product_min(s, t, a.n());
  }
  return sum;
}

inline Rational squared_norm(const MobiusRep& a) { return inner_product(a, a); }

/// Gram matrix of the basis {min_S : |S| <= degree} in canonical order
/// (cardinality ascending, then bitmask ascending).
struct GramMatrix {
  unsigned n = 0;
  unsigned degree = 0;
  std::vector<Subset> order;
  RationalMatrix entries;

  std::size_t dimension() const { return order.size(); }
};

inline GramMatrix gram_matrix(unsigned n, unsigned degree) {
  check_player_count(n);
  if (degree > n)
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " exceeds player count " + std::to_string(n));
  GramMatrix g;
  g.n = n;
  g.degree = degree;
  g.order = canonical_order(n, degree);
  g.entries = RationalMatrix(g.order.size(), g.order.size());
  for (std::size_t i = 0; i < g.order.size(); ++i)
    for (std::size_t j = i; j < g.order.size(); ++j) {
      Rational v = inner_product_min(g.order[i], g.order[j], n);
      g.entries(j, i) = v;
      g.entries(i, j) = std::move(v);
    }
  return g;
}

/// Orthogonal projection of min_S onto V_k for |S| = k+1:
///   sum_{T⊊S} (-1)^{k+t} C(k+t+1, k+1)/C(2k+2, k+1) min_T.
inline MinPolynomial project_min_single(Subset s, unsigned degree, unsigned n) {
  check_player_count(n);
  check_subset(s, n);
  if (cardinality(s) != degree + 1)
    throw std::invalid_argument("project_min_single needs |S| = k+1, got |S|=" +
                                std::to_string(cardinality(s)) +
                                ", k=" + std::to_string(degree));
  const long k = degree;
  MinPolynomial p(n, degree);
  for_each_subset(s, [&](Subset t) {
    if (t == s) return;
    const long ct = cardinality(t);
    Rational c = binomial_ratio(k + ct + 1, k + 1, 2 * k + 2, k + 1);
    if (sign_of_parity(k + ct) < 0) c = -c;
    p.set(t, std::move(c));
  });
  return p;
}

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Plain Monte Carlo estimate of the integral of min_S * min_T over [0,1]^n.
/// Uses std::mt19937_64 seeded with `seed`; the stream is reproducible.
inline McEstimate mc_inner_product(Subset s, Subset t, unsigned n,
                                   std::uint64_t samples, std::uint64_t seed) {
  check_player_count(n);
  check_subset(s, n);
  check_subset(t, n);
  if (samples < 100)
    throw std::invalid_argument("mc_inner_product needs at least 100 samples");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n);
  const auto ms = members(s);
  const auto mt = members(t);
  auto min_over = [&](const std::vector<unsigned>& idx) {
    double m = 1.0;
    for (unsigned i : idx) m = std::min(m, x[i - 1]);
    return m;
  };

  // Welford running mean and sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t k = 1; k <= samples; ++k) {
    for (auto& xi : x) xi = unit(rng);
    const double y = min_over(ms) * min_over(mt);
    const double delta = y - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (y - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(std::max(variance, 0.0) / static_cast<double>(samples)),
          samples};
}

}  // namespace lovasz

#endif  // LOVASZ_GEOMETRY_HPP
