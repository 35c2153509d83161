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

// Random generators and brute-force oracles shared by the test binaries.
// Nothing here calls the library routines the oracles are meant to check.

#ifndef LOVASZ_TESTS_TEST_SUPPORT_HPP
#define LOVASZ_TESTS_TEST_SUPPORT_HPP

#include <lovasz/lovasz.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace lovasz::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 20,
                                long max_den = 12) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

template <class Table>
Table random_table(unsigned n, std::mt19937_64& rng) {
  std::vector<Rational> values(lattice_size(n));
  for (auto& v : values) v = random_rational(rng);
  return Table(n, std::move(values));
}

inline MobiusRep random_mobius(unsigned n, std::mt19937_64& rng) {
  return random_table<MobiusRep>(n, rng);
}

inline SetFunction random_game(unsigned n, std::mt19937_64& rng) {
  return random_table<SetFunction>(n, rng);
}

inline std::vector<double> random_point(unsigned n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& xi : x) xi = unit(rng);
  return x;
}

inline Permutation random_permutation(unsigned n, std::mt19937_64& rng) {
  std::vector<unsigned> m(n);
  for (unsigned i = 0; i < n; ++i) m[i] = i + 1;
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(std::move(m));
}

/// The Möbius transform by the O(4^n) double loop over all pairs T ⊆ S.
inline MobiusRep brute_force_mobius(const SetFunction& v) {
  MobiusRep a(v.n());
  for (Subset s = 0; s < v.size(); ++s) {
    Rational acc = 0;
    for (Subset t = 0; t < v.size(); ++t) {
      if ((t & ~s) != 0) continue;
      if ((cardinality(s) - cardinality(t)) % 2 == 0)
        acc += v[t];
      else
        acc -= v[t];
    }
    a.set(s, acc);
  }
  return a;
}

/// Sum over all T ⊆ S of a(T), by the same double loop.
inline SetFunction brute_force_zeta(const MobiusRep& a) {
  SetFunction v(a.n());
  for (Subset s = 0; s < a.size(); ++s) {
    Rational acc = 0;
    for (Subset t = 0; t < a.size(); ++t)
      if ((t & ~s) == 0) acc += a[t];
    v.set(s, acc);
  }
  return v;
}

/// Best degree-k multilinear fit to v on the 2^n cube vertices, by forming
/// and solving the discrete normal equations M^T M c = M^T v exactly, where
/// M[x][S] = prod_{i∈S} x_i.
inline MobiusRep discrete_least_squares(const SetFunction& v, unsigned k) {
  const auto basis = canonical_order(v.n(), k);
  const std::size_t dim = basis.size();
  RationalMatrix normal(dim, dim);
  std::vector<Rational> rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // Number of vertices x with prod over S_i and S_j both equal to 1.
      long count = 0;
      for (Subset x = 0; x < v.size(); ++x)
        if (((basis[i] | basis[j]) & ~x) == 0) ++count;
      normal(i, j) = count;
    }
    Rational acc = 0;
    for (Subset x = 0; x < v.size(); ++x)
      if ((basis[i] & ~x) == 0) acc += v[x];
    rhs[i] = acc;
  }
  const auto c = solve_exact(normal, rhs);
  MobiusRep out(v.n());
  for (std::size_t i = 0; i < dim; ++i) out.set(basis[i], c[i]);
  return out;
}

/// Sum of squared errors of the multilinear polynomial `a` against v over the
/// cube vertices.
inline Rational discrete_sse(const SetFunction& v, const MobiusRep& a) {
  Rational total = 0;
  for (Subset x = 0; x < v.size(); ++x) {
    Rational fx = 0;
    for (Subset s = 0; s < a.size(); ++s)
      if ((s & ~x) == 0) fx += a[s];
    const Rational e = v[x] - fx;
    total += e * e;
  }
  return total;
}

/// The function x -> min_S(x) as a coefficient table.
inline MobiusRep min_function(Subset s, unsigned n) {
  MobiusRep a(n);
  a.set(s, 1);
  return a;
}

/// The Möbius data of the four-player worked example: 3/10 on each
/// singleton and pair inside {1,2,3}, -21/25 on {1,2,3}, 1/25 on N.
inline MobiusRep worked_example() {
  MobiusRep a(4);
  const Rational w = make_rational(3, 10);
  for (unsigned i = 1; i <= 3; ++i) a.set(singleton(i), w);
  a.set(make_subset({1, 2}), w);
  a.set(make_subset({1, 3}), w);
  a.set(make_subset({2, 3}), w);
  a.set(make_subset({1, 2, 3}), make_rational(-21, 25));
  a.set(make_subset({1, 2, 3, 4}), make_rational(1, 25));
  return a;
}

inline Rational R(long num, long den = 1) { return make_rational(num, den); }

}  // namespace lovasz::testing

#endif  // LOVASZ_TESTS_TEST_SUPPORT_HPP
