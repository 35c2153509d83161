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
 * \file lovasz/set_function.hpp
 *
 * \brief Set functions on the Boolean lattice, their Möbius representation,
 *  and evaluation of the multilinear and Lovász extensions.
 *
 * A set function v on N = {1,...,n} is stored as a dense table indexed by
 * subset bitmask. Its Möbius transform a satisfies v(S) = sum_{T⊆S} a(T), and
 * the same coefficient table describes both the multilinear polynomial
 * sum_S a(S) prod_{i∈S} x_i and the min-polynomial sum_S a(S) min_{i∈S} x_i
 * (the Lovász extension), with min over the empty set taken to be 1.
 */

#ifndef LOVASZ_SET_FUNCTION_HPP
#define LOVASZ_SET_FUNCTION_HPP

#include <lovasz/rational.hpp>
#include <lovasz/subset.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace lovasz {

struct game_tag {};
struct mobius_tag {};

/// Dense table of exact rationals over the 2^n subsets of {1,...,n}.
template <class Tag>
class SubsetTable {
 public:
  SubsetTable() = default;

  explicit SubsetTable(unsigned n) : n_(n) {
    check_player_count(n);
    values_.assign(lattice_size(n), Rational(0));
  }

  SubsetTable(unsigned n, std::vector<Rational> values)
      : n_(n), values_(std::move(values)) {
    check_player_count(n);
    if (values_.size() != lattice_size(n))
      throw std::invalid_argument("table length " +
                                  std::to_string(values_.size()) +
                                  " differs from 2^" + std::to_string(n));
  }

  unsigned n() const { return n_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](Subset s) const { return values_[s]; }

  const Rational& at(Subset s) const {
    check_subset(s, n_);
    return values_[s];
  }

  void set(Subset s, Rational value) {
    check_subset(s, n_);
    values_[s] = std::move(value);
  }

  std::span<const Rational> values() const { return values_; }

  friend bool operator==(const SubsetTable&, const SubsetTable&) = default;

 private:
  unsigned n_ = 0;
  std::vector<Rational> values_ = {Rational(0)};
};

using SetFunction = SubsetTable<game_tag>;
using MobiusRep = SubsetTable<mobius_tag>;

struct min_basis {};
struct product_basis {};

/// Polynomial of degree at most k in the basis {min_S} (min_basis) or
/// {prod_{i∈S} x_i} (product_basis). Coefficients above the degree are zero.
template <class Basis>
class BoundedPolynomial {
 public:
  BoundedPolynomial(unsigned n, unsigned degree) : n_(n), degree_(degree) {
    check_player_count(n);
    if (degree > n)
      throw std::invalid_argument("degree " + std::to_string(degree) +
                                  " exceeds player count " +
                                  std::to_string(n));
    coeffs_.assign(lattice_size(n), Rational(0));
  }

  /// Views the coefficients of `a` as a polynomial of degree at most
  /// `degree`; every coefficient with |S| > degree must vanish.
  static BoundedPolynomial from_coefficients(const MobiusRep& a,
                                             unsigned degree) {
    BoundedPolynomial p(a.n(), degree);
    for (Subset s = 0; s < a.size(); ++s) {
      if (a[s] == 0) continue;
      p.set(s, a[s]);
    }
    return p;
  }

  unsigned n() const { return n_; }
  unsigned degree() const { return degree_; }

  const Rational& coefficient(Subset s) const {
    check_subset(s, n_);
    return coeffs_[s];
  }

  const Rational& operator[](Subset s) const { return coeffs_[s]; }

  void set(Subset s, Rational value) {
    check_subset(s, n_);
    if (cardinality(s) > degree_ && value != 0)
      throw std::invalid_argument("coefficient of a subset of size " +
                                  std::to_string(cardinality(s)) +
                                  " in a polynomial of degree " +
                                  std::to_string(degree_));
    coeffs_[s] = std::move(value);
  }

  /// Zero-filled embedding into the full coefficient table (V_k ⊂ V_n).
  MobiusRep coefficients() const { return MobiusRep(n_, coeffs_); }

  /// (S, coefficient) for |S| <= degree in canonical order.
  std::vector<std::pair<Subset, Rational>> terms() const {
    std::vector<std::pair<Subset, Rational>> out;
    for (Subset s : canonical_order(n_, degree_)) out.emplace_back(s, coeffs_[s]);
    return out;
  }

  friend bool operator==(const BoundedPolynomial&,
                         const BoundedPolynomial&) = default;

 private:
  unsigned n_;
  unsigned degree_;
  std::vector<Rational> coeffs_;
};

using MinPolynomial = BoundedPolynomial<min_basis>;
using MultilinearPolynomial = BoundedPolynomial<product_basis>;

namespace detail {

template <class Real>
inline constexpr bool is_exact_v = std::is_same_v<Real, Rational>;

template <class Real>
using accumulator_t = std::conditional_t<is_exact_v<Real>, Rational, long double>;

template <class Real>
accumulator_t<Real> widen(const Real& x) {
  return static_cast<accumulator_t<Real>>(x);
}

}  // namespace detail

/// A point of [0,1]^n. Floating coordinates may exceed the box by 1e-12.
template <class Real>
class BasicPoint {
 public:
  static constexpr double box_tolerance = 1e-12;

  explicit BasicPoint(std::vector<Real> coords) : coords_(std::move(coords)) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const Real& c = coords_[i];
      bool ok;
      if constexpr (detail::is_exact_v<Real>) {
        ok = c >= 0 && c <= 1;
      } else {
        ok = std::isfinite(static_cast<double>(c)) && c >= -box_tolerance &&
             c <= 1 + box_tolerance;
      }
      if (!ok)
        throw std::out_of_range("coordinate " + std::to_string(i + 1) +
                                " lies outside [0,1]");
    }
  }

  /// Characteristic vector 1_S in dimension n.
  static BasicPoint indicator(Subset s, unsigned n) {
    std::vector<Real> c(n, Real(0));
    for (unsigned i = 1; i <= n; ++i)
      if (contains(s, i)) c[i - 1] = Real(1);
    return BasicPoint(std::move(c));
  }

  std::size_t size() const { return coords_.size(); }
  const Real& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Real> coords() const { return coords_; }

 private:
  std::vector<Real> coords_;
};

using PointVector = BasicPoint<double>;
using RationalPoint = BasicPoint<Rational>;

namespace detail {

template <class Real>
void check_dimension(const BasicPoint<Real>& x, unsigned n) {
  if (x.size() != n)
    throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(n));
}

}  // namespace detail

/// Möbius transform a(S) = sum_{T⊆S} (-1)^{|S|-|T|} v(T), computed with the
/// in-place butterfly over each coordinate.
inline MobiusRep mobius_transform(const SetFunction& v) {
  std::vector<Rational> a(v.values().begin(), v.values().end());
  for (unsigned i = 0; i < v.n(); ++i) {
    const Subset bit = Subset{1} << i;
    for (Subset s = 0; s < a.size(); ++s)
      if (s & bit) a[s] -= a[s ^ bit];
  }
  return MobiusRep(v.n(), std::move(a));
}

/// Zeta transform v(S) = sum_{T⊆S} a(T).
inline SetFunction zeta_transform(const MobiusRep& a) {
  std::vector<Rational> v(a.values().begin(), a.values().end());
  for (unsigned i = 0; i < a.n(); ++i) {
    const Subset bit = Subset{1} << i;
    for (Subset s = 0; s < v.size(); ++s)
      if (s & bit) v[s] += v[s ^ bit];
  }
  return SetFunction(a.n(), std::move(v));
}

/// Returns r with r(S) = sum_{T⊇S, |T| >= min_level} weight(|S|, |T|) a(T).
///
/// Each cardinality level of `a` is summed over supersets separately, so the
/// cost is O(n^2 2^n) rather than O(3^n). weight(s, t) is only called for
/// s <= t.
template <class Tag, class Weight>
MobiusRep superset_weighted_sum(const SubsetTable<Tag>& a, Weight&& weight,
                                unsigned min_level = 0) {
  const unsigned n = a.n();
  std::vector<Rational> out(a.size(), Rational(0));
  std::vector<Rational> level(a.size());
  for (unsigned t = min_level; t <= n; ++t) {
    bool any = false;
    for (Subset s = 0; s < a.size(); ++s) {
      if (cardinality(s) == t && a[s] != 0) {
        level[s] = a[s];
        any = true;
      } else {
        level[s] = 0;
      }
    }
    if (!any) continue;
    for (unsigned i = 0; i < n; ++i) {
      const Subset bit = Subset{1} << i;
      for (Subset s = 0; s < level.size(); ++s)
        if (!(s & bit)) level[s] += level[s | bit];
    }
    std::vector<Rational> w(t + 1);
    for (unsigned s = 0; s <= t; ++s) w[s] = weight(s, t);
    for (Subset s = 0; s < out.size(); ++s) {
      const unsigned c = cardinality(s);
      if (c <= t && level[s] != 0) out[s] += w[c] * level[s];
    }
  }
  return MobiusRep(n, std::move(out));
}

/// Multilinear extension sum_S a(S) prod_{i∈S} x_i.
template <class Real>
Real eval_multilinear(const MobiusRep& a, const BasicPoint<Real>& x) {
  detail::check_dimension(x, a.n());
  detail::accumulator_t<Real> sum = 0;
  for (Subset s = 0; s < a.size(); ++s) {
    if (a[s] == 0) continue;
    detail::accumulator_t<Real> prod = 1;
    for (unsigned i : members(s)) prod *= detail::widen(x[i - 1]);
    sum += to_real<detail::accumulator_t<Real>>(a[s]) * prod;
  }
  return static_cast<Real>(sum);
}

/// Lovász extension as the min-polynomial sum_S a(S) min_{i∈S} x_i.
template <class Real>
Real eval_lovasz_minpoly(const MobiusRep& a, const BasicPoint<Real>& x) {
  detail::check_dimension(x, a.n());
  detail::accumulator_t<Real> sum = 0;
  for (Subset s = 0; s < a.size(); ++s) {
    if (a[s] == 0) continue;
    detail::accumulator_t<Real> m = 1;
    if (s != 0) {
      auto idx = members(s);
      m = detail::widen(x[idx.front() - 1]);
      for (unsigned i : idx) m = std::min(m, detail::widen(x[i - 1]));
    }
    sum += to_real<detail::accumulator_t<Real>>(a[s]) * m;
  }
  return static_cast<Real>(sum);
}

template <class Real>
Real eval_lovasz_minpoly(const MinPolynomial& p, const BasicPoint<Real>& x) {
  return eval_lovasz_minpoly(p.coefficients(), x);
}

/// Lovász extension from the values of v: with coordinates sorted ascending
/// (ties by player index) as x_(1) <= ... <= x_(n) and A_i the players from
/// position i upward,
///   f(x) = v(∅) + sum_i (x_(i) - x_(i-1)) (v(A_i) - v(∅)),  x_(0) = 0.
template <class Real>
Real eval_lovasz_sorted(const SetFunction& v, const BasicPoint<Real>& x) {
  const unsigned n = v.n();
  detail::check_dimension(x, n);
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](unsigned i, unsigned j) { return x[i] < x[j]; });

  using Acc = detail::accumulator_t<Real>;
  const Acc base = to_real<Acc>(v[empty_set]);
  Acc sum = base;
  Acc previous = 0;
  Subset upper = full_set(n);
  for (unsigned pos = 0; pos < n; ++pos) {
    const Acc xi = detail::widen(x[order[pos]]);
    const Acc step = xi - previous;
    if (step != 0) sum += step * (to_real<Acc>(v[upper]) - base);
    previous = xi;
    upper &= ~(Subset{1} << order[pos]);
  }
  return static_cast<Real>(sum);
}

}  // namespace lovasz

#endif  // LOVASZ_SET_FUNCTION_HPP
