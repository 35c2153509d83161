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
 * \file lovasz/approximation.hpp
 *
 * \brief Best degree-k least-squares approximation of a Lovász extension.
 *
 * The projection A_k onto V_k = span{min_S : |S| <= k} is available in three
 * independent ways: the closed form over supersets, the chain of
 * consecutive-degree steps A_{k+1} -> A_k, and a dense normal-equations solve
 * against the Gram matrix. All three are exact and must agree.
 *
 * The discrete analogue on {0,1}^n (least squares over the cube vertices in
 * the product basis) is provided as hammer_holzman().
 */

#ifndef LOVASZ_APPROXIMATION_HPP
#define LOVASZ_APPROXIMATION_HPP

#include <lovasz/geometry.hpp>
#include <lovasz/linear_solve.hpp>
#include <lovasz/rational.hpp>
#include <lovasz/set_function.hpp>
#include <lovasz/subset.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lovasz {

/// Largest player count accepted by the dense normal-equations solve.
inline constexpr unsigned normal_equations_max_players = 10;

namespace detail {

inline void check_degree(unsigned k, unsigned n) {
  if (k > n)
    throw std::out_of_range("degree " + std::to_string(k) +
                            " out of range 0.." + std::to_string(n));
}

inline Rational signed_value(long exponent, Rational value) {
  return sign_of_parity(exponent) > 0 ? value : Rational(-value);
}

}  // namespace detail

/// Closed form of A_k:
///   a_k(S) = a(S) + (-1)^{k+s} sum_{T⊇S, t>k}
///            C(k+s+1,k+1) C(t-s-1,k-s) / C(k+t+1,k+1) a(T).
inline MinPolynomial approx_closed_form(const MobiusRep& a, unsigned k) {
  detail::check_degree(k, a.n());
  const long kk = k;
  const MobiusRep correction = superset_weighted_sum(
      a,
      [kk](long s, long t) -> Rational {
        if (s > kk) return Rational(0);
        Rational w = make_rational(
            binomial(kk + s + 1, kk + 1) * binomial(t - s - 1, kk - s),
            binomial(kk + t + 1, kk + 1));
        return detail::signed_value(kk + s, std::move(w));
      },
      k + 1);
  MinPolynomial out(a.n(), k);
  for (Subset s = 0; s < a.size(); ++s)
    if (cardinality(s) <= k) out.set(s, a[s] + correction[s]);
  return out;
}

/// One step A_{k+1} f -> A_k f:
///   a_k(S) = a_{k+1}(S) + (-1)^{k+s} C(k+s+1,k+1)/C(2k+2,k+1)
///            sum_{T⊇S, t=k+1} a_{k+1}(T).
inline MinPolynomial approx_recursive_step(const MinPolynomial& next) {
  if (next.degree() == 0)
    throw std::invalid_argument("approx_recursive_step needs degree >= 1");
  const long k = static_cast<long>(next.degree()) - 1;
  const MobiusRep coeffs = next.coefficients();
  const MobiusRep top_sums = superset_weighted_sum(
      coeffs, [](long, long) { return Rational(1); }, next.degree());
  MinPolynomial out(next.n(), static_cast<unsigned>(k));
  for (Subset s = 0; s < coeffs.size(); ++s) {
    const long cs = cardinality(s);
    if (cs > k) continue;
    Rational c = coeffs[s];
    if (top_sums[s] != 0)
      c += detail::signed_value(
               k + cs, binomial_ratio(k + cs + 1, k + 1, 2 * k + 2, k + 1)) *
           top_sums[s];
    out.set(s, std::move(c));
  }
  return out;
}

/// A_k f through the chain A_n -> A_{n-1} -> ... -> A_k.
inline MinPolynomial approx_recursive(const MobiusRep& a, unsigned k) {
  detail::check_degree(k, a.n());
  MinPolynomial current = MinPolynomial::from_coefficients(a, a.n());
  while (current.degree() > k) current = approx_recursive_step(current);
  return current;
}

/// A_k f by solving the normal equations <A_k f, min_T> = <f, min_T>,
/// |T| <= k, against the exact Gram matrix.
inline MinPolynomial approx_normal_equations(const MobiusRep& a, unsigned k) {
  detail::check_degree(k, a.n());
  if (a.n() > normal_equations_max_players)
    throw std::invalid_argument(
        "normal-equations solve is limited to n <= " +
        std::to_string(normal_equations_max_players));
  GramMatrix g = gram_matrix(a.n(), k);
  std::vector<Rational> rhs(g.dimension());
  for (std::size_t i = 0; i < g.dimension(); ++i)
    rhs[i] = inner_product_with_min(a, g.order[i]);
  std::vector<Rational> x;
  try {
    x = solve_exact(std::move(g.entries), std::move(rhs));
  } catch (const singular_matrix_error& e) {
    throw std::logic_error(std::string("Gram matrix unexpectedly singular: ") +
                           e.what());
  }
  MinPolynomial out(a.n(), k);
  for (std::size_t i = 0; i < g.order.size(); ++i) out.set(g.order[i], x[i]);
  return out;
}

/// Best degree-k multilinear approximation on {0,1}^n:
///   a_k(S) = a(S) + (-1)^{k+s} sum_{T⊇S, t>k} C(t-s-1,k-s)/2^{t-s} a(T).
inline MultilinearPolynomial hammer_holzman(const MobiusRep& a, unsigned k) {
  detail::check_degree(k, a.n());
  const long kk = k;
  const MobiusRep correction = superset_weighted_sum(
      a,
      [kk](long s, long t) -> Rational {
        if (s > kk) return Rational(0);
        Rational w = make_rational(binomial(t - s - 1, kk - s),
                                   Integer(1) << static_cast<unsigned>(t - s));
        return detail::signed_value(kk + s, std::move(w));
      },
      k + 1);
  MultilinearPolynomial out(a.n(), k);
  for (Subset s = 0; s < a.size(); ++s)
    if (cardinality(s) <= k) out.set(s, a[s] + correction[s]);
  return out;
}

/// Bijection on {1,...,n}, stored 1-based: image(i) = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<unsigned> mapping)
      : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (unsigned v : mapping_) {
      if (v < 1 || v > mapping_.size() || seen[v - 1])
        throw std::invalid_argument("mapping is not a bijection on {1,...,n}");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(unsigned n) {
    std::vector<unsigned> m(n);
    std::iota(m.begin(), m.end(), 1u);
    return Permutation(std::move(m));
  }

  static Permutation transposition(unsigned n, unsigned i, unsigned j) {
    Permutation p = identity(n);
    check_player(i, n);
    check_player(j, n);
    std::swap(p.mapping_[i - 1], p.mapping_[j - 1]);
    return p;
  }

  unsigned size() const { return static_cast<unsigned>(mapping_.size()); }
  unsigned operator()(unsigned i) const { return mapping_[i - 1]; }

  Permutation inverse() const {
    std::vector<unsigned> inv(mapping_.size());
    for (unsigned i = 1; i <= size(); ++i) inv[mapping_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
  }

  /// sigma(S) = {sigma(i) : i in S}.
  Subset image(Subset s) const {
    Subset out = 0;
    for (unsigned i : members(s)) out |= singleton(mapping_[i - 1]);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> mapping_;
};

/// P_sigma f(x_1,...,x_n) = f(x_sigma(1),...,x_sigma(n)). Since
/// min_{i∈S} x_sigma(i) = min_sigma(S), the coefficient of S moves to sigma(S).
inline MobiusRep apply_permutation(const MobiusRep& a, const Permutation& sigma) {
  if (sigma.size() != a.n())
    throw std::invalid_argument("permutation size differs from player count");
  MobiusRep out(a.n());
  for (Subset s = 0; s < a.size(); ++s) out.set(sigma.image(s), a[s]);
  return out;
}

inline bool is_symmetric(const MobiusRep& a, const Permutation& sigma) {
  return apply_permutation(a, sigma) == a;
}

}  // namespace lovasz

#endif  // LOVASZ_APPROXIMATION_HPP
