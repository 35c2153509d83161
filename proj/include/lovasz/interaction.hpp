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
 * \file lovasz/interaction.hpp
 *
 * \brief Power and interaction indices of games.
 *
 * Interaction indices are computed either from the Möbius transform
 * (a sum over supersets) or from discrete derivatives (a sum over coalitions
 * disjoint from S). The two routes share no code beyond the coefficient
 * formulas and are expected to agree exactly.
 *
 * I_M is the index whose value on S is the leading coefficient a_s(S) of the
 * best degree-s min-polynomial approximation. Its coefficients are moments of
 * the Beta(s+1, s+1) distribution:
 *   q_t^s    = C(2s+1,s+1)/C(s+t+1,s+1)      = B(t+1,s+1)/B(s+1,s+1)
 *   p_t^s(n) = B(n-t+1,s+t+1)/B(s+1,s+1)
 *   h_t^s    = (-1)^{t-s} C(s+t,t)/C(2t,t)    (inverse transform)
 */

#ifndef LOVASZ_INTERACTION_HPP
#define LOVASZ_INTERACTION_HPP

#include <lovasz/rational.hpp>
#include <lovasz/set_function.hpp>
#include <lovasz/subset.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lovasz {

enum class IndexKind { banzhaf, im };

enum class IndexForm { mobius, derivative };

inline std::string_view to_string(IndexKind kind) {
  return kind == IndexKind::banzhaf ? "banzhaf" : "im";
}

struct InteractionTable {
  IndexKind kind = IndexKind::im;
  MobiusRep values;  // one entry per coalition

  unsigned n() const { return values.n(); }
  const Rational& operator[](Subset s) const { return values[s]; }
};

/// q_s^s, q_{s+1}^s, ..., q_T^s for a fixed base order s.
struct MomentSequence {
  unsigned s = 0;
  std::vector<Rational> terms;

  unsigned last_order() const {
    return s + static_cast<unsigned>(terms.size()) - 1;
  }
  const Rational& at_order(unsigned t) const { return terms.at(t - s); }
};

// Coefficients --------------------------------------------------------------

inline Rational q_coefficient(unsigned s, unsigned t) {
  if (s > t)
    throw std::out_of_range("q_coefficient needs s <= t, got s=" +
                            std::to_string(s) + ", t=" + std::to_string(t));
  return binomial_ratio(2 * s + 1, s + 1, s + t + 1, s + 1);
}

inline Rational h_coefficient(unsigned s, unsigned t) {
  if (s > t)
    throw std::out_of_range("h_coefficient needs s <= t, got s=" +
                            std::to_string(s) + ", t=" + std::to_string(t));
  Rational h = binomial_ratio(s + t, t, 2 * t, t);
  return sign_of_parity(t - s) > 0 ? h : Rational(-h);
}

inline Rational p_coefficient(unsigned s, unsigned t, unsigned n) {
  if (s > n || t > n - s)
    throw std::out_of_range("p_coefficient needs 0 <= t <= n-s, got s=" +
                            std::to_string(s) + ", t=" + std::to_string(t) +
                            ", n=" + std::to_string(n));
  return beta(n - t + 1, s + t + 1) / beta(s + 1, s + 1);
}

/// I_M's moment sequence q_s^s, ..., q_{last}^s.
inline MomentSequence im_moments(unsigned s, unsigned last) {
  if (last < s) throw std::out_of_range("im_moments needs last >= s");
  MomentSequence m{s, {}};
  for (unsigned t = s; t <= last; ++t) m.terms.push_back(q_coefficient(s, t));
  return m;
}

/// p_t^s(n) = sum_{i=s+t}^{n} (-1)^{i-s-t} C(n-s-t, i-s-t) q_i^s, for
/// t = 0..n-s.
inline std::vector<Rational> q_to_p(const MomentSequence& moments, unsigned n) {
  const unsigned s = moments.s;
  if (moments.terms.empty() || n < s || moments.last_order() < n)
    throw std::invalid_argument("q_to_p: moments must cover orders " +
                                std::to_string(s) + ".." + std::to_string(n));
  std::vector<Rational> p(n - s + 1);
  for (unsigned t = 0; t <= n - s; ++t) {
    Rational acc = 0;
    for (unsigned i = s + t; i <= n; ++i) {
      Rational term = Rational(binomial(n - s - t, i - s - t)) * moments.at_order(i);
      if (sign_of_parity(i - s - t) > 0)
        acc += term;
      else
        acc -= term;
    }
    p[t] = std::move(acc);
  }
  return p;
}

/// Complete-monotonicity test truncated at difference order m_max: checks
/// sum_{i=0}^{m} (-1)^i C(m,i) q_{t+i}^s >= 0 for every m <= m_max and every
/// t for which q_{t+m}^s is available. A true result means no violation was
/// found in that window, which is not a proof for the infinite sequence.
inline bool hausdorff_check(const MomentSequence& moments, unsigned m_max) {
  const std::size_t len = moments.terms.size();
  if (len < static_cast<std::size_t>(m_max) + 1)
    throw std::invalid_argument("hausdorff_check: " + std::to_string(len) +
                                " terms cannot form differences of order " +
                                std::to_string(m_max));
  for (unsigned m = 0; m <= m_max; ++m) {
    for (std::size_t t = 0; t + m < len; ++t) {
      Rational diff = 0;
      for (unsigned i = 0; i <= m; ++i) {
        Rational term = Rational(binomial(m, i)) * moments.terms[t + i];
        if (i % 2 == 0)
          diff += term;
        else
          diff -= term;
      }
      if (diff < 0) return false;
    }
  }
  return true;
}

// Derivatives and power indices ---------------------------------------------

/// Delta_S v(T) = sum_{R⊆S} (-1)^{s-r} v(R ∪ T), for disjoint S and T.
inline Rational discrete_derivative(const SetFunction& v, Subset s, Subset t) {
  check_subset(s, v.n());
  check_subset(t, v.n());
  if (s & t) throw std::invalid_argument("discrete_derivative: S and T overlap");
  const unsigned cs = cardinality(s);
  Rational acc = 0;
  for_each_subset(s, [&](Subset r) {
    if ((cs - cardinality(r)) % 2 == 0)
      acc += v[r | t];
    else
      acc -= v[r | t];
  });
  return acc;
}

namespace detail {

/// sum_{T⊆N∖{i}} weight(t) [v(T∪{i}) - v(T)].
template <class Weight>
Rational weighted_marginals(const SetFunction& v, unsigned player,
                            Weight&& weight) {
  check_player(player, v.n());
  const Subset bit = singleton(player);
  std::vector<Rational> w(v.n());
  for (unsigned t = 0; t < v.n(); ++t) w[t] = weight(t);
  Rational acc = 0;
  for_each_subset(full_set(v.n()) & ~bit, [&](Subset t) {
    acc += w[cardinality(t)] * (v[t | bit] - v[t]);
  });
  return acc;
}

/// sum_{T⊆N∖S} coeff(t) Delta_S v(T).
template <class Coeff>
Rational derivative_sum(const SetFunction& v, Subset s, Coeff&& coeff) {
  check_subset(s, v.n());
  const unsigned rest = v.n() - cardinality(s);
  std::vector<Rational> c(rest + 1);
  for (unsigned t = 0; t <= rest; ++t) c[t] = coeff(t);
  Rational acc = 0;
  for_each_subset(full_set(v.n()) & ~s, [&](Subset t) {
    acc += c[cardinality(t)] * discrete_derivative(v, s, t);
  });
  return acc;
}

/// sum_{T⊇S} coeff(t) a(T), evaluated directly for a single coalition.
template <class Coeff>
Rational superset_sum(const MobiusRep& a, Subset s, Coeff&& coeff) {
  check_subset(s, a.n());
  Rational acc = 0;
  for_each_superset(s, full_set(a.n()), [&](Subset t) {
    if (a[t] != 0) acc += coeff(cardinality(t)) * a[t];
  });
  return acc;
}

}  // namespace detail

inline Rational shapley_power(const SetFunction& v, unsigned player) {
  const unsigned n = v.n();
  return detail::weighted_marginals(v, player, [n](unsigned t) {
    return make_rational(Integer(1), Integer(n) * binomial(n - 1, t));
  });
}

inline Rational banzhaf_power(const SetFunction& v, unsigned player) {
  const unsigned n = v.n();
  return detail::weighted_marginals(v, player, [n](unsigned) {
    return make_rational(Integer(1), Integer(1) << (n - 1));
  });
}

/// Power index of I_M: weights 6 (n-t)! (t+1)! / (n+2)!.
inline Rational im_power(const SetFunction& v, unsigned player) {
  const unsigned n = v.n();
  return detail::weighted_marginals(v, player, [n](unsigned t) {
    return make_rational(6 * factorial(n - t) * factorial(t + 1),
                         factorial(n + 2));
  });
}

// Interaction indices -------------------------------------------------------

inline Rational banzhaf_interaction(const SetFunction& v, Subset s,
                                    IndexForm form = IndexForm::mobius) {
  check_subset(s, v.n());
  const unsigned cs = cardinality(s);
  if (form == IndexForm::derivative) {
    const unsigned n = v.n();
    return detail::derivative_sum(v, s, [&](unsigned) {
      return make_rational(Integer(1), Integer(1) << (n - cs));
    });
  }
  return detail::superset_sum(mobius_transform(v), s, [&](unsigned t) {
    return make_rational(Integer(1), Integer(1) << (t - cs));
  });
}

inline Rational im_index(const SetFunction& v, Subset s,
                         IndexForm form = IndexForm::mobius) {
  check_subset(s, v.n());
  const unsigned cs = cardinality(s);
  if (form == IndexForm::derivative) {
    const unsigned n = v.n();
    return detail::derivative_sum(
        v, s, [&](unsigned t) { return p_coefficient(cs, t, n); });
  }
  return detail::superset_sum(mobius_transform(v), s, [&](unsigned t) {
    return q_coefficient(cs, t);
  });
}

/// Index values on every coalition. The Möbius form runs in O(n^2 2^n); the
/// derivative form evaluates each coalition separately and costs O(4^n).
inline InteractionTable interaction_table(const SetFunction& v, IndexKind kind,
                                          IndexForm form = IndexForm::mobius) {
  InteractionTable table{kind, MobiusRep(v.n())};
  if (form == IndexForm::mobius) {
    const MobiusRep a = mobius_transform(v);
    if (kind == IndexKind::banzhaf) {
      table.values = superset_weighted_sum(a, [](unsigned s, unsigned t) {
        return make_rational(Integer(1), Integer(1) << (t - s));
      });
    } else {
      table.values = superset_weighted_sum(
          a, [](unsigned s, unsigned t) { return q_coefficient(s, t); });
    }
    return table;
  }
  for (Subset s = 0; s < v.size(); ++s)
    table.values.set(s, kind == IndexKind::banzhaf
                            ? banzhaf_interaction(v, s, IndexForm::derivative)
                            : im_index(v, s, IndexForm::derivative));
  return table;
}

/// Recovers the Möbius transform from a full I_M table:
///   a(S) = sum_{T⊇S} h_t^s I_M(v,T).
inline MobiusRep im_inverse(const InteractionTable& table) {
  if (table.kind != IndexKind::im)
    throw std::invalid_argument("im_inverse needs an I_M table");
  return superset_weighted_sum(
      table.values, [](unsigned s, unsigned t) { return h_coefficient(s, t); });
}

}  // namespace lovasz

#endif  // LOVASZ_INTERACTION_HPP
