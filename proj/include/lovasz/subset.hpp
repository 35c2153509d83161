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

#ifndef LOVASZ_SUBSET_HPP
#define LOVASZ_SUBSET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lovasz {

/// Subsets of N = {1,...,n} as bitmasks; player i (1-based) is bit i-1.
using Subset = std::uint32_t;

inline constexpr unsigned max_players = 16;

inline constexpr Subset empty_set = 0;

inline constexpr Subset full_set(unsigned n) {
  return n == 0 ? 0u : static_cast<Subset>((std::uint64_t{1} << n) - 1);
}

inline constexpr std::size_t lattice_size(unsigned n) {
  return std::size_t{1} << n;
}

inline constexpr unsigned cardinality(Subset s) {
  return static_cast<unsigned>(std::popcount(s));
}

inline constexpr Subset singleton(unsigned player) {
  return Subset{1} << (player - 1);
}

inline constexpr bool contains(Subset s, unsigned player) {
  return (s >> (player - 1)) & 1u;
}

inline constexpr bool is_subset_of(Subset s, Subset t) { return (s & ~t) == 0; }

inline void check_player_count(unsigned n) {
  if (n > max_players)
    throw std::invalid_argument("player count " + std::to_string(n) +
                                " exceeds the cap of " +
                                std::to_string(max_players));
}

inline void check_subset(Subset s, unsigned n) {
  if (!is_subset_of(s, full_set(n)))
    throw std::out_of_range("subset " + std::to_string(s) +
                            " is not contained in {1,...," +
                            std::to_string(n) + "}");
}

inline void check_player(unsigned player, unsigned n) {
  if (player < 1 || player > n)
    throw std::out_of_range("player " + std::to_string(player) +
                            " out of range 1.." + std::to_string(n));
}

inline Subset make_subset(std::initializer_list<unsigned> players) {
  Subset s = 0;
  for (unsigned p : players) s |= singleton(p);
  return s;
}

/// Ascending 1-based player indices of s.
inline std::vector<unsigned> members(Subset s) {
  std::vector<unsigned> out;
  for (unsigned i = 1; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

/// Calls f(sub) for every sub ⊆ s, including ∅ and s itself.
template <class F>
void for_each_subset(Subset s, F&& f) {
  Subset sub = s;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
}

/// Calls f(sup) for every s ⊆ sup ⊆ universe.
template <class F>
void for_each_superset(Subset s, Subset universe, F&& f) {
  Subset rest = universe & ~s;
  for_each_subset(rest, [&](Subset extra) { f(s | extra); });
}

/// Subsets of {1..n} with |S| <= max_card, by cardinality then bitmask.
inline std::vector<Subset> canonical_order(unsigned n, unsigned max_card) {
  std::vector<Subset> order;
  for (Subset s = 0; s < lattice_size(n); ++s)
    if (cardinality(s) <= max_card) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](Subset a, Subset b) {
    return cardinality(a) < cardinality(b);
  });
  return order;
}

/// Cardinality-then-lexicographic order on index lists, used for output.
inline bool lexicographic_less(Subset a, Subset b) {
  if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
  auto ma = members(a);
  auto mb = members(b);
  return ma < mb;
}

}  // namespace lovasz

#endif  // LOVASZ_SUBSET_HPP
