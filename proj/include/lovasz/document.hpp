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
 * \file lovasz/document.hpp
 *
 * \brief JSON documents holding set functions, Möbius coefficients and index
 *  tables.
 *
 * \code
 * {
 *   "n": 2,
 *   "representation": "game",        // "game" | "mobius" | "index"
 *   "kind": "im",                    // only for "index" documents
 *   "entries": { "": "0", "1,2": "1" }
 * }
 * \endcode
 *
 * Keys are comma-separated, strictly ascending 1-based player indices (the
 * empty string is the empty coalition). Values are "p/q", integers, or
 * decimals, all read exactly. Missing coalitions are zero.
 */

#ifndef LOVASZ_DOCUMENT_HPP
#define LOVASZ_DOCUMENT_HPP

#include <lovasz/rational.hpp>
#include <lovasz/set_function.hpp>
#include <lovasz/subset.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lovasz {

/// Any malformed or inconsistent input document.
struct document_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Representation { game, mobius, index };

inline std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::game:
      return "game";
    case Representation::mobius:
      return "mobius";
    case Representation::index:
      return "index";
  }
  return "?";
}

struct subset_key_order {
  bool operator()(Subset a, Subset b) const { return lexicographic_less(a, b); }
};

struct GameDocument {
  unsigned n = 0;
  Representation representation = Representation::game;
  std::optional<std::string> kind;  // index documents only
  std::map<Subset, Rational, subset_key_order> entries;

  friend bool operator==(const GameDocument&, const GameDocument&) = default;
};

inline std::string subset_key(Subset s) {
  std::string out;
  for (unsigned i : members(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

inline Subset parse_subset_key(std::string_view key, unsigned n) {
  auto fail = [&](const std::string& why) -> Subset {
    throw document_error("subset key \"" + std::string(key) + "\": " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view rest = trim(key);
  if (rest.empty()) return empty_set;

  Subset out = 0;
  unsigned previous = 0;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = trim(rest.substr(0, comma));
    if (token.empty() || token.size() > 3 ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return fail("expected a comma-separated list of player indices");
    const unsigned player = static_cast<unsigned>(std::stoul(std::string(token)));
    if (player < 1 || player > n)
      return fail("player " + std::to_string(player) + " outside 1.." +
                  std::to_string(n));
    if (player <= previous) return fail("indices must be strictly ascending");
    out |= singleton(player);
    previous = player;
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

}  // namespace detail

inline GameDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw document_error("malformed JSON at line " +
                         std::to_string(detail::line_of_offset(text, e.byte)) +
                         ": " + e.what());
  }
  if (!j.is_object()) throw document_error("document must be a JSON object");

  GameDocument doc;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw document_error("field \"n\" must be an integer");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > static_cast<long long>(max_players))
    throw document_error("field \"n\" must lie in 0.." +
                         std::to_string(max_players));
  doc.n = static_cast<unsigned>(n);

  if (!j.contains("representation") || !j["representation"].is_string())
    throw document_error("field \"representation\" must be a string");
  const auto rep = j["representation"].get<std::string>();
  if (rep == "game")
    doc.representation = Representation::game;
  else if (rep == "mobius")
    doc.representation = Representation::mobius;
  else if (rep == "index")
    doc.representation = Representation::index;
  else
    throw document_error("unknown representation \"" + rep +
                         "\" (expected game, mobius or index)");

  if (j.contains("kind")) {
    if (!j["kind"].is_string())
      throw document_error("field \"kind\" must be a string");
    doc.kind = j["kind"].get<std::string>();
  }
  if (doc.representation == Representation::index && !doc.kind)
    throw document_error("index documents need a \"kind\" field");

  if (j.contains("entries")) {
    const auto& entries = j["entries"];
    if (!entries.is_object())
      throw document_error("field \"entries\" must be an object");
    for (const auto& [key, value] : entries.items()) {
      const Subset s = parse_subset_key(key, doc.n);
      Rational r;
      try {
        if (value.is_string())
          r = parse_rational(value.get<std::string>());
        else if (value.is_number_integer())
          r = Rational(Integer(value.dump()));
        else
          throw std::invalid_argument(
              "value must be a rational string such as \"3/10\"");
      } catch (const std::invalid_argument& e) {
        throw document_error("entry \"" + key + "\": " + e.what());
      }
      if (doc.entries.contains(s))
        throw document_error("entry \"" + key + "\" duplicates another key");
      doc.entries.emplace(s, std::move(r));
    }
  }
  return doc;
}

inline std::string format_document(const GameDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["representation"] = std::string(to_string(doc.representation));
  if (doc.kind) j["kind"] = *doc.kind;
  j["entries"] = nlohmann::ordered_json::object();
  for (const auto& [s, value] : doc.entries) j["entries"][subset_key(s)] = to_string(value);
  return j.dump(2) + "\n";
}

template <class Tag>
SubsetTable<Tag> to_table(const GameDocument& doc) {
  SubsetTable<Tag> table(doc.n);
  for (const auto& [s, value] : doc.entries) table.set(s, value);
  return table;
}

/// Document holding the nonzero entries of `table`.
template <class Tag>
GameDocument from_table(const SubsetTable<Tag>& table, Representation rep) {
  GameDocument doc;
  doc.n = table.n();
  doc.representation = rep;
  for (Subset s = 0; s < table.size(); ++s)
    if (table[s] != 0) doc.entries.emplace(s, table[s]);
  return doc;
}

}  // namespace lovasz

#endif  // LOVASZ_DOCUMENT_HPP
