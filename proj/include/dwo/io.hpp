#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dwo/error.hpp"
#include "dwo/reduction.hpp"
#include "dwo/relations.hpp"

// Profile documents come in two forms.
//
// Structured (JSON):
//   {"alternatives": ["a", "b", "c"],
//    "voters": [{"tiers": [["a", "b"], ["c"]]},
//               {"pairs": [["b", "c"], ["c", "b"]]}]}
// `pairs` lists off-diagonal members; the diagonal is implied.
//
// Text:
//   # comment
//   alternatives: a b c
//   voter: a b > c
//   voter: b ~ c > a

namespace dwo::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// 1-based line and column of a 1-based byte offset.
inline std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

/// Splits "a b > c ~ d" into tiers of tokens. `>` separates tiers; `~` and
/// whitespace separate names.
struct TierExpression {
  std::vector<std::vector<Token>> tiers;
};

inline bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '>' && c != '~' && c != '#' &&
         c != ':';
}

inline TierExpression split_tiers(std::string_view s, std::size_t line, std::size_t column0) {
  TierExpression out;
  out.tiers.emplace_back();
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '~') {
      ++i;
    } else if (c == '>') {
      out.tiers.emplace_back();
      ++i;
    } else if (is_name_char(c)) {
      const std::size_t start = i;
      while (i < s.size() && is_name_char(s[i])) ++i;
      out.tiers.back().push_back({std::string(s.substr(start, i - start)), column0 + start});
    } else {
      throw ParseError(line, column0 + i, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::vector<std::size_t>> resolve_tiers(const Universe& u,
                                                           const TierExpression& expr,
                                                           std::size_t line, bool allow_empty) {
  std::vector<std::vector<std::size_t>> tiers;
  std::vector<bool> seen(u->size(), false);
  for (const auto& tier : expr.tiers) {
    auto& out = tiers.emplace_back();
    for (const auto& tok : tier) {
      auto idx = u->find(tok.text);
      if (!idx) throw ParseError(line, tok.column, "unknown alternative '" + tok.text + "'");
      if (seen[*idx]) throw ParseError(line, tok.column, "alternative '" + tok.text + "' repeated");
      seen[*idx] = true;
      out.push_back(*idx);
    }
    if (tier.empty() && !allow_empty) throw ParseError(line, 1, "empty tier");
  }
  for (std::size_t i = 0; i < u->size(); ++i)
    if (!seen[i]) throw ParseError(line, 1, "alternative '" + u->name(i) + "' is not ranked");
  return tiers;
}

}  // namespace detail

inline Profile parse_profile_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, column] = detail::locate(text, e.byte);
    std::string msg = e.what();
    if (auto pos = msg.find("; "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(line, column, msg);
  }
  auto fail = [](const std::string& msg) -> ParseError { return ParseError(1, 1, msg); };
  if (!doc.is_object() || !doc.contains("alternatives") || !doc.contains("voters"))
    throw fail("expected an object with 'alternatives' and 'voters'");
  const auto& alts = doc["alternatives"];
  if (!alts.is_array()) throw fail("'alternatives' must be a list of names");
  std::vector<std::string> names;
  for (const auto& a : alts) {
    if (!a.is_string()) throw fail("alternative names must be strings");
    names.push_back(a.get<std::string>());
  }
  Universe u;
  try {
    u = make_universe(std::move(names));
  } catch (const ValidationError& e) {
    throw fail(e.what());
  }

  const auto& voters = doc["voters"];
  if (!voters.is_array()) throw fail("'voters' must be a list");
  std::vector<BinaryRelation> rels;
  for (std::size_t v = 0; v < voters.size(); ++v) {
    const auto& voter = voters[v];
    const std::string where = "voter " + std::to_string(v + 1) + ": ";
    auto name_index = [&](const Json& j) {
      if (!j.is_string()) throw fail(where + "alternative names must be strings");
      auto idx = u->find(j.get<std::string>());
      if (!idx) throw fail(where + "unknown alternative '" + j.get<std::string>() + "'");
      return *idx;
    };
    if (!voter.is_object() || voter.contains("tiers") == voter.contains("pairs"))
      throw fail(where + "expected exactly one of 'tiers' or 'pairs'");
    if (voter.contains("tiers")) {
      const auto& tiers = voter["tiers"];
      if (!tiers.is_array()) throw fail(where + "'tiers' must be a list of lists");
      std::vector<std::vector<std::size_t>> idx;
      for (const auto& tier : tiers) {
        if (!tier.is_array()) throw fail(where + "each tier must be a list");
        auto& out = idx.emplace_back();
        for (const auto& n : tier) out.push_back(name_index(n));
      }
      try {
        rels.push_back(relation_from_tiers(u, idx));
      } catch (const ValidationError& e) {
        throw fail(where + e.what());
      }
    } else {
      const auto& pairs = voter["pairs"];
      if (!pairs.is_array()) throw fail(where + "'pairs' must be a list of [x, y]");
      BinaryRelation r(u);
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (const auto& pr : pairs) {
        if (!pr.is_array() || pr.size() != 2) throw fail(where + "each pair must be [x, y]");
        const std::size_t a = name_index(pr[0]), b = name_index(pr[1]);
        if (!seen.emplace(a, b).second)
          throw fail(where + "duplicate pair [" + u->name(a) + ", " + u->name(b) + "]");
        r.add(a, b);
      }
      rels.push_back(std::move(r));
    }
  }
  if (rels.empty()) throw fail("profile needs at least one voter");
  return Profile(u, std::move(rels));
}

inline Profile parse_profile_text(std::string_view text) {
  std::optional<Universe> u;
  std::vector<BinaryRelation> rels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, 1, "expected 'alternatives:' or 'voter:'");
    const std::string_view key = detail::trim(line.substr(0, colon));
    const std::string_view rest = line.substr(colon + 1);
    const std::size_t rest_col = colon + 2;

    if (key == "alternatives") {
      if (u) throw ParseError(line_no, 1, "'alternatives' given twice");
      auto expr = detail::split_tiers(rest, line_no, rest_col);
      if (expr.tiers.size() != 1) throw ParseError(line_no, rest_col, "'>' not allowed here");
      std::vector<std::string> names;
      for (auto& tok : expr.tiers[0]) names.push_back(tok.text);
      try {
        u = make_universe(std::move(names));
      } catch (const ValidationError& e) {
        throw ParseError(line_no, rest_col, e.what());
      }
    } else if (key == "voter") {
      if (!u) throw ParseError(line_no, 1, "'voter' before 'alternatives'");
      auto expr = detail::split_tiers(rest, line_no, rest_col);
      rels.push_back(relation_from_tiers(*u, detail::resolve_tiers(*u, expr, line_no, false)));
    } else {
      throw ParseError(line_no, 1, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!u) throw ParseError(line_no, 1, "missing 'alternatives' line");
  if (rels.empty()) throw ParseError(line_no, 1, "profile needs at least one voter");
  return Profile(*u, std::move(rels));
}

/// JSON when the first non-blank character is '{', text otherwise.
inline Profile parse_profile(std::string_view text) {
  const auto body = detail::trim(text);
  if (!body.empty() && body.front() == '{') return parse_profile_json(text);
  return parse_profile_text(text);
}

inline Profile read_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_profile(ss.str());
}

/// Tiers of r when it is a weak order, best first.
inline std::optional<std::vector<std::vector<std::size_t>>> as_tiers(const BinaryRelation& r) {
  const std::size_t m = r.size();
  if (!is_complete(r)) return std::nullopt;
  // In a weak order, better alternatives weakly dominate more alternatives.
  std::vector<std::pair<std::size_t, std::size_t>> by_degree;
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t d = 0;
    for (std::size_t b = 0; b < m; ++b) d += r.contains(a, b);
    by_degree.emplace_back(d, a);
  }
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<std::vector<std::size_t>> tiers;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0 || by_degree[i].first != by_degree[i - 1].first) tiers.emplace_back();
    tiers.back().push_back(by_degree[i].second);
  }
  for (auto& t : tiers) std::sort(t.begin(), t.end());
  if (relation_from_tiers(r.universe(), tiers) != r) return std::nullopt;
  return tiers;
}

/// Weak-order voters are written as tiers, all others as pair lists.
inline Json profile_to_json(const Profile& p) {
  const auto& u = *p.universe();
  Json voters = Json::array();
  for (const auto& r : p.voters()) {
    if (auto tiers = as_tiers(r)) {
      Json t = Json::array();
      for (const auto& tier : *tiers) {
        Json names = Json::array();
        for (auto i : tier) names.push_back(u.name(i));
        t.push_back(std::move(names));
      }
      voters.push_back({{"tiers", std::move(t)}});
    } else {
      Json pairs = Json::array();
      for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
          if (a != b && r.contains(a, b)) pairs.push_back({u.name(a), u.name(b)});
      voters.push_back({{"pairs", std::move(pairs)}});
    }
  }
  return Json{{"alternatives", u.names()}, {"voters", std::move(voters)}};
}

/// "a b > c": at most two tiers naming every alternative once. A lone tier is
/// the all-tied order; either side of '>' may be empty.
inline DichotomousOrder parse_order(const Universe& u, std::string_view expr) {
  auto tiers = detail::split_tiers(expr, 1, 1);
  if (tiers.tiers.size() > 2) throw ParseError(1, 1, "an order has at most two tiers");
  auto idx = detail::resolve_tiers(u, tiers, 1, true);
  return DichotomousOrder(u, idx[0], idx.size() > 1 ? idx[1] : std::vector<std::size_t>{});
}

inline Json order_to_json(const DichotomousOrder& o) {
  const auto& u = *o.universe();
  Json top = Json::array(), bottom = Json::array();
  for (auto i : o.top()) top.push_back(u.name(i));
  for (auto i : o.bottom()) bottom.push_back(u.name(i));
  return Json{{"top", std::move(top)}, {"bottom", std::move(bottom)}};
}

inline Json result_to_json(const SolveResult& r, std::string_view variant,
                           std::optional<bool> oracle_agreement = std::nullopt) {
  const auto& u = *r.order.universe();
  Json doc{{"order", order_to_json(r.order)},
           {"disagreements", r.disagreements},
           {"cut_capacity", r.cut_capacity},
           {"variant", std::string(variant)}};
  if (r.per_pair) {
    Json rows = Json::array();
    for (const auto& pc : *r.per_pair)
      rows.push_back({{"pair", {u.name(pc.first), u.name(pc.second)}},
                      {"relation", pc.tied ? "tied" : "strict"},
                      {"cost", pc.cost}});
    doc["per_pair"] = std::move(rows);
  }
  if (oracle_agreement) doc["oracle_agreement"] = *oracle_agreement;
  return doc;
}

}  // namespace dwo::io
