#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dwo/error.hpp"

namespace dwo {

/// Exact integer type for scores, statistics and capacities.
using Count = std::int64_t;

/// Ordered list of distinct alternative names; alternatives are addressed by index.
class AlternativeSet {
 public:
  explicit AlternativeSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw ValidationError("alternative set must not be empty");
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw ValidationError("alternative names must be non-empty");
      if (!index_.emplace(names_[i], i).second)
        throw ValidationError("duplicate alternative '" + names_[i] + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw ValidationError("unknown alternative '" + name + "'");
    return *i;
  }

  friend bool operator==(const AlternativeSet& x, const AlternativeSet& y) {
    return x.names_ == y.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Universe = std::shared_ptr<const AlternativeSet>;

inline Universe make_universe(std::vector<std::string> names) {
  return std::make_shared<const AlternativeSet>(std::move(names));
}

inline bool same_universe(const Universe& x, const Universe& y) {
  return x == y || (x && y && *x == *y);
}

/// Reflexive binary relation over a universe, stored as a packed m x m bit matrix.
class BinaryRelation {
 public:
  explicit BinaryRelation(Universe universe)
      : universe_(std::move(universe)),
        m_(universe_->size()),
        words_per_row_((m_ + 63) / 64),
        bits_(m_ * words_per_row_, 0) {
    for (std::size_t a = 0; a < m_; ++a) set(a, a);
  }

  BinaryRelation(Universe universe, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
      : BinaryRelation(std::move(universe)) {
    for (auto [a, b] : pairs) add(a, b);
  }

  /// Adds (a, b). Relations are built through this and treated as values afterwards.
  void add(std::size_t a, std::size_t b) {
    if (a >= m_ || b >= m_) throw ValidationError("alternative index out of range");
    set(a, b);
  }

  bool contains(std::size_t a, std::size_t b) const noexcept {
    return (bits_[a * words_per_row_ + b / 64] >> (b % 64)) & 1U;
  }

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return m_; }

  /// Number of ordered pairs in the relation, diagonal included.
  std::size_t cardinality() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Ordered pairs contained in exactly one of the two relations.
  std::size_t symmetric_difference(const BinaryRelation& other) const {
    if (!same_universe(universe_, other.universe_)) throw UniverseMismatch();
    std::size_t c = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(bits_[i] ^ other.bits_[i]));
    return c;
  }

  friend bool operator==(const BinaryRelation& x, const BinaryRelation& y) {
    return same_universe(x.universe_, y.universe_) && x.bits_ == y.bits_;
  }

 private:
  void set(std::size_t a, std::size_t b) noexcept {
    bits_[a * words_per_row_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }

  Universe universe_;
  std::size_t m_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

/// The sequence of voter relations over one shared universe.
class Profile {
 public:
  Profile(Universe universe, std::vector<BinaryRelation> voters)
      : universe_(std::move(universe)), voters_(std::move(voters)) {
    if (voters_.empty()) throw ValidationError("profile needs at least one voter");
    for (const auto& r : voters_)
      if (!same_universe(universe_, r.universe())) throw UniverseMismatch();
  }

  const Universe& universe() const noexcept { return universe_; }
  std::size_t alternatives() const noexcept { return universe_->size(); }
  std::size_t size() const noexcept { return voters_.size(); }
  const std::vector<BinaryRelation>& voters() const noexcept { return voters_; }
  const BinaryRelation& operator[](std::size_t i) const { return voters_.at(i); }

  friend bool operator==(const Profile& x, const Profile& y) {
    return same_universe(x.universe_, y.universe_) && x.voters_ == y.voters_;
  }

 private:
  Universe universe_;
  std::vector<BinaryRelation> voters_;
};

template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t m, T fill = T{}) : m_(m), data_(m * m, fill) {}

  T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * m_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * m_ + c]; }
  std::size_t size() const noexcept { return m_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<T> data_;
};

/// Per ordered pair voter counts: strict preference, tie, incomparability.
struct PairStats {
  SquareMatrix<Count> n_strict;  // voters with (a,b) and not (b,a)
  SquareMatrix<Count> e_tied;    // voters with both
  SquareMatrix<Count> i_incomp;  // voters with neither
  Count n_voters = 0;

  std::size_t alternatives() const noexcept { return n_strict.size(); }

  /// First pair {a,b} (a < b) with a nonzero incomparability count, if any.
  std::optional<std::pair<std::size_t, std::size_t>> incomplete_pair() const {
    const std::size_t m = alternatives();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (i_incomp(a, b) != 0) return std::pair{a, b};
    return std::nullopt;
  }

  bool complete() const { return !incomplete_pair(); }
};

/// Ordered 2-partition (top, bottom) of a universe. Either class may be empty.
class DichotomousOrder {
 public:
  /// `in_top[i]` places alternative i in the top class.
  DichotomousOrder(Universe universe, std::vector<bool> in_top)
      : universe_(std::move(universe)), in_top_(std::move(in_top)) {
    if (in_top_.size() != universe_->size())
      throw ValidationError("class assignment does not cover the universe");
  }

  DichotomousOrder(Universe universe, const std::vector<std::size_t>& top,
                   const std::vector<std::size_t>& bottom)
      : universe_(std::move(universe)) {
    const std::size_t m = universe_->size();
    std::vector<int> seen(m, 0);
    auto mark = [&](std::size_t i) {
      if (i >= m) throw ValidationError("alternative index out of range");
      if (seen[i]++) throw ValidationError("alternative '" + universe_->name(i) + "' appears twice");
    };
    in_top_.assign(m, false);
    for (auto i : top) {
      mark(i);
      in_top_[i] = true;
    }
    for (auto i : bottom) mark(i);
    for (std::size_t i = 0; i < m; ++i)
      if (!seen[i]) throw ValidationError("alternative '" + universe_->name(i) + "' is missing");
  }

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return in_top_.size(); }
  bool in_top(std::size_t i) const { return in_top_.at(i); }
  bool same_class(std::size_t a, std::size_t b) const { return in_top_.at(a) == in_top_.at(b); }

  /// Class members in declaration order.
  std::vector<std::size_t> top() const { return members(true); }
  std::vector<std::size_t> bottom() const { return members(false); }

  BinaryRelation induced_relation() const {
    BinaryRelation r(universe_);
    const std::size_t m = size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && (same_class(a, b) || in_top_[a])) r.add(a, b);
    return r;
  }

  friend bool operator==(const DichotomousOrder& x, const DichotomousOrder& y) {
    return same_universe(x.universe_, y.universe_) && x.in_top_ == y.in_top_;
  }

 private:
  std::vector<std::size_t> members(bool top) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < in_top_.size(); ++i)
      if (in_top_[i] == top) out.push_back(i);
    return out;
  }

  Universe universe_;
  std::vector<bool> in_top_;
};

/// Weak order whose tiers are listed from most to least preferred.
inline BinaryRelation relation_from_tiers(const Universe& universe,
                                          const std::vector<std::vector<std::size_t>>& tiers) {
  const std::size_t m = universe->size();
  std::vector<std::size_t> tier_of(m, m + 1);
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    if (tiers[t].empty()) throw ValidationError("tier " + std::to_string(t + 1) + " is empty");
    for (auto i : tiers[t]) {
      if (i >= m) throw ValidationError("unknown alternative index " + std::to_string(i));
      if (tier_of[i] != m + 1)
        throw ValidationError("alternative '" + universe->name(i) + "' appears in more than one tier");
      tier_of[i] = t;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (tier_of[i] == m + 1)
      throw ValidationError("alternative '" + universe->name(i) + "' is not ranked");

  BinaryRelation r(universe);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (tier_of[a] <= tier_of[b]) r.add(a, b);
  return r;
}

inline BinaryRelation relation_from_tiers(const Universe& universe,
                                          const std::vector<std::vector<std::string>>& tiers) {
  std::vector<std::vector<std::size_t>> idx;
  idx.reserve(tiers.size());
  for (const auto& tier : tiers) {
    auto& out = idx.emplace_back();
    for (const auto& name : tier) out.push_back(universe->index_of(name));
  }
  return relation_from_tiers(universe, idx);
}

/// First pair {a,b}, a < b, left incomparable by r.
inline std::optional<std::pair<std::size_t, std::size_t>> incomparable_pair(const BinaryRelation& r) {
  const std::size_t m = r.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!r.contains(a, b) && !r.contains(b, a)) return std::pair{a, b};
  return std::nullopt;
}

inline bool is_complete(const BinaryRelation& r) { return !incomparable_pair(r); }

/// Number of ordered pairs on which the two relations disagree.
inline Count distance(const BinaryRelation& r, const BinaryRelation& s) {
  return static_cast<Count>(r.symmetric_difference(s));
}

inline PairStats pair_stats(const Profile& p) {
  const std::size_t m = p.alternatives();
  PairStats st{SquareMatrix<Count>(m), SquareMatrix<Count>(m), SquareMatrix<Count>(m),
               static_cast<Count>(p.size())};
  // Voter-major accumulation: only the upper triangle is touched in the hot loop.
  for (const auto& r : p.voters()) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const bool x = r.contains(a, b), y = r.contains(b, a);
        st.n_strict(a, b) += x && !y;
        st.n_strict(b, a) += y && !x;
        st.e_tied(a, b) += x && y;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      st.e_tied(b, a) = st.e_tied(a, b);
      st.i_incomp(a, b) = st.i_incomp(b, a) =
          st.n_voters - st.n_strict(a, b) - st.n_strict(b, a) - st.e_tied(a, b);
    }
  }
  return st;
}

/// Total disagreements between the profile and the order's induced relation.
inline Count score(const Profile& p, const DichotomousOrder& o) {
  if (!same_universe(p.universe(), o.universe())) throw UniverseMismatch();
  const BinaryRelation induced = o.induced_relation();
  Count total = 0;
  for (const auto& r : p.voters()) total += distance(r, induced);
  return total;
}

/// Disagreement cost of one unordered pair {a,b} under o, from complete statistics.
inline Count pair_cost(const PairStats& st, const DichotomousOrder& o, std::size_t a, std::size_t b) {
  if (o.same_class(a, b)) return st.n_strict(a, b) + st.n_strict(b, a);
  if (!o.in_top(a)) std::swap(a, b);
  return 2 * st.n_strict(b, a) + st.e_tied(b, a);
}

/// Same value as score() for complete profiles, computed from pair statistics alone.
inline Count score_closed_form(const PairStats& st, const DichotomousOrder& o) {
  const std::size_t m = st.alternatives();
  if (o.size() != m) throw UniverseMismatch();
  if (auto bad = st.incomplete_pair()) {
    throw IncompleteRelationError(std::nullopt, bad->first, bad->second,
                                  "pair (" + o.universe()->name(bad->first) + ", " +
                                      o.universe()->name(bad->second) +
                                      ") is incomparable for some voter");
  }
  Count total = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) total += pair_cost(st, o, a, b);
  return total;
}

}  // namespace dwo
