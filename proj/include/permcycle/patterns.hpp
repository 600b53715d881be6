#pragma once

// Classical pattern containment and membership in the two classes
// Av(312,4321) and Av(321,4123), plus the restricted slices S' and S''
// used as the fourth block of each multiset.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permcycle/errors.hpp"
#include "permcycle/permutation.hpp"

namespace permcycle {

using Pattern = Permutation;

enum class ClassId { class312_4321, class321_4123 };

inline std::string to_string(ClassId c) {
  return c == ClassId::class312_4321 ? "312,4321" : "321,4123";
}

/// Accepts exactly "312,4321" or "321,4123".
inline std::optional<ClassId> parse_class(std::string_view text) {
  if (text == "312,4321") return ClassId::class312_4321;
  if (text == "321,4123") return ClassId::class321_4123;
  return std::nullopt;
}

inline const std::array<Pattern, 2>& class_patterns(ClassId c) {
  static const std::array<Pattern, 2> first{Pattern{3, 1, 2}, Pattern{4, 3, 2, 1}};
  static const std::array<Pattern, 2> second{Pattern{3, 2, 1}, Pattern{4, 1, 2, 3}};
  return c == ClassId::class312_4321 ? first : second;
}

namespace detail {

// Depth-first choice of increasing positions. Each newly chosen entry is
// checked against every earlier one, so a prefix that already breaks the
// relative order of the pattern is abandoned immediately. Visits complete
// occurrences in lexicographic order of their index tuples; `visit` returns
// false to stop the search.
template <class Visit>
bool search_occurrences(std::span<const int> text, std::span<const int> pattern, std::vector<int>& chosen,
                        std::size_t from, Visit& visit) {
  const std::size_t depth = chosen.size();
  if (depth == pattern.size()) return visit(std::as_const(chosen));
  const std::size_t remaining = pattern.size() - depth;
  for (std::size_t i = from; i + remaining <= text.size(); ++i) {
    bool consistent = true;
    for (std::size_t r = 0; r < depth && consistent; ++r)
      consistent = (text[static_cast<std::size_t>(chosen[r])] < text[i]) == (pattern[r] < pattern[depth]);
    if (!consistent) continue;
    chosen.push_back(static_cast<int>(i));
    const bool keep_going = search_occurrences(text, pattern, chosen, i + 1, visit);
    chosen.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

inline bool contains(std::span<const int> text, std::span<const int> pattern) {
  if (pattern.size() > text.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  bool found = false;
  auto stop_on_first = [&found](const std::vector<int>&) {
    found = true;
    return false;
  };
  search_occurrences(text, pattern, chosen, 0, stop_on_first);
  return found;
}

inline bool in_class(std::span<const int> v, ClassId c) {
  for (const auto& s : class_patterns(c))
    if (contains(v, s.values())) return false;
  return true;
}

}  // namespace detail

inline bool contains(const Permutation& p, const Pattern& s) { return detail::contains(p.values(), s.values()); }

/// All occurrences of `s` in `p` as 1-based increasing index tuples, in
/// lexicographic order.
inline std::vector<std::vector<int>> occurrences(const Permutation& p, const Pattern& s) {
  std::vector<std::vector<int>> out;
  if (s.size() > p.size()) return out;
  std::vector<int> chosen;
  auto collect = [&out](const std::vector<int>& idx) {
    auto& tuple = out.emplace_back(idx);
    for (int& i : tuple) ++i;
    return true;
  };
  detail::search_occurrences(p.values(), s.values(), chosen, 0, collect);
  return out;
}

inline bool in_class(const Permutation& p, ClassId c) { return detail::in_class(p.values(), c); }

/// S'_m(312,4321): last entry not fixed. S''_m(321,4123): value m not at
/// position m-1.
inline bool in_restricted(const Permutation& p, ClassId c) {
  const int m = p.size();
  if (c == ClassId::class312_4321) {
    if (m < 1) throw PreconditionError("S' needs size >= 1");
    return in_class(p, c) && p(m) != m;
  }
  if (m < 2) throw PreconditionError("S'' needs size >= 2");
  return in_class(p, c) && p(m - 1) != m;
}

/// True when the largest value sits in one of the last three positions,
/// which every member of either class satisfies.
inline bool max_position_check(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return true;
  return p.position_of(n) >= n - 2;
}

}  // namespace permcycle
