#pragma once

// Permutations of [n] in one-line and canonical cycle notation, together with
// the four statistics (cyc, fix, exc, inv) and the involution test.
//
// Public indexing is 1-based: p(i) is the image of i. Storage is a plain
// vector holding p(1), ..., p(n).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permcycle/errors.hpp"

namespace permcycle {

namespace detail {

// Kernels over raw one-line values. The oracle calls these directly on its
// scratch buffer; Permutation wraps them.

inline int count_cycles(std::span<const int> v) {
  std::vector<char> seen(v.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(v[j] - 1)) seen[j] = 1;
  }
  return cycles;
}

inline int count_fixed_points(std::span<const int> v) {
  int fix = 0;
  for (std::size_t i = 0; i < v.size(); ++i) fix += v[i] == static_cast<int>(i) + 1;
  return fix;
}

inline int count_excedances(std::span<const int> v) {
  int exc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) exc += v[i] > static_cast<int>(i) + 1;
  return exc;
}

/// Definitional O(n^2) inversion count.
inline int count_inversions(std::span<const int> v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
  return inv;
}

/// O(n log n) inversion count with a Fenwick tree over values.
inline std::int64_t count_inversions_fenwick(std::span<const int> v) {
  const std::size_t n = v.size();
  std::vector<int> tree(n + 1, 0);
  std::int64_t inv = 0;
  for (std::size_t seen = 0; seen < n; ++seen) {
    int less_or_equal = 0;
    for (int k = v[seen]; k > 0; k -= k & -k) less_or_equal += tree[static_cast<std::size_t>(k)];
    inv += static_cast<std::int64_t>(seen) - less_or_equal;
    for (auto k = static_cast<std::size_t>(v[seen]); k <= n; k += k & (~k + 1)) ++tree[k];
  }
  return inv;
}

inline bool is_involution(std::span<const int> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[static_cast<std::size_t>(v[i] - 1)] != static_cast<int>(i) + 1) return false;
  return true;
}

inline std::string render_values(std::span<const int> v) {
  std::string out;
  const bool compact = v.size() <= 9;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

class Permutation {
 public:
  /// The empty permutation (n = 0), used only as a series base case.
  Permutation() = default;

  /// Validates that `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<char> seen(values_.size() + 1, 0);
    for (int v : values_) {
      if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
        throw InvalidPermutation("not a permutation of 1.." + std::to_string(size()) + ": " +
                                 detail::render_values(values_));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Trusted{});
  }

  /// Parses one-line notation. Text without separators is read digit by
  /// digit (n <= 9); otherwise entries are split on spaces or commas.
  static Permutation parse(std::string_view text) {
    std::vector<int> v;
    const bool separated = text.find_first_of(" ,") != std::string_view::npos;
    if (!separated) {
      for (char c : text) {
        if (c < '0' || c > '9') throw InvalidPermutation("bad character in permutation: " + std::string(text));
        v.push_back(c - '0');
      }
    } else {
      int current = -1;
      for (char c : text) {
        if (c >= '0' && c <= '9') {
          current = (current < 0 ? 0 : current * 10) + (c - '0');
        } else if (c == ' ' || c == ',') {
          if (current >= 0) v.push_back(current);
          current = -1;
        } else {
          throw InvalidPermutation("bad character in permutation: " + std::string(text));
        }
      }
      if (current >= 0) v.push_back(current);
    }
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Image of i, 1 <= i <= size().
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  /// Position (1-based) holding value v.
  int position_of(int v) const {
    auto it = std::find(values_.begin(), values_.end(), v);
    return static_cast<int>(it - values_.begin()) + 1;
  }

  std::span<const int> values() const { return values_; }

  std::string to_string() const { return detail::render_values(values_); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

  friend Permutation make_unchecked(std::vector<int> values);

  std::vector<int> values_;
};

/// Wraps values already known to be a permutation. Used on hot paths
/// (oracle, bijections) whose construction guarantees validity.
inline Permutation make_unchecked(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::Trusted{});
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

/// Disjoint cycles in canonical form: each cycle starts at its minimum,
/// cycles ordered by their minima.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  void canonicalize() {
    for (auto& c : cycles) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  std::size_t count() const { return cycles.size(); }

  /// "(1354876)(2)" for n <= 9, "(1 3 5 ...)(...)" otherwise.
  std::string to_string() const {
    int n = 0;
    for (const auto& c : cycles) n += static_cast<int>(c.size());
    std::string out;
    for (const auto& c : cycles) {
      out += '(';
      if (n <= 9) {
        for (int v : c) out += std::to_string(v);
      } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i > 0) out += ' ';
          out += std::to_string(c[i]);
        }
      }
      out += ')';
    }
    return out;
  }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CycleDecomposition& c) { return os << c.to_string(); }

inline CycleDecomposition to_cycles(const Permutation& p) {
  CycleDecomposition out;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  // Scanning starts in increasing order, so each cycle is found at its
  // minimum and cycles come out sorted.
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int j = start; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      cycle.push_back(j);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

inline Permutation from_cycles(const CycleDecomposition& c, int n) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : c.cycles) {
    if (cycle.empty()) throw MalformedDecomposition("empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n) throw MalformedDecomposition("element out of range: " + std::to_string(from));
      auto& slot = v[static_cast<std::size_t>(from - 1)];
      if (slot != 0) throw MalformedDecomposition("element appears twice: " + std::to_string(from));
      slot = to;
    }
  }
  for (int i = 0; i < n; ++i)
    if (v[static_cast<std::size_t>(i)] == 0)
      throw MalformedDecomposition("element missing: " + std::to_string(i + 1));
  return make_unchecked(std::move(v));
}

struct StatVector {
  int cyc = 0;
  int fix = 0;
  int exc = 0;
  int inv = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const StatVector& s) {
  return os << "(cyc " << s.cyc << ", fix " << s.fix << ", exc " << s.exc << ", inv " << s.inv << ")";
}

inline StatVector stats(std::span<const int> v) {
  return {detail::count_cycles(v), detail::count_fixed_points(v), detail::count_excedances(v),
          detail::count_inversions(v)};
}

inline StatVector stats(const Permutation& p) { return stats(p.values()); }

inline bool is_involution(const Permutation& p) { return detail::is_involution(p.values()); }

}  // namespace permcycle
