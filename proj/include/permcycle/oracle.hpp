#pragma once

// Brute-force ground truth. Walks S_n in lexicographic order, filters by
// class (and optionally to involutions), and accumulates the joint
// distribution t^cyc u^fix x^exc y^inv. Large queries can be split into
// contiguous lexicographic rank blocks run on separate threads.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "permcycle/errors.hpp"
#include "permcycle/multipoly.hpp"
#include "permcycle/patterns.hpp"
#include "permcycle/permutation.hpp"

namespace permcycle {

inline constexpr int default_oracle_max_n = 11;

struct DistributionQuery {
  std::optional<ClassId> cls;  // nullopt: all of S_n
  int n = 0;
  bool involutions_only = false;
};

struct OracleConfig {
  int max_n = default_oracle_max_n;
  int shards = 1;
};

namespace detail {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// The permutation of rank `rank` (0-based) in lexicographic order of S_n.
inline std::vector<int> unrank_lex(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int remaining = n; remaining > 0; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

/// Membership with the largest-value position test run first. Members of
/// either class have n in one of the last three positions, so most of S_n
/// is rejected before any pattern search.
inline bool in_class_fast(std::span<const int> v, ClassId c) {
  const auto n = static_cast<int>(v.size());
  if (n >= 4) {
    bool near_end = false;
    for (int i = n - 3; i < n; ++i) near_end |= v[static_cast<std::size_t>(i)] == n;
    if (!near_end) return false;
  }
  return in_class(v, c);
}

inline bool passes(std::span<const int> v, const DistributionQuery& q) {
  if (q.involutions_only && !is_involution(v)) return false;
  return !q.cls || in_class_fast(v, *q.cls);
}

inline void check_query(const DistributionQuery& q, const OracleConfig& cfg) {
  if (q.n < 0) throw PreconditionError("negative size");
  if (q.n > cfg.max_n)
    throw ResourceLimitError("n = " + std::to_string(q.n) + " exceeds the oracle cap " + std::to_string(cfg.max_n));
}

/// Visits permutations with lexicographic ranks in [lo, hi).
template <class Visit>
void for_each_in_rank_range(int n, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  if (lo >= hi) return;
  std::vector<int> v = unrank_lex(n, lo);
  for (std::uint64_t r = lo; r < hi; ++r) {
    visit(std::span<const int>(v));
    std::next_permutation(v.begin(), v.end());
  }
}

inline Exponents exponents_of(std::span<const int> v) {
  const StatVector s = stats(v);
  return {static_cast<std::uint16_t>(s.cyc), static_cast<std::uint16_t>(s.fix), static_cast<std::uint16_t>(s.exc),
          static_cast<std::uint16_t>(s.inv)};
}

}  // namespace detail

/// Calls `visit(const Permutation&)` for every permutation matching `q`, in
/// lexicographic order.
template <class Visit>
void for_each_in_class(const DistributionQuery& q, Visit&& visit, const OracleConfig& cfg = {}) {
  detail::check_query(q, cfg);
  detail::for_each_in_rank_range(q.n, 0, detail::factorial(q.n), [&](std::span<const int> v) {
    if (detail::passes(v, q)) visit(make_unchecked(std::vector<int>(v.begin(), v.end())));
  });
}

inline std::vector<Permutation> enumerate_class(const DistributionQuery& q, const OracleConfig& cfg = {}) {
  std::vector<Permutation> out;
  for_each_in_class(q, [&out](const Permutation& p) { out.push_back(p); }, cfg);
  return out;
}

inline std::vector<Permutation> enumerate_class(ClassId c, int n, const OracleConfig& cfg = {}) {
  return enumerate_class(DistributionQuery{c, n, false}, cfg);
}

/// Sum over matching permutations of t^cyc u^fix x^exc y^inv. The result
/// does not depend on cfg.shards.
inline MultiPoly distribution(const DistributionQuery& q, const OracleConfig& cfg = {}) {
  detail::check_query(q, cfg);
  const std::uint64_t total = detail::factorial(q.n);
  const auto shards = static_cast<std::uint64_t>(std::max(1, cfg.shards));

  std::vector<MultiPoly> partial(shards);
  auto run_shard = [&](std::uint64_t s) {
    const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * s / shards);
    const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * (s + 1) / shards);
    std::map<Exponents, std::int64_t> counts;
    detail::for_each_in_rank_range(q.n, lo, hi, [&](std::span<const int> v) {
      if (detail::passes(v, q)) ++counts[detail::exponents_of(v)];
    });
    for (const auto& [e, c] : counts) partial[s].add_term(e, c);
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::uint64_t s = 0; s < shards; ++s) workers.emplace_back(run_shard, s);
  }

  MultiPoly merged;
  for (const auto& p : partial) merged += p;
  return merged;
}

inline MultiPoly distribution(ClassId c, int n, bool involutions_only = false, const OracleConfig& cfg = {}) {
  return distribution(DistributionQuery{c, n, involutions_only}, cfg);
}

/// Number of class members of size n that are a single n-cycle.
inline std::int64_t count_cyclic(ClassId c, int n, const OracleConfig& cfg = {}) {
  std::int64_t count = 0;
  for_each_in_class(
      DistributionQuery{c, n, false}, [&count](const Permutation& p) { count += detail::count_cycles(p.values()) == 1; },
      cfg);
  return count;
}

}  // namespace permcycle
