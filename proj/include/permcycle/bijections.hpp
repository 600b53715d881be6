#pragma once

// The four-case maps phi (onto Av_n(312,4321)) and psi (onto Av_n(321,4123)).
//
// Both maps take an element of a multiset M_n built from four smaller class
// slices, tagged with the case that produced it:
//
//   Case1  size n-1, n inserted before the last entry
//   Case2  size n-1, n appended
//   Case3  size n-2, phi: ... n (n-1) last      psi: ... n last (n-1)
//   Case4  size n-2 in S' (phi) or S'' (psi), (n-1) n inserted before the
//          last two entries
//
// Cases 1, 2 and 4 are the same rewrite for both maps; only Case3 differs.
// The maps are defined for n >= 4.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "permcycle/errors.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/patterns.hpp"
#include "permcycle/permutation.hpp"

namespace permcycle {

enum class MapKind { phi, psi };

enum class CaseTag { case1 = 1, case2 = 2, case3 = 3, case4 = 4 };

inline constexpr std::array<CaseTag, 4> all_cases{CaseTag::case1, CaseTag::case2, CaseTag::case3, CaseTag::case4};

inline ClassId target_class(MapKind m) {
  return m == MapKind::phi ? ClassId::class312_4321 : ClassId::class321_4123;
}

inline MapKind map_for(ClassId c) { return c == ClassId::class312_4321 ? MapKind::phi : MapKind::psi; }

inline std::string to_string(MapKind m) { return m == MapKind::phi ? "phi" : "psi"; }

struct CaseTaggedPreimage {
  CaseTag tag = CaseTag::case1;
  Permutation perm;
  int target_size = 0;

  friend bool operator==(const CaseTaggedPreimage&, const CaseTaggedPreimage&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CaseTaggedPreimage& e) {
  return os << "(Case" << static_cast<int>(e.tag) << ", " << e.perm << " -> n=" << e.target_size << ")";
}

struct StatDelta {
  int d_cyc = 0;
  int d_fix = 0;
  int d_exc = 0;
  int d_inv = 0;

  friend bool operator==(const StatDelta&, const StatDelta&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const StatDelta& d) {
  return os << "(" << d.d_cyc << ", " << d.d_fix << ", " << d.d_exc << ", " << d.d_inv << ")";
}

inline StatDelta difference(const StatVector& after, const StatVector& before) {
  return {after.cyc - before.cyc, after.fix - before.fix, after.exc - before.exc, after.inv - before.inv};
}

inline int preimage_size(CaseTag tag, int n) {
  return (tag == CaseTag::case1 || tag == CaseTag::case2) ? n - 1 : n - 2;
}

/// Throws DomainError unless `e` belongs to M_n for the class of `m`.
inline void validate(MapKind m, const CaseTaggedPreimage& e) {
  const int n = e.target_size;
  if (n < 4) throw DomainError("the maps are defined for n >= 4, got n = " + std::to_string(n));
  if (e.perm.size() != preimage_size(e.tag, n))
    throw DomainError("Case" + std::to_string(static_cast<int>(e.tag)) + " expects size " +
                      std::to_string(preimage_size(e.tag, n)) + ", got " + e.perm.to_string());
  const ClassId c = target_class(m);
  const bool ok = e.tag == CaseTag::case4 ? in_restricted(e.perm, c) : in_class(e.perm, c);
  if (!ok)
    throw DomainError(e.perm.to_string() + " is not in the Case" + std::to_string(static_cast<int>(e.tag)) +
                      " block of M_" + std::to_string(n) + "(" + to_string(c) + ")");
}

namespace detail {

inline Permutation apply_unchecked(MapKind m, const CaseTaggedPreimage& e) {
  const int n = e.target_size;
  const auto src = e.perm.values();
  std::vector<int> v(src.begin(), src.end());
  v.reserve(static_cast<std::size_t>(n));
  switch (e.tag) {
    case CaseTag::case1:
      v.insert(v.end() - 1, n);
      break;
    case CaseTag::case2:
      v.push_back(n);
      break;
    case CaseTag::case3: {
      const int last = v.back();
      v.pop_back();
      if (m == MapKind::phi) {
        v.insert(v.end(), {n, n - 1, last});
      } else {
        v.insert(v.end(), {n, last, n - 1});
      }
      break;
    }
    case CaseTag::case4:
      v.insert(v.end() - 2, {n - 1, n});
      break;
  }
  return make_unchecked(std::move(v));
}

}  // namespace detail

inline Permutation apply(MapKind m, const CaseTaggedPreimage& e) {
  validate(m, e);
  return detail::apply_unchecked(m, e);
}

inline Permutation phi_apply(const CaseTaggedPreimage& e) { return apply(MapKind::phi, e); }
inline Permutation psi_apply(const CaseTaggedPreimage& e) { return apply(MapKind::psi, e); }

/// Recovers the case and preimage from the positions of n and n-1.
inline CaseTaggedPreimage invert(MapKind m, const Permutation& p) {
  const int n = p.size();
  if (n < 4) throw DomainError("the maps are defined for n >= 4, got " + p.to_string());
  if (!in_class(p, target_class(m)))
    throw DomainError(p.to_string() + " is not in Av(" + to_string(target_class(m)) + ")");

  const auto v = p.values();
  const int pos = p.position_of(n);
  auto keep = [&](std::initializer_list<int> tail_positions) {
    // Entries before position n-3 plus the listed 1-based positions.
    std::vector<int> out(v.begin(), v.begin() + (n - 4));
    for (int i : tail_positions) out.push_back(p(i));
    return make_unchecked(std::move(out));
  };

  if (pos == n) return {CaseTag::case2, make_unchecked(std::vector<int>(v.begin(), v.end() - 1)), n};
  if (pos == n - 1) return {CaseTag::case1, keep({n - 3, n - 2, n}), n};
  if (pos == n - 2) {
    const bool case3 = m == MapKind::phi ? p(n - 1) == n - 1 : p(n) == n - 1;
    if (case3) return {CaseTag::case3, keep({n - 3, m == MapKind::phi ? n : n - 1}), n};
    if (p(n - 3) == n - 1) return {CaseTag::case4, keep({n - 1, n}), n};
  }
  // Unreachable for class members: n always sits in the last three places.
  throw DomainError("no case of " + to_string(m) + " produces " + p.to_string());
}

inline CaseTaggedPreimage phi_invert(const Permutation& p) { return invert(MapKind::phi, p); }
inline CaseTaggedPreimage psi_invert(const Permutation& p) { return invert(MapKind::psi, p); }

/// M_n as a list: Case1 block, Case2 block, Case3 block, Case4 block, each in
/// lexicographic order. Its length equals |Av_n|.
inline std::vector<CaseTaggedPreimage> build_multiset(ClassId c, int n, const OracleConfig& cfg = {}) {
  if (n < 4) throw DomainError("M_n is defined for n >= 4, got n = " + std::to_string(n));
  const auto larger = enumerate_class(c, n - 1, cfg);
  const auto smaller = enumerate_class(c, n - 2, cfg);
  std::vector<CaseTaggedPreimage> out;
  out.reserve(2 * larger.size() + 2 * smaller.size());
  for (CaseTag tag : {CaseTag::case1, CaseTag::case2})
    for (const auto& p : larger) out.push_back({tag, p, n});
  for (const auto& p : smaller) out.push_back({CaseTag::case3, p, n});
  for (const auto& p : smaller)
    if (in_restricted(p, c)) out.push_back({CaseTag::case4, p, n});
  return out;
}

/// Change in (cyc, fix, exc, inv) caused by applying the map to `e`.
///
/// With m = |e.perm| and p = e.perm:
///   Case1  (0, -[p(m)=m], +1, +1)
///   Case2  (+1, +1, 0, 0)
///   Case3  phi: (+1, 1-[p(m)=m], +1, +3)   psi: (0, -[p(m)=m], +1, +2)
///   Case4  (0, -[p(m-1)=m-1]-[p(m)=m], 2-[p(m-1)=m], +4)
inline StatDelta stat_delta(MapKind map, const CaseTaggedPreimage& e) {
  validate(map, e);
  const Permutation& p = e.perm;
  const int m = p.size();
  const int last_fixed = p(m) == m ? 1 : 0;
  switch (e.tag) {
    case CaseTag::case1:
      return {0, -last_fixed, 1, 1};
    case CaseTag::case2:
      return {1, 1, 0, 0};
    case CaseTag::case3:
      return map == MapKind::phi ? StatDelta{1, 1 - last_fixed, 1, 3} : StatDelta{0, -last_fixed, 1, 2};
    case CaseTag::case4: {
      const int second_last_fixed = p(m - 1) == m - 1 ? 1 : 0;
      const int second_last_is_max = p(m - 1) == m ? 1 : 0;
      return {0, -second_last_fixed - last_fixed, 2 - second_last_is_max, 4};
    }
  }
  throw DomainError("unknown case tag");
}

namespace detail {

inline void insert_after(CycleDecomposition& c, int anchor, int value) {
  for (auto& cycle : c.cycles) {
    auto it = std::find(cycle.begin(), cycle.end(), anchor);
    if (it != cycle.end()) {
      cycle.insert(it + 1, value);
      return;
    }
  }
  throw MalformedDecomposition("anchor " + std::to_string(anchor) + " not present");
}

}  // namespace detail

/// The same maps described as edits of the cycle notation:
///   Case1  n placed after n-1
///   Case2  (n) added as a fixed point
///   Case3  phi: n placed after n-2, (n-1) added as a fixed point
///          psi: n, n-1 placed after n-2
///   Case4  n placed after n-2, n-1 placed after n-3
/// Must agree with apply() everywhere on M_n.
inline Permutation apply_via_cycles(MapKind m, const CaseTaggedPreimage& e) {
  validate(m, e);
  const int n = e.target_size;
  CycleDecomposition c = to_cycles(e.perm);
  switch (e.tag) {
    case CaseTag::case1:
      detail::insert_after(c, n - 1, n);
      break;
    case CaseTag::case2:
      c.cycles.push_back({n});
      break;
    case CaseTag::case3:
      detail::insert_after(c, n - 2, n);
      if (m == MapKind::phi) {
        c.cycles.push_back({n - 1});
      } else {
        detail::insert_after(c, n, n - 1);
      }
      break;
    case CaseTag::case4:
      detail::insert_after(c, n - 2, n);
      detail::insert_after(c, n - 3, n - 1);
      break;
  }
  return from_cycles(c, n);
}

}  // namespace permcycle
