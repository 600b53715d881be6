#pragma once

// Exhaustive certification of phi / psi at a single size n: the multiset,
// the image, both round trips, the statistic deltas and the cycle-notation
// description, all checked against brute-force class enumeration.

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "permcycle/bijections.hpp"
#include "permcycle/oracle.hpp"

namespace permcycle {

struct CertificationReport {
  MapKind map = MapKind::phi;
  int n = 0;
  std::size_t multiset_size = 0;
  std::size_t class_size = 0;
  std::size_t image_size = 0;        // distinct images
  std::size_t outside_class = 0;     // images failing the class test
  std::size_t missed = 0;            // class members never hit
  std::size_t roundtrip_failures = 0;
  std::size_t delta_violations = 0;
  std::size_t cycle_route_mismatches = 0;
  std::optional<std::string> first_counterexample;

  bool injective() const { return image_size == multiset_size; }

  bool passed() const {
    return multiset_size == class_size && injective() && outside_class == 0 && missed == 0 &&
           roundtrip_failures == 0 && delta_violations == 0 && cycle_route_mismatches == 0;
  }
};

inline CertificationReport certify(MapKind map, int n, const OracleConfig& cfg = {}) {
  const ClassId c = target_class(map);
  CertificationReport r;
  r.map = map;
  r.n = n;

  const auto members = enumerate_class(c, n, cfg);
  const std::set<Permutation> member_set(members.begin(), members.end());
  const auto multiset = build_multiset(c, n, cfg);
  r.class_size = members.size();
  r.multiset_size = multiset.size();

  auto note = [&r](const std::string& what) {
    if (!r.first_counterexample) r.first_counterexample = what;
  };

  std::set<Permutation> images;
  for (const auto& e : multiset) {
    const Permutation image = apply(map, e);
    const std::string label = "Case" + std::to_string(static_cast<int>(e.tag)) + " " + e.perm.to_string();
    if (!images.insert(image).second) note(label + " collides at " + image.to_string());
    if (!member_set.contains(image)) {
      ++r.outside_class;
      note(label + " maps outside the class to " + image.to_string());
      continue;
    }
    if (invert(map, image) != e) {
      ++r.roundtrip_failures;
      note(label + " does not round-trip through " + image.to_string());
    }
    if (difference(stats(image), stats(e.perm)) != stat_delta(map, e)) {
      ++r.delta_violations;
      note(label + " breaks the delta table at " + image.to_string());
    }
    if (apply_via_cycles(map, e) != image) {
      ++r.cycle_route_mismatches;
      note(label + " cycle-notation route disagrees with " + image.to_string());
    }
  }
  r.image_size = images.size();

  for (const auto& p : members) {
    if (!images.contains(p)) {
      ++r.missed;
      note(p.to_string() + " is not in the image");
    }
    if (apply(map, invert(map, p)) != p) {
      ++r.roundtrip_failures;
      note(p.to_string() + " does not survive invert then apply");
    }
  }
  return r;
}

}  // namespace permcycle
