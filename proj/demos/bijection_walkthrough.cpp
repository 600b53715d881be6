// Prints each case of phi and psi on a size-9 example, in one-line and cycle
// notation, with the statistic changes.

#include <iostream>

#include "permcycle/bijections.hpp"

using namespace permcycle;

namespace {

void show(MapKind m, CaseTag tag, const char* preimage) {
  const CaseTaggedPreimage e{tag, Permutation::parse(preimage), 9};
  const Permutation image = apply(m, e);
  std::cout << to_string(m) << " Case" << static_cast<int>(tag) << ": " << e.perm << " " << to_cycles(e.perm)
            << "  ->  " << image << " " << to_cycles(image) << "  delta " << stat_delta(m, e) << '\n';
  if (invert(m, image) != e) std::cout << "  inverse does not round-trip\n";
}

}  // namespace

int main() {
  try {
    show(MapKind::phi, CaseTag::case1, "34526871");
    show(MapKind::phi, CaseTag::case2, "34526871");
    show(MapKind::phi, CaseTag::case3, "2456317");
    show(MapKind::phi, CaseTag::case4, "3241675");
    show(MapKind::psi, CaseTag::case1, "34125786");
    show(MapKind::psi, CaseTag::case2, "34125786");
    show(MapKind::psi, CaseTag::case3, "2451673");
    show(MapKind::psi, CaseTag::case4, "2134756");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
