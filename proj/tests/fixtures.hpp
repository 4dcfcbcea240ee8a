// SPDX-License-Identifier: MIT
//
// Shared test fixtures: small DGAs with known differentials and augmentation
// sets, written out directly from their defining data.

#pragma once

#include "legaug/dga.hpp"

namespace legaug::fixtures {

/// The standard Legendrian unknot with one base point: generators a (degree
/// 1) and t, with d(a) = 1 + t^{-1}. Unique augmentation eps(t) = -1.
inline Dga unknot_dga(Ring ring = Ring::integers()) {
  std::vector<GenInfo> gens{
      {"a", 1, GenKind::reeb, 1, 1},
      {"t", 0, GenKind::basepoint, 1, 1},
  };
  NcPoly da = NcPoly::one(ring) + NcPoly::symbol(ring, Symbol::inv("t", -1));
  return Dga(ring, std::move(gens), {{"a", da}}, 1, Grading::strict);
}

/// The right-handed trefoil with a single base point at the first right cusp:
/// c1, c2 of degree 1, a1, a2, a3 of degree 0,
///   d(c1) = t^{-1} + a1 + a3 + a1 a2 a3,
///   d(c2) = 1 - a1 - a3 - a3 a2 a1.
/// Over F_2 this has exactly five augmentations.
inline Dga trefoil_raw_dga(Ring ring = Ring::integers()) {
  std::vector<GenInfo> gens{
      {"c1", 1, GenKind::reeb, 1, 1},  {"c2", 1, GenKind::reeb, 1, 1},
      {"a1", 0, GenKind::reeb, 1, 1},  {"a2", 0, GenKind::reeb, 1, 1},
      {"a3", 0, GenKind::reeb, 1, 1},  {"t", 0, GenKind::basepoint, 1, 1},
  };
  auto S = [&](const char* n) { return NcPoly::symbol(ring, Symbol::gen(n)); };
  NcPoly a1 = S("a1"), a2 = S("a2"), a3 = S("a3");
  NcPoly dc1 = NcPoly::symbol(ring, Symbol::inv("t", -1)) + a1 + a3 +
               a1 * a2 * a3;
  NcPoly dc2 = NcPoly::one(ring) - a1 - a3 - a3 * a2 * a1;
  return Dga(ring, std::move(gens), {{"c1", dc1}, {"c2", dc2}}, 1,
             Grading::strict);
}

/// Convenience constructor for augmentations.
inline Augmentation make_aug(Ring ring,
                             std::map<std::string, Int> values) {
  return Augmentation{ring, std::move(values)};
}

/// The unique augmentation of the unknot fixture.
inline Augmentation unknot_aug(Ring ring = Ring::integers()) {
  return make_aug(ring, {{"a", 0}, {"t", ring.reduce(-1)}});
}

}  // namespace legaug::fixtures
