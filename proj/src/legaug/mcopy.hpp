// SPDX-License-Identifier: MIT
//
// The algebraic m-copy of a DGA with a weak link grading (the internal arc
// grading): generators become m x m matrices, base points pick up invertible
// diagonal and unitriangular Morse families, and the differential is read off
// entrywise from matrix formulas. This is the consistent sequence underlying
// both augmentation categories.

#pragma once

#include "legaug/dga.hpp"

namespace legaug {

struct McopyDga {
  Dga dga;   ///< the m-copy DGA, with the m-component copy grading (strict)
  int m = 1;
  /// Map from every m-copy generator name back to its base generator name
  /// (x/y family members map to the base point of their arc).
  std::map<std::string, std::string> base_of;
};

/// Name of the (i,j) copy of a base generator: "<base>_<i><j>" (m <= 9).
std::string mcopy_name(const std::string& base, int i, int j);
/// Names of the Morse-family generators attached to base point k: "x<k>_<ij>"
/// and "y<k>_<ij>" for i < j.
std::string mcopy_x_name(int k, int i, int j);
std::string mcopy_y_name(int k, int i, int j);
/// Name of copy i of a base point: "<base>_<i>".
std::string mcopy_t_name(const std::string& base, int i);

/// Build the m-copy. Requirements: `base` has a weak link grading whose
/// component count equals its number of base points, with base point k
/// sitting on arc k (c(t_k) = k); every differential monomial is composable;
/// 1 <= m <= 9.
McopyDga build_mcopy(const Dga& base, int m);

/// The diagonal augmentation of an m-copy from a tuple (eps_1..eps_m) of
/// augmentations of the base: eps(a^{ii}) = eps_i(a), eps(t_k^i) = eps_i(t_k),
/// zero on every mixed generator. Validated before returning.
Augmentation diagonal_augmentation(const McopyDga& mc,
                                   const std::vector<Augmentation>& eps);

/// Rename generators of a DGA (names must stay distinct); differentials are
/// rewritten through the renaming. Used to compare component restrictions of
/// m-copies with smaller m-copies.
Dga rename_generators(const Dga& d,
                      const std::map<std::string, std::string>& names);

}  // namespace legaug
