// SPDX-License-Identifier: MIT
//
// Bordered decomposition of plat diagrams: line algebras, crossing and cusp
// slice DGAs, corestriction of boundary matrices, and assembly of the global
// DGA by a left-to-right fold. No disk enumeration happens anywhere; every
// differential comes from the closed corestriction formulas.
//
// Slice indexing for an n-strand plat with r crossings: slice 0 is the left
// cusp block, slices 1..r are the crossings in order, slice r+1 is the right
// cusp block. Region j (as in plat.hpp) is the vertical line right of slice j.

#pragma once

#include "legaug/dga.hpp"
#include "legaug/plat.hpp"

namespace legaug {

/// Images of the right-boundary line-algebra generators a_ij inside the DGA
/// of everything to the left. Strictly upper triangular.
struct BoundaryMatrix {
  Ring ring;
  int n = 0;
  std::vector<NcPoly> entries;  ///< row-major n*n, zero outside i<j

  BoundaryMatrix(Ring r, int n_)
      : ring(r), n(n_), entries(static_cast<std::size_t>(n_) * n_, NcPoly(r)) {}

  /// 1-based access.
  const NcPoly& entry(int i, int j) const {
    return entries.at(static_cast<std::size_t>(i - 1) * n + (j - 1));
  }
  NcPoly& entry(int i, int j) {
    return entries.at(static_cast<std::size_t>(i - 1) * n + (j - 1));
  }
};

/// Canonical name of the left-boundary line generator a_ij.
std::string line_gen_name(int i, int j);

/// The line algebra I_n(mu): generators a_ij (i<j) of degree mu(i)-mu(j)-1
/// with d(a_ij) = sum_{i<k<j} (-1)^{|a_ik|+1} a_ik a_kj. `mu` is indexed by
/// position 1..n (0-based storage).
Dga line_dga(int n, const std::vector<int>& mu, Ring ring);

/// I_n(mu) plus one generator `c` of degree mu(k)-mu(k+1) with d(c) = a_{k,k+1}.
Dga crossing_slice_dga(int n, int k, const std::vector<int>& mu, Ring ring);

/// I_n(mu) plus x_k (degree 1) and base points t_k for k = 1..n/2, with
/// d(x_k) = t_k^{sigma_k} + a_{2k-1,2k}. Requires mu(2k-1) = mu(2k)+1.
Dga right_cusp_slice_dga(int n, const std::vector<int>& mu,
                         const std::vector<int>& sigma, Ring ring);

/// Boundary matrix right of the left cusp block: entry 1 at (2k-1, 2k).
BoundaryMatrix left_cusp_matrix(int n, Ring ring);

/// Push a boundary matrix through a crossing at positions (k, k+1) whose
/// chord is the polynomial `c` of degree `deg_c`:
///   b_ij -> a_ij (i,j not in {k,k+1});   b_ik -> a_{i,k+1} + a_ik c;
///   b_kj -> a_{k+1,j};                    b_{i,k+1} -> a_ik;
///   b_{k+1,j} -> a_kj - (-1)^{|c|} c a_{k+1,j};   b_{k,k+1} -> 0,
/// where a_* are the entries of `M`.
BoundaryMatrix crossing_corestriction(const BoundaryMatrix& M, int k,
                                      const NcPoly& c, int deg_c);

/// The global DGA of a plat together with the full fold trace.
struct AssembleResult {
  Dga dga;                               ///< crossings a1..ar, cusps c1..c_{n/2},
                                         ///< base points t1..t_{n/2}
  MaslovAssignment mu;
  TraceResult trace;
  std::vector<BoundaryMatrix> matrices;  ///< matrices[j] = boundary right of region j
};

/// Assemble the global DGA. Generators carry the internal arc grading as a
/// weak link grading (component slot = arc id, one arc per base point).
AssembleResult assemble(const PlatDiagram& d, Ring ring,
                        const std::vector<int>& flip_components = {});

/// The bordered DGA of slices lo..hi (inclusive, 0 <= lo <= hi <= r+1). When
/// lo >= 1 the left-boundary generators a_ij (with their line differentials)
/// are part of the DGA.
struct SectionResult {
  Dga dga;
  BoundaryMatrix right;  ///< right-boundary images; n = 0 when hi = r+1
  int lo = 0, hi = 0;
};

SectionResult sections(const PlatDiagram& d, int lo, int hi, Ring ring,
                       const std::vector<int>& flip_components = {});

/// Pushout of two adjacent sections over their common line algebra: the
/// left-boundary generators of `right_part` are replaced by the entries of
/// `left_part.right` inside every differential. Grading data is not glued.
Dga glue_sections(const SectionResult& left_part,
                  const SectionResult& right_part);

/// Restrict a global augmentation to a section: named generators keep their
/// values, left-boundary generators evaluate through the boundary matrix.
Augmentation restrict_augmentation(const AssembleResult& full,
                                   const Augmentation& eps, int lo, int hi);

/// Glue compatible augmentations of two adjacent sections into values on the
/// union of their named generators. Throws if the right part's boundary
/// values disagree with the left part's induced ones.
Augmentation glue_augmentations(const SectionResult& left_part,
                                const Augmentation& eps_left,
                                const SectionResult& right_part,
                                const Augmentation& eps_right);

}  // namespace legaug
