// SPDX-License-Identifier: MIT
//
// Preferred-plat front diagrams: n strands (n even) starting at a block of
// left cusps, a left-to-right word of crossings, and a closing block of right
// cusps with one base point each. This module validates diagrams, solves the
// Maslov-potential constraints, traces the link (orientations, arcs between
// base points, cusp orientation signs, crossing signs) and computes classical
// invariants.
//
// Conventions (fixed; golden tables depend on them):
//  - Positions are numbered 1..n from top to bottom; left cusp k joins
//    positions (2k-1, 2k), as does right cusp k.
//  - The component through the top left cusp is oriented along its top strand
//    rightward; every other component is oriented by taking its smallest
//    left-edge position rightward.
//  - sigma_k = -1 iff the orientation enters right cusp k on the upper strand.
//  - Arcs U_k start at base point *_k (located at right cusp k) and run to the
//    next base point in the orientation direction.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "legaug/ncpoly.hpp"

namespace legaug {

struct PlatDiagram {
  int n = 0;                    ///< even strand count
  std::vector<int> crossings;   ///< event word; entries in 1..n-1
  int num_crossings() const { return static_cast<int>(crossings.size()); }
  int num_cusps() const { return n / 2; }
};

/// Parse the plat text format: `strands <n>` followed by `cross <k>` lines,
/// `#` comments allowed. Throws Error with line information.
PlatDiagram parse_plat(const std::string& text);

/// Serialize back to the text format (round-trip with parse_plat).
std::string plat_str(const PlatDiagram& d);

/// A solution of the cusp constraints: one integer potential per strand
/// position in each region between events. Region j is the vertical slice
/// after the first j crossings (region 0 touches the left cusps, region
/// `num_crossings` touches the right cusps).
struct MaslovAssignment {
  /// mu[region][pos-1]: potential of the strand at the given position.
  std::vector<std::vector<int>> mu;

  int at(int region, int pos) const { return mu.at(region).at(pos - 1); }
  /// Potential on the left edge, top to bottom.
  const std::vector<int>& left() const { return mu.front(); }
  /// Potential on the right edge.
  const std::vector<int>& right() const { return mu.back(); }
};

/// Solve the cusp constraints (upper strand = lower + 1 at every cusp) with
/// the deterministic normalization: in every component, the largest-numbered
/// left-edge position gets potential 0. Throws if the integer system is
/// inconsistent (some component has nonzero rotation number).
MaslovAssignment solve_maslov(const PlatDiagram& d);

/// Complete traversal data for a plat diagram.
struct TraceResult {
  int components = 0;
  /// Component id (1-based) of each left-to-right strand path, indexed by
  /// left-edge position 1..n (0-based storage).
  std::vector<int> path_component;
  /// +1 if the path is traversed left-to-right, -1 otherwise.
  std::vector<int> path_direction;
  /// arc[region][pos-1]: arc id (1..n/2) of the strand segment at the given
  /// position in the given region.
  std::vector<std::vector<int>> arc;
  /// Per right cusp k (0-based storage): orientation sign sigma_k.
  std::vector<int> sigma;
  /// Per right cusp k: the arc ending at base point *_k (arc "preceding" it).
  std::vector<int> prev_arc;
  /// Per right cusp k: component id of the cusp.
  std::vector<int> cusp_component;
  /// Per crossing: oriented sign (+1/-1).
  std::vector<int> crossing_sign;
  /// Per crossing: the (r, c) arc pair of its Reeb chord.
  std::vector<std::pair<int, int>> crossing_rc;
  /// Per right cusp: the (r, c) arc pair of its Reeb chord.
  std::vector<std::pair<int, int>> cusp_rc;
  /// Per base point: the (r, c) arc pair (r = arc ending at *_k, c = k).
  std::vector<std::pair<int, int>> t_rc;

  int num_arcs() const { return static_cast<int>(sigma.size()); }
};

/// Trace the plat closure: components, orientations, arcs, cusp signs and the
/// internal (r, c) grading data. `flip_components` lists component ids whose
/// orientation should be reversed after the default assignment.
TraceResult trace_knot(const PlatDiagram& d,
                       const std::vector<int>& flip_components = {});

struct ClassicalInvariants {
  int tb_total = 0;                 ///< writhe - number of right cusps
  std::vector<int> tb_component;    ///< self-crossing writhe - own right cusps
  std::vector<int> rotation;        ///< rotation number per component
};

ClassicalInvariants classical_invariants(const PlatDiagram& d,
                                         const TraceResult& trace);

}  // namespace legaug
