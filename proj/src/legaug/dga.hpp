// SPDX-License-Identifier: MIT
//
// Semi-free differential graded algebras: generator tables with integer
// degrees, optional (weak) link gradings by component indices, differential
// storage, validity checking, augmentation evaluation, the twisted
// differential, and restriction to component subsets.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "legaug/ncpoly.hpp"

namespace legaug {

enum class GenKind { reeb, basepoint };

/// How the (r, c) fields of the generator table are to be read.
///  - none:   no link grading attached; (r, c) are ignored.
///  - weak:   weak link grading; base points may have r != c.
///  - strict: link grading; base points satisfy r == c.
enum class Grading { none, weak, strict };

struct GenInfo {
  std::string name;
  int degree = 0;
  GenKind kind = GenKind::reeb;
  int r = 1;  ///< component of the chord's upper endpoint
  int c = 1;  ///< component of the chord's lower endpoint
};

/// A semi-free DGA: the free noncommutative unital algebra on the reeb
/// generators together with invertible base-point symbols, and a degree -1
/// differential. Immutable after construction.
class Dga {
 public:
  Dga(Ring ring, std::vector<GenInfo> generators,
      std::map<std::string, NcPoly> differential, int component_count = 1,
      Grading grading = Grading::none);

  const Ring& ring() const { return ring_; }
  const std::vector<GenInfo>& generators() const { return generators_; }
  int component_count() const { return component_count_; }
  Grading grading() const { return grading_; }

  const GenInfo& info(const std::string& name) const;
  bool has_generator(const std::string& name) const;
  /// Differential of a reeb generator (zero polynomial if none stored).
  NcPoly differential(const std::string& name) const;

  /// Reeb generators in table order.
  std::vector<GenInfo> reeb_generators() const;
  /// Base-point generators in table order.
  std::vector<GenInfo> basepoints() const;
  /// name -> degree for all generators (for derivation extension).
  std::map<std::string, int> degree_map() const;
  /// name -> differential for all reeb generators.
  std::map<std::string, NcPoly> differential_map() const;

  /// Apply the differential, extended as a degree -1 derivation, to any
  /// polynomial in this algebra.
  NcPoly d(const NcPoly& p) const;

 private:
  Ring ring_;
  std::vector<GenInfo> generators_;
  std::map<std::string, NcPoly> differential_;
  std::map<std::string, std::size_t> index_;
  int component_count_;
  Grading grading_;
};

/// Validation report: empty `problems` means the DGA is valid.
struct DgaReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string str() const;
};

/// Check all structural invariants: differential defined on reeb generators
/// only, degree -1 and homogeneous, d^2 = 0, d(t) = 0, base points of degree
/// 0 (diagonal under a strict grading), and — when a grading is attached —
/// every monomial of every differential composable from r(a) to c(a).
DgaReport check_dga(const Dga& d);

/// A candidate augmentation: ring-element values for reeb generators and
/// base-point symbols (the value stored for t_k is eps(t_k); eps(t_k^{-1}) is
/// derived).
struct Augmentation {
  Ring ring;
  std::map<std::string, Int> values;

  const Int& value(const std::string& name) const;
  /// Evaluate a polynomial under this augmentation (words map to products of
  /// generator values; t^{-1} maps to the ring inverse of the t value).
  Int evaluate(const NcPoly& p) const;
  bool operator==(const Augmentation& o) const {
    return ring == o.ring && values == o.values;
  }
};

/// True iff eps is a genuine augmentation of d: all generators assigned,
/// eps(a) = 0 for |a| != 0, eps(t) a unit, eps(da) = 0 for all a, and (under
/// a strict link grading) eps = 0 on mixed chords.
bool is_augmentation(const Dga& d, const Augmentation& eps);
/// Same, but reporting every violated condition.
DgaReport check_augmentation(const Dga& d, const Augmentation& eps);

/// The twisted DGA over eps's ring: base points specialized to their values
/// and each generator a replaced by a + eps(a) inside differentials. The
/// result has reeb generators only and constant-free differentials.
Dga twist(const Dga& d, const Augmentation& eps);

/// Restriction A_I to a subset of components (strict link grading required):
/// keeps generators with r, c both in I, relabels components by the
/// order-preserving bijection I -> {1..|I|}, and deletes (sets to zero) all
/// other reeb generators inside differentials. Generator names are kept.
Dga restrict_to_components(const Dga& d, const std::set<int>& I);

/// Convert a polynomial to another coefficient ring (Z -> F_p reduction or
/// ring identity); used when twisting a Z-coefficient DGA by a finite-field
/// augmentation.
NcPoly change_ring(const NcPoly& p, Ring target);
/// Ring change for a whole DGA.
Dga change_ring(const Dga& d, Ring target);

}  // namespace legaug
