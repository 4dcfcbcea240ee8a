// SPDX-License-Identifier: MIT
//
// The two augmentation categories of a DGA with base points: augmentation
// enumeration, hom bases, the A-infinity composition maps m_k in both
// directions (computed from the twisted (k+1)-copy by coefficient
// extraction), cohomology, units, the homotopy/isomorphism decision with
// witness cocycles, mixed compositions, and the exact-sequence and duality
// verifiers.

#pragma once

#include <array>
#include <mutex>
#include <optional>

#include "legaug/linalg.hpp"
#include "legaug/mcopy.hpp"

namespace legaug {

enum class HomDirection { plus, minus };

enum class BasisKind { chord, x, y };

struct BasisElement {
  std::string label;  ///< "a1+", "x2+", "y1+", "a1-"
  BasisKind kind = BasisKind::chord;
  std::string base;   ///< base reeb generator name (chords only)
  int index = 0;      ///< arc index for x/y elements
  int degree = 0;     ///< hom degree: |a|+1 for chords, 1 for x, 0 for y
};

struct HomBasis {
  HomDirection direction = HomDirection::plus;
  std::vector<BasisElement> elements;

  std::size_t size() const { return elements.size(); }
  const BasisElement& at(std::size_t i) const { return elements[i]; }
  std::size_t index_of(const std::string& label) const;
  bool has(const std::string& label) const;
};

/// A finite linear combination of hom-basis elements; zero coefficients are
/// never stored.
struct HomElement {
  Ring ring;
  std::map<std::string, Int> coeffs;

  explicit HomElement(Ring r) : ring(r) {}
  static HomElement basis(Ring r, const std::string& label);

  bool is_zero() const { return coeffs.empty(); }
  Int coeff(const std::string& label) const;
  void add(const std::string& label, const Int& c);

  HomElement operator+(const HomElement& o) const;
  HomElement operator-(const HomElement& o) const;
  HomElement operator-() const;
  HomElement scaled(const Int& c) const;
  bool operator==(const HomElement& o) const;
  bool operator!=(const HomElement& o) const { return !(*this == o); }
  /// e.g. "a1+ - y1+"; "0" for zero.
  std::string str() const;
};

struct HomotopyResult {
  bool homotopic = false;
  /// Witness values K(a) on the degree -1 reeb generators (empty otherwise).
  std::map<std::string, Int> K;
};

struct CheckReport {
  std::vector<std::string> problems;
  std::vector<std::string> notes;
  bool ok() const { return problems.empty(); }
  std::string str() const;
};

/// Both augmentation categories of one base DGA over a finite field. The base
/// may be given over Z; it is converted to the field. Requirements are those
/// of the m-copy construction: a (weak) link grading by arcs with one base
/// point per arc. Immutable and safe to share; m-copies and twisted
/// differentials are cached internally.
class AugCategory {
 public:
  AugCategory(const Dga& base, Ring field);

  const Dga& dga() const { return base_; }
  const Ring& field() const { return field_; }

  /// All augmentations over the field, in lexicographic order of
  /// (base-point values, degree-0 generator values) read in generator-table
  /// order with values ascending. Throws if the search space exceeds 2^24.
  /// Honors LEGAUG_THREADS for deterministic parallel partitioning.
  std::vector<Augmentation> enumerate_augmentations() const;

  /// The common hom basis of every hom space in one direction:
  /// plus = {a+ per chord, x_k+, y_k+ per arc}, minus = {a- per chord}.
  const HomBasis& basis(HomDirection dir) const;
  /// Degree of a homogeneous element; nullopt for zero; throws if mixed.
  std::optional<int> degree_of(const HomElement& v) const;

  /// The composition m_k. `eps` is the augmentation chain (eps_1..eps_{k+1})
  /// and `args` the k arguments in written order:
  ///   plus:  (alpha_k, ..., alpha_1) with alpha_p in hom(eps_p, eps_{p+1});
  ///          the result lies in hom(eps_1, eps_{k+1});
  ///   minus: (beta_1, ..., beta_k) with beta_p in Hom_-(eps_{p+1}, eps_p);
  ///          the result lies in Hom_-(eps_{k+1}, eps_1).
  HomElement mk(HomDirection dir, const std::vector<Augmentation>& eps,
                const std::vector<HomElement>& args) const;

  /// The strict unit -sum_k y_k+ of every hom(eps, eps).
  HomElement unit() const;

  /// The differential m_1 as a matrix over the direction's basis:
  /// entry (i, j) = coefficient of basis element i in m_1(basis element j),
  /// on hom(e1, e2) (plus) or Hom_-(e1, e2) (minus).
  Matrix m1_matrix(HomDirection dir, const Augmentation& e1,
                   const Augmentation& e2) const;

  /// dim H^k of hom(e1, e2) (plus) or Hom_-(e1, e2) (minus), for every k with
  /// a nonzero chain group in degree k-1, k, or k+1.
  std::map<int, std::size_t> cohomology(HomDirection dir,
                                        const Augmentation& e1,
                                        const Augmentation& e2) const;

  /// Decide whether e1 and e2 are DGA homotopic, by solving the linear system
  /// e1(a) - e2(a) = K~(da) over the unknowns K on degree -1 generators,
  /// where K~ extends K as an (e1, e2)-derivation of degree +1.
  HomotopyResult dga_homotopic(const Augmentation& e1,
                               const Augmentation& e2) const;

  /// Isomorphism in the plus category (equals the homotopy relation).
  bool is_isomorphic_augplus(const Augmentation& e1,
                             const Augmentation& e2) const;

  /// The degree-0 cocycle alpha = -sum y_k+ - sum K(a) a+ in hom(e1, e2)
  /// built from a homotopy witness; nullopt when not homotopic.
  std::optional<HomElement> iso_cocycle(const Augmentation& e1,
                                        const Augmentation& e2) const;

  /// An inverse beta in hom(e2, e1) for the cocycle alpha in hom(e1, e2):
  /// solves B = A + m2(B, A) as one linear system and verifies
  /// m2(beta, alpha) = unit and m1(beta) = 0. nullopt if any step fails.
  std::optional<HomElement> inverse_cocycle(const Augmentation& e1,
                                            const Augmentation& e2,
                                            const HomElement& alpha) const;

  /// The bifunctor m2 on the 3-copy whose copies carry eps[0], eps[1],
  /// eps[2]: the first written argument lies in the dual block (q, s), the
  /// second in (p, q), and the result in (p, s), where a block (i, j) with
  /// i < j is plus-type (labels a+, x+, y+) and with i > j minus-type
  /// (labels a-). (p, q, s) must be a permutation of (1, 2, 3).
  HomElement m2_block(const std::array<Augmentation, 3>& eps, int p, int q,
                      int s, const HomElement& first,
                      const HomElement& second) const;

  /// Same, addressed by the sign pattern (first factor, second factor,
  /// result). The patterns (+,+,-) and (-,-,+) are not realized by any block
  /// placement and are rejected.
  HomElement graded_m2_mixed(const std::array<HomDirection, 3>& pattern,
                             const std::array<Augmentation, 3>& eps,
                             const HomElement& first,
                             const HomElement& second) const;

  /// Verify the exact sequence 0 -> Hom_-(e2, e1) -> hom(e1, e2) -> C -> 0:
  /// block triangularity of m_1, the identification of the sub-block with the
  /// minus differential under a+ <-> a-, the induced quotient complex on
  /// span{x+, y+}, and exactness of the long exact sequence via the snake
  /// construction. The hypothesis e1(t) = e2(t) is reported, not raised.
  CheckReport exact_sequence_check(const Augmentation& e1,
                                   const Augmentation& e2) const;

  /// Verify dim H^k hom(e1, e2) = dim H^{2-k} Hom_-(e2, e1) for all k.
  CheckReport duality_check(const Augmentation& e1,
                            const Augmentation& e2) const;

  /// The defect sum (-1)^{r+st} m_{r+1+t}(1 x r, m_s, 1 x t) applied with
  /// Koszul signs to homogeneous written arguments; zero iff the A-infinity
  /// relation holds on this tuple. `eps` has length args.size() + 1.
  HomElement ainfty_defect(HomDirection dir,
                           const std::vector<Augmentation>& eps,
                           const std::vector<HomElement>& args) const;

 private:
  struct Twisted {
    std::map<std::string, NcPoly> diff;  // twisted m-copy differentials
  };

  /// Throws unless the coefficient ring is a finite field.
  void require_field(const char* op) const;
  const McopyDga& mcopy(int m) const;
  const Twisted& twisted(const std::vector<Augmentation>& eps) const;
  std::string eps_key(const Augmentation& e) const;
  /// Core block computation; blocks[p] is the (row, col) block of written
  /// argument p+1 on the (k+1)-copy.
  HomElement mk_blocks(const std::vector<Augmentation>& eps,
                       const std::vector<std::pair<int, int>>& blocks,
                       const std::vector<HomElement>& args) const;
  /// m-copy generator name of a basis element placed in block (i, j).
  std::string placed_name(const BasisElement& b, int i, int j) const;
  const BasisElement& lookup(const std::string& label) const;

  Dga base_;
  Ring field_;
  int arcs_ = 0;  ///< number of arcs / base points
  HomBasis plus_, minus_;
  std::map<std::string, BasisElement> by_label_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, McopyDga> mcopies_;
  mutable std::map<std::string, Twisted> twisted_;
};

/// Closed-form oracle for m_1(y+) in hom(e1, e2) on a single-base-point DGA:
/// (e1(t)^{-1} e2(t) - 1) x1+ + sum_i (e2(a_i) - (-1)^{|a_i|} e1(a_i)) a_i+.
/// Throws if the DGA has more than one base point.
HomElement m1_y_oracle(const AugCategory& cat, const Augmentation& e1,
                       const Augmentation& e2);

}  // namespace legaug
