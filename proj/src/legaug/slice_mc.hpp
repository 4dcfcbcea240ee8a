// SPDX-License-Identifier: MIT
//
// Local categories of elementary front slices and their Morse-complex
// models: the line algebra I_n(mu) with its augmentation category given by
// closed m1/m2 formulas, the crossing slice with its restriction functors
// (including the arity-2 correction term of the right restriction), the
// Morse complex categories MC(lines), MC(crossing), MC(cusps), the functors
// from slice categories to Morse complex categories, and a randomized
// verifier for the structural identities relating them.

#pragma once

#include <random>

#include "legaug/augcat.hpp"
#include "legaug/linalg.hpp"

namespace legaug {

/// An object of MC(lines; mu): a strictly lower triangular, degree 1,
/// square-zero operator d on the filtered graded space with basis
/// |1>, ..., |n>, deg |i> = -mu(i).
struct MCObject {
  std::vector<int> mu;  ///< mu[i-1] = mu(i)
  Matrix d;             ///< n x n; entry (j-1, i-1) is <j|d|i>

  MCObject(Ring field, std::vector<int> mu_values);
  int n() const { return static_cast<int>(mu.size()); }
  const Ring& field() const { return d.ring(); }

  /// 1-based bra-ket accessors: <j|d|i> is row j, column i.
  const Int& entry(int j, int i) const;
  void set_entry(int j, int i, const Int& v);

  /// Throws unless d is strictly lower triangular, supported on entries with
  /// mu(i) - mu(j) = 1, and squares to zero.
  void validate() const;
  bool operator==(const MCObject& o) const { return mu == o.mu && d == o.d; }
  bool operator!=(const MCObject& o) const { return !(*this == o); }
};

/// A homogeneous morphism of MC(lines; mu): a lower triangular matrix
/// supported on entries with mu(i) - mu(j) = degree.
struct MCMorphism {
  MCObject source, target;
  Matrix phi;  ///< entry (j-1, i-1) is <j|phi|i>
  int degree = 0;

  MCMorphism(MCObject src, MCObject tgt, int deg);
  const Int& entry(int j, int i) const;
  void set_entry(int j, int i, const Int& v);
  void validate() const;
  bool operator==(const MCMorphism& o) const {
    return source == o.source && target == o.target && phi == o.phi &&
           degree == o.degree;
  }
};

/// D(phi) = d_target . phi - (-1)^{|phi|} phi . d_source; degree |phi| + 1.
MCMorphism mc_differential(const MCMorphism& phi);
/// Composition f . g for g: a -> b, f: b -> c; degrees add.
MCMorphism mc_compose(const MCMorphism& f, const MCMorphism& g);

/// An object of MC(crossing_k; mu): a line object d with <k+1|d|k> = 0 plus
/// a scalar z, where z = 0 unless mu(k) = mu(k+1).
struct MCCrossObject {
  MCObject d;
  Int z = 0;
  int k = 1;

  void validate() const;
};

/// Does the line morphism xi satisfy the crossing-morphism condition
/// <k+1|xi|k> = z' <k|xi|k> - z <k+1|xi|k+1>?
bool mc_cross_morphism_ok(const MCCrossObject& src, const MCCrossObject& tgt,
                          const MCMorphism& xi);

/// The change-of-basis matrix theta_z identifying the left and right line
/// spaces across the crossing: identity except the 2x2 block at rows/columns
/// k, k+1, which is [[-z, 1], [1, 0]].
Matrix theta_matrix(Ring field, int n, int k, const Int& z);

/// Left restriction MC(crossing) -> MC(lines; mu): forget z.
MCObject mc_rho_L(const MCCrossObject& obj);
/// Right restriction MC(crossing) -> MC(lines; mu_R): conjugate by theta_z.
MCObject mc_rho_R(const MCCrossObject& obj);
MCMorphism mc_rho_R(const MCCrossObject& src, const MCCrossObject& tgt,
                    const MCMorphism& xi);

/// Is d an object of the cusp category MC(cusps; mu)? Requires n even and
/// mu(2k-1) = mu(2k) + 1; membership means every cusp entry <2k|d|2k-1> is a
/// unit.
bool cusp_membership(const MCObject& d);
/// The canonical cusp object d0 = sum_k |2k><2k-1|.
MCObject cusp_d0(Ring field, const std::vector<int>& mu);
/// The intertwiner u = d0 d0^T + d0^T d, an isomorphism d -> d0 in
/// MC(cusps; mu). Throws if d is not a cusp-category object.
MCMorphism cusp_iso(const MCObject& d);

/// The line slice: n horizontal strands with Maslov values mu, carrying the
/// algebra freely generated by a_ij (i < j) with |a_ij| = mu(i) - mu(j) - 1
/// and d(a_ij) = sum_{i<k<j} (-1)^{mu(i)-mu(k)} a_ik a_kj. Hom spaces of its
/// augmentation category have basis a_ij+ (i <= j) of degree mu(i) - mu(j),
/// with closed m1/m2 and no higher compositions.
class LineSlice {
 public:
  LineSlice(std::vector<int> mu, Ring field);

  int n() const { return n_; }
  const std::vector<int>& mu() const { return mu_; }
  const Ring& field() const { return field_; }
  const Dga& dga() const { return dga_; }

  static std::string gen_name(int i, int j);   ///< "a_i_j", i < j
  static std::string hom_label(int i, int j);  ///< "a_i_j+", i <= j
  /// (i, j) of a hom label; throws on unknown labels.
  std::pair<int, int> parse_label(const std::string& label) const;
  int hom_degree(int i, int j) const;
  std::vector<std::string> hom_basis() const;
  /// Degree of a homogeneous element; nullopt for zero; throws if mixed.
  std::optional<int> degree_of(const HomElement& v) const;

  bool is_augmentation(const Augmentation& eps) const;

  /// m1 on hom(e1, e2).
  HomElement m1(const Augmentation& e1, const Augmentation& e2,
                const HomElement& xi) const;
  /// m2(u, v) for u in hom(e2, e3), v in hom(e1, e2); independent of the
  /// augmentations: a_kj+ . a_ik+ = (-1)^{|a_kj+||a_ik+|+1} a_ij+.
  HomElement m2(const HomElement& u, const HomElement& v) const;

  /// The Morse-complex object of an augmentation: d = (-1)^mu eps(A)^T,
  /// i.e. <j|d|i> = (-1)^{mu(j)} eps(a_ij).
  MCObject h_object(const Augmentation& eps) const;
  /// The inverse object map (the functor is bijective on objects).
  Augmentation from_mc(const MCObject& d) const;
  /// The Morse-complex image of a homogeneous hom element:
  /// a_ij+ -> (-1)^{(mu(i)+1)mu(j)+1} |j><i|. A zero element needs an
  /// explicit degree.
  MCMorphism h_morphism(const Augmentation& e1, const Augmentation& e2,
                        const HomElement& xi,
                        std::optional<int> degree = std::nullopt) const;

  /// A random augmentation: a random partial matching differential
  /// conjugated by a random invertible filtered degree-0 change of basis.
  Augmentation random_augmentation(std::mt19937& rng) const;
  /// Random coefficients on every basis label of the given degree.
  HomElement random_hom(std::mt19937& rng, int degree) const;

 private:
  int n_;
  std::vector<int> mu_;
  Ring field_;
  Dga dga_;
};

/// The crossing slice: n strands with a single crossing between strands k
/// and k+1, Maslov potential mu on the left. Its algebra is the left line
/// algebra plus one generator c with d(c) = a_{k,k+1} and
/// |c| = mu(k) - mu(k+1). Hom spaces add the generator c+ of degree |c|+1.
class CrossSlice {
 public:
  CrossSlice(std::vector<int> mu, int k, Ring field);

  int n() const { return left_.n(); }
  int k() const { return k_; }
  const Ring& field() const { return left_.field(); }
  const LineSlice& left() const { return left_; }    ///< I_n(mu)
  const LineSlice& right() const { return right_; }  ///< I_n(mu . s_k)
  const Dga& dga() const { return dga_; }
  int c_degree() const;  ///< |c| = mu(k) - mu(k+1)

  std::vector<std::string> hom_basis() const;  ///< line labels plus "c+"
  std::optional<int> degree_of(const HomElement& v) const;

  bool is_augmentation(const Augmentation& eps) const;
  /// Forget c (an augmentation of the left line algebra).
  Augmentation restrict_L(const Augmentation& eps) const;
  /// Pull back along the right co-restriction (an augmentation of the right
  /// line algebra).
  Augmentation restrict_R(const Augmentation& eps) const;

  HomElement m1(const Augmentation& e1, const Augmentation& e2,
                const HomElement& xi) const;
  /// Line products plus m2(c+, a_kk+) = -c+ = m2(a_{k+1,k+1}+, c+).
  HomElement m2(const HomElement& u, const HomElement& v) const;

  /// Left restriction of morphisms: a_ij+ -> a_ij+, c+ -> 0.
  HomElement rho_L(const HomElement& xi) const;
  /// First-order right restriction of xi in hom(e1, e2), landing in the hom
  /// of the right line slice between restrict_R(e1), restrict_R(e2).
  HomElement rho_R(const Augmentation& e1, const Augmentation& e2,
                   const HomElement& xi) const;
  /// Second-order term of the right restriction, on u in hom(e2, e3) tensor
  /// v in hom(e1, e2):
  ///   c+ (x) a_ik+        -> (-1)^{|c+||a_ik+|+|a_ik+|+1} b_ik+   (i < k)
  ///   a_{k+1,j}+ (x) c+   -> (-1)^{|a_{k+1,j}+||c+|+1} b_{k+1,j}+ (j > k+1)
  /// and zero on every other pair. All terms of order >= 3 vanish.
  HomElement rho_R2(const HomElement& u, const HomElement& v) const;

  /// Morse-complex object: (h(eps_L), z = -eps(c)).
  MCCrossObject h_object(const Augmentation& eps) const;
  /// Morse-complex morphism (phi')^{-1} s_k h(xi_R) s_k phi with
  /// phi = 1 + eps(c)|k+1><k|, as a line morphism between h(e1_L), h(e2_L).
  MCMorphism h_morphism(const Augmentation& e1, const Augmentation& e2,
                        const HomElement& xi,
                        std::optional<int> degree = std::nullopt) const;
  /// The homotopy H between left restriction before and after h:
  /// xi -> (-1)^{(mu(k)+1)mu(k+1)+1} Coeff_{c+}(xi) |k+1><k|.
  MCMorphism homotopy_H(const Augmentation& e1, const Augmentation& e2,
                        const HomElement& xi,
                        std::optional<int> degree = std::nullopt) const;

  Augmentation random_augmentation(std::mt19937& rng) const;

 private:
  LineSlice left_, right_;
  int k_;
  Dga dga_;
};

/// Does a line augmentation lie in the image of the right-cusp restriction?
/// True iff every cusp value eps(a_{2k-1,2k}) is a unit. Requires n even and
/// mu(2k-1) = mu(2k) + 1.
bool right_cusp_image(const LineSlice& slice, const Augmentation& eps);

/// Randomized verification of the slice/Morse-complex identities on I_n(mu)
/// and the crossing slices over it: the strict dg isomorphism for lines, the
/// crossing homotopy identity, strict right-restriction commutation, the
/// arity-2 functor relation of the right restriction, the isomorphism-class
/// transfer of the first-subdiagonal entries, and the cusp intertwiner when
/// mu is a cusp profile.
CheckReport verify_slice_equivalences(int n, const std::vector<int>& mu,
                                      int trials, Ring field,
                                      unsigned seed = 20260824);

}  // namespace legaug
