// SPDX-License-Identifier: MIT
//
// Exact arithmetic in the free noncommutative unital algebra over Z or F_p on
// named generators, together with invertible base-point symbols t_k^{±1}.
// The only relations are t·t^{-1} = t^{-1}·t = 1; they are applied eagerly so
// every polynomial has a unique normal form with a canonical term order
// (length-then-lexicographic), suitable for golden-file comparisons.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace legaug {

using Int = boost::multiprecision::cpp_int;

/// Error type for all domain failures (ring mismatch, missing values, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficient-ring tag: Z (arbitrary precision) or F_p for a prime p <= 251.
/// The ring travels with every polynomial; mismatches are errors, never
/// coercions.
struct Ring {
  enum class Kind { Z, Fp };
  Kind kind = Kind::Z;
  int p = 0;  // modulus when kind == Fp, otherwise 0

  static Ring integers() { return Ring{Kind::Z, 0}; }
  static Ring fp(int p);

  bool is_field() const { return kind == Kind::Fp; }
  bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  /// Normalize a raw integer into this ring (mod p representative in [0,p)).
  Int reduce(const Int& x) const;
  /// Multiplicative inverse of a unit; throws if x is not a unit.
  Int invert(const Int& x) const;
  /// "Z" or "Fp:<p>".
  std::string str() const;
  /// Parse "Z" or "Fp:<p>".
  static Ring parse(const std::string& s);
};

/// One letter of a noncommutative word: an interned symbol name plus an
/// exponent (+1, or -1 which only invertible symbols may carry).
struct Symbol {
  std::uint32_t id = 0;
  std::int8_t exp = 1;

  bool operator==(const Symbol& o) const { return id == o.id && exp == o.exp; }
  bool operator!=(const Symbol& o) const { return !(*this == o); }

  /// Intern (or look up) a non-invertible generator.
  static Symbol gen(const std::string& name);
  /// Intern (or look up) an invertible base-point symbol with the given
  /// exponent.
  static Symbol inv(const std::string& name, int exp);
  /// Parse a serialized token: "a3" or "t1^-1".
  static Symbol parse(const std::string& token);

  const std::string& name() const;
  bool invertible() const;
  Symbol inverse() const;
  /// Serialized token, e.g. "a3", "t1", "t1^-1".
  std::string str() const;
};

using Word = std::vector<Symbol>;

/// Canonical term order: length first, then lexicographic on (name, exp) with
/// exp +1 before -1 (this matches lexicographic order of serialized tokens).
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

std::string word_str(const Word& w);

/// An exact noncommutative Laurent polynomial. Immutable in spirit: all
/// operations return new values, so instances are safe to share across
/// threads.
class NcPoly {
 public:
  using TermMap = std::map<Word, Int, WordLess>;

  /// The zero polynomial over a ring.
  explicit NcPoly(Ring ring) : ring_(ring) {}
  /// A constant.
  NcPoly(Ring ring, const Int& c);
  /// A single (coefficient, word) term; the word is reduced.
  NcPoly(Ring ring, const Int& c, const Word& w);

  static NcPoly zero(Ring ring) { return NcPoly(ring); }
  static NcPoly one(Ring ring) { return NcPoly(ring, 1); }
  /// Monomial consisting of a single symbol with coefficient 1.
  static NcPoly symbol(Ring ring, const Symbol& s);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of stored terms.
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of an exact word (0 if absent). The query word is reduced
  /// before lookup.
  Int coefficient_of(const Word& w) const;
  /// The coefficient of the empty word.
  Int constant_term() const;

  NcPoly operator+(const NcPoly& q) const;
  NcPoly operator-(const NcPoly& q) const;
  NcPoly operator-() const;
  NcPoly operator*(const NcPoly& q) const;
  /// Scalar multiple.
  NcPoly scaled(const Int& c) const;

  bool operator==(const NcPoly& q) const;
  bool operator!=(const NcPoly& q) const { return !(*this == q); }

  /// True if every word has the same total degree d (with respect to the
  /// given per-generator degrees; invertible symbols have degree 0).
  /// Returns the common degree, or nullopt for the zero polynomial.
  std::optional<int> homogeneous_degree(
      const std::map<std::string, int>& degrees) const;

  /// Canonical text form: terms joined by " + ", unit coefficients omitted
  /// ("-" kept for -1), symbols space-separated, e.g. "1 + t1^-1 + y1_12 a_21".
  std::string str() const;

 private:
  void add_term(const Word& w, const Int& c);
  friend NcPoly extend_derivation(const std::map<std::string, NcPoly>&,
                                  const std::map<std::string, int>&,
                                  const NcPoly&);
  friend NcPoly extend_hom(const std::map<std::string, NcPoly>&,
                           const NcPoly&);

  Ring ring_;
  TermMap terms_;
};

/// Extend generator images to the unique degree(-1) derivation and apply it:
/// d(xy) = (dx)y + (-1)^{|x|} x (dy). `values` maps generator names to their
/// images; invertible symbols are automatically sent to zero. `degrees` maps
/// generator names to their integer degrees. Missing entries are errors.
NcPoly extend_derivation(const std::map<std::string, NcPoly>& values,
                         const std::map<std::string, int>& degrees,
                         const NcPoly& p);

/// Extend symbol images to a unital algebra homomorphism and apply it.
/// `values` is keyed by serialized token ("a1", "t1", "t1^-1"); the image of
/// t^{-1} must be supplied whenever t^{-1} occurs. Missing entries are errors.
NcPoly extend_hom(const std::map<std::string, NcPoly>& values,
                  const NcPoly& p);

/// Total degree of a word under the given generator degrees (invertible
/// symbols count 0).
int word_degree(const Word& w, const std::map<std::string, int>& degrees);

/// Parse the canonical text form produced by NcPoly::str (used by the raw-DGA
/// JSON reader and round-trip tests).
NcPoly parse_ncpoly(Ring ring, const std::string& text);

}  // namespace legaug
