#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ssg/rootsys.hpp"

namespace ssg {

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
/// Determinant by fraction-free (Bareiss) elimination.  Square input only.
Int determinant(const Matrix& m);

/// left * m * right == diag, with left and right unimodular and the
/// diagonal entries nonnegative, each dividing the next.
struct SmithForm {
  Matrix left;
  Matrix diag;
  Matrix right;

  /// The diagonal entries d_1 | d_2 | ... (length min(rows, cols)).
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const Matrix& m);

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `gens` (rows x k).  The result is rows x r lower-echelon: each column has a
/// positive pivot, pivots move strictly down, and entries left of a pivot in
/// its row are reduced into [0, pivot).  Zero columns are dropped.
Matrix column_hermite_form(const Matrix& gens);

// ---------------------------------------------------------------------------
// Finite abelian groups
// ---------------------------------------------------------------------------

using Element = std::vector<Int>;

/// Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  /// Factors must already form a divisibility chain of integers >= 2.
  explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);
  /// Z/n_1 x ... x Z/n_r in invariant-factor form.  Orders of 1 vanish;
  /// an order of 0 (an infinite factor) throws std::invalid_argument.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  Int order() const;
  bool is_trivial() const { return factors_.empty(); }

  Element zero() const { return Element(factors_.size(), 0); }
  Element reduce(Element e) const;
  Element add(const Element& a, const Element& b) const;
  /// Every element, in lexicographic order of residues.
  std::vector<Element> elements() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
  std::vector<Int> factors_;
};

/// "[2,2]", "[]".
std::string format_group(const FiniteAbelianGroup& g);

/// A subgroup H of a finite abelian group G = Z^k / diag(d) Z^k, identified
/// with its preimage lattice L in Z^k.  The canonical form is the column
/// Hermite form of L, so equal subgroups compare equal.
class Subgroup {
public:
  Subgroup(FiniteAbelianGroup ambient, const std::vector<Element>& generators);

  static Subgroup trivial(const FiniteAbelianGroup& g) { return Subgroup(g, {}); }
  static Subgroup whole(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& ambient() const { return ambient_; }
  /// k x k lower-triangular Hermite basis of the preimage lattice.
  const Matrix& canonical_matrix() const { return hermite_; }
  /// The nonzero Hermite columns reduced modulo the invariant factors.
  std::vector<Element> generators() const;

  Int order() const;
  bool contains(const Element& e) const;
  bool contains(const Subgroup& other) const;
  /// Abstract isomorphism type of H in invariant-factor form.
  FiniteAbelianGroup abstract_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.hermite_ == b.hermite_;
  }
  /// Sort key: (order, canonical matrix).
  friend bool operator<(const Subgroup& a, const Subgroup& b);

private:
  FiniteAbelianGroup ambient_;
  Matrix hermite_;
};

/// "[[1,0],[0,1]]" style generator list.
std::string format_generators(const Subgroup& h);

inline constexpr Int kDefaultEnumerationCap = 64;

/// All subgroups, sorted by (order, canonical matrix).  Throws
/// EnumerationCapError when |g| exceeds `cap`.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, Int cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// P/Q and diagrams
// ---------------------------------------------------------------------------

/// The quotient map P -> P/Q, read off the Smith form of the Cartan matrix:
/// with U A V = D, the class of w is (U w)_i mod d_i over the indices where
/// d_i > 1.
class FundamentalQuotient {
public:
  explicit FundamentalQuotient(const CartanType& t);

  const FiniteAbelianGroup& group() const { return group_; }
  Element project(const Weight& w) const;

private:
  FiniteAbelianGroup group_;
  std::vector<std::vector<Int>> rows_;  // rows of U kept for nontrivial factors
};

FiniteAbelianGroup fundamental_group(const CartanType& t);

/// (V, R, X) with Q ⊂ X ⊂ P, X being the preimage of `subgroup` under P -> P/Q.
struct Diagram {
  CartanType cartan_type;
  Subgroup subgroup;
  /// Position of `subgroup` in enumerate_subgroups(P/Q).
  std::size_t index = 0;

  bool is_simply_connected() const { return subgroup.order() == subgroup.ambient().order(); }
  bool is_adjoint() const { return subgroup.order() == 1; }
};

/// One diagram per subgroup of P/Q, in enumeration order (X = Q first).
std::vector<Diagram> diagrams(const CartanType& t, Int cap = kDefaultEnumerationCap);

/// X/Q, the character group of the centre of the group with weight lattice X.
FiniteAbelianGroup center_char_group(const Diagram& d);

/// Whether w lies in X.  Throws std::invalid_argument if rs and d disagree on the type.
bool weight_in_lattice(const RootSystem& rs, const Weight& w, const Diagram& d);

/// An isogeny G1 -> G2 exists iff X1 ⊇ X2.  Throws std::invalid_argument on mismatched types.
bool isogeny_order(const Diagram& d1, const Diagram& d2);

}  // namespace ssg
