#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/checked.hpp"

namespace ssg {

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

/// An element of the weight lattice P, stored by its coordinates in the
/// fundamental-weight basis.  Dominance is a sign check on the coordinates
/// and the pairing with the i-th simple coroot is coordinate i.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<Int>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const { return coords_; }

  bool is_dominant() const;
  bool is_zero() const;
  /// Sum of the coordinates.
  Int level() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  /// Scalar multiple.
  friend Weight operator*(Int k, const Weight& w);

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

private:
  std::vector<Int> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// "1,0,2" -> (1,0,2).  A rank-1 weight may be written without commas.
Weight parse_weight(std::string_view text);
/// Same, additionally checking the rank.
Weight parse_weight(std::string_view text, std::size_t rank);
std::string format_weight(const Weight& w);

// ---------------------------------------------------------------------------
// Cartan types
// ---------------------------------------------------------------------------

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Admissible ranks: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F 4, G 2.
bool admissible(Family f, int rank);

/// A product of irreducible Dynkin types, in the order written.
class CartanType {
public:
  CartanType() = default;
  /// Throws ParseError on an empty list or an inadmissible component.
  explicit CartanType(std::vector<SimpleType> components);

  std::span<const SimpleType> components() const { return components_; }
  int rank() const;
  bool is_irreducible() const { return components_.size() == 1; }

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;

private:
  std::vector<SimpleType> components_;
};

/// Grammar: component ("x" component)*, component = family letter + decimal rank.
CartanType parse_cartan_type(std::string_view text);
std::string format_cartan_type(const CartanType& t);
std::string format_simple_type(const SimpleType& t);

/// Every admissible irreducible type of rank <= max_rank, ordered by (rank, family letter).
std::vector<SimpleType> irreducible_types_up_to(int max_rank);

/// One irreducible factor of a product type and the coordinates it occupies
/// (0-based half-open range [first, first + type.rank)).
struct Component {
  SimpleType type;
  int first;
};

std::vector<Component> irreducible_components(const CartanType& t);

// ---------------------------------------------------------------------------
// Root systems
// ---------------------------------------------------------------------------

/// A root in both coordinate systems: fundamental weights and simple roots.
struct Root {
  Weight weight;
  std::vector<Int> simple_coords;

  Int height() const;
  bool is_positive() const;
};

using Matrix = std::vector<std::vector<Int>>;

/// Cartan matrix in Bourbaki node ordering; entry (i, j) is the i-th
/// fundamental-weight coordinate of simple root j.
Matrix cartan_matrix(const SimpleType& t);

class RootSystem {
public:
  explicit RootSystem(CartanType type);

  const CartanType& cartan_type() const { return type_; }
  std::size_t rank() const { return rank_; }
  const Matrix& cartan_matrix() const { return cartan_; }

  /// Simple root i (0-based) in the fundamental-weight basis: column i of the Cartan matrix.
  const Weight& simple_root(std::size_t i) const { return simple_[i]; }
  std::span<const Weight> simple_roots() const { return simple_; }

  /// All roots, positive ones first, each half sorted by (height, coordinates).
  std::span<const Root> roots() const { return roots_; }
  std::span<const Root> positive_roots() const { return std::span(roots_).first(num_positive_); }

  /// Integer symmetrizer d: (alpha_i, alpha_j) = d_i * A(i, j), scaled so the d_i are coprime.
  std::span<const Int> symmetrizer() const { return sym_; }

  /// (w, sum_j c_j alpha_j) in the scaled invariant form, with w in the
  /// fundamental-weight basis and c in the simple-root basis.
  Int pair(const Weight& w, std::span<const Int> simple_coords) const;

  /// Simple-root coordinates of w; false when w is not in the root lattice.
  bool root_coords(const Weight& w, std::vector<Int>& out) const;

  bool in_root_lattice(const Weight& w) const;

private:
  CartanType type_;
  std::size_t rank_ = 0;
  Matrix cartan_;
  std::vector<Weight> simple_;
  std::vector<Int> sym_;
  std::vector<Root> roots_;
  std::size_t num_positive_ = 0;
};

RootSystem build_root_system(const CartanType& t);

/// lambda - lambda_i alpha_i for a 0-based index i.  Throws std::out_of_range.
Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& w);

/// The Weyl orbit of w, sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

struct DominantRep {
  Weight weight;
  int sign;
  /// w lies on a reflecting wall (its stabilizer in W is nontrivial).
  bool singular;
};

DominantRep dominant_representative(const RootSystem& rs, Weight w);

/// Half the sum of the positive roots: the all-ones vector.
Weight rho(const RootSystem& rs);

}  // namespace ssg
