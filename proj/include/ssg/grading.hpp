#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <vector>

#include "ssg/lattice.hpp"
#include "ssg/repring.hpp"

namespace ssg {

/// child ≺ left ⊗ right, read additively as child = left + right.
struct TensorRelation {
  Weight child;
  Weight left;
  Weight right;

  friend bool operator==(const TensorRelation&, const TensorRelation&) = default;
};

/// One relation per distinct constituent of V(lam) ⊗ V(mu), over all pairs
/// lam <= mu of dominant weights with coordinate sum <= bound.  Pairs are
/// visited in lexicographic order and constituents in increasing order.
///
/// The pairwise products run in parallel (OpenMP); results are merged in
/// pair order so the output does not depend on the schedule.
std::vector<TensorRelation> generate_relations(const RootSystem& rs, Int bound);

/// Single-threaded reference for generate_relations.
std::vector<TensorRelation> generate_relations_serial(const RootSystem& rs, Int bound);

/// Finite presentation of the universal grading group of the generators.
struct GradingPresentation {
  std::vector<Weight> generators;
  std::vector<TensorRelation> relations;
  FiniteAbelianGroup torsion;
  /// Rank of the free part; 0 for every semisimple type once relations are in.
  std::size_t free_rank = 0;
  /// class_map[i] is the image of generators[i]: torsion residues followed by
  /// free_rank integer coordinates.
  std::vector<Element> class_map;

  std::size_t relation_count() const { return relations.size(); }
  const Element& class_of(const Weight& w) const;
};

/// Cokernel of the relation matrix (one row child - left - right per
/// relation, one column per generator), presented through its Smith form.
/// Throws std::invalid_argument if a relation mentions a weight outside `gens`.
GradingPresentation universal_grading_group(const std::vector<TensorRelation>& rels, const std::vector<Weight>& gens);

/// Generators: dominant weights with coordinate sum <= bound.  Relations:
/// generate_relations(rs, bound) restricted to children among the generators.
GradingPresentation grading_presentation(const RootSystem& rs, Int bound);

/// The image of w in P/Q, in the coordinates of FundamentalQuotient.
Element grading_class(const RootSystem& rs, const Weight& w);

/// True when the computed quotient is isomorphic to P/Q by an isomorphism
/// sending class_map(g) to grading_class(g) for every generator g.
bool class_map_matches(const RootSystem& rs, const GradingPresentation& p);

inline constexpr int kDefaultBound = 3;
inline constexpr int kDefaultDepth = 4;

struct EquivalenceResult {
  bool found = false;
  /// The tensor word x_1 ⊗ ... ⊗ x_m whose product contains both weights.
  std::vector<Weight> certificate;
};

/// Breadth-first search over tensor words with letters from
/// dominant_weights_up_to(bound).  A word is tracked only by the set of
/// highest weights in its product, and each such set is expanded once, at
/// the shortest word length that reaches it.  Levels are built lazily and
/// reused across queries.
class EquivalenceSearch {
public:
  EquivalenceSearch(const RootSystem& rs, Int bound, int depth = kDefaultDepth);

  EquivalenceResult find(const Weight& a, const Weight& b);

  /// Number of distinct supports explored so far.
  std::size_t states() const;

private:
  struct State {
    std::vector<Weight> word;
    std::vector<Weight> support;  // sorted
  };

  bool extend();

  const RootSystem& rs_;
  RepCache cache_;
  std::vector<Weight> letters_;
  int depth_;
  std::vector<std::vector<State>> levels_;
  std::set<std::vector<Weight>> seen_;
};

/// a ~ b: some tensor word of length <= depth contains both.  A false result
/// only means no witness exists within the bounds.
EquivalenceResult tensor_equivalent(const RootSystem& rs, const Weight& a, const Weight& b, Int bound = kDefaultBound,
                                    int depth = kDefaultDepth);

}  // namespace ssg
