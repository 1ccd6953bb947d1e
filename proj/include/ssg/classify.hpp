#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/grading.hpp"
#include "ssg/lattice.hpp"

namespace ssg {

/// "A3 simply-connected", "A3 adjoint", "A3 intermediate#1".  X = P wins
/// when P = Q.
std::string label_diagram(const Diagram& d);

struct AtlasDiagram {
  Diagram diagram;
  FiniteAbelianGroup center;
  std::string label;
};

struct GradingSummary {
  Int bound = 0;
  std::size_t generators = 0;
  std::size_t relations = 0;
  FiniteAbelianGroup invariant_factors;
  std::size_t free_rank = 0;
  bool matches_fundamental_group = false;
};

/// Everything the classification says about one Cartan type.
struct AtlasEntry {
  CartanType cartan_type;
  FiniteAbelianGroup fundamental_group;
  /// Simply connected first, adjoint last; ties broken by enumeration index.
  std::vector<AtlasDiagram> diagrams;
  /// Hasse diagram of the isogeny order, (from, to) with X_from ⊋ X_to,
  /// as indices into `diagrams`.
  std::vector<std::pair<std::size_t, std::size_t>> isogeny_edges;
  std::optional<GradingSummary> grading;
  /// Set when some stage failed; later fields may be empty then.
  std::optional<std::string> error;
};

struct AtlasOptions {
  Int bound = kDefaultBound;
  Int enumeration_cap = kDefaultEnumerationCap;
  bool with_grading = true;
};

/// Computation errors are stored in the entry instead of thrown.
AtlasEntry build_entry(const CartanType& t, const AtlasOptions& opts = {});

/// One entry per admissible irreducible type of rank <= max_rank, ordered
/// by (rank, family letter).  Entries are built in parallel (OpenMP).
std::vector<AtlasEntry> build_atlas(int max_rank, const AtlasOptions& opts = {});

/// Single-threaded reference for build_atlas.
std::vector<AtlasEntry> build_atlas_serial(int max_rank, const AtlasOptions& opts = {});

/// Irreducible factors of a product type, with P/Q as the direct sum of the
/// factors' groups.
struct SemisimpleDecomposition {
  std::vector<Component> components;
  std::vector<FiniteAbelianGroup> component_groups;
  FiniteAbelianGroup fundamental_group;
};

SemisimpleDecomposition decompose_semisimple(const CartanType& t);

}  // namespace ssg
