#include "ssg/classify.hpp"

#include <algorithm>
#include <numeric>

namespace ssg {

std::string label_diagram(const Diagram& d) {
  const std::string prefix = format_cartan_type(d.cartan_type) + " ";
  if (d.is_simply_connected()) return prefix + "simply-connected";
  if (d.is_adjoint()) return prefix + "adjoint";
  return prefix + "intermediate#" + std::to_string(d.index);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<AtlasDiagram>& ds) {
  const std::size_t n = ds.size();
  auto above = [&](std::size_t i, std::size_t j) {
    return i != j && isogeny_order(ds[i].diagram, ds[j].diagram) && !isogeny_order(ds[j].diagram, ds[i].diagram);
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!above(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (above(i, k) && above(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

}  // namespace

AtlasEntry build_entry(const CartanType& t, const AtlasOptions& opts) {
  AtlasEntry e;
  e.cartan_type = t;
  try {
    e.fundamental_group = fundamental_group(t);
    std::vector<Diagram> ds = diagrams(t, opts.enumeration_cap);
    std::stable_sort(ds.begin(), ds.end(),
                     [](const Diagram& a, const Diagram& b) { return a.subgroup.order() > b.subgroup.order(); });
    for (auto& d : ds) {
      FiniteAbelianGroup center = center_char_group(d);
      std::string label = label_diagram(d);
      e.diagrams.push_back({std::move(d), std::move(center), std::move(label)});
    }
    e.isogeny_edges = hasse_edges(e.diagrams);
    if (opts.with_grading) {
      const RootSystem rs(t);
      const GradingPresentation p = grading_presentation(rs, opts.bound);
      e.grading = GradingSummary{opts.bound,         p.generators.size(), p.relation_count(), p.torsion,
                                 p.free_rank, class_map_matches(rs, p)};
    }
  } catch (const ComputationError& ex) {
    e.error = ex.what();
  }
  return e;
}

std::vector<AtlasEntry> build_atlas_serial(int max_rank, const AtlasOptions& opts) {
  std::vector<AtlasEntry> out;
  for (const SimpleType& s : irreducible_types_up_to(max_rank)) out.push_back(build_entry(CartanType({s}), opts));
  return out;
}

std::vector<AtlasEntry> build_atlas(int max_rank, const AtlasOptions& opts) {
  const std::vector<SimpleType> types = irreducible_types_up_to(max_rank);
  std::vector<AtlasEntry> out(types.size());
  const std::int64_t n = static_cast<std::int64_t>(types.size());
  // build_entry never throws ComputationError; anything else is a bug and terminates.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) out[i] = build_entry(CartanType({types[i]}), opts);
  return out;
}

SemisimpleDecomposition decompose_semisimple(const CartanType& t) {
  SemisimpleDecomposition d;
  d.components = irreducible_components(t);
  std::vector<Int> orders;
  for (const Component& c : d.components) {
    d.component_groups.push_back(fundamental_group(CartanType({c.type})));
    for (Int f : d.component_groups.back().invariant_factors()) orders.push_back(f);
  }
  d.fundamental_group = FiniteAbelianGroup::from_cyclic_orders(orders);
  return d;
}

}  // namespace ssg
