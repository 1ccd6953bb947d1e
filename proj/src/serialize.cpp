#include "ssg/serialize.hpp"

namespace ssg {

Json to_json(const Weight& w) {
  Json j = Json::array();
  for (Int c : w.coords()) j.push_back(c);
  return j;
}

Json to_json(const FiniteAbelianGroup& g) {
  Json j = Json::array();
  for (Int d : g.invariant_factors()) j.push_back(d);
  return j;
}

Json to_json(const Subgroup& h) {
  Json j = Json::array();
  for (const Element& e : h.generators()) j.push_back(e);
  return j;
}

Json to_json(const Decomposition& d) {
  Json j = Json::array();
  for (auto it = d.rbegin(); it != d.rend(); ++it) j.push_back({{"weight", to_json(it->first)}, {"multiplicity", it->second}});
  return j;
}

Json to_json(const GradingPresentation& p) {
  Json gens = Json::array();
  for (const Weight& w : p.generators) gens.push_back(to_json(w));
  Json classes = Json::array();
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    classes.push_back({{"weight", to_json(p.generators[i])}, {"class", p.class_map[i]}});
  Json j;
  j["generators"] = std::move(gens);
  j["relation_count"] = p.relation_count();
  j["invariant_factors"] = to_json(p.torsion);
  j["free_rank"] = p.free_rank;
  j["class_map"] = std::move(classes);
  return j;
}

Json to_json(const AtlasEntry& e) {
  Json ds = Json::array();
  for (const AtlasDiagram& d : e.diagrams)
    ds.push_back({{"label", d.label}, {"subgroup", to_json(d.diagram.subgroup)}, {"center", to_json(d.center)}});
  Json edges = Json::array();
  for (const auto& [from, to] : e.isogeny_edges) edges.push_back({from, to});
  Json j;
  j["type"] = format_cartan_type(e.cartan_type);
  j["fundamental_group"] = to_json(e.fundamental_group);
  j["diagrams"] = std::move(ds);
  j["isogeny_edges"] = std::move(edges);
  if (e.grading) {
    j["grading"] = {{"bound", e.grading->bound},
                    {"invariant_factors", to_json(e.grading->invariant_factors)},
                    {"matches_fundamental_group", e.grading->matches_fundamental_group}};
  } else {
    j["grading"] = nullptr;
  }
  if (e.error) j["error"] = *e.error;
  return j;
}

Json atlas_to_json(const std::vector<AtlasEntry>& entries, int max_rank, Int bound) {
  Json list = Json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  Json j;
  j["parameters"] = {{"max_rank", max_rank}, {"bound", bound}};
  j["entries"] = std::move(list);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ssg
