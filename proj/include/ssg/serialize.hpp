#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ssg/classify.hpp"
#include "ssg/grading.hpp"
#include "ssg/repring.hpp"

namespace ssg {

// JSON views of the library types.  Key order is fixed (ordered_json), so
// dump() output is byte-stable for equal inputs.

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const Subgroup& h);
/// [{"weight": [..], "multiplicity": m}, ...] in decreasing weight order.
Json to_json(const Decomposition& d);
/// {generators, relation_count, invariant_factors, free_rank, class_map}.
Json to_json(const GradingPresentation& p);
/// {type, fundamental_group, diagrams, isogeny_edges, grading[, error]}.
Json to_json(const AtlasEntry& e);
/// {parameters: {max_rank, bound}, entries: [...]}.
Json atlas_to_json(const std::vector<AtlasEntry>& entries, int max_rank, Int bound);

/// dump(2) plus a trailing newline.
std::string dump(const Json& j);

}  // namespace ssg
