#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcb/arrangement.hpp"
#include "mcb/building.hpp"
#include "mcb/matroid.hpp"
#include "mcb/paving.hpp"
#include "mcb/smallset.hpp"

namespace mcb {

// Insertion-ordered JSON so every emitted document is byte-deterministic.
using Json = nlohmann::ordered_json;

// All user-facing element indices are 1-based; internal sets are 0-based.
std::vector<int> to_one_based(SmallSet s);
Json set_to_json(SmallSet s);
Json family_to_json(const std::vector<SmallSet>& v);
SmallSet set_from_json(const Json& arr, int n);  // BadDescriptor on junk

// Instance descriptors. Parsers reject anything malformed with code
// BadDescriptor; validation beyond shape is left to the module
// constructors, whose codes pass through.
Matroid matroid_from_descriptor(const Json& j);  // flats | graph | uniform | paving
Graph graph_from_descriptor(const Json& j);
std::pair<int, std::vector<SmallSet>> family_from_descriptor(const Json& j);  // building_set
Arrangement arrangement_from_descriptor(const Json& j);  // arrangement | graph_arrangement
LineArrangement lines_from_descriptor(const Json& j);    // lines

Json descriptor_for_flats(const Matroid& m);
Json descriptor_for_graph(const Graph& g);
Json descriptor_for_uniform(int r, int n);
Json descriptor_for_paving(int n, int m, const std::vector<SmallSet>& blocks);
Json descriptor_for_family(int n, const std::vector<SmallSet>& members);
Json descriptor_for_arrangement(const Arrangement& a);

// Canonical rendering: 2-space indent, trailing newline.
std::string json_text(const Json& j);

}  // namespace mcb
