#pragma once

#include <json.hpp>

#include "polaris/complexes.hpp"
#include "polaris/isotone.hpp"
#include "polaris/lattice.hpp"
#include "polaris/morse.hpp"
#include "polaris/oracle.hpp"
#include "polaris/polarization.hpp"

namespace polaris {

// Canonical key order everywhere; indices and set elements are 1-based on the
// wire, 0-based in memory.
using Json = nlohmann::ordered_json;

Json exponent_json(const Exponent& a);
Exponent exponent_from(const Json& j);

Json edge_json(const DownEdge& e);
DownEdge edge_from(const Json& j);

Json graph_json(const SyzygyGraph& g);              // bare edge list
SyzygyGraph graph_from(const Json& j);

Json tableau_json(const Key& t);
Key tableau_from(const Json& j, int n);

Json chain_json(const Chain& c);

Json family_json(const IsotoneFamily& f);
IsotoneFamily family_from(const Json& j);

Json complex_json(const ComplexDesc& c);

Json matching_json(const Matching& m);

Json betti_json(const BettiTable& b);

Json diagnostic_json(const Diagnostic& d);

// FNV-1a over the serialized text, for input digests and golden manifests.
std::string fnv1a_hex(const std::string& data);

}  // namespace polaris
