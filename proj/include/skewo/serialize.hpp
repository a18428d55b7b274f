#pragma once

// JSON encodings of the library's values (each re-parses to an equal value)
// and the DOT rendering of a block.

#include "skewo/appendix.hpp"
#include "skewo/pbw.hpp"
#include "skewo/skew_o.hpp"

#include <json.hpp>

#include <string>

namespace skewo {

using json = nlohmann::json;

json to_json(const SimpleX& x, const GammaSpec& gamma);
SimpleX simple_from_json(const json& j, const GammaSpec& gamma);

json to_json(const BlockData& b, const GammaSpec& gamma);
BlockData block_from_json(const json& j, const GammaSpec& gamma);

json to_json(const CharacterVB& ch);
CharacterVB character_from_json(const json& j);

json to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const json& j, const GammaSpec& gamma);

json to_json(const GroupAlgebraElement& g);

json to_json(const CcResult& r);
json to_json(const NoGoReport& r);
json to_json(const CoverReport& r, const GammaSpec& gamma);
json to_json(const FourSetups& s, const GammaSpec& gamma);

/// Nodes are the simples of the block; solid edges x -> x' for
/// [Z(x) : V(x')] > 0 with x != x', dashed undirected edges for F.
std::string block_to_dot(const BlockData& b);

}  // namespace skewo
