#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "quivercover/presentation.hpp"
#include "quivercover/repr.hpp"
#include "quivercover/trans_quiver.hpp"

namespace qc {

using ojson = nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view bytes);
std::string hex_digest(std::string_view bytes);

ojson graph_json(const Multigraph& g);
ojson diagnostics_json(const Diagnostics& d);
ojson module_json(const Representation& m);
ojson presentation_json(const Presentation& p);

}  // namespace qc
