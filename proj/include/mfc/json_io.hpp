#pragma once

#include <string>

#include "mfc/fusion_ring.hpp"
#include "mfc/modular_data.hpp"

namespace mfc {

/** Parses a fusion ring from JSON text: {"labels": [...], "N": [[[...]]]}
 *  ("rank" optional, duals derived). Malformed input raises InvalidInput. */
FusionRing ring_from_json_text(const std::string& text);

/** Reads a fusion ring from a JSON file. */
FusionRing load_ring(const std::string& path);

/** Parses modular data from JSON text:
 *  {"ring": <inline ring or path>, "d": [...], "h": [[num,den],...],
 *   "D_sign": 1}. A ring path is resolved relative to base_dir. */
ModularData modular_from_json_text(const std::string& text,
                                   const std::string& base_dir = "");

/** Reads modular data from a JSON file (ring paths resolve beside it). */
ModularData load_modular(const std::string& path);

/** Serializes a fusion ring to JSON. */
std::string ring_to_json(const FusionRing& ring);

/** Serializes modular data to JSON (ring inline). */
std::string modular_to_json(const ModularData& md);

}  // namespace mfc
