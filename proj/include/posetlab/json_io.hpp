#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "posetlab/bignum.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/set_family.hpp"

namespace posetlab {

// Family files: {"n": <int>, "sets": [[sorted 1-based elements], ...]}.
// Parsing rejects duplicate sets, duplicate/out-of-range elements, and n
// outside [1,63]; serialization is canonical (bytes reproduce).
SetFamily family_from_json(const nlohmann::json& j);
SetFamily parse_family(const std::string& text);
nlohmann::json family_to_json(const SetFamily& F);

// Poset files: {"size": p, "lt": [[a,b], ...]} with 0-based elements;
// the relation is transitively closed on load and rejected if cyclic.
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& P);

// One completed search interval of a ranked sweep.
struct CheckpointRecord {
    std::uint64_t rank_start = 0;
    std::uint64_t rank_end = 0; // exclusive
    Natural best_objective;
    SetFamily best_family;
};

nlohmann::json checkpoint_to_json(const CheckpointRecord& r);
CheckpointRecord checkpoint_from_json(const nlohmann::json& j);
// JSON Lines: one record per line, append-friendly.
std::vector<CheckpointRecord> load_checkpoints(const std::string& path);
void append_checkpoint(const std::string& path, const CheckpointRecord& r);

} // namespace posetlab
