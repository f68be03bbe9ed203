#ifndef KCUT_JSON_HPP
#define KCUT_JSON_HPP

#include <json.hpp>

#include "kcut/graph.hpp"
#include "kcut/kt_partition.hpp"
#include "kcut/pipeline.hpp"

namespace kcut {

/// {"q", "stages": {...}, "params": {...}} plus the postcondition checks.
nlohmann::json to_json(const KTReport& report);

/// {"k", "value", "components", "method", "branch", "seed", "stats"};
/// components are sorted id lists ordered by smallest member.
nlohmann::json to_json(const SolveReport& report);

/// {"k", "value", "components"} for a bare cut.
nlohmann::json cut_json(const KCut& cut);

}  // namespace kcut

#endif  // KCUT_JSON_HPP
