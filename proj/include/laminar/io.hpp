#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "laminar/canonical.hpp"
#include "laminar/cheese.hpp"
#include "laminar/quasi.hpp"

namespace laminar {

using Json = nlohmann::json;

// Readers throw ParseError on malformed documents. Writers emit the
// deterministic orders described next to each format; nlohmann::json keeps
// object keys sorted, so rendering is byte-stable.

// {"universe_size": n, "balls": [{"id": s, "points": [ints]}, ...]}
Json family_to_json(const BallFamily& family);
BallFamily family_from_json(const Json& j);

// {"op": "ball", "id": s} | {"op": "union"|"inter", "args": [...]}
// | {"op": "diff", "args": [a, b]} | {"op": "compl", "args": [a]}
Json expr_to_json(const SetExpr& expr);
SetExpr expr_from_json(const Json& j);

// [{"wheel": id, "holes": [ids sorted]}, ...] sorted by
// (min point of wheel, wheel size, wheel id).
Json decomposition_to_json(const Decomposition& d, const BallFamily& family);
Decomposition decomposition_from_json(const Json& j, const BallFamily& family);

// {"forest": [{"ball": id, "level": n}, ...]} in code-entry order.
Json forest_to_json(const Forest& forest);
std::vector<CodeEntry> forest_from_json(const Json& j);

// {"code": [{"ball": id, "level": n}, ...]}
Json code_to_json(const CanonicalCode& code);
CanonicalCode code_from_json(const Json& j);

// {"levels": [[points...], ...]}
Json level_sets_to_json(const LevelSets& sets);
std::vector<std::vector<std::size_t>> level_sets_from_json(const Json& j);

// {"cells": [[points...], ...]}
Json cells_to_json(const CellPartition& partition);
CellPartition cells_from_json(const Json& j, std::size_t universe_size);

// [{"cell": i, "forest": [{"level": n, "origins": [ids], "trace_points":
// [...]}, ...]}, ...]
Json quasi_to_json(const std::vector<CellCanonical>& cells);
struct QuasiCellEntry {
  std::size_t level;
  std::vector<std::string> origins;
  std::vector<std::size_t> trace_points;
};
struct QuasiCellDump {
  std::size_t cell;
  std::vector<QuasiCellEntry> forest;
};
std::vector<QuasiCellDump> quasi_from_json(const Json& j);

// {"ok": bool, "violations": [{"kind": s, "balls": [ids]}, ...]}
Json report_to_json(const ValidationReport& report);
ValidationReport report_from_json(const Json& j);

// {"unpackable": bool, "witness": id?}  (witness present only when false)
Json unpackable_to_json(const CheckResult& result);
CheckResult unpackable_from_json(const Json& j);

// 2-space indented dump with a trailing newline.
std::string render(const Json& j);
Json parse_json(std::string_view text);

}  // namespace laminar
