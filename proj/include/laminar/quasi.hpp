#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laminar/canonical.hpp"

namespace laminar {

// Nonempty, pairwise disjoint point sets covering the universe.
struct CellPartition {
  std::vector<PointSet> cells;
};

// Absent when the partition is valid; otherwise a description of the first
// problem.
std::optional<std::string> check_partition(const CellPartition& partition,
                                           std::size_t universe_size);

// The directed family of nonempty ball traces on one cell. Trace points are
// renumbered 0..cell_size-1 in ascending original order; cell_points maps
// them back. Balls whose traces coincide are merged into one trace ball named
// after the smallest originating ball, with all origin ids recorded.
struct TraceFamily {
  BallFamily family;
  std::vector<std::size_t> cell_points;           // trace point -> original point
  std::vector<std::vector<std::string>> origins;  // per trace ball, sorted origin ids
};

// Throws InvalidInput for an empty cell.
TraceFamily restrict_family(const BallFamily& family, const PointSet& cell);

// Original-universe extension of one trace ball.
PointSet original_points(const TraceFamily& traces, std::size_t trace_ball,
                         std::size_t universe_size);

struct CellCanonical {
  std::size_t cell_index;
  TraceFamily traces;
  std::vector<std::size_t> minimal_members;  // minimal representative in `traces`
};

// Per cell, the minimal representative of target ∩ cell in the cell's trace
// family. Output ordered by cell index.
std::vector<CellCanonical> quasi_canonical(const PointSet& target,
                                           const BallFamily& family,
                                           const CellPartition& partition);

}  // namespace laminar
