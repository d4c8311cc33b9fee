#include "laminar/quasi.hpp"

#include <algorithm>

namespace laminar {

std::optional<std::string> check_partition(const CellPartition& partition,
                                           std::size_t universe_size) {
  PointSet seen(universe_size);
  for (std::size_t i = 0; i < partition.cells.size(); ++i) {
    const PointSet& cell = partition.cells[i];
    if (cell.universe_size() != universe_size)
      return "cell " + std::to_string(i) + " does not match the universe size";
    if (cell.empty()) return "cell " + std::to_string(i) + " is empty";
    if (cell.intersects(seen))
      return "cell " + std::to_string(i) + " overlaps an earlier cell";
    seen |= cell;
  }
  if (seen != PointSet::full(universe_size))
    return "cells do not cover the universe";
  return std::nullopt;
}

TraceFamily restrict_family(const BallFamily& family, const PointSet& cell) {
  if (cell.universe_size() != family.universe_size())
    throw InvalidInput("cell does not match the family universe");
  if (cell.empty()) throw InvalidInput("cell is empty");

  const std::vector<std::size_t> cell_points = cell.points();
  std::vector<std::size_t> compact(family.universe_size(), PointSet::npos);
  for (std::size_t i = 0; i < cell_points.size(); ++i) compact[cell_points[i]] = i;

  struct Group {
    PointSet trace;
    std::vector<std::size_t> origin_balls;
  };
  std::vector<Group> groups;
  for (std::size_t b = 0; b < family.ball_count(); ++b) {
    PointSet trace(cell_points.size());
    for (std::size_t p : (family.ball(b).points & cell).points())
      trace.add(compact[p]);
    if (trace.empty()) continue;
    bool found = false;
    for (Group& g : groups)
      if (g.trace == trace) {
        g.origin_balls.push_back(b);
        found = true;
        break;
      }
    if (!found) groups.push_back({std::move(trace), {b}});
  }

  TraceFamily out{BallFamily(0, {}), cell_points, {}};
  std::vector<Ball> balls;
  for (Group& g : groups) {
    // Coinciding traces come from a chain of balls; the smallest one names
    // the trace ball.
    std::size_t named_by = g.origin_balls.front();
    for (std::size_t b : g.origin_balls)
      if (family.ball(b).points.size() < family.ball(named_by).points.size())
        named_by = b;
    std::vector<std::string> origin_ids;
    for (std::size_t b : g.origin_balls) origin_ids.push_back(family.ball(b).id);
    std::sort(origin_ids.begin(), origin_ids.end());
    balls.push_back({family.ball(named_by).id, std::move(g.trace)});
    out.origins.push_back(std::move(origin_ids));
  }
  out.family = BallFamily(cell_points.size(), std::move(balls));
  return out;
}

PointSet original_points(const TraceFamily& traces, std::size_t trace_ball,
                         std::size_t universe_size) {
  PointSet out(universe_size);
  for (std::size_t p : traces.family.ball(trace_ball).points.points())
    out.add(traces.cell_points[p]);
  return out;
}

std::vector<CellCanonical> quasi_canonical(const PointSet& target,
                                           const BallFamily& family,
                                           const CellPartition& partition) {
  if (target.universe_size() != family.universe_size())
    throw InvalidInput("target does not match the family universe");
  if (auto problem = check_partition(partition, family.universe_size()))
    throw InvalidInput("invalid partition: " + *problem);

  std::vector<CellCanonical> out;
  for (std::size_t i = 0; i < partition.cells.size(); ++i) {
    TraceFamily traces = restrict_family(family, partition.cells[i]);
    PointSet cell_target(traces.cell_points.size());
    for (std::size_t p = 0; p < traces.cell_points.size(); ++p)
      if (target.contains(traces.cell_points[p])) cell_target.add(p);
    Forest minimal = minimal_representative(cell_target, traces.family);
    std::vector<std::size_t> members = minimal.members();
    out.push_back({i, std::move(traces), std::move(members)});
  }
  return out;
}

}  // namespace laminar
