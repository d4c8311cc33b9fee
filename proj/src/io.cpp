#include "laminar/io.hpp"

#include <algorithm>

namespace laminar {

namespace {

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object())
    throw ParseError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

std::size_t as_count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(std::string(what) + ": expected a non-negative integer");
  return static_cast<std::size_t>(j.get<std::int64_t>());
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  return j;
}

PointSet points_from_json(const Json& j, std::size_t universe_size, const char* what) {
  PointSet out(universe_size);
  for (const Json& p : as_array(j, what)) {
    const std::size_t v = as_count(p, what);
    if (v >= universe_size)
      throw ParseError(std::string(what) + ": point " + std::to_string(v) +
                       " is outside the universe");
    out.add(v);
  }
  return out;
}

Json points_to_json(const PointSet& points) {
  Json out = Json::array();
  for (std::size_t p : points.points()) out.push_back(p);
  return out;
}

const char* kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::empty_ball: return "empty_ball";
    case Violation::Kind::duplicate_id: return "duplicate_id";
    case Violation::Kind::duplicate_extension: return "duplicate_extension";
    case Violation::Kind::crossing_pair: return "crossing_pair";
    case Violation::Kind::missing_universe: return "missing_universe";
  }
  return "unknown";
}

Violation::Kind kind_from_name(const std::string& name) {
  if (name == "empty_ball") return Violation::Kind::empty_ball;
  if (name == "duplicate_id") return Violation::Kind::duplicate_id;
  if (name == "duplicate_extension") return Violation::Kind::duplicate_extension;
  if (name == "crossing_pair") return Violation::Kind::crossing_pair;
  if (name == "missing_universe") return Violation::Kind::missing_universe;
  throw ParseError("report: unknown violation kind '" + name + "'");
}

}  // namespace

Json family_to_json(const BallFamily& family) {
  Json balls = Json::array();
  for (const Ball& b : family.balls())
    balls.push_back({{"id", b.id}, {"points", points_to_json(b.points)}});
  return {{"universe_size", family.universe_size()}, {"balls", balls}};
}

BallFamily family_from_json(const Json& j) {
  const std::size_t universe_size = as_count(member(j, "universe_size", "family"), "family universe_size");
  std::vector<Ball> balls;
  for (const Json& jb : as_array(member(j, "balls", "family"), "family balls")) {
    std::string id = as_string(member(jb, "id", "ball"), "ball id");
    PointSet points = points_from_json(member(jb, "points", "ball"), universe_size, "ball points");
    balls.push_back({std::move(id), std::move(points)});
  }
  return BallFamily(universe_size, std::move(balls));
}

Json expr_to_json(const SetExpr& expr) {
  switch (expr.kind) {
    case SetExpr::Kind::ball:
      return {{"op", "ball"}, {"id", expr.ball_id}};
    case SetExpr::Kind::union_:
    case SetExpr::Kind::inter:
    case SetExpr::Kind::diff:
    case SetExpr::Kind::compl_: {
      const char* op = expr.kind == SetExpr::Kind::union_  ? "union"
                       : expr.kind == SetExpr::Kind::inter ? "inter"
                       : expr.kind == SetExpr::Kind::diff  ? "diff"
                                                           : "compl";
      Json args = Json::array();
      for (const SetExpr& a : expr.args) args.push_back(expr_to_json(a));
      return {{"op", op}, {"args", args}};
    }
  }
  throw InvalidInput("malformed expression node");
}

SetExpr expr_from_json(const Json& j) {
  const std::string op = as_string(member(j, "op", "expr"), "expr op");
  if (op == "ball")
    return SetExpr::ball(as_string(member(j, "id", "expr"), "expr ball id"));
  const Json& args = as_array(member(j, "args", "expr"), "expr args");
  std::vector<SetExpr> parsed;
  for (const Json& a : args) parsed.push_back(expr_from_json(a));
  if (op == "union") return SetExpr::make_union(std::move(parsed));
  if (op == "inter") return SetExpr::make_inter(std::move(parsed));
  if (op == "diff") {
    if (parsed.size() != 2) throw ParseError("expr: diff takes exactly two arguments");
    return SetExpr::make_diff(std::move(parsed[0]), std::move(parsed[1]));
  }
  if (op == "compl") {
    if (parsed.size() != 1) throw ParseError("expr: compl takes exactly one argument");
    return SetExpr::make_compl(std::move(parsed[0]));
  }
  throw ParseError("expr: unknown op '" + op + "'");
}

Json decomposition_to_json(const Decomposition& d, const BallFamily& family) {
  Json out = Json::array();
  for (const SwissCheese& c : d.cheeses) {
    std::vector<std::string> holes;
    for (std::size_t h : c.holes) holes.push_back(family.ball(h).id);
    std::sort(holes.begin(), holes.end());
    out.push_back({{"wheel", family.ball(c.wheel).id}, {"holes", holes}});
  }
  return out;
}

Decomposition decomposition_from_json(const Json& j, const BallFamily& family) {
  Decomposition out;
  for (const Json& jc : as_array(j, "decomposition")) {
    SwissCheese cheese;
    cheese.wheel = family.require(as_string(member(jc, "wheel", "cheese"), "cheese wheel"));
    for (const Json& jh : as_array(member(jc, "holes", "cheese"), "cheese holes"))
      cheese.holes.push_back(family.require(as_string(jh, "cheese hole")));
    std::sort(cheese.holes.begin(), cheese.holes.end());
    out.cheeses.push_back(std::move(cheese));
  }
  return out;
}

namespace {

Json entries_to_json(const std::vector<CodeEntry>& entries) {
  Json out = Json::array();
  for (const CodeEntry& e : entries)
    out.push_back({{"ball", e.ball}, {"level", e.level}});
  return out;
}

std::vector<CodeEntry> entries_from_json(const Json& j, const char* what) {
  std::vector<CodeEntry> out;
  for (const Json& je : as_array(j, what))
    out.push_back({as_string(member(je, "ball", what), what),
                   as_count(member(je, "level", what), what)});
  return out;
}

}  // namespace

Json forest_to_json(const Forest& forest) {
  return {{"forest", entries_to_json(code_entries(forest))}};
}

std::vector<CodeEntry> forest_from_json(const Json& j) {
  return entries_from_json(member(j, "forest", "forest"), "forest entry");
}

Json code_to_json(const CanonicalCode& code) {
  return {{"code", entries_to_json(code.entries)}};
}

CanonicalCode code_from_json(const Json& j) {
  return {entries_from_json(member(j, "code", "code"), "code entry")};
}

Json level_sets_to_json(const LevelSets& sets) {
  Json levels = Json::array();
  for (const PointSet& gamma : sets.gamma) levels.push_back(points_to_json(gamma));
  return {{"levels", levels}};
}

std::vector<std::vector<std::size_t>> level_sets_from_json(const Json& j) {
  std::vector<std::vector<std::size_t>> out;
  for (const Json& jl : as_array(member(j, "levels", "levels"), "levels")) {
    std::vector<std::size_t> level;
    for (const Json& p : as_array(jl, "level")) level.push_back(as_count(p, "level point"));
    out.push_back(std::move(level));
  }
  return out;
}

Json cells_to_json(const CellPartition& partition) {
  Json cells = Json::array();
  for (const PointSet& cell : partition.cells) cells.push_back(points_to_json(cell));
  return {{"cells", cells}};
}

CellPartition cells_from_json(const Json& j, std::size_t universe_size) {
  CellPartition out;
  for (const Json& jc : as_array(member(j, "cells", "cells"), "cells"))
    out.cells.push_back(points_from_json(jc, universe_size, "cell"));
  return out;
}

Json quasi_to_json(const std::vector<CellCanonical>& cells) {
  Json out = Json::array();
  for (const CellCanonical& cell : cells) {
    const BallFamily& fam = cell.traces.family;
    Forest forest(fam, cell.minimal_members);
    auto lv = levels(forest);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> keyed;
    for (std::size_t i = 0; i < lv.size(); ++i)
      for (std::size_t m : lv[i]) {
        const PointSet& p = fam.ball(m).points;
        keyed.emplace_back(i, p.min_point(), p.size(), fam.ball(m).id);
      }
    std::sort(keyed.begin(), keyed.end());
    Json entries = Json::array();
    for (const auto& [level, min_point, size, id] : keyed) {
      const std::size_t m = fam.require(id);
      Json trace_points = Json::array();
      for (std::size_t p : fam.ball(m).points.points())
        trace_points.push_back(cell.traces.cell_points[p]);
      entries.push_back({{"level", level},
                         {"origins", cell.traces.origins[m]},
                         {"trace_points", trace_points}});
    }
    out.push_back({{"cell", cell.cell_index}, {"forest", entries}});
  }
  return out;
}

std::vector<QuasiCellDump> quasi_from_json(const Json& j) {
  std::vector<QuasiCellDump> out;
  for (const Json& jc : as_array(j, "quasi output")) {
    QuasiCellDump dump;
    dump.cell = as_count(member(jc, "cell", "quasi cell"), "quasi cell index");
    for (const Json& je : as_array(member(jc, "forest", "quasi cell"), "quasi forest")) {
      QuasiCellEntry entry;
      entry.level = as_count(member(je, "level", "quasi entry"), "quasi level");
      for (const Json& o : as_array(member(je, "origins", "quasi entry"), "quasi origins"))
        entry.origins.push_back(as_string(o, "quasi origin"));
      for (const Json& p : as_array(member(je, "trace_points", "quasi entry"), "quasi points"))
        entry.trace_points.push_back(as_count(p, "quasi point"));
      dump.forest.push_back(std::move(entry));
    }
    out.push_back(std::move(dump));
  }
  return out;
}

Json report_to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations)
    violations.push_back({{"kind", kind_name(v.kind)}, {"balls", v.balls}});
  return {{"ok", report.ok()}, {"violations", violations}};
}

ValidationReport report_from_json(const Json& j) {
  ValidationReport out;
  if (!member(j, "ok", "report").is_boolean())
    throw ParseError("report: 'ok' must be a boolean");
  for (const Json& jv : as_array(member(j, "violations", "report"), "report violations")) {
    Violation v;
    v.kind = kind_from_name(as_string(member(jv, "kind", "violation"), "violation kind"));
    for (const Json& b : as_array(member(jv, "balls", "violation"), "violation balls"))
      v.balls.push_back(as_string(b, "violation ball"));
    out.violations.push_back(std::move(v));
  }
  return out;
}

Json unpackable_to_json(const CheckResult& result) {
  Json out = {{"unpackable", result.ok}};
  if (result.witness) out["witness"] = *result.witness;
  return out;
}

CheckResult unpackable_from_json(const Json& j) {
  const Json& flag = member(j, "unpackable", "unpackable");
  if (!flag.is_boolean()) throw ParseError("unpackable: expected a boolean");
  CheckResult out{flag.get<bool>(), std::nullopt};
  if (j.contains("witness")) out.witness = as_string(j.at("witness"), "witness");
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace laminar
