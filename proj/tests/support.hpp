#pragma once

// Shared fixtures, independent brute-force oracles, and random generators.
// The oracles deliberately use plain std::set arithmetic and their own
// recursions so they share no code path with the library implementations
// they check.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "laminar/canonical.hpp"
#include "laminar/cheese.hpp"
#include "laminar/expr.hpp"
#include "laminar/family.hpp"
#include "laminar/forest.hpp"
#include "laminar/quasi.hpp"
#include "laminar/rng.hpp"

namespace testsup {

using Raw = std::set<std::size_t>;

inline laminar::PointSet ps(std::size_t universe, std::initializer_list<std::size_t> pts) {
  laminar::PointSet out(universe);
  for (std::size_t p : pts) out.add(p);
  return out;
}

inline laminar::PointSet ps_range(std::size_t universe, std::size_t lo, std::size_t hi) {
  laminar::PointSet out(universe);
  for (std::size_t p = lo; p < hi; ++p) out.add(p);
  return out;
}

inline Raw to_raw(const laminar::PointSet& s) {
  Raw out;
  for (std::size_t p : s.points()) out.insert(p);
  return out;
}

inline laminar::PointSet from_raw(const Raw& s, std::size_t universe) {
  laminar::PointSet out(universe);
  for (std::size_t p : s) out.add(p);
  return out;
}

// --- fixtures ---------------------------------------------------------

// Hand-built dyadic family over 8 points (independent of gen_dyadic).
inline laminar::BallFamily d3() {
  return laminar::BallFamily(
      8, {{"U", ps_range(8, 0, 8)},
          {"L", ps_range(8, 0, 4)},
          {"R", ps_range(8, 4, 8)},
          {"LL", ps_range(8, 0, 2)},
          {"LR", ps_range(8, 2, 4)},
          {"RL", ps_range(8, 4, 6)},
          {"RR", ps_range(8, 6, 8)}});
}

// Unpackable family over 9 points; every ball keeps a crumb point.
inline laminar::BallFamily c9() {
  return laminar::BallFamily(9, {{"U", ps_range(9, 0, 9)},
                                 {"A", ps(9, {0, 1, 2})},
                                 {"B", ps(9, {3, 4, 5})},
                                 {"a1", ps(9, {0})},
                                 {"a2", ps(9, {1})},
                                 {"b1", ps(9, {3})}});
}

// Two trees over 10 points: A1 holds B1 and B2, B2 holds C1 and C2,
// A2 holds B3.
inline laminar::BallFamily fig1() {
  return laminar::BallFamily(10, {{"U", ps_range(10, 0, 10)},
                                  {"A1", ps_range(10, 0, 6)},
                                  {"B1", ps(10, {0, 1})},
                                  {"B2", ps(10, {2, 3, 4})},
                                  {"C1", ps(10, {2})},
                                  {"C2", ps(10, {3})},
                                  {"A2", ps(10, {6, 7, 8})},
                                  {"B3", ps(10, {6})}});
}

// --- independent oracles ----------------------------------------------

inline std::map<std::string, Raw> raw_balls(const laminar::BallFamily& fam) {
  std::map<std::string, Raw> out;
  for (const laminar::Ball& b : fam.balls()) out[b.id] = to_raw(b.points);
  return out;
}

inline Raw raw_universe(std::size_t n) {
  Raw out;
  for (std::size_t p = 0; p < n; ++p) out.insert(p);
  return out;
}

inline Raw raw_union(const Raw& a, const Raw& b) {
  Raw out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline Raw raw_inter(const Raw& a, const Raw& b) {
  Raw out;
  for (std::size_t p : a)
    if (b.count(p)) out.insert(p);
  return out;
}

inline Raw raw_diff(const Raw& a, const Raw& b) {
  Raw out;
  for (std::size_t p : a)
    if (!b.count(p)) out.insert(p);
  return out;
}

inline Raw raw_eval(const laminar::SetExpr& e, const std::map<std::string, Raw>& balls,
                    const Raw& universe) {
  using K = laminar::SetExpr::Kind;
  switch (e.kind) {
    case K::ball:
      return balls.at(e.ball_id);
    case K::union_: {
      Raw acc;
      for (const auto& a : e.args) acc = raw_union(acc, raw_eval(a, balls, universe));
      return acc;
    }
    case K::inter: {
      Raw acc = universe;
      for (const auto& a : e.args) acc = raw_inter(acc, raw_eval(a, balls, universe));
      return acc;
    }
    case K::diff:
      return raw_diff(raw_eval(e.args.at(0), balls, universe),
                      raw_eval(e.args.at(1), balls, universe));
    case K::compl_:
      return raw_diff(universe, raw_eval(e.args.at(0), balls, universe));
  }
  return {};
}

// A point belongs to the represented set of a laminar forest exactly when an
// odd number of members contain it (the chain through the point alternates
// wheel/hole from its maximal member down).
inline Raw raw_ch_parity(const std::vector<Raw>& members) {
  Raw out;
  std::set<std::size_t> universe_points;
  for (const Raw& m : members) universe_points.insert(m.begin(), m.end());
  for (std::size_t p : universe_points) {
    std::size_t count = 0;
    for (const Raw& m : members)
      if (m.count(p)) ++count;
    if (count % 2 == 1) out.insert(p);
  }
  return out;
}

// Maximal-element peeling on raw sets; returns member indices per level.
inline std::vector<std::vector<std::size_t>> raw_levels(const std::vector<Raw>& members) {
  std::vector<std::size_t> remaining(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) remaining[i] = i;
  std::vector<std::vector<std::size_t>> out;
  while (!remaining.empty()) {
    std::vector<std::size_t> level, rest;
    for (std::size_t i : remaining) {
      bool maximal = true;
      for (std::size_t j : remaining)
        if (i != j && members[i] != members[j] &&
            raw_diff(members[i], members[j]).empty())
          maximal = false;
      (maximal ? level : rest).push_back(i);
    }
    out.push_back(level);
    remaining = rest;
  }
  return out;
}

// All (wheel, pairwise disjoint proper sub-ball holes) presentations, with
// their represented sets, including empty ones. Brute force over all hole
// subsets, independent of the library's antichain recursion.
struct RawPresentation {
  std::size_t wheel;
  std::vector<std::size_t> holes;
  laminar::PointSet piece;
};

inline std::vector<RawPresentation> all_presentations(const laminar::BallFamily& fam) {
  std::vector<RawPresentation> out;
  const std::size_t n = fam.ball_count();
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<std::size_t> subs;
    for (std::size_t b = 0; b < n; ++b)
      if (b != w && fam.ball(b).points.proper_subset_of(fam.ball(w).points))
        subs.push_back(b);
    for (std::size_t mask = 0; mask < (std::size_t{1} << subs.size()); ++mask) {
      std::vector<std::size_t> holes;
      for (std::size_t i = 0; i < subs.size(); ++i)
        if (mask & (std::size_t{1} << i)) holes.push_back(subs[i]);
      bool disjoint = true;
      for (std::size_t i = 0; i < holes.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < holes.size() && disjoint; ++j)
          if (fam.ball(holes[i]).points.intersects(fam.ball(holes[j]).points))
            disjoint = false;
      if (!disjoint) continue;
      laminar::PointSet piece = fam.ball(w).points;
      for (std::size_t h : holes) piece -= fam.ball(h).points;
      out.push_back({w, std::move(holes), std::move(piece)});
    }
  }
  return out;
}

// Expression for a constructible set, assembled from gap regions on the raw
// side (test-side twin of the library's internal construction).
inline laminar::SetExpr expr_for_set(const laminar::PointSet& target,
                                     const laminar::BallFamily& fam) {
  std::vector<laminar::SetExpr> parts;
  for (std::size_t b = 0; b < fam.ball_count(); ++b) {
    Raw gap = to_raw(fam.ball(b).points);
    std::vector<laminar::SetExpr> children;
    for (std::size_t c = 0; c < fam.ball_count(); ++c)
      if (c != b && fam.ball(c).points.proper_subset_of(fam.ball(b).points)) {
        gap = raw_diff(gap, to_raw(fam.ball(c).points));
        children.push_back(laminar::SetExpr::ball(fam.ball(c).id));
      }
    if (gap.empty()) continue;
    if (std::all_of(gap.begin(), gap.end(), [&](std::size_t p) { return target.contains(p); }))
      parts.push_back(laminar::SetExpr::make_diff(
          laminar::SetExpr::ball(fam.ball(b).id),
          laminar::SetExpr::make_union(std::move(children))));
  }
  return laminar::SetExpr::make_union(std::move(parts));
}

// --- random generators --------------------------------------------------

inline laminar::SetExpr random_expr(laminar::SplitMix64& rng,
                                    const std::vector<std::string>& ids,
                                    std::size_t max_leaves) {
  using laminar::SetExpr;
  if (max_leaves <= 1)
    return SetExpr::ball(ids[rng.below(ids.size())]);
  switch (rng.below(10)) {
    case 0:
    case 1:
    case 2:
    case 3:
      return SetExpr::ball(ids[rng.below(ids.size())]);
    case 4:
    case 5: {
      const std::size_t arity = rng.below(4);  // empty unions are legal
      std::vector<SetExpr> args;
      for (std::size_t i = 0; i < arity; ++i)
        args.push_back(random_expr(rng, ids, std::max<std::size_t>(1, max_leaves / std::max<std::size_t>(arity, 1))));
      return SetExpr::make_union(std::move(args));
    }
    case 6:
    case 7: {
      const std::size_t arity = rng.below(4);
      std::vector<SetExpr> args;
      for (std::size_t i = 0; i < arity; ++i)
        args.push_back(random_expr(rng, ids, std::max<std::size_t>(1, max_leaves / std::max<std::size_t>(arity, 1))));
      return SetExpr::make_inter(std::move(args));
    }
    case 8:
      return SetExpr::make_diff(random_expr(rng, ids, max_leaves / 2),
                                random_expr(rng, ids, max_leaves - max_leaves / 2));
    default:
      return SetExpr::make_compl(random_expr(rng, ids, max_leaves - 1));
  }
}

// Random laminar family, 2..10 balls over 4..24 points. Sometimes a parent
// gets fully carved into children, making the family packable.
inline laminar::BallFamily random_mixed_family(std::uint64_t seed) {
  laminar::SplitMix64 rng(seed);
  const std::size_t n_points = 4 + rng.below(21);
  const std::size_t n_balls = std::min<std::size_t>(2 + rng.below(9), n_points);

  struct Node {
    std::vector<std::size_t> ext;
    std::vector<std::size_t> gap;
    std::size_t children = 0;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> all(n_points);
  for (std::size_t p = 0; p < n_points; ++p) all[p] = p;
  nodes.push_back({all, all, 0});

  while (nodes.size() < n_balls) {
    std::vector<std::size_t> carve_hosts, pack_hosts;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].gap.size() >= 2) carve_hosts.push_back(i);
      if (nodes[i].gap.size() >= 1 && nodes[i].children >= 1) pack_hosts.push_back(i);
    }
    const bool pack = !pack_hosts.empty() && rng.below(3) == 0;
    if (!pack && carve_hosts.empty() && pack_hosts.empty()) break;
    std::size_t host;
    std::size_t k;
    if (pack || carve_hosts.empty()) {
      host = pack_hosts[rng.below(pack_hosts.size())];
      k = nodes[host].gap.size();  // consume the whole gap: host becomes packed
    } else {
      host = carve_hosts[rng.below(carve_hosts.size())];
      k = 1 + rng.below(nodes[host].gap.size() - 1);
    }
    std::vector<std::size_t>& gap = nodes[host].gap;
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t at = rng.below(gap.size());
      chosen.push_back(gap[at]);
      gap.erase(gap.begin() + static_cast<std::ptrdiff_t>(at));
    }
    std::sort(chosen.begin(), chosen.end());
    nodes[host].children += 1;
    nodes.push_back({chosen, chosen, 0});
  }

  std::vector<laminar::Ball> balls;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    laminar::PointSet points(n_points);
    for (std::size_t p : nodes[i].ext) points.add(p);
    balls.push_back({i == 0 ? "U" : "B" + std::to_string(i), std::move(points)});
  }
  return laminar::BallFamily(n_points, std::move(balls));
}

inline laminar::CellPartition random_partition(laminar::SplitMix64& rng,
                                               std::size_t universe,
                                               std::size_t n_cells) {
  for (;;) {
    std::vector<laminar::PointSet> cells(n_cells, laminar::PointSet(universe));
    for (std::size_t p = 0; p < universe; ++p) cells[rng.below(n_cells)].add(p);
    bool ok = true;
    for (const auto& c : cells)
      if (c.empty()) ok = false;
    if (ok) return {std::move(cells)};
  }
}

// A differently shaped expression with the same pointwise value.
inline laminar::SetExpr equivalent_rewrite(laminar::SplitMix64& rng,
                                           const laminar::SetExpr& e) {
  using laminar::SetExpr;
  SetExpr copy = e;
  if (!copy.args.empty()) {
    const std::size_t at = rng.below(copy.args.size());
    copy.args[at] = equivalent_rewrite(rng, copy.args[at]);
  }
  switch (rng.below(4)) {
    case 0:
      return SetExpr::make_compl(SetExpr::make_compl(std::move(copy)));
    case 1:
      if (copy.kind == SetExpr::Kind::diff)
        return SetExpr::make_inter(
            {copy.args.at(0), SetExpr::make_compl(copy.args.at(1))});
      return copy;
    case 2:
      if ((copy.kind == SetExpr::Kind::union_ || copy.kind == SetExpr::Kind::inter) &&
          copy.args.size() >= 2)
        std::reverse(copy.args.begin(), copy.args.end());
      return copy;
    default:
      return SetExpr::make_union({copy, copy});
  }
}

}  // namespace testsup
