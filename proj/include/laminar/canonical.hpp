#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laminar/cheese.hpp"

namespace laminar {

// Every forest over the family with at most size_bound members representing
// `target`, ordered by size and then lexicographically by member indices.
// Exhaustive; requires ball_count() <= 14.
std::vector<Forest> all_representatives(const PointSet& target,
                                        const BallFamily& family,
                                        std::size_t size_bound);

// The unique minimal representative of `target`: fewest balls, then the most
// top-heavy level profile. The search is bounded by the ball count of the
// constructive decomposition and is exponential in the worst case. Throws
// NotRepresentable when target is not a boolean combination of balls.
Forest minimal_representative(const PointSet& target, const BallFamily& family);

// One exchange step between representatives of the same set: material of s
// moves under a root of t that strictly contains a root of s, and both
// rebuilt forests still represent the set.
struct ImproveMove {
  Forest improved_s;
  Forest improved_t;
  std::vector<std::size_t> displaced_roots;   // roots of s absorbed under outer_root
  std::vector<std::size_t> adopted_children;  // children of outer_root in t kept by improved_s
  std::size_t inner_root;                     // root of s strictly inside outer_root
  std::size_t outer_root;                     // root of t
};

// Absent when the root layers already agree, no strictly nested root pair
// (inner in s, outer in t) exists, or every nested pair is degenerate (a
// root of s coincides with a child of the outer root in t, which would flip
// the parity of the moved chains); callers may swap the arguments. Throws
// InvalidInput when the forests do not represent the same set.
std::optional<ImproveMove> improve(const Forest& s, const Forest& t);

// gamma[n] = union of the level-n balls of the minimal representative.
// The sets decrease, and target = union over n of gamma[2n] - gamma[2n+1].
struct LevelSets {
  std::vector<PointSet> gamma;
};
LevelSets level_sets(const PointSet& target, const BallFamily& family);

struct CodeEntry {
  std::string ball;
  std::size_t level;

  friend bool operator==(const CodeEntry&, const CodeEntry&) = default;
};

// Deterministic serialization of the minimal representative; equal sets get
// equal codes and distinct sets distinct codes.
struct CanonicalCode {
  std::vector<CodeEntry> entries;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

// Forest as (ball id, level) entries sorted by (level, min point, ball size,
// id) — the order used by codes and by the JSON and DOT renderings.
std::vector<CodeEntry> code_entries(const Forest& forest);

CanonicalCode code_of(const PointSet& target, const BallFamily& family);

}  // namespace laminar
