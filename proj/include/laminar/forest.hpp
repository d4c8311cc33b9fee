#pragma once

#include <string>
#include <vector>

#include "laminar/family.hpp"

namespace laminar {

// A finite set of balls from one family, ordered by inclusion.
class Forest {
 public:
  Forest(const BallFamily& family, std::vector<std::size_t> members);

  const BallFamily& family() const { return *family_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t ball_index) const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.family_ == b.family_ && a.members_ == b.members_;
  }

 private:
  const BallFamily* family_;
  std::vector<std::size_t> members_;  // sorted, unique
};

using LevelProfile = std::vector<std::size_t>;

// Members stratified by repeatedly peeling off the inclusion-maximal balls.
// Level lists are sorted by ball index; the list stops at the last nonempty
// level.
std::vector<std::vector<std::size_t>> levels(const Forest& forest);

// The unique level holding the ball; throws InvalidInput for non-members.
std::size_t level_of(const Forest& forest, std::size_t ball_index);

// Next-level members contained in the ball.
std::vector<std::size_t> sub_members(const Forest& forest, std::size_t ball_index);

// The set the forest stands for: even-level balls minus their next-level
// members.
PointSet represented_set(const Forest& forest);

LevelProfile level_profile(const Forest& forest);

enum class Order { less, equivalent, greater };

// Total quasi-order on forests: fewer balls first; at equal size, the one
// with the larger level at the first differing level index comes first.
// Missing levels count as size zero. Only sizes matter, never extensions,
// so the forests may belong to different families.
Order compare_profiles(const LevelProfile& a, const LevelProfile& b);
Order compare(const Forest& a, const Forest& b);

// Graphviz digraph with parent->child arrows; even-level nodes (wheels) get
// a double periphery, odd-level nodes (holes) a single one.
std::string to_dot(const Forest& forest);

}  // namespace laminar
