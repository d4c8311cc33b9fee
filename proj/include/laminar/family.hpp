#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laminar/errors.hpp"
#include "laminar/pointset.hpp"

namespace laminar {

// A named nonempty subset of the universe.
struct Ball {
  std::string id;
  PointSet points;

  friend bool operator==(const Ball&, const Ball&) = default;
};

// A finite directed family over {0, ..., universe_size-1}: any two balls are
// nested or disjoint, exactly one ball is the whole universe, extensions and
// ids are distinct, no ball is empty. Construction only indexes the balls;
// run validate_directed to check the invariants.
class BallFamily {
 public:
  BallFamily(std::size_t universe_size, std::vector<Ball> balls);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t ball_count() const { return balls_.size(); }
  const std::vector<Ball>& balls() const { return balls_; }
  const Ball& ball(std::size_t index) const { return balls_.at(index); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t require(std::string_view id) const;  // throws InvalidInput

  // Index of the ball equal to the whole universe; throws InvalidInput if
  // the family has none.
  std::size_t universe_ball() const;
  PointSet universe_points() const { return PointSet::full(universe_size_); }

  friend bool operator==(const BallFamily& a, const BallFamily& b) {
    return a.universe_size_ == b.universe_size_ && a.balls_ == b.balls_;
  }

 private:
  std::size_t universe_size_;
  std::vector<Ball> balls_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::optional<std::size_t> universe_idx_;
};

struct Violation {
  enum class Kind {
    empty_ball,
    duplicate_id,
    duplicate_extension,
    crossing_pair,
    missing_universe,
  };
  Kind kind;
  std::vector<std::string> balls;  // offending ball ids

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Empty report iff the candidate satisfies every BallFamily invariant.
// Violations are data, not failures.
ValidationReport validate_directed(const std::vector<Ball>& candidate_balls,
                                   std::size_t universe_size);
ValidationReport validate_directed(const BallFamily& family);

// Inclusion order on all balls: the parent of a ball is the smallest ball
// strictly containing it, absent for the universe ball.
struct ParentForest {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::vector<std::size_t>> children;
  std::size_t root;  // the universe ball
};
ParentForest parent_forest(const BallFamily& family);

struct CheckResult {
  bool ok;
  std::optional<std::string> witness;
};

// False iff some ball equals the union of its maximal proper sub-balls; the
// witness names the first such ball in family order.
CheckResult is_unpackable(const BallFamily& family);

// True iff no ball is covered by the union of the balls that meet it without
// containing it. Agrees with is_unpackable on valid families.
CheckResult covering_property(const BallFamily& family);

// All nested halves of length >= 2 over 2^depth points, plus the universe.
// Ball ids are U, L, R, LL, LR, ... in breadth-first order. depth in [1, 6].
BallFamily gen_dyadic(std::size_t depth);

// Pseudo-random laminar family in which every ball keeps at least one point
// outside all of its children, so the result is always unpackable.
// Deterministic in the seed. Requires n_points >= n_balls >= 1.
BallFamily gen_crumb_laminar(std::uint64_t seed, std::size_t n_points,
                             std::size_t n_balls);

}  // namespace laminar
