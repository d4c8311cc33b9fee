#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laminar/expr.hpp"
#include "laminar/forest.hpp"

namespace laminar {

// wheel minus the union of its holes. Holes are proper sub-balls of the
// wheel, pairwise disjoint (no hole contains another), and the remaining
// set is nonempty.
struct SwissCheese {
  std::size_t wheel;
  std::vector<std::size_t> holes;  // sorted ball indices

  friend bool operator==(const SwissCheese&, const SwissCheese&) = default;
};

PointSet cheese_points(const SwissCheese& cheese, const BallFamily& family);

// Pairwise disjoint swiss cheeses; no wheel of one equals a hole of another.
struct Decomposition {
  std::vector<SwissCheese> cheeses;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

PointSet represented_set(const Decomposition& d, const BallFamily& family);

// Drops holes nested inside other holes, returns absent when nothing is left
// of the wheel. Throws InvalidInput if a hole is not a proper sub-ball of
// the wheel.
std::optional<SwissCheese> normalize_cheese(std::size_t wheel,
                                            std::vector<std::size_t> holes,
                                            const BallFamily& family);

// First problem with `d` as a decomposition of `expected`, or absent when it
// is valid.
std::optional<std::string> check_decomposition(const Decomposition& d,
                                               const BallFamily& family,
                                               const PointSet& expected);

// Constructive decomposition of the expression's set: each DNF clause becomes
// a cheese (or is dropped when empty), intersecting cheeses are merged, and
// wheel-as-hole coincidences are eliminated. Cheeses are returned sorted by
// (min point of wheel, wheel size, wheel id).
Decomposition decompose(const SetExpr& expr, const BallFamily& family);
Decomposition decompose(const DnfForm& dnf, const BallFamily& family);

// The forest of all wheels and holes. Throws InvalidDecomposition when the
// wheels do not land on even levels and the holes on odd ones, or the forest
// does not represent the decomposed set.
Forest decomposition_to_forest(const Decomposition& d, const BallFamily& family);

// Every decomposition of `target` with at most max_cheeses cheeses, in a
// deterministic order. Exhaustive; requires ball_count() <= 14.
std::vector<Decomposition> enumerate_decompositions(const PointSet& target,
                                                    const BallFamily& family,
                                                    std::size_t max_cheeses);

}  // namespace laminar
