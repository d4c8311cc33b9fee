#include <algorithm>

#include "doctest.h"
#include "laminar/quasi.hpp"
#include "support.hpp"

using namespace laminar;
using testsup::ps;
using testsup::ps_range;

TEST_CASE("check_partition accepts partitions and names problems") {
  CHECK_FALSE(check_partition({{ps(4, {0, 1}), ps(4, {2, 3})}}, 4).has_value());
  CHECK(check_partition({{ps(4, {0, 1}), ps(4, {1, 2, 3})}}, 4).has_value());
  CHECK(check_partition({{ps(4, {0, 1}), ps(4, {2})}}, 4).has_value());
  CHECK(check_partition({{ps(4, {0, 1, 2, 3}), ps(4, {})}}, 4).has_value());
}

TEST_CASE("restrict_family traces the dyadic family onto the even points") {
  BallFamily fam = testsup::d3();
  TraceFamily traces = restrict_family(fam, ps(8, {0, 2, 4, 6}));
  CHECK(traces.family.universe_size() == 4);
  CHECK(traces.family.ball_count() == 7);
  CHECK(validate_directed(traces.family).ok());
  CHECK(traces.cell_points == std::vector<std::size_t>{0, 2, 4, 6});

  auto trace_of = [&](const char* id) {
    return original_points(traces, traces.family.require(id), fam.universe_size());
  };
  CHECK(trace_of("U") == ps(8, {0, 2, 4, 6}));
  CHECK(trace_of("L") == ps(8, {0, 2}));
  CHECK(trace_of("R") == ps(8, {4, 6}));
  CHECK(trace_of("LL") == ps(8, {0}));
  CHECK(trace_of("LR") == ps(8, {2}));
  CHECK(trace_of("RL") == ps(8, {4}));
  CHECK(trace_of("RR") == ps(8, {6}));
}

TEST_CASE("restricting to the full universe is the identity on extensions") {
  BallFamily fam = testsup::c9();
  TraceFamily traces = restrict_family(fam, PointSet::full(9));
  REQUIRE(traces.family.ball_count() == fam.ball_count());
  for (std::size_t b = 0; b < fam.ball_count(); ++b) {
    CHECK(traces.family.ball(b).id == fam.ball(b).id);
    CHECK(traces.family.ball(b).points == fam.ball(b).points);
    CHECK(traces.origins[b] == std::vector<std::string>{fam.ball(b).id});
  }
}

TEST_CASE("coinciding traces merge and record their origins") {
  BallFamily fam = testsup::c9();
  TraceFamily traces = restrict_family(fam, ps(9, {0}));
  REQUIRE(traces.family.ball_count() == 1);
  CHECK(traces.family.ball(0).id == "a1");  // the smallest originating ball
  CHECK(traces.family.ball(0).points == ps(1, {0}));
  CHECK(traces.origins[0] == std::vector<std::string>{"A", "U", "a1"});
}

TEST_CASE("restrict_family rejects an empty cell") {
  CHECK_THROWS_AS(restrict_family(testsup::d3(), PointSet(8)), InvalidInput);
}

TEST_CASE("quasi_canonical splits the target across cells") {
  BallFamily fam = testsup::d3();
  CellPartition evens_odds{{ps(8, {0, 2, 4, 6}), ps(8, {1, 3, 5, 7})}};
  auto cells = quasi_canonical(ps_range(8, 0, 4), fam, evens_odds);
  REQUIRE(cells.size() == 2);
  for (const CellCanonical& cell : cells) {
    REQUIRE(cell.minimal_members.size() == 1);
    const std::size_t m = cell.minimal_members[0];
    CHECK(cell.traces.family.ball(m).id == "L");
    PointSet expected = cell.cell_index == 0 ? ps(8, {0, 2}) : ps(8, {1, 3});
    CHECK(original_points(cell.traces, m, 8) == expected);
  }
}

TEST_CASE("quasi_canonical of the empty set is empty in every cell") {
  BallFamily fam = testsup::d3();
  CellPartition parts{{ps_range(8, 0, 3), ps_range(8, 3, 8)}};
  for (const CellCanonical& cell : quasi_canonical(PointSet(8), fam, parts))
    CHECK(cell.minimal_members.empty());
}

TEST_CASE("a single-cell partition degenerates to minimal_representative") {
  BallFamily fam = testsup::d3();
  CellPartition whole{{PointSet::full(8)}};
  PointSet x = ps_range(8, 0, 6);
  auto cells = quasi_canonical(x, fam, whole);
  REQUIRE(cells.size() == 1);
  Forest expected = minimal_representative(x, fam);
  std::vector<std::string> got, want;
  for (std::size_t m : cells[0].minimal_members)
    got.push_back(cells[0].traces.family.ball(m).id);
  for (std::size_t m : expected.members()) want.push_back(fam.ball(m).id);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("quasi_canonical reassembles the target and is unique per cell") {
  std::vector<BallFamily> fams;
  fams.push_back(testsup::d3());
  fams.push_back(testsup::c9());
  for (const BallFamily& fam : fams) {
    std::vector<std::string> ids;
    for (const Ball& b : fam.balls()) ids.push_back(b.id);
    SplitMix64 rng(fam.universe_size() * 17);
    for (int trial = 0; trial < 25; ++trial) {
      CellPartition parts =
          testsup::random_partition(rng, fam.universe_size(), 2 + rng.below(3));
      SetExpr e = testsup::random_expr(rng, ids, 8);
      PointSet x = eval(e, fam);
      auto cells = quasi_canonical(x, fam, parts);
      PointSet rebuilt(fam.universe_size());
      for (const CellCanonical& cell : cells) {
        CHECK(validate_directed(cell.traces.family).ok());
        Forest f(cell.traces.family, cell.minimal_members);
        PointSet represented = represented_set(f);
        for (std::size_t p : represented.points())
          rebuilt.add(cell.traces.cell_points[p]);
        // Uniqueness of the minimal representative inside the trace family.
        auto reps = all_representatives(represented, cell.traces.family,
                                        cell.traces.family.ball_count());
        std::size_t least = 0;
        for (const Forest& candidate : reps) {
          bool minimal = true;
          for (const Forest& other : reps)
            if (compare(other, candidate) == Order::less) minimal = false;
          if (minimal) ++least;
        }
        CHECK(least == 1);
      }
      CHECK(rebuilt == x);
    }
  }
}
