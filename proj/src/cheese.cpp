#include "laminar/cheese.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace laminar {

PointSet cheese_points(const SwissCheese& cheese, const BallFamily& family) {
  PointSet out = family.ball(cheese.wheel).points;
  for (std::size_t h : cheese.holes) out -= family.ball(h).points;
  return out;
}

PointSet represented_set(const Decomposition& d, const BallFamily& family) {
  PointSet out(family.universe_size());
  for (const SwissCheese& c : d.cheeses) out |= cheese_points(c, family);
  return out;
}

std::optional<SwissCheese> normalize_cheese(std::size_t wheel,
                                            std::vector<std::size_t> holes,
                                            const BallFamily& family) {
  const PointSet& wheel_points = family.ball(wheel).points;
  std::sort(holes.begin(), holes.end());
  holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
  for (std::size_t h : holes)
    if (!family.ball(h).points.proper_subset_of(wheel_points))
      throw InvalidInput("hole '" + family.ball(h).id +
                         "' is not a proper sub-ball of wheel '" +
                         family.ball(wheel).id + "'");
  std::vector<std::size_t> kept;
  for (std::size_t h : holes) {
    bool nested = false;
    for (std::size_t o : holes)
      if (o != h && family.ball(h).points.subset_of(family.ball(o).points)) {
        nested = true;
        break;
      }
    if (!nested) kept.push_back(h);
  }
  SwissCheese cheese{wheel, std::move(kept)};
  if (cheese_points(cheese, family).empty()) return std::nullopt;
  return cheese;
}

std::optional<std::string> check_decomposition(const Decomposition& d,
                                               const BallFamily& family,
                                               const PointSet& expected) {
  for (const SwissCheese& c : d.cheeses) {
    const PointSet& wheel = family.ball(c.wheel).points;
    for (std::size_t h : c.holes)
      if (!family.ball(h).points.proper_subset_of(wheel))
        return "hole '" + family.ball(h).id + "' is not a proper sub-ball of '" +
               family.ball(c.wheel).id + "'";
    for (std::size_t i = 0; i < c.holes.size(); ++i)
      for (std::size_t j = i + 1; j < c.holes.size(); ++j)
        if (family.ball(c.holes[i]).points.intersects(family.ball(c.holes[j]).points))
          return "holes '" + family.ball(c.holes[i]).id + "' and '" +
                 family.ball(c.holes[j]).id + "' of '" + family.ball(c.wheel).id +
                 "' are not disjoint";
    if (cheese_points(c, family).empty())
      return "cheese with wheel '" + family.ball(c.wheel).id + "' is empty";
  }
  for (std::size_t i = 0; i < d.cheeses.size(); ++i)
    for (std::size_t j = i + 1; j < d.cheeses.size(); ++j)
      if (cheese_points(d.cheeses[i], family).intersects(cheese_points(d.cheeses[j], family)))
        return "cheeses with wheels '" + family.ball(d.cheeses[i].wheel).id +
               "' and '" + family.ball(d.cheeses[j].wheel).id + "' overlap";
  for (const SwissCheese& a : d.cheeses)
    for (const SwissCheese& b : d.cheeses)
      for (std::size_t h : b.holes)
        if (a.wheel == h)
          return "wheel '" + family.ball(a.wheel).id + "' is also a hole";
  if (represented_set(d, family) != expected)
    return "decomposition does not represent the expected set";
  return std::nullopt;
}

namespace {

struct WorkCheese {
  std::size_t wheel;
  std::vector<std::size_t> holes;  // sorted
  PointSet piece;
};

WorkCheese to_work(const SwissCheese& c, const BallFamily& fam) {
  return {c.wheel, c.holes, cheese_points(c, fam)};
}

// Cheeses ordered by wheel id then hole ids, so "the first pair" is
// well defined at every phase.
void sort_by_wheel_id(std::vector<WorkCheese>& work, const BallFamily& fam) {
  std::sort(work.begin(), work.end(), [&](const WorkCheese& a, const WorkCheese& b) {
    if (fam.ball(a.wheel).id != fam.ball(b.wheel).id)
      return fam.ball(a.wheel).id < fam.ball(b.wheel).id;
    std::vector<std::string> ha, hb;
    for (std::size_t h : a.holes) ha.push_back(fam.ball(h).id);
    for (std::size_t h : b.holes) hb.push_back(fam.ball(h).id);
    return ha < hb;
  });
}

// Union of two intersecting cheeses as one cheese over the larger wheel,
// keeping exactly the holes that survive in the union.
WorkCheese merge_intersecting(const WorkCheese& x, const WorkCheese& y,
                              const BallFamily& fam) {
  const bool x_is_big = fam.ball(y.wheel).points.subset_of(fam.ball(x.wheel).points);
  const WorkCheese& big = x_is_big ? x : y;
  const WorkCheese& small = x_is_big ? y : x;
  std::vector<std::size_t> kept;
  for (std::size_t h : big.holes) {
    if (!fam.ball(h).points.intersects(fam.ball(small.wheel).points)) {
      kept.push_back(h);  // lies outside the smaller wheel
      continue;
    }
    for (std::size_t o : small.holes)
      if (fam.ball(h).points.subset_of(fam.ball(o).points)) {
        kept.push_back(h);  // nested in a hole of the other cheese
        break;
      }
  }
  for (std::size_t h : small.holes)
    for (std::size_t o : big.holes)
      if (fam.ball(h).points.subset_of(fam.ball(o).points)) {
        kept.push_back(h);
        break;
      }
  auto merged = normalize_cheese(big.wheel, std::move(kept), fam);
  if (!merged) throw std::logic_error("merge of nonempty cheeses became empty");
  return to_work(*merged, fam);
}

}  // namespace

Decomposition decompose(const DnfForm& dnf, const BallFamily& family) {
  std::vector<WorkCheese> work;

  // Each clause becomes a cheese or is dropped when its set is empty. The
  // positives of a clause intersect in their smallest ball or not at all.
  for (const DnfClause& clause : dnf.clauses) {
    if (clause.positives.empty())
      throw InvalidInput("DNF clause without a positive ball");
    std::size_t core = clause.positives.front();
    bool empty = false;
    for (std::size_t p : clause.positives) {
      const PointSet& pp = family.ball(p).points;
      const PointSet& cp = family.ball(core).points;
      if (pp.subset_of(cp)) {
        core = p;
      } else if (!cp.subset_of(pp)) {
        empty = true;  // two disjoint positives
        break;
      }
    }
    if (empty) continue;
    std::vector<std::size_t> holes;
    for (std::size_t n : clause.negatives) {
      const PointSet& np = family.ball(n).points;
      const PointSet& cp = family.ball(core).points;
      if (cp.subset_of(np)) {
        empty = true;  // the whole core is removed
        break;
      }
      if (np.intersects(cp)) holes.push_back(n);  // proper sub-ball of the core
    }
    if (empty) continue;
    if (auto cheese = normalize_cheese(core, std::move(holes), family)) {
      WorkCheese w = to_work(*cheese, family);
      bool dup = false;
      for (const WorkCheese& other : work)
        if (other.wheel == w.wheel && other.holes == w.holes) {
          dup = true;
          break;
        }
      if (!dup) work.push_back(std::move(w));
    }
  }

  // Merge intersecting cheeses until the pieces are pairwise disjoint.
  sort_by_wheel_id(work, family);
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < work.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < work.size() && !merged; ++j)
        if (work[i].piece.intersects(work[j].piece)) {
          WorkCheese m = merge_intersecting(work[i], work[j], family);
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
          work.push_back(std::move(m));
          sort_by_wheel_id(work, family);
          merged = true;
        }
  }

  // Eliminate wheels that appear as holes of another cheese.
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < work.size() && !merged; ++i)
      for (std::size_t j = 0; j < work.size() && !merged; ++j) {
        if (i == j) continue;
        if (std::find(work[j].holes.begin(), work[j].holes.end(), work[i].wheel) ==
            work[j].holes.end())
          continue;
        std::vector<std::size_t> holes = work[i].holes;
        for (std::size_t h : work[j].holes)
          if (h != work[i].wheel) holes.push_back(h);
        auto m = normalize_cheese(work[j].wheel, std::move(holes), family);
        if (!m) throw std::logic_error("wheel-as-hole merge became empty");
        WorkCheese w = to_work(*m, family);
        std::size_t lo = std::min(i, j), hi = std::max(i, j);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(hi));
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(lo));
        work.push_back(std::move(w));
        sort_by_wheel_id(work, family);
        merged = true;
      }
  }

  Decomposition out;
  for (const WorkCheese& w : work) out.cheeses.push_back({w.wheel, w.holes});
  std::sort(out.cheeses.begin(), out.cheeses.end(),
            [&](const SwissCheese& a, const SwissCheese& b) {
              const PointSet& pa = family.ball(a.wheel).points;
              const PointSet& pb = family.ball(b.wheel).points;
              return std::tuple(pa.min_point(), pa.size(), family.ball(a.wheel).id) <
                     std::tuple(pb.min_point(), pb.size(), family.ball(b.wheel).id);
            });
  return out;
}

Decomposition decompose(const SetExpr& expr, const BallFamily& family) {
  return decompose(to_dnf(expr, family), family);
}

Forest decomposition_to_forest(const Decomposition& d, const BallFamily& family) {
  std::vector<std::size_t> members;
  for (const SwissCheese& c : d.cheeses) {
    members.push_back(c.wheel);
    members.insert(members.end(), c.holes.begin(), c.holes.end());
  }
  Forest forest(family, std::move(members));
  auto lv = levels(forest);
  auto level_index = [&](std::size_t ball) {
    for (std::size_t i = 0; i < lv.size(); ++i)
      if (std::find(lv[i].begin(), lv[i].end(), ball) != lv[i].end()) return i;
    return lv.size();
  };
  for (const SwissCheese& c : d.cheeses) {
    if (level_index(c.wheel) % 2 != 0)
      throw InvalidDecomposition("wheel '" + family.ball(c.wheel).id +
                                 "' lands on an odd level");
    for (std::size_t h : c.holes)
      if (level_index(h) % 2 != 1)
        throw InvalidDecomposition("hole '" + family.ball(h).id +
                                   "' lands on an even level");
  }
  if (represented_set(forest) != represented_set(d, family))
    throw InvalidDecomposition("wheel/hole forest does not represent the decomposed set");
  return forest;
}

namespace {

// Pairwise disjoint selections of proper sub-balls of a wheel, one hole set
// at a time. In a directed family an antichain is exactly a pairwise
// disjoint set.
void antichains_below(const BallFamily& fam, const std::vector<std::size_t>& pool,
                      std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> maximal;
  for (std::size_t b : pool) {
    bool top = true;
    for (std::size_t o : pool)
      if (o != b && fam.ball(b).points.proper_subset_of(fam.ball(o).points)) {
        top = false;
        break;
      }
    if (top) maximal.push_back(b);
  }
  // Options per maximal subtree: skip it, take its root, or take an
  // antichain strictly below the root.
  std::vector<std::vector<std::vector<std::size_t>>> options;
  for (std::size_t m : maximal) {
    std::vector<std::vector<std::size_t>> opts = {{}, {m}};
    std::vector<std::size_t> below;
    for (std::size_t b : pool)
      if (b != m && fam.ball(b).points.proper_subset_of(fam.ball(m).points))
        below.push_back(b);
    if (!below.empty()) {
      std::vector<std::vector<std::size_t>> sub;
      antichains_below(fam, below, sub);
      for (auto& s : sub)
        if (!s.empty()) opts.push_back(std::move(s));
    }
    options.push_back(std::move(opts));
  }
  std::vector<std::size_t> current;
  auto emit = [&](auto&& self, std::size_t at) -> void {
    if (at == options.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& opt : options[at]) {
      const std::size_t mark = current.size();
      current.insert(current.end(), opt.begin(), opt.end());
      self(self, at + 1);
      current.resize(mark);
    }
  };
  emit(emit, 0);
}

struct Candidate {
  SwissCheese cheese;
  PointSet piece;
};

std::vector<Candidate> all_candidate_cheeses(const BallFamily& fam) {
  std::vector<Candidate> out;
  for (std::size_t w = 0; w < fam.ball_count(); ++w) {
    std::vector<std::size_t> subs;
    for (std::size_t b = 0; b < fam.ball_count(); ++b)
      if (b != w && fam.ball(b).points.proper_subset_of(fam.ball(w).points))
        subs.push_back(b);
    std::vector<std::vector<std::size_t>> hole_sets;
    antichains_below(fam, subs, hole_sets);
    for (auto& holes : hole_sets) {
      std::sort(holes.begin(), holes.end());
      SwissCheese cheese{w, std::move(holes)};
      PointSet piece = cheese_points(cheese, fam);
      if (!piece.empty()) out.push_back({std::move(cheese), std::move(piece)});
    }
  }
  return out;
}

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const PointSet& target,
                                                    const BallFamily& family,
                                                    std::size_t max_cheeses) {
  if (family.ball_count() > 14)
    throw InvalidInput("exhaustive decomposition search is capped at 14 balls");
  if (target.universe_size() != family.universe_size())
    throw InvalidInput("target does not match the family universe");

  std::vector<Candidate> candidates;
  for (Candidate& c : all_candidate_cheeses(family))
    if (c.piece.subset_of(target)) candidates.push_back(std::move(c));

  std::vector<Decomposition> out;
  std::vector<std::size_t> chosen;
  std::set<std::size_t> used_wheels, used_holes;

  auto search = [&](auto&& self, const PointSet& uncovered) -> void {
    if (uncovered.empty()) {
      Decomposition d;
      for (std::size_t idx : chosen) d.cheeses.push_back(candidates[idx].cheese);
      std::sort(d.cheeses.begin(), d.cheeses.end(),
                [&](const SwissCheese& a, const SwissCheese& b) {
                  const PointSet& pa = family.ball(a.wheel).points;
                  const PointSet& pb = family.ball(b.wheel).points;
                  return std::tuple(pa.min_point(), pa.size(), family.ball(a.wheel).id) <
                         std::tuple(pb.min_point(), pb.size(), family.ball(b.wheel).id);
                });
      out.push_back(std::move(d));
      return;
    }
    if (chosen.size() == max_cheeses) return;
    const std::size_t anchor = uncovered.min_point();
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      const Candidate& c = candidates[idx];
      if (!c.piece.contains(anchor) || !c.piece.subset_of(uncovered)) continue;
      // A wheel of one cheese may never be a hole of another.
      if (used_holes.count(c.cheese.wheel)) continue;
      bool clash = false;
      for (std::size_t h : c.cheese.holes)
        if (used_wheels.count(h)) {
          clash = true;
          break;
        }
      if (clash) continue;
      chosen.push_back(idx);
      used_wheels.insert(c.cheese.wheel);
      std::vector<std::size_t> added_holes;
      for (std::size_t h : c.cheese.holes)
        if (used_holes.insert(h).second) added_holes.push_back(h);
      self(self, uncovered - c.piece);
      for (std::size_t h : added_holes) used_holes.erase(h);
      if (std::none_of(chosen.begin(), chosen.end() - 1, [&](std::size_t other) {
            return candidates[other].cheese.wheel == c.cheese.wheel;
          }))
        used_wheels.erase(c.cheese.wheel);
      chosen.pop_back();
    }
  };
  search(search, target);
  return out;
}

}  // namespace laminar
