#include "laminar/canonical.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace laminar {

namespace {

// Lexicographic k-combinations of {0, ..., n-1}.
template <class Fn>
void each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == i - 1 + n - k) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// target as a union of gap regions: for each ball, the points under it that
// lie in none of its children. The gaps partition the universe, and a set is
// a boolean combination of balls exactly when it is a union of gaps.
SetExpr constructible_expr(const PointSet& target, const BallFamily& fam) {
  ParentForest pf = parent_forest(fam);
  std::vector<SetExpr> parts;
  PointSet covered(fam.universe_size());
  for (std::size_t b = 0; b < fam.ball_count(); ++b) {
    PointSet gap = fam.ball(b).points;
    std::vector<SetExpr> child_refs;
    for (std::size_t c : pf.children[b]) {
      gap -= fam.ball(c).points;
      child_refs.push_back(SetExpr::ball(fam.ball(c).id));
    }
    if (gap.empty()) continue;
    if (gap.subset_of(target)) {
      parts.push_back(SetExpr::make_diff(SetExpr::ball(fam.ball(b).id),
                                         SetExpr::make_union(std::move(child_refs))));
      covered |= gap;
    } else if (gap.intersects(target)) {
      throw NotRepresentable("set splits the gap region of ball '" +
                             fam.ball(b).id + "'");
    }
  }
  if (covered != target)
    throw NotRepresentable("set is not a union of ball gap regions");
  return SetExpr::make_union(std::move(parts));
}

}  // namespace

std::vector<Forest> all_representatives(const PointSet& target,
                                        const BallFamily& family,
                                        std::size_t size_bound) {
  if (family.ball_count() > 14)
    throw InvalidInput("exhaustive representative search is capped at 14 balls");
  if (target.universe_size() != family.universe_size())
    throw InvalidInput("target does not match the family universe");
  std::vector<Forest> out;
  const std::size_t n = family.ball_count();
  for (std::size_t k = 0; k <= std::min(size_bound, n); ++k)
    each_combination(n, k, [&](const std::vector<std::size_t>& members) {
      Forest f(family, members);
      if (represented_set(f) == target) out.push_back(std::move(f));
    });
  return out;
}

Forest minimal_representative(const PointSet& target, const BallFamily& family) {
  if (target.universe_size() != family.universe_size())
    throw InvalidInput("target does not match the family universe");
  // The constructive decomposition is itself a representative, so its ball
  // count bounds the size of the minimal one.
  Decomposition d = decompose(constructible_expr(target, family), family);
  std::set<std::size_t> decomposition_balls;
  for (const SwissCheese& c : d.cheeses) {
    decomposition_balls.insert(c.wheel);
    decomposition_balls.insert(c.holes.begin(), c.holes.end());
  }
  const std::size_t bound = std::min(decomposition_balls.size(), family.ball_count());

  const std::size_t n = family.ball_count();
  for (std::size_t k = 0; k <= bound; ++k) {
    std::optional<Forest> best;
    LevelProfile best_profile;
    each_combination(n, k, [&](const std::vector<std::size_t>& members) {
      Forest f(family, members);
      if (represented_set(f) != target) return;
      LevelProfile profile = level_profile(f);
      if (!best || compare_profiles(profile, best_profile) == Order::less) {
        best = std::move(f);
        best_profile = std::move(profile);
      }
    });
    if (best) return *best;
  }
  throw NotRepresentable("no representative within the decomposition bound");
}

std::optional<ImproveMove> improve(const Forest& s, const Forest& t) {
  if (&s.family() != &t.family())
    throw InvalidInput("forests belong to different families");
  const BallFamily& fam = s.family();
  if (represented_set(s) != represented_set(t))
    throw InvalidInput("forests represent different sets");

  auto lv_s = levels(s);
  auto lv_t = levels(t);
  const std::vector<std::size_t> roots_s = lv_s.empty() ? std::vector<std::size_t>{} : lv_s[0];
  const std::vector<std::size_t> roots_t = lv_t.empty() ? std::vector<std::size_t>{} : lv_t[0];
  if (roots_s == roots_t) return std::nullopt;

  std::optional<std::pair<std::size_t, std::size_t>> pair;  // (inner in s, outer in t)
  for (std::size_t c : roots_t) {
    // The exchange is undefined when a root of s coincides with a child of
    // the outer root in t: the moved chains would land on the wrong parity.
    const std::vector<std::size_t> children = sub_members(t, c);
    bool collision = false;
    for (std::size_t r : roots_s)
      if (std::find(children.begin(), children.end(), r) != children.end()) {
        collision = true;
        break;
      }
    if (collision) continue;
    for (std::size_t b : roots_s)
      if (fam.ball(b).points.proper_subset_of(fam.ball(c).points)) {
        pair = {b, c};
        break;
      }
    if (pair) break;
  }
  if (!pair) return std::nullopt;
  const auto [inner, outer] = *pair;

  const std::vector<std::size_t> outer_children = sub_members(t, outer);

  // Roots of s inside the outer root that fit under none of its children.
  std::vector<std::size_t> displaced;
  for (std::size_t b : roots_s) {
    if (!fam.ball(b).points.subset_of(fam.ball(outer).points)) continue;
    bool under_child = false;
    for (std::size_t c : outer_children)
      if (fam.ball(b).points.subset_of(fam.ball(c).points)) {
        under_child = true;
        break;
      }
    if (!under_child) displaced.push_back(b);
  }

  // Children of the outer root untouched by every displaced root.
  std::vector<std::size_t> adopted;
  for (std::size_t c : outer_children) {
    bool meets = false;
    for (std::size_t b : displaced)
      if (fam.ball(c).points.intersects(fam.ball(b).points)) {
        meets = true;
        break;
      }
    if (!meets) adopted.push_back(c);
  }

  std::vector<std::size_t> s_members;
  for (std::size_t m : s.members())
    if (std::find(displaced.begin(), displaced.end(), m) == displaced.end())
      s_members.push_back(m);
  s_members.push_back(outer);
  s_members.insert(s_members.end(), adopted.begin(), adopted.end());

  std::vector<std::size_t> t_members;
  for (std::size_t m : t.members()) {
    if (m == outer) continue;
    if (std::find(adopted.begin(), adopted.end(), m) != adopted.end()) continue;
    t_members.push_back(m);
  }
  t_members.insert(t_members.end(), displaced.begin(), displaced.end());

  return ImproveMove{Forest(fam, std::move(s_members)),
                     Forest(fam, std::move(t_members)),
                     std::move(displaced),
                     std::move(adopted),
                     inner,
                     outer};
}

LevelSets level_sets(const PointSet& target, const BallFamily& family) {
  Forest minimal = minimal_representative(target, family);
  LevelSets out;
  for (const auto& level : levels(minimal)) {
    PointSet gamma(family.universe_size());
    for (std::size_t m : level) gamma |= family.ball(m).points;
    out.gamma.push_back(std::move(gamma));
  }
  return out;
}

std::vector<CodeEntry> code_entries(const Forest& forest) {
  const BallFamily& fam = forest.family();
  auto lv = levels(forest);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> keyed;
  for (std::size_t i = 0; i < lv.size(); ++i)
    for (std::size_t m : lv[i]) {
      const PointSet& p = fam.ball(m).points;
      keyed.emplace_back(i, p.min_point(), p.size(), fam.ball(m).id);
    }
  std::sort(keyed.begin(), keyed.end());
  std::vector<CodeEntry> out;
  for (auto& [level, min_point, size, id] : keyed)
    out.push_back({std::move(id), level});
  return out;
}

CanonicalCode code_of(const PointSet& target, const BallFamily& family) {
  return {code_entries(minimal_representative(target, family))};
}

}  // namespace laminar
