#include "laminar/family.hpp"

#include <algorithm>
#include <map>

#include "laminar/rng.hpp"

namespace laminar {

BallFamily::BallFamily(std::size_t universe_size, std::vector<Ball> balls)
    : universe_size_(universe_size), balls_(std::move(balls)) {
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    if (balls_[i].points.universe_size() != universe_size_)
      throw InvalidInput("ball '" + balls_[i].id + "' does not match the universe size");
    by_id_.emplace(balls_[i].id, i);  // first occurrence wins; duplicates are a validation finding
    if (!universe_idx_ && balls_[i].points.size() == universe_size_)
      universe_idx_ = i;
  }
}

std::optional<std::size_t> BallFamily::find(std::string_view id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t BallFamily::require(std::string_view id) const {
  auto idx = find(id);
  if (!idx) throw InvalidInput("unknown ball id '" + std::string(id) + "'");
  return *idx;
}

std::size_t BallFamily::universe_ball() const {
  if (!universe_idx_) throw InvalidInput("family has no universe ball");
  return *universe_idx_;
}

ValidationReport validate_directed(const std::vector<Ball>& candidate_balls,
                                   std::size_t universe_size) {
  ValidationReport report;
  const std::size_t n = candidate_balls.size();

  for (const Ball& b : candidate_balls)
    if (b.points.empty())
      report.violations.push_back({Violation::Kind::empty_ball, {b.id}});

  std::map<std::string, std::size_t> seen_ids;
  for (const Ball& b : candidate_balls) ++seen_ids[b.id];
  for (const auto& [id, count] : seen_ids)
    if (count > 1)
      report.violations.push_back({Violation::Kind::duplicate_id, {id}});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (candidate_balls[i].points == candidate_balls[j].points)
        report.violations.push_back({Violation::Kind::duplicate_extension,
                                     {candidate_balls[i].id, candidate_balls[j].id}});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const PointSet& a = candidate_balls[i].points;
      const PointSet& b = candidate_balls[j].points;
      if (a.intersects(b) && !a.subset_of(b) && !b.subset_of(a))
        report.violations.push_back({Violation::Kind::crossing_pair,
                                     {candidate_balls[i].id, candidate_balls[j].id}});
    }

  bool has_universe = false;
  for (const Ball& b : candidate_balls)
    if (b.points.size() == universe_size) has_universe = true;
  if (!has_universe)
    report.violations.push_back({Violation::Kind::missing_universe, {}});

  return report;
}

ValidationReport validate_directed(const BallFamily& family) {
  return validate_directed(family.balls(), family.universe_size());
}

ParentForest parent_forest(const BallFamily& family) {
  const std::size_t n = family.ball_count();
  ParentForest out;
  out.parent.assign(n, std::nullopt);
  out.children.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!family.ball(i).points.proper_subset_of(family.ball(j).points)) continue;
      if (!best || family.ball(j).points.size() < family.ball(*best).points.size())
        best = j;
    }
    out.parent[i] = best;
    if (best) out.children[*best].push_back(i);
  }
  out.root = family.universe_ball();
  return out;
}

CheckResult is_unpackable(const BallFamily& family) {
  ParentForest pf = parent_forest(family);
  for (std::size_t i = 0; i < family.ball_count(); ++i) {
    if (pf.children[i].empty()) continue;
    PointSet covered(family.universe_size());
    for (std::size_t c : pf.children[i]) covered |= family.ball(c).points;
    if (covered == family.ball(i).points) return {false, family.ball(i).id};
  }
  return {true, std::nullopt};
}

CheckResult covering_property(const BallFamily& family) {
  for (std::size_t i = 0; i < family.ball_count(); ++i) {
    const PointSet& a = family.ball(i).points;
    PointSet cover(family.universe_size());
    for (std::size_t j = 0; j < family.ball_count(); ++j) {
      if (j == i) continue;
      const PointSet& b = family.ball(j).points;
      if (b.intersects(a) && !a.subset_of(b)) cover |= b;
    }
    if (a.subset_of(cover)) return {false, family.ball(i).id};
  }
  return {true, std::nullopt};
}

BallFamily gen_dyadic(std::size_t depth) {
  if (depth < 1 || depth > 6)
    throw InvalidInput("dyadic depth must be between 1 and 6");
  const std::size_t n = std::size_t{1} << depth;
  std::vector<Ball> balls;
  for (std::size_t level = 0; level < depth; ++level) {
    const std::size_t len = n >> level;
    for (std::size_t k = 0; k < (std::size_t{1} << level); ++k) {
      std::string id;
      if (level == 0) {
        id = "U";
      } else {
        for (std::size_t bit = level; bit-- > 0;)
          id += ((k >> bit) & 1) ? 'R' : 'L';
      }
      PointSet points(n);
      for (std::size_t p = k * len; p < (k + 1) * len; ++p) points.add(p);
      balls.push_back({std::move(id), std::move(points)});
    }
  }
  return BallFamily(n, std::move(balls));
}

BallFamily gen_crumb_laminar(std::uint64_t seed, std::size_t n_points,
                             std::size_t n_balls) {
  if (n_balls < 1 || n_points < n_balls)
    throw InvalidInput("crumb family needs n_points >= n_balls >= 1");
  SplitMix64 rng(seed);

  struct Node {
    std::vector<std::size_t> ext;
    std::vector<std::size_t> gap;  // points not carved into children
  };
  std::vector<Node> nodes;
  {
    std::vector<std::size_t> all(n_points);
    for (std::size_t p = 0; p < n_points; ++p) all[p] = p;
    nodes.push_back({all, all});
  }

  while (nodes.size() < n_balls) {
    std::vector<std::size_t> hosts;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].gap.size() >= 2) hosts.push_back(i);
    // Gap regions partition the points, so while there are fewer balls than
    // points some ball has a gap of at least two.
    const std::size_t host = hosts[rng.below(hosts.size())];
    std::vector<std::size_t>& gap = nodes[host].gap;
    const std::size_t k = 1 + static_cast<std::size_t>(rng.below(gap.size() - 1));
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t at = static_cast<std::size_t>(rng.below(gap.size()));
      chosen.push_back(gap[at]);
      gap.erase(gap.begin() + static_cast<std::ptrdiff_t>(at));
    }
    std::sort(chosen.begin(), chosen.end());
    nodes.push_back({chosen, chosen});
  }

  std::vector<Ball> balls;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    PointSet points(n_points);
    for (std::size_t p : nodes[i].ext) points.add(p);
    balls.push_back({i == 0 ? "U" : "B" + std::to_string(i), std::move(points)});
  }
  return BallFamily(n_points, std::move(balls));
}

}  // namespace laminar
