#include "laminar/forest.hpp"

#include <algorithm>
#include <sstream>

namespace laminar {

Forest::Forest(const BallFamily& family, std::vector<std::size_t> members)
    : family_(&family), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t m : members_)
    if (m >= family.ball_count())
      throw InvalidInput("forest member index out of range");
}

bool Forest::contains(std::size_t ball_index) const {
  return std::binary_search(members_.begin(), members_.end(), ball_index);
}

std::vector<std::vector<std::size_t>> levels(const Forest& forest) {
  const BallFamily& fam = forest.family();
  std::vector<std::size_t> remaining = forest.members();
  std::vector<std::vector<std::size_t>> out;
  while (!remaining.empty()) {
    std::vector<std::size_t> level, rest;
    for (std::size_t m : remaining) {
      bool maximal = true;
      for (std::size_t o : remaining)
        if (o != m && fam.ball(m).points.proper_subset_of(fam.ball(o).points)) {
          maximal = false;
          break;
        }
      (maximal ? level : rest).push_back(m);
    }
    out.push_back(std::move(level));
    remaining = std::move(rest);
  }
  return out;
}

std::size_t level_of(const Forest& forest, std::size_t ball_index) {
  auto lv = levels(forest);
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (std::find(lv[i].begin(), lv[i].end(), ball_index) != lv[i].end())
      return i;
  throw InvalidInput("ball is not a member of the forest");
}

std::vector<std::size_t> sub_members(const Forest& forest, std::size_t ball_index) {
  const BallFamily& fam = forest.family();
  auto lv = levels(forest);
  std::size_t at = lv.size();
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (std::find(lv[i].begin(), lv[i].end(), ball_index) != lv[i].end()) {
      at = i;
      break;
    }
  if (at == lv.size()) throw InvalidInput("ball is not a member of the forest");
  std::vector<std::size_t> out;
  if (at + 1 < lv.size())
    for (std::size_t c : lv[at + 1])
      if (fam.ball(c).points.subset_of(fam.ball(ball_index).points)) out.push_back(c);
  return out;
}

PointSet represented_set(const Forest& forest) {
  const BallFamily& fam = forest.family();
  auto lv = levels(forest);
  PointSet out(fam.universe_size());
  for (std::size_t i = 0; i < lv.size(); i += 2) {
    for (std::size_t m : lv[i]) {
      PointSet piece = fam.ball(m).points;
      if (i + 1 < lv.size())
        for (std::size_t c : lv[i + 1])
          if (fam.ball(c).points.subset_of(fam.ball(m).points)) piece -= fam.ball(c).points;
      out |= piece;
    }
  }
  return out;
}

LevelProfile level_profile(const Forest& forest) {
  LevelProfile out;
  for (const auto& lv : levels(forest)) out.push_back(lv.size());
  return out;
}

Order compare_profiles(const LevelProfile& a, const LevelProfile& b) {
  std::size_t size_a = 0, size_b = 0;
  for (std::size_t v : a) size_a += v;
  for (std::size_t v : b) size_b += v;
  if (size_a != size_b) return size_a < size_b ? Order::less : Order::greater;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t va = i < a.size() ? a[i] : 0;
    const std::size_t vb = i < b.size() ? b[i] : 0;
    if (va != vb) return va > vb ? Order::less : Order::greater;
  }
  return Order::equivalent;
}

Order compare(const Forest& a, const Forest& b) {
  return compare_profiles(level_profile(a), level_profile(b));
}

namespace {

// (min point, size, id): the display order used throughout.
std::vector<std::size_t> display_sorted(const BallFamily& fam,
                                        std::vector<std::size_t> balls) {
  std::sort(balls.begin(), balls.end(), [&](std::size_t x, std::size_t y) {
    const PointSet& px = fam.ball(x).points;
    const PointSet& py = fam.ball(y).points;
    return std::tuple(px.min_point(), px.size(), fam.ball(x).id) <
           std::tuple(py.min_point(), py.size(), fam.ball(y).id);
  });
  return balls;
}

}  // namespace

std::string to_dot(const Forest& forest) {
  const BallFamily& fam = forest.family();
  auto lv = levels(forest);
  std::ostringstream out;
  out << "digraph forest {\n";
  for (std::size_t i = 0; i < lv.size(); ++i)
    for (std::size_t m : display_sorted(fam, lv[i]))
      out << "  \"" << fam.ball(m).id << "\" [peripheries=" << (i % 2 == 0 ? 2 : 1)
          << "];\n";
  for (std::size_t i = 0; i < lv.size(); ++i)
    for (std::size_t m : display_sorted(fam, lv[i]))
      for (std::size_t c : display_sorted(fam, sub_members(forest, m)))
        out << "  \"" << fam.ball(m).id << "\" -> \"" << fam.ball(c).id << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace laminar
