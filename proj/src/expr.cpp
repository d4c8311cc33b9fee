#include "laminar/expr.hpp"

#include <set>
#include <utility>

namespace laminar {

SetExpr SetExpr::ball(std::string id) {
  SetExpr e;
  e.kind = Kind::ball;
  e.ball_id = std::move(id);
  return e;
}

SetExpr SetExpr::make_union(std::vector<SetExpr> args) {
  SetExpr e;
  e.kind = Kind::union_;
  e.args = std::move(args);
  return e;
}

SetExpr SetExpr::make_inter(std::vector<SetExpr> args) {
  SetExpr e;
  e.kind = Kind::inter;
  e.args = std::move(args);
  return e;
}

SetExpr SetExpr::make_diff(SetExpr left, SetExpr right) {
  SetExpr e;
  e.kind = Kind::diff;
  e.args.push_back(std::move(left));
  e.args.push_back(std::move(right));
  return e;
}

SetExpr SetExpr::make_compl(SetExpr arg) {
  SetExpr e;
  e.kind = Kind::compl_;
  e.args.push_back(std::move(arg));
  return e;
}

PointSet eval(const SetExpr& expr, const BallFamily& family) {
  switch (expr.kind) {
    case SetExpr::Kind::ball:
      return family.ball(family.require(expr.ball_id)).points;
    case SetExpr::Kind::union_: {
      PointSet acc(family.universe_size());
      for (const SetExpr& a : expr.args) acc |= eval(a, family);
      return acc;
    }
    case SetExpr::Kind::inter: {
      PointSet acc = family.universe_points();
      for (const SetExpr& a : expr.args) acc &= eval(a, family);
      return acc;
    }
    case SetExpr::Kind::diff:
      return eval(expr.args.at(0), family) - eval(expr.args.at(1), family);
    case SetExpr::Kind::compl_:
      return family.universe_points() - eval(expr.args.at(0), family);
  }
  throw InvalidInput("malformed expression node");
}

namespace {

struct BuildClause {
  std::set<std::size_t> pos, neg;
};

std::vector<BuildClause> cross(const std::vector<BuildClause>& a,
                               const std::vector<BuildClause>& b) {
  std::vector<BuildClause> out;
  for (const BuildClause& ca : a)
    for (const BuildClause& cb : b) {
      BuildClause merged = ca;
      merged.pos.insert(cb.pos.begin(), cb.pos.end());
      merged.neg.insert(cb.neg.begin(), cb.neg.end());
      out.push_back(std::move(merged));
    }
  return out;
}

// Clauses of the expression (positive) or its complement (negative).
std::vector<BuildClause> build(const SetExpr& e, const BallFamily& fam, bool positive) {
  switch (e.kind) {
    case SetExpr::Kind::ball: {
      const std::size_t idx = fam.require(e.ball_id);
      BuildClause c;
      (positive ? c.pos : c.neg).insert(idx);
      return {c};
    }
    case SetExpr::Kind::union_:
    case SetExpr::Kind::inter: {
      // Union distributes as concatenation positively and as a cross product
      // negatively; intersection is the dual.
      const bool concat = positive == (e.kind == SetExpr::Kind::union_);
      if (concat) {
        std::vector<BuildClause> out;
        for (const SetExpr& a : e.args) {
          auto sub = build(a, fam, positive);
          out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
      }
      std::vector<BuildClause> out = {BuildClause{}};
      for (const SetExpr& a : e.args) out = cross(out, build(a, fam, positive));
      return out;
    }
    case SetExpr::Kind::diff: {
      if (positive)
        return cross(build(e.args.at(0), fam, true), build(e.args.at(1), fam, false));
      std::vector<BuildClause> out = build(e.args.at(0), fam, false);
      auto right = build(e.args.at(1), fam, true);
      out.insert(out.end(), right.begin(), right.end());
      return out;
    }
    case SetExpr::Kind::compl_:
      return build(e.args.at(0), fam, !positive);
  }
  throw InvalidInput("malformed expression node");
}

}  // namespace

DnfForm to_dnf(const SetExpr& expr, const BallFamily& family) {
  const std::size_t universe = family.universe_ball();
  DnfForm out;
  for (BuildClause& c : build(expr, family, true)) {
    if (c.pos.empty()) c.pos.insert(universe);
    DnfClause clause;
    clause.positives.assign(c.pos.begin(), c.pos.end());
    clause.negatives.assign(c.neg.begin(), c.neg.end());
    out.clauses.push_back(std::move(clause));
  }
  return out;
}

PointSet eval(const DnfForm& dnf, const BallFamily& family) {
  PointSet acc(family.universe_size());
  for (const DnfClause& c : dnf.clauses) {
    PointSet clause = family.universe_points();
    for (std::size_t p : c.positives) clause &= family.ball(p).points;
    for (std::size_t n : c.negatives) clause -= family.ball(n).points;
    acc |= clause;
  }
  return acc;
}

}  // namespace laminar
