#pragma once

#include <string>
#include <vector>

#include "laminar/family.hpp"

namespace laminar {

// Boolean combination of balls, by name.
struct SetExpr {
  enum class Kind { ball, union_, inter, diff, compl_ };

  Kind kind = Kind::union_;
  std::string ball_id;        // kind == ball
  std::vector<SetExpr> args;  // union_/inter: any arity; diff: two; compl: one

  static SetExpr ball(std::string id);
  static SetExpr make_union(std::vector<SetExpr> args);
  static SetExpr make_inter(std::vector<SetExpr> args);
  static SetExpr make_diff(SetExpr left, SetExpr right);
  static SetExpr make_compl(SetExpr arg);
};

// Pointwise semantics. The empty union is the empty set, the empty
// intersection is the universe, complement is relative to the universe.
// Throws InvalidInput for unknown ball ids.
PointSet eval(const SetExpr& expr, const BallFamily& family);

// One conjunct of a disjunctive normal form; sorted ball indices.
struct DnfClause {
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;

  friend bool operator==(const DnfClause&, const DnfClause&) = default;
};

struct DnfForm {
  std::vector<DnfClause> clauses;
};

// Semantics-preserving DNF. A clause with no positive ball gains the
// universe ball, so every clause has at least one positive.
DnfForm to_dnf(const SetExpr& expr, const BallFamily& family);

PointSet eval(const DnfForm& dnf, const BallFamily& family);

}  // namespace laminar
