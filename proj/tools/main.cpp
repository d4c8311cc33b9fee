#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "laminar/canonical.hpp"
#include "laminar/cheese.hpp"
#include "laminar/io.hpp"
#include "laminar/quasi.hpp"

namespace {

using namespace laminar;

// Property failures (family not directed, set not representable) exit 1;
// usage and parse problems exit 2.
constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;

struct PropertyFailure {};

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

BallFamily load_family(const std::string& path) {
  BallFamily family = family_from_json(load_json(path));
  ValidationReport report = validate_directed(family);
  if (!report.ok()) {
    std::cerr << "family '" << path << "' is not a valid directed family:\n"
              << render(report_to_json(report));
    throw PropertyFailure{};
  }
  return family;
}

SetExpr load_expr(const std::string& path) { return expr_from_json(load_json(path)); }

void emit(const std::string& text) { std::cout << text; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical forms for boolean combinations of balls in a laminar family"};
  app.require_subcommand(1);

  std::string family_path, expr_path, cells_path;
  bool dot = false;
  std::string gen_kind;
  std::size_t gen_depth = 3;
  std::uint64_t gen_seed = 1;
  std::size_t gen_points = 9;
  std::size_t gen_balls = 6;

  auto* cmd_validate = app.add_subcommand("validate", "check the directed-family invariants");
  cmd_validate->add_option("family", family_path, "family JSON file")->required();

  auto* cmd_unpackable = app.add_subcommand("unpackable", "report whether any ball is a union of its proper sub-balls");
  cmd_unpackable->add_option("family", family_path, "family JSON file")->required();

  auto* cmd_decompose = app.add_subcommand("decompose", "swiss cheese decomposition of an expression");
  cmd_decompose->add_option("family", family_path, "family JSON file")->required();
  cmd_decompose->add_option("expr", expr_path, "expression JSON file")->required();

  auto* cmd_canonical = app.add_subcommand("canonical", "minimal forest representative of an expression");
  cmd_canonical->add_option("family", family_path, "family JSON file")->required();
  cmd_canonical->add_option("expr", expr_path, "expression JSON file")->required();
  cmd_canonical->add_flag("--dot", dot, "emit Graphviz instead of JSON");

  auto* cmd_levels = app.add_subcommand("levels", "level sets of the minimal representative");
  cmd_levels->add_option("family", family_path, "family JSON file")->required();
  cmd_levels->add_option("expr", expr_path, "expression JSON file")->required();

  auto* cmd_code = app.add_subcommand("code", "canonical code of an expression's set");
  cmd_code->add_option("family", family_path, "family JSON file")->required();
  cmd_code->add_option("expr", expr_path, "expression JSON file")->required();

  auto* cmd_quasi = app.add_subcommand("quasi", "per-cell canonical forms over a partition");
  cmd_quasi->add_option("family", family_path, "family JSON file")->required();
  cmd_quasi->add_option("expr", expr_path, "expression JSON file")->required();
  cmd_quasi->add_option("--cells", cells_path, "cells JSON file")->required();

  auto* cmd_gen = app.add_subcommand("gen", "generate a fixture family");
  cmd_gen->add_option("--kind", gen_kind, "dyadic or crumb")->required();
  cmd_gen->add_option("--depth", gen_depth, "dyadic depth (1-6)");
  cmd_gen->add_option("--seed", gen_seed, "crumb seed");
  cmd_gen->add_option("--points", gen_points, "crumb universe size");
  cmd_gen->add_option("--balls", gen_balls, "crumb ball count");

  try {
    app.parse(argc, argv);

    if (cmd_validate->parsed()) {
      BallFamily family = family_from_json(load_json(family_path));
      ValidationReport report = validate_directed(family);
      emit(render(report_to_json(report)));
      return report.ok() ? 0 : kExitProperty;
    }
    if (cmd_unpackable->parsed()) {
      emit(render(unpackable_to_json(is_unpackable(load_family(family_path)))));
      return 0;
    }
    if (cmd_decompose->parsed()) {
      BallFamily family = load_family(family_path);
      emit(render(decomposition_to_json(decompose(load_expr(expr_path), family), family)));
      return 0;
    }
    if (cmd_canonical->parsed()) {
      BallFamily family = load_family(family_path);
      Forest minimal = minimal_representative(eval(load_expr(expr_path), family), family);
      emit(dot ? to_dot(minimal) : render(forest_to_json(minimal)));
      return 0;
    }
    if (cmd_levels->parsed()) {
      BallFamily family = load_family(family_path);
      emit(render(level_sets_to_json(level_sets(eval(load_expr(expr_path), family), family))));
      return 0;
    }
    if (cmd_code->parsed()) {
      BallFamily family = load_family(family_path);
      emit(render(code_to_json(code_of(eval(load_expr(expr_path), family), family))));
      return 0;
    }
    if (cmd_quasi->parsed()) {
      BallFamily family = load_family(family_path);
      CellPartition cells = cells_from_json(load_json(cells_path), family.universe_size());
      emit(render(quasi_to_json(quasi_canonical(eval(load_expr(expr_path), family), family, cells))));
      return 0;
    }
    if (cmd_gen->parsed()) {
      if (gen_kind == "dyadic") {
        emit(render(family_to_json(gen_dyadic(gen_depth))));
      } else if (gen_kind == "crumb") {
        emit(render(family_to_json(gen_crumb_laminar(gen_seed, gen_points, gen_balls))));
      } else {
        std::cerr << "unknown --kind '" << gen_kind << "' (expected dyadic or crumb)\n";
        return kExitUsage;
      }
      return 0;
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const PropertyFailure&) {
    return kExitProperty;
  } catch (const NotRepresentable& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    return kExitProperty;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
}
