#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relbell/bell.hpp"

namespace relbell::cli {

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  double mass = 1.0;
  std::optional<double> beta;
  std::vector<double> beta_grid;
  ThreeVector boost_dir = ThreeVector::UnitZ();
  /// a, a', b, b' as raw (unnormalized) vectors.
  std::array<std::optional<ThreeVector>, 4> directions;
  std::vector<OperatorKind> operators;
  PlaneRestriction restriction = PlaneRestriction::None;
  std::string out_path;
  Format format = Format::Csv;
  OptimizerConfig optimizer;
  bool inject_fault = false;
};

/// Expands "start:stop:step" into an inclusive grid. Throws std::invalid_argument.
std::vector<double> parse_beta_grid(const std::string& spec);

/// Shortest round-trip decimal form, locale independent.
std::string format_number(double x);

/// Parses arguments and runs one subcommand. Returns the process exit code:
/// 0 success, 1 verification failure, 2 usage or runtime error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relbell::cli
