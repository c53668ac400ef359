#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moran/measure.hpp"
#include "moran/rational.hpp"

namespace moranspec {

enum class Command {
  Validate,
  Classify,
  TwoStage,
  Spectrum,
  Verify,
  QCheck,
  Zeros,
  Tile,
  SampleFt,
  RewriteCheck,
  OracleSearch,
  Necessity,
};

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command command);

enum ExitStatus : int { kCompleted = 0, kInternalError = 1, kOutOfScope = 2 };

struct RunRequest {
  Command command = Command::Validate;
  std::vector<moran::StagePair> pairs;
  std::optional<moran::SymbolicWord> word;

  std::size_t depth = 4;
  std::size_t grid = 256;
  std::int64_t window = 8;
  std::optional<std::string> out;
  std::size_t cap = moran::kDefaultAtomCap;

  /// two-stage, tile: p1,p2,b1,t1,t2. oracle-search: b,p,t.
  /// rewrite-check: the merged stage b,p,t.
  std::vector<std::int64_t> params;
  /// zeros: the point to probe.
  std::optional<moran::Rational> xi;
  /// sample-ft: x runs from xmin to xmax in steps of 1/grid.
  moran::Rational xmin = 0;
  moran::Rational xmax = 4;
  /// rewrite-check: depth ratio between the original and merged stages.
  std::size_t ratio = 2;
  /// oracle-search: number of sets listed in the report (0 lists none).
  std::size_t limit = 16;
};

/// Dispatches the request and writes a key=value report to `report`.
/// Returns an ExitStatus.
int run(const RunRequest& request, std::ostream& report);

}  // namespace moranspec
