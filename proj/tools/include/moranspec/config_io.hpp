#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moran/measure.hpp"

namespace moranspec {

/// Malformed configuration text. what() names the line or the field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw configuration as read from disk. Pairs are kept unvalidated so that
/// `validate` can list every problem.
struct ConfigFile {
  std::vector<moran::StagePair> pairs;
  std::optional<moran::SymbolicWord> word;

  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

/// JSON object {"pairs": [{"b": "4", "p": "2", "t": "1"}, ...],
///              "word": {"preperiod": [1], "period": [2]}}.
/// Integers may be decimal strings or JSON numbers.
ConfigFile parse_config(std::string_view text);
ConfigFile load_config(const std::filesystem::path& path);
/// Integers are written as decimal strings.
std::string serialize_config(const ConfigFile& config);

}  // namespace moranspec
