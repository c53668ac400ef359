#include "moranspec/config_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace moranspec {

namespace {

using nlohmann::json;

std::int64_t read_integer(const json& node, const std::string& field) {
  if (node.is_number_integer()) return node.get<std::int64_t>();
  if (node.is_string()) {
    const auto& s = node.get_ref<const std::string&>();
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw ConfigError(field + ": integer out of range: " + s);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ConfigError(field + ": not a decimal integer: \"" + s + "\"");
    }
    return v;
  }
  throw ConfigError(field + ": expected an integer or decimal string");
}

std::vector<int> read_letters(const json& node, const std::string& field) {
  if (!node.is_array()) throw ConfigError(field + ": expected an array of letters");
  std::vector<int> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string where = field + "/" + std::to_string(i);
    const std::int64_t v = read_integer(node[i], where);
    if (v < 1 || v > 1'000'000) throw ConfigError(where + ": letters are numbered from 1");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

ConfigFile parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("/: expected a JSON object");
  if (!doc.contains("pairs")) throw ConfigError("/pairs: missing");
  const json& pairs = doc["pairs"];
  if (!pairs.is_array()) throw ConfigError("/pairs: expected an array");

  ConfigFile out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string where = "/pairs/" + std::to_string(k);
    const json& entry = pairs[k];
    if (!entry.is_object()) throw ConfigError(where + ": expected an object with b, p, t");
    moran::StagePair s;
    for (const char* key : {"b", "p", "t"}) {
      if (!entry.contains(key)) throw ConfigError(where + "/" + key + ": missing");
    }
    s.b = read_integer(entry["b"], where + "/b");
    s.p = read_integer(entry["p"], where + "/p");
    s.t = read_integer(entry["t"], where + "/t");
    out.pairs.push_back(s);
  }

  if (doc.contains("word")) {
    const json& w = doc["word"];
    if (w.is_string()) {
      try {
        out.word = moran::SymbolicWord::parse(w.get<std::string>());
      } catch (const std::exception& e) {
        throw ConfigError(std::string("/word: ") + e.what());
      }
    } else if (w.is_object()) {
      std::vector<int> pre;
      if (w.contains("preperiod")) pre = read_letters(w["preperiod"], "/word/preperiod");
      if (!w.contains("period")) throw ConfigError("/word/period: missing");
      std::vector<int> per = read_letters(w["period"], "/word/period");
      try {
        out.word = moran::SymbolicWord(std::move(pre), std::move(per));
      } catch (const std::exception& e) {
        throw ConfigError(std::string("/word: ") + e.what());
      }
    } else {
      throw ConfigError("/word: expected an object or a \"pre;per\" string");
    }
  }
  return out;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string serialize_config(const ConfigFile& config) {
  json doc;
  doc["pairs"] = json::array();
  for (const auto& s : config.pairs) {
    doc["pairs"].push_back({{"b", std::to_string(s.b)}, {"p", std::to_string(s.p)}, {"t", std::to_string(s.t)}});
  }
  if (config.word) {
    doc["word"] = {{"preperiod", config.word->preperiod()}, {"period", config.word->period()}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace moranspec
