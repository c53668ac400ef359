#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "moranspec/config_io.hpp"
#include "moranspec/run.hpp"

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrality checks for Moran-type infinite convolutions"};
  app.require_subcommand(1);

  std::string config_path, word_text, params_text, out_path, xi_text;
  std::string xmin_text = "0", xmax_text = "4";
  moranspec::RunRequest req;

  const char* commands[][2] = {
      {"validate", "check the alphabet's ranges and coprimality"},
      {"classify", "decide spectrality of the word's measure"},
      {"two-stage", "two-letter family flags (--params p1,p2,b1,t1,t2)"},
      {"spectrum", "build the tower spectrum of the depth-N truncation"},
      {"verify", "verify the tower spectrum against the truncated measure"},
      {"qcheck", "max |Q - 1| of the tower spectrum on a grid over [0, 1)"},
      {"zeros", "integral periodic zero set criteria and probe (--xi)"},
      {"tile", "exact translation tiling of the two-letter support"},
      {"sample-ft", "write Fourier transform samples as CSV (--out)"},
      {"rewrite-check", "compare depth ratio*k with a single merged stage (--params b,p,t)"},
      {"oracle-search", "brute-force compatible digit sets (--params b,p,t)"},
      {"necessity", "necessary divisibility conditions along the word"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--word", word_text, "word as \"pre;per\", e.g. \"1;2\"");
    sub->add_option("--depth", req.depth, "truncation depth / horizon");
    sub->add_option("--grid", req.grid, "grid size (samples per unit for sample-ft)");
    sub->add_option("--window", req.window, "search or probe window");
    sub->add_option("--out", out_path, "output path");
    sub->add_option("--cap", req.cap, "atom cap for exact convolutions");
    sub->add_option("--params", params_text, "comma separated integers");
    sub->add_option("--xi", xi_text, "rational point for the zero-set probe");
    sub->add_option("--xmin", xmin_text, "sample-ft lower end (rational)");
    sub->add_option("--xmax", xmax_text, "sample-ft upper end (rational)");
    sub->add_option("--ratio", req.ratio, "rewrite-check depth ratio");
    sub->add_option("--limit", req.limit, "oracle-search: sets listed in the report");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    req.command = *moranspec::parse_command(name);
    if (!config_path.empty()) {
      moranspec::ConfigFile cfg = moranspec::load_config(config_path);
      req.pairs = std::move(cfg.pairs);
      req.word = std::move(cfg.word);
    }
    if (!word_text.empty()) req.word = moran::SymbolicWord::parse(word_text);
    if (!params_text.empty()) req.params = parse_int_list(params_text);
    if (!out_path.empty()) req.out = out_path;
    if (!xi_text.empty()) req.xi = moran::Rational::parse(xi_text);
    req.xmin = moran::Rational::parse(xmin_text);
    req.xmax = moran::Rational::parse(xmax_text);
  } catch (const std::exception& e) {
    std::cout << "error=" << e.what() << '\n';
    return moranspec::kOutOfScope;
  }
  return moranspec::run(req, std::cout);
}
