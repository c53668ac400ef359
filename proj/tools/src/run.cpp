#include "moranspec/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "moran/classifier.hpp"
#include "moran/hadamard.hpp"
#include "moran/oracle.hpp"
#include "moran/spectra.hpp"
#include "moran/tiling.hpp"

namespace moranspec {

namespace {

using namespace moran;

const std::map<std::string, Command, std::less<>>& command_table() {
  static const std::map<std::string, Command, std::less<>> table{
      {"validate", Command::Validate},       {"classify", Command::Classify},
      {"two-stage", Command::TwoStage},      {"spectrum", Command::Spectrum},
      {"verify", Command::Verify},           {"qcheck", Command::QCheck},
      {"zeros", Command::Zeros},             {"tile", Command::Tile},
      {"sample-ft", Command::SampleFt},      {"rewrite-check", Command::RewriteCheck},
      {"oracle-search", Command::OracleSearch}, {"necessity", Command::Necessity},
  };
  return table;
}

/// Thrown for requests that fail per-command validation (exit 2).
class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* fmt_bool(bool v) { return v ? "true" : "false"; }

template <class Range>
std::string join(const Range& items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : items) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os.str();
}

SystemConfig require_config(const RunRequest& req) {
  if (const auto violations = validate_stages(req.pairs); !violations.empty()) {
    // Range violations make the alphabet unusable; coprimality is checked by
    // the commands that rely on it.
    for (const auto& v : violations) {
      if (v.message.find("gcd") == std::string::npos) throw RequestError(v.field + ": " + v.message);
    }
  }
  return SystemConfig(req.pairs);
}

SymbolicWord require_word(const RunRequest& req, const SystemConfig& config) {
  if (!req.word) throw RequestError("a word is required (--word or config \"word\")");
  try {
    req.word->check_alphabet(config.size());
  } catch (const std::out_of_range& e) {
    throw RequestError(e.what());
  }
  return *req.word;
}

void require_params(const RunRequest& req, std::size_t n, const char* names) {
  if (req.params.size() != n) {
    throw RequestError(std::string("--params needs ") + std::to_string(n) + " integers: " + names);
  }
}

void write_certificate(std::ostream& os, const SpectralVerdict& v) {
  os << "kind=" << to_string(v.kind) << '\n';
  os << "clause=" << to_string(v.certificate.clause) << '\n';
  if (v.certificate.position) os << "position=" << *v.certificate.position << '\n';
  if (v.certificate.letter) os << "letter=" << *v.certificate.letter << '\n';
  if (v.certificate.l) os << "l=" << *v.certificate.l << '\n';
  if (v.certificate.j) os << "j=" << *v.certificate.j << '\n';
  if (!v.certificate.message.empty()) os << "message=" << v.certificate.message << '\n';
}

int cmd_validate(const RunRequest& req, std::ostream& os) {
  const auto violations = validate_stages(req.pairs);
  os << "status=" << (violations.empty() ? "ok" : "invalid") << '\n';
  os << "violations=" << violations.size() << '\n';
  for (std::size_t i = 0; i < violations.size(); ++i) {
    os << "violation." << i << '=' << violations[i].field << ": " << violations[i].message << '\n';
  }
  return violations.empty() ? kCompleted : kOutOfScope;
}

int cmd_classify(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  const SpectralVerdict v = theorem_main_decide(config, word);
  os << "word=" << word.str() << '\n';
  write_certificate(os, v);
  return v.kind == VerdictKind::OutOfScope ? kOutOfScope : kCompleted;
}

int cmd_two_stage(const RunRequest& req, std::ostream& os) {
  require_params(req, 5, "p1,p2,b1,t1,t2");
  const auto& a = req.params;
  TwoStageDecision d;
  try {
    d = two_stage_decide(a[0], a[1], a[2], a[3], a[4]);
  } catch (const std::invalid_argument& e) {
    throw RequestError(e.what());
  }
  os << "divides=" << fmt_bool(d.divides) << '\n';
  os << "spectral=" << fmt_bool(d.spectral) << '\n';
  os << "tiles=" << fmt_bool(d.tiles) << '\n';
  os << "tiling_verified=" << fmt_bool(d.tiling_verified) << '\n';
  if (d.residue) os << "residue=" << *d.residue << '\n';
  os << "support_is_single_interval=" << fmt_bool(d.support_is_single_interval) << '\n';
  return kCompleted;
}

SpectrumCandidate tower_or_throw(const SystemConfig& config, const SymbolicWord& word,
                                 std::size_t depth) {
  try {
    return build_tower_spectrum(config, word, depth);
  } catch (const std::invalid_argument& e) {
    throw RequestError(e.what());
  }
}

int cmd_spectrum(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  const SpectrumCandidate s = tower_or_throw(config, word, req.depth);
  os << "depth=" << req.depth << '\n';
  os << "size=" << s.points().size() << '\n';
  os << "points=" << join(s.points()) << '\n';
  return kCompleted;
}

int cmd_verify(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  const SpectrumCandidate s = tower_or_throw(config, word, req.depth);
  const DiscreteMeasure mu = truncate(config, word, req.depth, req.cap);
  const SpectrumVerification v = verify_spectrum_finite(mu, s, config, word, req.depth);
  os << "depth=" << req.depth << '\n';
  os << "atoms=" << mu.size() << '\n';
  os << "points=" << s.points().size() << '\n';
  os << "orthogonal=" << fmt_bool(v.orthogonal) << '\n';
  os << "complete=" << fmt_bool(v.complete) << '\n';
  os << "residual=" << fmt_double(v.residual) << '\n';
  if (v.failing_pair) os << "failing_pair=" << v.failing_pair->first << ',' << v.failing_pair->second << '\n';
  os << "ok=" << fmt_bool(v.ok()) << '\n';
  return kCompleted;
}

int cmd_qcheck(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  if (req.grid < 1) throw RequestError("--grid must be >= 1");
  const SpectrumCandidate s = tower_or_throw(config, word, req.depth);
  double worst = 0.0;
  double worst_x = 0.0;
  for (std::size_t i = 0; i < req.grid; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(req.grid);
    const double dev = std::abs(q_function(config, word, req.depth, s, x, 0) - 1.0);
    if (dev > worst) {
      worst = dev;
      worst_x = x;
    }
  }
  os << "depth=" << req.depth << '\n';
  os << "grid=" << req.grid << '\n';
  os << "max_deviation=" << fmt_double(worst) << '\n';
  os << "at_x=" << fmt_double(worst_x) << '\n';
  return kCompleted;
}

int cmd_zeros(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  if (!validate_config(config).empty()) throw RequestError("alphabet is not pairwise coprime");
  const ZSetVerdict z = z_set_criteria(config, word);
  os << "z_empty=" << (z.empty ? fmt_bool(*z.empty) : "unknown") << '\n';
  os << "criterion=" << z.criterion << '\n';
  if (req.xi) {
    if (req.window < 1) throw RequestError("--window must be >= 1");
    const ZProbeResult probe = z_membership_probe(config, word, *req.xi, req.window);
    os << "xi=" << *req.xi << '\n';
    os << "scanned=" << probe.scanned << '\n';
    if (probe.witness) {
      os << "witness=" << *probe.witness << '\n';
    } else {
      os << "witness=none\n";
    }
  }
  return kCompleted;
}

int cmd_tile(const RunRequest& req, std::ostream& os) {
  require_params(req, 5, "p1,p2,b1,t1,t2");
  const auto& a = req.params;
  TileDecision d;
  try {
    d = tile_decide(a[0], a[1], a[2], a[3], a[4]);
  } catch (const std::invalid_argument& e) {
    throw RequestError(e.what());
  }
  os << "tiles=" << fmt_bool(d.tiles) << '\n';
  if (d.K) os << "K=" << d.K->str() << '\n';
  if (d.translation_period) {
    os << "J_digits=" << join(d.translation_digits) << '\n';
    os << "J_period=" << *d.translation_period << '\n';
  }
  if (d.check && !d.check->tiles) {
    os << "uncovered_point=" << *d.check->point << '\n';
    os << "multiplicity=" << d.check->multiplicity << '\n';
  }
  if (d.residue) os << "residue=" << *d.residue << '\n';
  return kCompleted;
}

int cmd_sample_ft(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  if (req.grid < 1) throw RequestError("--grid must be >= 1");
  if (req.depth < 1) throw RequestError("--depth must be >= 1");
  if (req.xmax < req.xmin) throw RequestError("--xmax must be >= --xmin");
  const Rational step{BigInt(1), BigInt(req.grid)};
  const std::int64_t rows = to_int64(((req.xmax - req.xmin) / step).floor()) + 1;

  if (!req.out) throw RequestError("sample-ft needs --out PATH for the CSV");
  std::ofstream csv(*req.out);
  if (!csv) throw RequestError("cannot open " + *req.out);
  csv << "x,re,im,abs\n";
  double worst_tail = 0.0;
  for (std::int64_t i = 0; i < rows; ++i) {
    const double x = (req.xmin + Rational(i) * step).to_double();
    const FourierSample f = mu_hat_eval(config, word, x, req.depth);
    worst_tail = std::max(worst_tail, f.tail_bound);
    csv << fmt_double(x) << ',' << fmt_double(f.value.real()) << ',' << fmt_double(f.value.imag())
         << ',' << fmt_double(std::abs(f.value)) << '\n';
  }
  os << "rows=" << rows << '\n';
  os << "path=" << *req.out << '\n';
  os << "max_tail_bound=" << fmt_double(worst_tail) << '\n';
  return kCompleted;
}

int cmd_rewrite_check(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  require_params(req, 3, "b,p,t of the merged stage");
  if (req.ratio < 1) throw RequestError("--ratio must be >= 1");
  const StagePair merged{req.params[0], req.params[1], req.params[2]};
  if (!merged.valid()) throw RequestError("merged stage " + merged.str() + " is invalid");
  const SystemConfig single({merged});
  const SymbolicWord constant({}, {1});
  bool all = true;
  for (std::size_t k = 1; k <= req.depth; ++k) {
    const bool eq = measures_equal(truncate(config, word, req.ratio * k, req.cap),
                                   truncate(single, constant, k, req.cap));
    os << "equal." << k << '=' << fmt_bool(eq) << '\n';
    all = all && eq;
  }
  os << "all_equal=" << fmt_bool(all) << '\n';
  return kCompleted;
}

int cmd_oracle_search(const RunRequest& req, std::ostream& os) {
  require_params(req, 3, "b,p,t");
  const std::int64_t b = req.params[0], p = req.params[1], t = req.params[2];
  if (std::llabs(b) < 2 || p < 2 || t == 0) throw RequestError("need |b| >= 2, p >= 2, t != 0");
  const std::int64_t window = req.window > 0 ? req.window : std::llabs(b) * p * std::llabs(t);
  const bool admissible = is_admissible(b, p, t);
  std::vector<std::int64_t> canonical;
  if (admissible) canonical = canonical_L(b, p, t);
  std::size_t count = 0;
  bool canonical_found = false;
  std::vector<IntSet> listed;
  for_each_compatible_L(b, p, t, window, [&](const IntSet& L) {
    ++count;
    if (L == canonical) canonical_found = true;
    if (listed.size() < req.limit) listed.push_back(L);
    return true;
  });
  os << "window=" << window << '\n';
  os << "admissible=" << fmt_bool(admissible) << '\n';
  os << "found=" << count << '\n';
  os << "canonical_found=" << fmt_bool(canonical_found) << '\n';
  for (std::size_t i = 0; i < listed.size(); ++i) os << "L." << i << '=' << join(listed[i]) << '\n';
  return kCompleted;
}

int cmd_necessity(const RunRequest& req, std::ostream& os) {
  const SystemConfig config = require_config(req);
  const SymbolicWord word = require_word(req, config);
  const auto stages = stage_prefix(config, word, req.depth + 1);
  const auto violations = necessity_check(stages, req.depth);
  os << "horizon=" << req.depth << '\n';
  os << "violations=" << violations.size() << '\n';
  for (const auto& v : violations) {
    os << "violation.k=" << v.k << ' ' << v.current.str() << " -> " << v.next.str() << '\n';
  }
  return kCompleted;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  const auto& table = command_table();
  if (const auto it = table.find(name); it != table.end()) return it->second;
  return std::nullopt;
}

std::string command_name(Command command) {
  for (const auto& [name, c] : command_table()) {
    if (c == command) return name;
  }
  return "?";
}

int run(const RunRequest& req, std::ostream& report) {
  std::ostringstream body;
  int status = kCompleted;
  try {
    switch (req.command) {
      case Command::Validate: status = cmd_validate(req, body); break;
      case Command::Classify: status = cmd_classify(req, body); break;
      case Command::TwoStage: status = cmd_two_stage(req, body); break;
      case Command::Spectrum: status = cmd_spectrum(req, body); break;
      case Command::Verify: status = cmd_verify(req, body); break;
      case Command::QCheck: status = cmd_qcheck(req, body); break;
      case Command::Zeros: status = cmd_zeros(req, body); break;
      case Command::Tile: status = cmd_tile(req, body); break;
      case Command::SampleFt: status = cmd_sample_ft(req, body); break;
      case Command::RewriteCheck: status = cmd_rewrite_check(req, body); break;
      case Command::OracleSearch: status = cmd_oracle_search(req, body); break;
      case Command::Necessity: status = cmd_necessity(req, body); break;
    }
  } catch (const RequestError& e) {
    report << "command=" << command_name(req.command) << "\nerror=" << e.what() << '\n';
    return kOutOfScope;
  } catch (const CapExceeded& e) {
    report << "command=" << command_name(req.command) << "\nerror=" << e.what() << '\n';
    return kOutOfScope;
  } catch (const DegenerateTower& e) {
    report << "command=" << command_name(req.command) << "\nerror=" << e.what() << '\n';
    return kOutOfScope;
  } catch (const std::exception& e) {
    report << "command=" << command_name(req.command) << "\nerror=internal: " << e.what() << '\n';
    return kInternalError;
  }
  report << "command=" << command_name(req.command) << '\n' << body.str();
  return status;
}

}  // namespace moranspec
