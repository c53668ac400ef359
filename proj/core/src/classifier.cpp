#include "moran/classifier.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "moran/tiling.hpp"

namespace moran {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

bool divides(std::int64_t p, std::int64_t b) { return b % p == 0; }

std::string letter_name(std::size_t k) { return "pairs[" + std::to_string(k) + "]"; }

SpectralVerdict verdict(VerdictKind kind, Clause clause, std::string message) {
  SpectralVerdict v;
  v.kind = kind;
  v.certificate.clause = clause;
  v.certificate.message = std::move(message);
  return v;
}

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Spectral: return "Spectral";
    case VerdictKind::NotSpectral: return "NotSpectral";
    case VerdictKind::OutOfScope: return "OutOfScope";
  }
  return "?";
}

std::string to_string(Clause clause) {
  switch (clause) {
    case Clause::None: return "none";
    case Clause::Divisibility: return "divisibility";
    case Clause::PiL: return "Pi_l";
    case Clause::TwoStageResidue: return "residue";
    case Clause::AlternatingDivisibility: return "alternating_divisibility";
    case Clause::Hypothesis: return "hypothesis";
  }
  return "?";
}

// ------------------------------------------------------------- validation

std::vector<ConfigViolation> validate_stages(std::span<const StagePair> pairs) {
  std::vector<ConfigViolation> out;
  if (pairs.empty()) out.push_back({"pairs", "alphabet is empty"});
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const StagePair& s = pairs[k];
    if (iabs(s.b) < 2) out.push_back({letter_name(k) + ".b", "|b| must be >= 2, got " + std::to_string(s.b)});
    if (s.p < 2) out.push_back({letter_name(k) + ".p", "p must be >= 2, got " + std::to_string(s.p)});
    if (s.t == 0) out.push_back({letter_name(k) + ".t", "t must be nonzero"});
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (pairs[k].p < 2 || pairs[j].t == 0) continue;
      const std::int64_t g = gcd(pairs[k].p, pairs[j].t);
      if (g != 1) {
        out.push_back({letter_name(k) + ".p",
                       "gcd(p" + std::to_string(k + 1) + "=" + std::to_string(pairs[k].p) + ", t" +
                           std::to_string(j + 1) + "=" + std::to_string(pairs[j].t) +
                           ") = " + std::to_string(g)});
      }
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].t == 0 || pairs[j].t == 0) continue;
      const std::int64_t g = gcd(pairs[i].t, pairs[j].t);
      if (g != 1) {
        out.push_back({letter_name(i) + ".t",
                       "gcd(t" + std::to_string(i + 1) + "=" + std::to_string(pairs[i].t) + ", t" +
                           std::to_string(j + 1) + "=" + std::to_string(pairs[j].t) +
                           ") = " + std::to_string(g)});
      }
    }
  }
  return out;
}

std::vector<ConfigViolation> validate_config(const SystemConfig& config) {
  return validate_stages(config.pairs());
}

// ---------------------------------------------------------- word structure

WordClassification classify_word(const SystemConfig& config, const SymbolicWord& word) {
  word.check_alphabet(config.size());
  WordClassification out;
  for (std::size_t k = 1; k <= config.size(); ++k) {
    const int letter = static_cast<int>(k);
    (iabs(config.letter(letter).t) == 1 ? out.unit_step_letters : out.other_letters).insert(letter);
  }
  if (const auto j = word.tail_letter()) {
    EventuallyConstant ec;
    ec.tail = *j;
    ec.l = word.preperiod().size();
    if (!word.preperiod().empty()) ec.last_differing = word.preperiod().back();
    out.eventually_constant = ec;
  }
  out.letters_in_tail = word.letters_infinitely_often();
  out.letters_at_positions_ge_2 = word.letters_from(2);
  return out;
}

// ------------------------------------------------------- main classification

SpectralVerdict theorem_main_decide(const SystemConfig& config, const SymbolicWord& word) {
  if (const auto violations = validate_config(config); !violations.empty()) {
    std::string msg = "alphabet is not pairwise coprime:";
    for (const auto& v : violations) msg += " " + v.message + ";";
    return verdict(VerdictKind::OutOfScope, Clause::Hypothesis, msg);
  }
  try {
    word.check_alphabet(config.size());
  } catch (const std::out_of_range& e) {
    return verdict(VerdictKind::OutOfScope, Clause::Hypothesis, e.what());
  }

  // Positions 2 .. |pre| + |per| + 1 visit every letter that occurs at n >= 2.
  const std::size_t last = word.preperiod().size() + word.period().size() + 1;
  for (std::size_t n = 2; n <= last; ++n) {
    const int letter = word.letter(n);
    const StagePair& s = config.letter(letter);
    if (!divides(s.p, s.b)) {
      SpectralVerdict v = verdict(VerdictKind::NotSpectral, Clause::Divisibility,
                                  "p=" + std::to_string(s.p) + " does not divide b=" +
                                      std::to_string(s.b) + " at position " + std::to_string(n));
      v.certificate.position = n;
      v.certificate.letter = letter;
      return v;
    }
  }

  if (const auto j = word.tail_letter(); j && !word.preperiod().empty()) {
    const StagePair& s = config.letter(*j);
    if (iabs(s.b) == s.p && iabs(s.t) != 1) {
      const std::size_t l = word.preperiod().size();
      SpectralVerdict v = verdict(VerdictKind::NotSpectral, Clause::PiL,
                                  "word ends in " + std::to_string(*j) + "^inf after " +
                                      std::to_string(l) + " letters with |b|=p=" +
                                      std::to_string(s.p) + " and |t|=" + std::to_string(iabs(s.t)));
      v.certificate.l = l;
      v.certificate.j = *j;
      v.certificate.letter = word.preperiod().back();
      return v;
    }
  }
  return verdict(VerdictKind::Spectral, Clause::None, "");
}

// ----------------------------------------------------------------- necessity

std::vector<NecessityViolation> necessity_check(std::span<const StagePair> stages,
                                                std::size_t horizon) {
  std::vector<NecessityViolation> out;
  if (stages.size() < 2) return out;
  const std::size_t upto = std::min(horizon, stages.size() - 1);
  for (std::size_t k = 1; k <= upto; ++k) {
    const StagePair& cur = stages[k - 1];
    const StagePair& nxt = stages[k];
    if (divides(cur.p, nxt.t)) continue;
    const __int128 prod = static_cast<__int128>(nxt.b) * cur.t;
    if (prod % nxt.p != 0) out.push_back({k, cur, nxt});
  }
  return out;
}

// ----------------------------------------------------------------- two stage

TwoStageDecision two_stage_decide(std::int64_t p1, std::int64_t p2, std::int64_t b1,
                                  std::int64_t t1, std::int64_t t2) {
  if (p1 < 2 || p2 < 2 || b1 < 2 || t1 < 1 || t2 < 1) {
    throw std::invalid_argument("two_stage_decide: need p1, p2, b1 >= 2 and t1, t2 >= 1");
  }
  TwoStageDecision out;
  out.divides = t1 % t2 == 0;
  out.spectral = out.divides;
  out.tiles = out.divides;
  if (!out.divides) out.residue = t1 % t2;
  out.support_is_single_interval = two_stage_blocks(p1, t1, t2, b1).intervals().size() == 1;

  const TileDecision tile = tile_decide(p1, p2, b1, t1, t2);
  if (tile.tiles != out.tiles) {
    throw std::logic_error("two_stage_decide: tiling check disagrees with t2 | t1");
  }
  out.tiling_verified = out.divides && tile.check && tile.check->tiles;
  return out;
}

// -------------------------------------------------------------- zero sets

ZSetVerdict z_set_criteria(const SystemConfig& config, const SymbolicWord& word) {
  word.check_alphabet(config.size());
  const auto& pre = word.preperiod();
  const auto& per = word.period();

  if (pre.empty() && per.size() == 1) {
    const StagePair& s = config.letter(per[0]);
    if (iabs(s.b) == s.p && iabs(s.t) != 1) {
      return {false, "constant word with |b| = p and |t| != 1: 1/|t| + Z lies in the zero set"};
    }
  }

  std::int64_t g = 0;
  for (const int k : word.letters_infinitely_often()) g = std::gcd(g, iabs(config.letter(k).t));
  if (g == 1) return {true, "gcd of the digit steps occurring infinitely often is 1"};

  if (pre.empty() && per.size() == 1) {
    const StagePair& s = config.letter(per[0]);
    if (divides(s.p, s.b) && s.p != iabs(s.b)) {
      return {true, "constant word with p | b and p != |b|"};
    }
  }

  bool all_divide = true;
  for (const int k : word.letters_from(1)) all_divide = all_divide && divides(config.letter(k).p, config.letter(k).b);
  if (all_divide) {
    const int first = word.letter(1);
    if (iabs(config.letter(first).t) == 1) {
      return {true, "p | b throughout and the first letter has |t| = 1"};
    }
    if (!word.letters_from(2).contains(first)) {
      return {true, "p | b throughout and the first letter (|t| != 1) never recurs"};
    }
  }
  return {std::nullopt, "no criterion applies"};
}

ZProbeResult z_membership_probe(const SystemConfig& config, const SymbolicWord& word,
                                const Rational& xi, std::int64_t window) {
  if (window < 1) throw std::invalid_argument("z_membership_probe: window must be >= 1");
  word.check_alphabet(config.size());
  ZProbeResult out;
  auto scan = [&](std::int64_t k) {
    ++out.scanned;
    if (!zero_set_contains(config, word, xi + Rational(k))) out.witness = k;
    return out.witness.has_value();
  };
  if (scan(0)) return out;
  for (std::int64_t r = 1; r <= window; ++r) {
    if (scan(r) || scan(-r)) return out;
  }
  return out;
}

// ------------------------------------------------------ alternating family

SpectralVerdict alternating_family_decide(std::int64_t p1, std::int64_t p2,
                                          std::span<const std::int64_t> odd_b,
                                          std::span<const std::int64_t> even_t) {
  if (p1 < 2 || p2 < 2 || odd_b.empty() || even_t.empty()) {
    return verdict(VerdictKind::OutOfScope, Clause::Hypothesis,
                   "need p1, p2 >= 2 and nonempty b and t periods");
  }
  for (const std::int64_t b : odd_b) {
    if (b < 2) return verdict(VerdictKind::OutOfScope, Clause::Hypothesis, "odd-stage b must be >= 2");
  }
  for (const std::int64_t t : even_t) {
    if (t < 1) return verdict(VerdictKind::OutOfScope, Clause::Hypothesis, "even-stage t must be >= 1");
  }
  const std::size_t span = std::lcm(odd_b.size(), even_t.size());
  for (std::size_t i = 0; i < span; ++i) {
    const std::int64_t b = odd_b[i % odd_b.size()];
    const std::int64_t t = even_t[i % even_t.size()];
    if (static_cast<__int128>(b) * t % p1 != 0) {
      SpectralVerdict v = verdict(VerdictKind::NotSpectral, Clause::AlternatingDivisibility,
                                  "p1=" + std::to_string(p1) + " does not divide b*t=" +
                                      std::to_string(b) + "*" + std::to_string(t) + " at k=" +
                                      std::to_string(i + 1));
      v.certificate.position = i + 1;
      return v;
    }
  }
  return verdict(VerdictKind::Spectral, Clause::None, "");
}

std::vector<StagePair> alternating_family_stages(std::int64_t p1, std::int64_t p2, std::int64_t b1,
                                                 std::span<const std::int64_t> odd_b,
                                                 std::span<const std::int64_t> even_t,
                                                 std::size_t count) {
  if (odd_b.empty() || even_t.empty()) throw std::invalid_argument("alternating_family_stages: empty period");
  std::vector<StagePair> out;
  for (std::size_t n = 1; n <= count; ++n) {
    if (n == 1) {
      out.push_back({b1, p1, 1});
    } else if (n % 2 == 0) {
      const std::int64_t t = even_t[(n / 2 - 1) % even_t.size()];
      out.push_back({p2 * t, p2, t});
    } else {
      out.push_back({odd_b[((n - 1) / 2 - 1) % odd_b.size()], p1, 1});
    }
  }
  return out;
}

std::vector<StagePair> alternating_family_merged(std::int64_t p1, std::int64_t p2, std::int64_t b1,
                                                 std::span<const std::int64_t> odd_b,
                                                 std::span<const std::int64_t> even_t,
                                                 std::size_t count) {
  if (odd_b.empty() || even_t.empty()) throw std::invalid_argument("alternating_family_merged: empty period");
  std::vector<StagePair> out;
  for (std::size_t n = 1; n <= count; ++n) {
    if (n == 1) {
      out.push_back({b1, p1 * p2, 1});
    } else {
      const std::int64_t t = even_t[(n - 2) % even_t.size()];
      const std::int64_t b = odd_b[(n - 2) % odd_b.size()];
      out.push_back({p2 * t * b, p1 * p2, 1});
    }
  }
  return out;
}

}  // namespace moran
