#include "moran/tiling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace moran {

namespace {

void require_two_stage(std::int64_t p1, std::int64_t p2, std::int64_t b1, std::int64_t t1,
                       std::int64_t t2) {
  if (p1 < 2 || p2 < 2 || b1 < 2 || t1 < 1 || t2 < 1) {
    throw std::invalid_argument("two-stage parameters need p1, p2, b1 >= 2 and t1, t2 >= 1");
  }
}

Rational mod_period(const Rational& x, const Rational& period) {
  return (x / period).frac() * period;
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<HalfOpen> pieces) {
  for (const HalfOpen& h : pieces) {
    if (h.hi < h.lo) throw std::invalid_argument("IntervalUnion: interval with lo > hi");
  }
  std::erase_if(pieces, [](const HalfOpen& h) { return h.lo == h.hi; });
  std::sort(pieces.begin(), pieces.end(),
            [](const HalfOpen& a, const HalfOpen& b) { return a.lo < b.lo; });
  for (HalfOpen& h : pieces) {
    if (!intervals_.empty() && h.lo <= intervals_.back().hi) {
      if (intervals_.back().hi < h.hi) intervals_.back().hi = std::move(h.hi);
    } else {
      intervals_.push_back(std::move(h));
    }
  }
}

Rational IntervalUnion::total_length() const {
  Rational total;
  for (const HalfOpen& h : intervals_) total += h.hi - h.lo;
  return total;
}

IntervalUnion IntervalUnion::translated(const Rational& shift) const {
  IntervalUnion out = *this;
  for (HalfOpen& h : out.intervals_) {
    h.lo += shift;
    h.hi += shift;
  }
  return out;
}

std::string IntervalUnion::str() const {
  if (intervals_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) os << " u ";
    os << '[' << intervals_[i].lo << ", " << intervals_[i].hi << ')';
  }
  return os.str();
}

IntervalUnion two_stage_blocks(std::int64_t p1, std::int64_t t1, std::int64_t t2, std::int64_t b1) {
  if (p1 < 2 || b1 < 2 || t1 < 1 || t2 < 1) {
    throw std::invalid_argument("two_stage_blocks: need p1, b1 >= 2 and t1, t2 >= 1");
  }
  const Rational width{BigInt(t2), BigInt(b1)};
  std::vector<HalfOpen> pieces;
  for (std::int64_t k = 0; k < p1; ++k) {
    const Rational lo{BigInt(k * t1), BigInt(b1)};
    pieces.push_back({lo, lo + width});
  }
  return IntervalUnion(std::move(pieces));
}

IntervalUnion two_stage_support(std::int64_t p1, std::int64_t t1, std::int64_t t2, std::int64_t b1) {
  if (p1 < 2 || b1 < 2 || t1 < 1 || t2 < 1) {
    throw std::invalid_argument("two_stage_support: need p1, b1 >= 2 and t1, t2 >= 1");
  }
  if (t1 % t2 != 0) throw std::invalid_argument("two_stage_support: t2 must divide t1");
  const Rational c{BigInt(t2), BigInt(b1)};
  const std::int64_t t = t1 / t2;
  std::vector<HalfOpen> pieces;
  for (std::int64_t k = 0; k < p1; ++k) {
    pieces.push_back({Rational(k * t) * c, Rational(k * t + 1) * c});
  }
  return IntervalUnion(std::move(pieces));
}

TilingCheck tiles_by_periodic_set(const IntervalUnion& K, std::span<const Rational> digits,
                                  const Rational& period) {
  if (period.sign() <= 0) throw std::invalid_argument("tiles_by_periodic_set: period must be > 0");
  TilingCheck out;
  out.covered_length = K.total_length() * Rational(static_cast<std::int64_t>(digits.size()));

  // Coverage is base + running sum of the events on [0, period).
  std::int64_t base = 0;
  std::vector<std::pair<Rational, std::int64_t>> events;
  for (const Rational& d : digits) {
    for (const HalfOpen& h : K.intervals()) {
      Rational len = h.hi - h.lo;
      const BigInt whole = (len / period).floor();
      base += to_int64(whole);
      len -= Rational(whole) * period;
      if (len.is_zero()) continue;
      const Rational start = mod_period(h.lo + d, period);
      const Rational end = start + len;
      events.emplace_back(start, 1);
      if (end <= period) {
        events.emplace_back(end, -1);
      } else {
        events.emplace_back(period, -1);
        events.emplace_back(Rational(0), 1);
        events.emplace_back(end - period, -1);
      }
    }
  }
  events.emplace_back(Rational(0), 0);
  events.emplace_back(period, 0);
  std::sort(events.begin(), events.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::int64_t level = base;
  std::size_t i = 0;
  while (i < events.size()) {
    const Rational& x = events[i].first;
    while (i < events.size() && events[i].first == x) level += events[i++].second;
    if (i == events.size() || !(x < period)) break;
    const Rational& next = events[i].first;
    if (next == x) continue;
    if (level != 1) {
      out.tiles = false;
      out.point = (x + next) / Rational(2);
      out.multiplicity = level;
      return out;
    }
  }
  out.tiles = true;
  return out;
}

TileDecision tile_decide(std::int64_t p1, std::int64_t p2, std::int64_t b1, std::int64_t t1,
                         std::int64_t t2) {
  require_two_stage(p1, p2, b1, t1, t2);
  TileDecision out;
  if (t1 % t2 != 0) {
    out.tiles = false;
    out.residue = t1 % t2;
    return out;
  }
  const std::int64_t t = t1 / t2;
  const Rational c{BigInt(t2), BigInt(b1)};
  out.K = two_stage_support(p1, t1, t2, b1);
  for (std::int64_t i = 0; i < t; ++i) out.translation_digits.push_back(Rational(i) * c);
  out.translation_period = Rational(t * p1) * c;
  out.check = tiles_by_periodic_set(*out.K, out.translation_digits, *out.translation_period);
  out.tiles = out.check->tiles;
  return out;
}

}  // namespace moran
