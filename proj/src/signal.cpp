#include "lbc/signal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace lbc {

namespace {

bool near(double a, double b) { return std::abs(a - b) <= kTimeSnap; }

// Sorted cut points with near-duplicates collapsed.
std::vector<double> unique_cuts(std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> out;
  for (double c : cuts) {
    if (out.empty() || !near(c, out.back())) out.push_back(c);
  }
  return out;
}

// Builds the minimal covering over the elementary segments between cuts,
// asking `value` for each segment's midpoint.
Signal from_cuts(double length, std::vector<double> cuts, const std::function<Truth(double)>& value) {
  cuts.push_back(0.0);
  cuts.push_back(length);
  std::vector<double> clipped;
  for (double c : unique_cuts(std::move(cuts))) {
    if (c > kTimeSnap && c < length - kTimeSnap) clipped.push_back(c);
  }
  std::vector<Piece> pieces;
  double from = 0.0;
  clipped.push_back(length);
  for (double to : clipped) {
    const Truth v = value(0.5 * (from + to));
    if (!pieces.empty() && pieces.back().value == v) {
      pieces.back().to = to;
    } else {
      pieces.push_back({from, to, v});
    }
    from = to;
  }
  return Signal::make(length, std::move(pieces));
}

void require_same_length(const Signal& a, const Signal& b) {
  if (!near(a.length(), b.length())) {
    std::ostringstream os;
    os << "signal length mismatch: " << a.length() << " vs " << b.length();
    throw SignalError(os.str());
  }
}

Signal pointwise(const Signal& a, const Signal& b, const std::function<Truth(Truth, Truth)>& op) {
  require_same_length(a, b);
  std::vector<double> cuts;
  for (const auto& p : a.pieces()) cuts.push_back(p.from);
  for (const auto& p : b.pieces()) cuts.push_back(p.from);
  return from_cuts(a.length(), std::move(cuts), [&](double t) { return op(a.value_at(t), b.value_at(t)); });
}

Signal map_values(const Signal& s, const std::function<Truth(Truth)>& f) {
  std::vector<Piece> pieces = s.pieces();
  for (auto& p : pieces) p.value = f(p.value);
  return Signal::make(s.length(), std::move(pieces));
}

// Disjoint sorted union of half-open intervals.
std::vector<Piece> merge_intervals(std::vector<Piece> ivs) {
  std::sort(ivs.begin(), ivs.end(), [](const Piece& x, const Piece& y) { return x.from < y.from; });
  std::vector<Piece> out;
  for (const auto& iv : ivs) {
    if (!out.empty() && iv.from <= out.back().to + kTimeSnap) {
      out.back().to = std::max(out.back().to, iv.to);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

bool covers(const std::vector<Piece>& ivs, double t) {
  auto it = std::upper_bound(ivs.begin(), ivs.end(), t, [](double x, const Piece& p) { return x < p.from; });
  if (it == ivs.begin()) return false;
  --it;
  return t < it->to;
}

Signal until_boolean(const Signal& s1, const Signal& s2, double a, double b) {
  Signal out = Signal::constant(s1.length(), Truth::False);
  for (const Signal& unit : decompose_unitary(s1)) {
    out = disjoin(out, conjoin(unit, eventually(conjoin(unit, s2), a, b)));
  }
  return out;
}

Signal lower_completion(const Signal& s) {
  return map_values(s, [](Truth v) { return to_truth(v == Truth::True); });
}

Signal upper_completion(const Signal& s) {
  return map_values(s, [](Truth v) { return to_truth(v != Truth::False); });
}

void check_window(double a, double b) {
  if (!(a >= 0.0) || !(a <= b)) throw SignalError("temporal window must satisfy 0 <= a <= b");
}

}  // namespace

Signal Signal::make(double length, std::vector<Piece> pieces) {
  if (!(length >= 0.0) || !std::isfinite(length)) throw SignalError("signal length must be finite and >= 0");
  Signal s;
  s.length_ = length;
  double cursor = 0.0;
  for (auto& p : pieces) {
    if (!near(p.from, cursor)) {
      std::ostringstream os;
      os << (p.from > cursor ? "gap" : "overlap") << " in signal covering at t=" << cursor;
      throw SignalError(os.str());
    }
    p.from = cursor;
    if (p.to < p.from - kTimeSnap) throw SignalError("signal piece ends before it starts");
    if (p.to > length + kTimeSnap) throw SignalError("signal piece extends past the signal length");
    if (near(p.to, length)) p.to = length;
    if (p.to - p.from <= kTimeSnap) continue;  // degenerate
    cursor = p.to;
    if (!s.pieces_.empty() && s.pieces_.back().value == p.value) {
      s.pieces_.back().to = p.to;
    } else {
      s.pieces_.push_back(p);
    }
  }
  if (!near(cursor, length)) {
    std::ostringstream os;
    os << "signal covering ends at " << cursor << ", expected " << length;
    throw SignalError(os.str());
  }
  if (!s.pieces_.empty()) s.pieces_.back().to = length;
  return s;
}

Signal Signal::constant(double length, Truth value) {
  if (length <= kTimeSnap) return make(length, {});
  return make(length, {Piece{0.0, length, value}});
}

bool Signal::is_boolean() const {
  return std::none_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.value == Truth::Unknown; });
}

Truth Signal::value_at(double t) const {
  if (!(t >= 0.0) || !(t < length_)) {
    std::ostringstream os;
    os << "time " << t << " outside signal domain [0," << length_ << ")";
    throw SignalError(os.str());
  }
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t, [](double x, const Piece& p) { return x < p.from; });
  return std::prev(it)->value;
}

std::string Signal::to_string() const {
  std::ostringstream os;
  os.precision(12);
  os << "len=" << length_;
  for (const auto& p : pieces_) os << " [" << p.from << "," << p.to << ")=" << truth_code(p.value);
  return os.str();
}

Signal negate(const Signal& s) { return map_values(s, truth_not); }

Signal conjoin(const Signal& a, const Signal& b, Logic logic) {
  return pointwise(a, b, [logic](Truth x, Truth y) { return truth_and(x, y, logic); });
}

Signal disjoin(const Signal& a, const Signal& b, Logic logic) {
  return pointwise(a, b, [logic](Truth x, Truth y) { return truth_or(x, y, logic); });
}

Signal implies(const Signal& a, const Signal& b, Logic logic) {
  return pointwise(a, b, [logic](Truth x, Truth y) { return truth_implies(x, y, logic); });
}

Signal eventually(const Signal& s, double a, double b) {
  check_window(a, b);
  std::vector<Piece> positive;
  std::vector<Piece> uncertain;
  for (const auto& p : s.pieces()) {
    if (p.value == Truth::False) continue;
    const Piece shifted{std::max(0.0, p.from - b), p.to - a, p.value};
    if (shifted.to <= kTimeSnap || shifted.to - shifted.from <= kTimeSnap) continue;
    (p.value == Truth::True ? positive : uncertain).push_back(shifted);
  }
  positive = merge_intervals(std::move(positive));
  uncertain = merge_intervals(std::move(uncertain));
  std::vector<double> cuts;
  for (const auto& p : positive) cuts.insert(cuts.end(), {p.from, p.to});
  for (const auto& p : uncertain) cuts.insert(cuts.end(), {p.from, p.to});
  return from_cuts(s.length(), std::move(cuts), [&](double t) {
    if (covers(positive, t)) return Truth::True;
    if (covers(uncertain, t)) return Truth::Unknown;
    return Truth::False;
  });
}

Signal always(const Signal& s, double a, double b) { return negate(eventually(negate(s), a, b)); }

std::vector<Signal> decompose_unitary(const Signal& s) {
  std::vector<Signal> units;
  const auto& pieces = s.pieces();
  std::size_t i = 0;
  while (i < pieces.size()) {
    if (pieces[i].value == Truth::False) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < pieces.size() && pieces[j].value != Truth::False) ++j;
    std::vector<Piece> unit;
    if (pieces[i].from > 0.0) unit.push_back({0.0, pieces[i].from, Truth::False});
    unit.insert(unit.end(), pieces.begin() + static_cast<std::ptrdiff_t>(i),
                pieces.begin() + static_cast<std::ptrdiff_t>(j));
    if (pieces[j - 1].to < s.length()) unit.push_back({pieces[j - 1].to, s.length(), Truth::False});
    units.push_back(Signal::make(s.length(), std::move(unit)));
    i = j;
  }
  return units;
}

Signal until(const Signal& s1, const Signal& s2, double a, double b, Logic logic) {
  require_same_length(s1, s2);
  check_window(a, b);
  if (logic == Logic::Absorbing) {
    Signal out = Signal::constant(s1.length(), Truth::False);
    for (const Signal& unit : decompose_unitary(s1)) {
      out = disjoin(out, conjoin(unit, eventually(conjoin(unit, s2, logic), a, b), logic), logic);
    }
    return out;
  }
  if (s1.is_boolean() && s2.is_boolean()) return until_boolean(s1, s2, a, b);
  // Until is monotone in both operands, so its Kleene value is fixed by the
  // two Boolean completions: True where it holds with every Unknown read as
  // False, False where it fails even with every Unknown read as True.
  const Signal definite = until_boolean(lower_completion(s1), lower_completion(s2), a, b);
  const Signal possible = until_boolean(upper_completion(s1), upper_completion(s2), a, b);
  return pointwise(definite, possible, [](Truth lo, Truth hi) {
    if (lo == Truth::True) return Truth::True;
    return hi == Truth::True ? Truth::Unknown : Truth::False;
  });
}

}  // namespace lbc
